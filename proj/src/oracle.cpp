#include "nrg/oracle.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "nrg/core.hpp"

namespace nrg {

namespace {

void check_tau(double tau) {
  if (!(tau > 2.0 && tau < 3.0))
    throw std::invalid_argument("tau must lie in (2,3)");
}

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double fm, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0) throw std::runtime_error("quadrature failed to converge");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive_step(f, a, fa, b, fb, fm, whole, tol, 60);
}

// E[e^{-t X}] for X with tail x^{-p} on [1,inf), via the substitution
// u = x^{-p}: integral over u in (0,1] of exp(-t u^{-1/p}), split at the
// scale where t x = 1.
double tail_laplace(double t, double p, double tol) {
  if (t == 0.0) return 1.0;
  if (t < 0.0) throw std::invalid_argument("negative transform argument");
  auto f = [t, p](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp(-t * std::pow(u, -1.0 / p));
  };
  double split = 1.0;
  if (t < 1.0) split = std::pow(t, p);  // u-image of x = 1/t
  return adaptive_simpson(f, 0.0, split, tol * 0.5) +
         (split < 1.0 ? adaptive_simpson(f, split, 1.0, tol * 0.5) : 0.0);
}

constexpr double kQuadTol = 1e-9;

}  // namespace

double pi_star_pgf(double s, double tau) {
  check_tau(tau);
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument("s must lie in [0,1]");
  return tail_laplace(1.0 - s, tau - 2.0, kQuadTol);
}

double extinction_probability(double tau, double tol) {
  check_tau(tau);
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  double s = 0.0;
  for (int iter = 0; iter < 100000; ++iter) {
    const double next = pi_star_pgf(s, tau);
    if (std::abs(next - s) < tol) return next;
    s = next;
  }
  throw std::runtime_error("extinction probability iteration did not converge");
}

GiantPrediction giant_fraction(double tau, double tol) {
  GiantPrediction out;
  out.tau = tau;
  out.tolerance = tol;
  out.extinction_prob = extinction_probability(tau, tol);
  // E[q^D] = E[e^{-Lambda(1-q)}] with Lambda tail x^{-(tau-1)}; the
  // degree-0 term is included, so isolated vertices count as non-giant.
  out.giant_fraction =
      1.0 - tail_laplace(1.0 - out.extinction_prob, tau - 1.0, kQuadTol);
  return out;
}

double core_removed_scale(std::uint64_t n, double tau) {
  check_tau(tau);
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  return std::log(static_cast<double>(n)) / ((3.0 - tau) * ell(n));
}

}  // namespace nrg
