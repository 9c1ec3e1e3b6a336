#ifndef NRG_ORACLE_HPP
#define NRG_ORACLE_HPP

#include <cstdint>

namespace nrg {

/// Limit predictions for the giant component.
struct GiantPrediction {
  double tau = 0.0;
  double extinction_prob = 0.0;  // q, smallest pgf fixed point
  double giant_fraction = 0.0;   // 1 - E[q^D] = 1 - E[e^{-Lambda(1-q)}]
  double tolerance = 0.0;
};

// Probability generating function of the mixed Poisson(Gamma) offspring
// law, Gamma with tail x^{-(tau-2)} on [1,inf): E[e^{-Gamma(1-s)}].
// Adaptive quadrature, relative error <= 1e-8.
double pi_star_pgf(double s, double tau);

// Smallest fixed point of s -> pi_star_pgf(s), by iteration from 0.
double extinction_probability(double tau, double tol);

GiantPrediction giant_fraction(double tau, double tol);

// Predicted distance scale after removing the whole core:
// log n / ((3 - tau) ell(n)).
double core_removed_scale(std::uint64_t n, double tau);

}  // namespace nrg

#endif
