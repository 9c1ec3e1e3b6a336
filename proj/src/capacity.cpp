#include "nrg/capacity.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace nrg {

namespace {

void check_tau(double tau) {
  if (!(tau > 2.0 && tau < 3.0))
    throw std::invalid_argument("tau must lie in (2,3)");
}

constexpr char kMagic[4] = {'N', 'R', 'G', 'C'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

double pareto_quantile(double u, double tau) {
  check_tau(tau);
  if (!(u > 0.0 && u <= 1.0))
    throw std::invalid_argument("u must lie in (0,1]");
  return std::pow(u, -1.0 / (tau - 1.0));
}

double mean_capacity(double tau) {
  check_tau(tau);
  return (tau - 1.0) / (tau - 2.0);
}

double size_biased_tail(double x, double tau) {
  check_tau(tau);
  if (!(x >= 1.0)) throw std::invalid_argument("x must be >= 1");
  return std::pow(x, -(tau - 2.0));
}

CapacitySequence sample_capacities(std::uint64_t n, double tau,
                                   std::uint64_t seed) {
  check_tau(tau);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Rng rng(derive_seed(seed, {stream_tag::capacities}));
  CapacitySequence caps;
  caps.tau = tau;
  caps.n = n;
  caps.values.resize(n);
  double total = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    caps.values[i] = pareto_quantile(rng.uniform_pos(), tau);
    total += caps.values[i];
  }
  caps.total = total;
  return caps;
}

void validate(const CapacitySequence& caps) {
  if (caps.values.size() != caps.n)
    throw std::runtime_error("capacity count mismatch");
  check_tau(caps.tau);
  double total = 0.0;
  for (double v : caps.values) {
    if (!(v >= 1.0)) throw std::runtime_error("capacity below support minimum");
    total += v;
  }
  if (std::abs(total - caps.total) > 1e-12 * std::max(1.0, total))
    throw std::runtime_error("capacity total out of tolerance");
}

void save_capacities(const CapacitySequence& caps, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write(kMagic, 4);
  out.write(reinterpret_cast<const char*>(&kVersion), 4);
  out.write(reinterpret_cast<const char*>(&caps.n), 8);
  out.write(reinterpret_cast<const char*>(&caps.tau), 8);
  out.write(reinterpret_cast<const char*>(caps.values.data()),
            static_cast<std::streamsize>(caps.values.size() * 8));
  if (!out) throw std::runtime_error("write failed: " + path);
}

CapacitySequence load_capacities(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[4];
  std::uint32_t version = 0;
  CapacitySequence caps;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&caps.n), 8);
  in.read(reinterpret_cast<char*>(&caps.tau), 8);
  if (!in || std::memcmp(magic, kMagic, 4) != 0 || version != kVersion)
    throw std::runtime_error("bad capacity file header: " + path);
  caps.values.resize(caps.n);
  in.read(reinterpret_cast<char*>(caps.values.data()),
          static_cast<std::streamsize>(caps.n * 8));
  if (!in) throw std::runtime_error("truncated capacity file: " + path);
  caps.total = 0.0;
  for (double v : caps.values) caps.total += v;
  validate(caps);
  return caps;
}

void export_capacities_text(const CapacitySequence& caps,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);
  for (double v : caps.values) out << v << '\n';
}

}  // namespace nrg
