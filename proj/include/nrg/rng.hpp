#ifndef NRG_RNG_HPP
#define NRG_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace nrg {

// splitmix64 step (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Substream derivation rule: fold each tag word into a splitmix64 chain
// seeded by the master seed. Every logical stream (capacities, edges,
// branching process, pair sampling, ...) gets its own tag sequence, so
// replications are reproducible component-wise.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t state = master;
  std::uint64_t h = splitmix64(state);
  for (std::uint64_t t : tags) {
    state = h ^ (t + 0x9E3779B97F4A7C15ULL);
    h = splitmix64(state);
  }
  return h;
}

// Stream tags for the fixed logical substreams.
namespace stream_tag {
inline constexpr std::uint64_t capacities = 0x01;
inline constexpr std::uint64_t edges = 0x02;
inline constexpr std::uint64_t branching = 0x03;
inline constexpr std::uint64_t pairs = 0x04;
inline constexpr std::uint64_t selection = 0x05;
}  // namespace stream_tag

// Seedable 64-bit generator used everywhere; one instance per caller,
// never shared.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::mt19937_64& engine() { return gen_; }

  // uniform on [0,1)
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
  }

  // uniform on (0,1]
  double uniform_pos() { return 1.0 - uniform(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_);
  }

  std::int64_t poisson(double mean) {
    if (mean <= 0.0) return 0;
    return std::poisson_distribution<std::int64_t>(mean)(gen_);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nrg

#endif
