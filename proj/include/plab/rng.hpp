#ifndef PLAB_RNG_HPP
#define PLAB_RNG_HPP

#include <cstdint>

namespace plab {

// SplitMix64 (Steele, Lea & Flood 2014): a counter-based generator whose
// k-th output is a bijective mix of seed + k*golden_gamma. Used both as the
// uniform source and, via mix64, for deriving independent per-trial seeds.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

  private:
    std::uint64_t state_;
};

// MurmurHash3 64-bit finalizer; full-avalanche bijection on 64 bits.
std::uint64_t mix64(std::uint64_t z);

// Seed for trial `index` derived from a master seed. Trials indexed this way
// are independent streams, so multi-trial sweeps can run on any number of
// workers without changing results.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t a,
                          std::uint64_t b);

// Uniform double strictly inside (0,1) (53-bit resolution, never 0 or 1).
double uniform_open(SplitMix64& rng);

// Inverse standard-normal CDF, algorithm AS241 (Wichura 1988, PPND16);
// absolute accuracy ~1e-16 over (0,1).
double normal_quantile(double p);

// Standard normal stream: one SplitMix64 output -> one uniform -> one
// normal via the inverse CDF. Exactly one counter per draw, so entry k of
// a stream is reproducible in isolation.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() { return normal_quantile(uniform_open(rng_)); }

  private:
    SplitMix64 rng_;
};

}  // namespace plab

#endif  // PLAB_RNG_HPP
