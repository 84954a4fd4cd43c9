#ifndef NVQC_CORE_RNG_HPP
#define NVQC_CORE_RNG_HPP

#include <cmath>
#include <cstdint>

// Self-contained counter-free PRNG (splitmix64 state advance) so that seeded
// runs are bit-reproducible across platforms and standard libraries.

namespace nvqc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller (one value per call, no cached spare,
  // keeps substream derivation order-independent)
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
  }

  // sample mean of `n` Bernoulli(p) draws
  double binomial_mean(double p, long n) {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    long hits = 0;
    for (long i = 0; i < n; ++i) {
      if (uniform() < p) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(n);
  }

  // independent substream for (seed, a, b); mixes through splitmix twice
  static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (a + 1)) ^ (0xbf58476d1ce4e5b9ULL * (b + 1)));
    const std::uint64_t s = mixer.next_u64() ^ mixer.next_u64();
    return Rng(s);
  }

 private:
  static constexpr double kTau = 6.283185307179586476925286766559;
  std::uint64_t state_;
};

}  // namespace nvqc

#endif
