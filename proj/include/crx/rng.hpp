#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace crx {

// Small self-contained generator (splitmix64 core). Used instead of the
// standard distributions so that a given seed reproduces the same stream
// on every platform, which the byte-identical report requirement needs.
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
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // complex standard normal, E|z|^2 = 1
  std::complex<double> cgaussian() {
    const double s = 0.7071067811865476;  // 1/sqrt(2)
    return {s * gaussian(), s * gaussian()};
  }

  // derive an independent stream, e.g. one per restart index
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t idx) {
    Rng r(seed ^ (0x51f0e9b5c2a3d7e1ULL * (idx + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace crx
