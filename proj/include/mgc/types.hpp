#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace mgc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// SplitMix64 step; used to derive independent sub-seeds from one master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Sub-seed for stream `stream` of master seed `seed`. Fixed counter splitting:
// every consumer of randomness gets its own stream index.
constexpr std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// Seeded generator with platform-independent double output. The standard
// distributions are implementation-defined, so uniforms are formed directly
// from raw engine words; identical seeds give identical streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer on [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  // Unit vector on the k-sphere: i.i.d. components uniform on (-1,1),
  // normalized; degenerate draws are redrawn.
  Vector unit_sphere(int k) {
    Vector v(k);
    for (;;) {
      for (int i = 0; i < k; ++i) v[i] = uniform(-1.0, 1.0);
      const double norm = v.norm();
      if (norm > 1e-12) return v / norm;
    }
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mgc
