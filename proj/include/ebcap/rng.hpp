#pragma once

#include <cstdint>
#include <vector>

#include "ebcap/qnum.hpp"

namespace ebcap {

// Deterministic splitmix64 stream. All randomized search and verification
// paths derive their samples from this generator so runs are reproducible
// from a single seed across platforms and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent child stream for an indexed work item.
  static Rng child(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform01();                     // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  double gaussian();                      // standard normal
  int uniform_int(int lo, int hi);        // inclusive bounds

  // Dirichlet(1,...,1) point on the probability simplex.
  std::vector<double> random_simplex(int n);

  Matrix haar_unitary(int d);
  // d_out x d_in isometry, columns orthonormal (requires d_out >= d_in).
  Matrix haar_isometry(int d_out, int d_in);

  Matrix random_density(int d);
  PureState random_pure(int d);

 private:
  std::uint64_t state_;
  bool have_cached_gaussian_ = false;
  double cached_gaussian_ = 0.0;
};

}  // namespace ebcap
