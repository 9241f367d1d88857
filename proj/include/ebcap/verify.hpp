#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ebcap/rng.hpp"

namespace ebcap {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst_deviation = 0.0;
  std::string detail;
};

// Named executable properties grouped into suites "lemmas", "depol", "all".
std::vector<std::string> verify_suites();
std::vector<PropertyResult> run_suite(const std::string& suite,
                                      std::uint64_t seed, int trials);

// Samplers shared between the verify suites and the tests.

// Unconstrained random qubit ensemble: |X| in [1,4], d0 = 2, isometric or
// unitary encoders into dA = 2.
struct RandomEnsembleOptions {
  int max_alphabet = 4;
  bool balanced = false;  // Pauli-covariant: average channel input = I/2
};

class EncodingEnsemble;
class KrausChannel;

EncodingEnsemble random_qubit_ensemble(Rng& rng,
                                       const RandomEnsembleOptions& opt = {});
KrausChannel random_qubit_channel(Rng& rng);

}  // namespace ebcap
