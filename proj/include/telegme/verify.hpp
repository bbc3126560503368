#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "telegme/oracle.hpp"
#include "telegme/random.hpp"

namespace telegme {

struct VerifyOptions {
  int trials = 10000;        // monotonicity, CKW and separability corpus size
  int oracle_states = 200;   // three-qubit oracle agreement
  int four_states = 5;       // random four-qubit states for the F̄ >= F ordering
  std::uint64_t seed = 42;
  OptimizerConfig cfg;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every invariant suite; each suite draws from its own seed stream.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

/// Acín-type state α0|000> + α1 e^{iθ}|100> + α2|101> with random weights and
/// random local unitaries: factorizes across B|AC, so F_AB = F_BC = 2/3 while
/// τ = 0 and the state is generally not fully product.
PureState random_b_separable_acin(Rng& rng);

}  // namespace telegme
