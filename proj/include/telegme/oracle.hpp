#pragma once

#include <cstdint>

#include "telegme/qstate.hpp"

namespace telegme {

/// Search settings shared by all brute-force maximizations. The coarse grid
/// places `coarse_grid` points per angle: θ_k = kπ/g and φ_l = 2πl/g; grids
/// whose sizes divide one another are nested.
struct OptimizerConfig {
  int coarse_grid = 48;
  int refine_iters = 200;
  double refine_tol = 1e-10;
  std::uint64_t seed = 0;  // drives state corpora in comparisons; the search itself is deterministic

  void validate() const;
};

struct OracleResult {
  double value = 0.0;
  MeasurementBasis basis;
};

/// max over maximally entangled |e> of <e|ρ|e>, searching all
/// (U ⊗ I)|Φ+> with U in SU(2) (Euler angles). Since (U_a ⊗ U_b)|Φ+> =
/// (U_a U_b^T ⊗ I)|Φ+>, this covers every (U_a ⊗ U_b)|Φ+>.
double fef_bruteforce(const DensityMatrix& rho, const OptimizerConfig& cfg = {});
double fef_bruteforce(const PureState& state, const OptimizerConfig& cfg = {});

/// max over one-qubit orthogonal measurements on the third party of
/// Σ_t p_t f(post_t) for a three-qubit pure state. Returns the fraction f_ij
/// (not the fidelity) and the maximizing basis on the measured qubit.
OracleResult f_ij_bruteforce(const PureState& state, int i, int j, const OptimizerConfig& cfg = {});

/// N = 4 or 5: max over product measurements on every assistant qubit of
/// Σ_J p_J f(post_ij). N = 5 caps the grid at 16 points per angle.
double f_ij_product_n(const PureState& state, int i, int j, const OptimizerConfig& cfg = {});

/// Four qubits, one assistant measures first and the other adapts to its
/// outcome: max over the first assistant and its basis of Σ_t p_t f_ij^(3)(post_t),
/// where f^(3) is evaluated in closed form from tangle and pair concurrence.
double f_ij_sequential_4(const PureState& state, int i, int j, const OptimizerConfig& cfg = {});

/// Converts a fully entangled fraction to the standard teleportation fidelity (2f + 1)/3.
constexpr double fidelity_from_fraction(double f) { return (2.0 * f + 1.0) / 3.0; }

}  // namespace telegme
