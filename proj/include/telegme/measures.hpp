#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "telegme/qstate.hpp"

namespace telegme {

/// Party labels for three-qubit states; the value is the qubit index.
enum class Party : int { A = 0, B = 1, C = 2 };

inline constexpr std::array<std::array<int, 2>, 3> kPairs3{{{0, 1}, {1, 2}, {2, 0}}};  // AB, BC, CA
inline constexpr std::array<std::string_view, 3> kPairNames3{"AB", "BC", "CA"};

inline constexpr double kCkwTolerance = 1e-8;
inline constexpr double kTangleClampTolerance = 1e-9;

/// √(2(1 - Tr ρ_left²)). One-vs-rest cuts are clipped to [0, 1].
double concurrence_pure(const PureState& state, const Bipartition& cut);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence_wootters(const DensityMatrix& rho);

/// Wootters concurrence of ρ = W W^† given any (unnormalized) ensemble matrix W
/// of shape 4 x r. The λ's are the singular values of W^T (σy⊗σy) W, which do
/// not depend on the chosen decomposition.
double concurrence_from_ensemble(const CMatrix& w);

/// Concurrence of the two-qubit marginal on (i, j) of a pure state.
double pair_concurrence(const PureState& state, int i, int j);

/// Three-tangle via τ = C²_{i(jk)} - C²_ij - C²_ik for each pivot i = A, B, C.
std::array<double, 3> three_tangle_pivots(const PureState& state);

/// Three-tangle from the CKW pivot whose one-vs-rest concurrence is smallest.
/// Throws CkwInconsistency if the pivots disagree beyond 1e-8 and
/// NegativeTangle below -1e-9; values in (-1e-9, 0) clamp to 0.
double three_tangle(const PureState& state);

double fully_entangled_fraction(const DensityMatrix& rho);
double fully_entangled_fraction(const PureState& state);
double max_fidelity_2q(const DensityMatrix& rho);
double max_fidelity_2q(const PureState& state);

/// Maximal average three-qubit teleportation fidelity (√(τ + C²_ij) + 2) / 3.
double fidelity_f_ij(const PureState& state, int i, int j);
inline double fidelity_f_ij(const PureState& state, Party i, Party j) {
  return fidelity_f_ij(state, static_cast<int>(i), static_cast<int>(j));
}

/// Geometric mean of non-negative factors. A factor below 1e-12 switches to a
/// log-space evaluation and an exact zero factor yields exactly 0.
double geometric_mean(std::span<const double> factors);

struct MeasureReport {
  double t_ab = 0, t_bc = 0, t_ca = 0;
  double t_min = 0, t_gm = 0;
  std::array<double, 3> t_min_pivot{};  // indexed by Party
  std::array<double, 3> t_gm_pivot{};
  double c_min = 0, c_gm = 0;
  std::array<double, 3> c_one_vs_rest{};  // C_A(BC), C_B(CA), C_C(AB)
  double tangle = 0;
  double c_ab = 0, c_bc = 0, c_ca = 0;
  std::string t_min_pair = "AB";  // lexicographic tie-break AB < BC < CA
};

MeasureReport report(const PureState& state);

inline constexpr std::array<std::string_view, 17> kReportFields{
    "t_ab",    "t_bc",    "t_ca",    "t_min", "t_gm", "t_min_a", "t_gm_a", "t_min_b", "t_gm_b",
    "t_min_c", "t_gm_c", "c_min", "c_gm", "tangle", "c2_ab", "c2_bc", "c2_ca"};

/// Values in `kReportFields` order.
std::array<double, 17> report_values(const MeasureReport& r);

}  // namespace telegme
