#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "telegme/oracle.hpp"
#include "telegme/qstate.hpp"

namespace telegme {

inline constexpr std::array<std::array<int, 2>, 6> kPairs4{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::string_view, 6> kPairNames4{"ab", "ac", "ad", "bc", "bd", "cd"};

/// Margin above 2/3 required by the witness; sits above the optimizer's error.
inline constexpr double kWitnessMargin = 3e-3;

struct FourQubitReport {
  std::array<double, 6> f4{};      // product-measurement fidelities F^(4)_ij, kPairs4 order
  std::array<double, 6> f4_bar{};  // sequential fidelities
  double t4_min = 0, t4_gm = 0;
  double t4_bar_min = 0, t4_bar_gm = 0;
};

FourQubitReport report4(const PureState& state, const OptimizerConfig& cfg = {});

/// Index of (i, j) in kPairs4, order-insensitive.
std::size_t pair_index4(int i, int j);

/// min_j F^(4)_{pivot j} > 2/3 + kWitnessMargin; true certifies genuine
/// four-partite entanglement.
bool genuine_entanglement_witness(const PureState& state, int pivot, const OptimizerConfig& cfg = {});

/// All seven bipartitions of four qubits in a fixed order: {A}, {B}, {C}, {D},
/// {A,B}, {A,C}, {A,D} on the left.
std::vector<Bipartition> all_bipartitions4();

/// Cuts across which the pure state factorizes (purity of one side >= 1 - tol).
std::vector<Bipartition> bisep_cut_scan(const PureState& state, double tol = 1e-6);

inline constexpr std::array<std::string_view, 16> kFourReportFields{
    "f4_ab",  "f4_ac",  "f4_ad",  "f4_bc",  "f4_bd",  "f4_cd",  "f4b_ab", "f4b_ac",
    "f4b_ad", "f4b_bc", "f4b_bd", "f4b_cd", "t4_min", "t4_gm",  "t4b_min", "t4b_gm"};

std::array<double, 16> report_values(const FourQubitReport& r);

}  // namespace telegme
