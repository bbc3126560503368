#include "telegme/fourqubit.hpp"

#include <algorithm>

#include "telegme/measures.hpp"

namespace telegme {

namespace {

void require_four(const PureState& state) {
  if (state.n_qubits() != 4) throw Error(ErrorKind::DimensionMismatch, "four-qubit state required");
}

}  // namespace

std::size_t pair_index4(int i, int j) {
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (std::size_t p = 0; p < kPairs4.size(); ++p)
    if (kPairs4[p][0] == lo && kPairs4[p][1] == hi) return p;
  throw Error(ErrorKind::IndexOutOfRange, "not a four-qubit pair");
}

FourQubitReport report4(const PureState& state, const OptimizerConfig& cfg) {
  require_four(state);
  FourQubitReport r;
  std::array<double, 6> t{}, t_bar{};
  for (std::size_t p = 0; p < kPairs4.size(); ++p) {
    const auto [i, j] = kPairs4[p];
    r.f4[p] = fidelity_from_fraction(f_ij_product_n(state, i, j, cfg));
    r.f4_bar[p] = fidelity_from_fraction(f_ij_sequential_4(state, i, j, cfg));
    t[p] = std::max(0.0, 3.0 * r.f4[p] - 2.0);
    t_bar[p] = std::max(0.0, 3.0 * r.f4_bar[p] - 2.0);
  }
  r.t4_min = *std::min_element(t.begin(), t.end());
  r.t4_gm = geometric_mean(t);
  r.t4_bar_min = *std::min_element(t_bar.begin(), t_bar.end());
  r.t4_bar_gm = geometric_mean(t_bar);
  return r;
}

bool genuine_entanglement_witness(const PureState& state, int pivot, const OptimizerConfig& cfg) {
  require_four(state);
  if (pivot < 0 || pivot > 3) throw Error(ErrorKind::IndexOutOfRange, "pivot must be 0..3");
  for (int j = 0; j < 4; ++j) {
    if (j == pivot) continue;
    const double fid = fidelity_from_fraction(f_ij_product_n(state, pivot, j, cfg));
    if (!(fid > 2.0 / 3.0 + kWitnessMargin)) return false;
  }
  return true;
}

std::vector<Bipartition> all_bipartitions4() {
  std::vector<Bipartition> cuts;
  for (int q = 0; q < 4; ++q) cuts.push_back(Bipartition::make({q}, 4));
  for (int q = 1; q < 4; ++q) cuts.push_back(Bipartition::make({0, q}, 4));
  return cuts;
}

std::vector<Bipartition> bisep_cut_scan(const PureState& state, double tol) {
  require_four(state);
  std::vector<Bipartition> out;
  for (auto& cut : all_bipartitions4())
    if (is_biseparable_pure(state, cut, tol)) out.push_back(std::move(cut));
  return out;
}

std::array<double, 16> report_values(const FourQubitReport& r) {
  std::array<double, 16> v{};
  std::copy(r.f4.begin(), r.f4.end(), v.begin());
  std::copy(r.f4_bar.begin(), r.f4_bar.end(), v.begin() + 6);
  v[12] = r.t4_min;
  v[13] = r.t4_gm;
  v[14] = r.t4_bar_min;
  v[15] = r.t4_bar_gm;
  return v;
}

}  // namespace telegme
