#include "telegme/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace telegme {

namespace {

void require_qubits(const PureState& state, int n, const char* what) {
  if (state.n_qubits() != n)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " requires a " + std::to_string(n) + "-qubit state");
}

// σy ⊗ σy is real: it maps |00> -> -|11>, |01> -> |10>, |10> -> |01>, |11> -> -|00>.
Eigen::Matrix4d spin_flip() {
  Eigen::Matrix4d s;
  s << 0, 0, 0, -1,
       0, 0, 1, 0,
       0, 1, 0, 0,
      -1, 0, 0, 0;
  return s;
}

// Columns are the magic basis vectors; maximally entangled states are real
// combinations of them up to a global phase.
Eigen::Matrix4cd magic_basis() {
  const double h = std::numbers::sqrt2 / 2.0;
  const Complex i(0.0, 1.0);
  Eigen::Matrix4cd m;
  m.col(0) << h, 0, 0, h;
  m.col(1) << i * h, 0, 0, -i * h;
  m.col(2) << 0, i * h, i * h, 0;
  m.col(3) << 0, h, -h, 0;
  return m;
}

double one_vs_rest_concurrence_sq(const PureState& state, int qubit) {
  const int keep[] = {qubit};
  const CMatrix m = cut_matrix(state.amplitudes(), state.n_qubits(), keep);
  return std::min(1.0, 4.0 * sum_squared_minors(m));
}

}  // namespace

double concurrence_pure(const PureState& state, const Bipartition& cut) {
  const double c = std::sqrt(std::max(0.0, 2.0 * linear_entropy(state, cut)));
  if (cut.left.size() == 1 || cut.right.size() == 1) return std::min(1.0, c);
  return c;
}

double concurrence_from_ensemble(const CMatrix& w) {
  if (w.rows() != 4) throw Error(ErrorKind::DimensionMismatch, "ensemble must have 4 rows");
  const CMatrix tau = w.transpose() * spin_flip().cast<Complex>() * w;
  Eigen::JacobiSVD<CMatrix> svd(tau);
  const auto& sv = svd.singularValues();  // decreasing
  if (sv.size() == 0) return 0.0;
  double c = sv[0];
  for (Eigen::Index k = 1; k < sv.size(); ++k) c -= sv[k];
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_wootters(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "Wootters concurrence needs 4x4");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.entries());
  const Eigen::VectorXd& evals = es.eigenvalues();
  if (evals.minCoeff() < -1e-7)
    throw Error(ErrorKind::NumericalFailure, "density matrix eigenvalue below -1e-7");
  CMatrix w = es.eigenvectors();
  for (Eigen::Index k = 0; k < 4; ++k) w.col(k) *= std::sqrt(std::max(0.0, evals[k]));
  return concurrence_from_ensemble(w);
}

double pair_concurrence(const PureState& state, int i, int j) {
  if (i == j) throw Error(ErrorKind::InvalidArgument, "pair needs two distinct qubits");
  const int keep[] = {std::min(i, j), std::max(i, j)};
  if (keep[0] < 0 || keep[1] >= state.n_qubits())
    throw Error(ErrorKind::IndexOutOfRange, "pair index out of range");
  return concurrence_from_ensemble(cut_matrix(state.amplitudes(), state.n_qubits(), keep));
}

std::array<double, 3> three_tangle_pivots(const PureState& state) {
  require_qubits(state, 3, "three_tangle");
  std::array<double, 3> pair_sq{};
  for (std::size_t p = 0; p < 3; ++p) {
    const double c = pair_concurrence(state, kPairs3[p][0], kPairs3[p][1]);
    pair_sq[p] = c * c;
  }
  // Pivot A pairs with AB and CA, B with AB and BC, C with BC and CA.
  const double c2_ab = pair_sq[0], c2_bc = pair_sq[1], c2_ca = pair_sq[2];
  return {one_vs_rest_concurrence_sq(state, 0) - c2_ab - c2_ca,
          one_vs_rest_concurrence_sq(state, 1) - c2_ab - c2_bc,
          one_vs_rest_concurrence_sq(state, 2) - c2_bc - c2_ca};
}

double three_tangle(const PureState& state) {
  const auto pivots = three_tangle_pivots(state);
  const auto [lo, hi] = std::minmax_element(pivots.begin(), pivots.end());
  if (*hi - *lo > kCkwTolerance)
    throw Error(ErrorKind::CkwInconsistency,
                "pivot tangles disagree by " + std::to_string(*hi - *lo));
  // The pivot with the least entangled one-vs-rest cut subtracts the smallest terms.
  std::size_t best = 0;
  double smallest = 2.0;
  for (int q = 0; q < 3; ++q) {
    const double c2 = one_vs_rest_concurrence_sq(state, q);
    if (c2 < smallest) {
      smallest = c2;
      best = static_cast<std::size_t>(q);
    }
  }
  const double tau = pivots[best];
  if (tau < -kTangleClampTolerance)
    throw Error(ErrorKind::NegativeTangle, "tangle " + std::to_string(tau));
  return std::max(0.0, tau);
}

double fully_entangled_fraction(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "two-qubit state required");
  const Eigen::Matrix4cd m = magic_basis();
  const Eigen::Matrix4cd in_magic = m.adjoint() * rho.entries() * m;
  const Eigen::Matrix4d sym = in_magic.real();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(0.5 * (sym + sym.transpose()),
                                                    Eigen::EigenvaluesOnly);
  return std::clamp(es.eigenvalues().maxCoeff(), 0.25, 1.0);
}

double fully_entangled_fraction(const PureState& state) {
  require_qubits(state, 2, "fully_entangled_fraction");
  return (1.0 + concurrence_pure(state, Bipartition::one_vs_rest(0, 2))) / 2.0;
}

double max_fidelity_2q(const DensityMatrix& rho) {
  return (2.0 * fully_entangled_fraction(rho) + 1.0) / 3.0;
}

double max_fidelity_2q(const PureState& state) {
  return (2.0 * fully_entangled_fraction(state) + 1.0) / 3.0;
}

double fidelity_f_ij(const PureState& state, int i, int j) {
  require_qubits(state, 3, "fidelity_f_ij");
  const double tau = three_tangle(state);
  const double c = pair_concurrence(state, i, j);
  return (std::sqrt(tau + c * c) + 2.0) / 3.0;
}

double geometric_mean(std::span<const double> factors) {
  if (factors.empty()) return 0.0;
  const double n = static_cast<double>(factors.size());
  bool tiny = false;
  for (double f : factors) {
    if (f <= 0.0) return 0.0;
    tiny |= f < 1e-12;
  }
  if (tiny) {
    double log_sum = 0.0;
    for (double f : factors) log_sum += std::log(f);
    return std::exp(log_sum / n);
  }
  const double product = std::accumulate(factors.begin(), factors.end(), 1.0, std::multiplies<>());
  return std::pow(product, 1.0 / n);
}

MeasureReport report(const PureState& state) {
  require_qubits(state, 3, "report");
  MeasureReport r;
  r.tangle = three_tangle(state);
  r.c_ab = pair_concurrence(state, 0, 1);
  r.c_bc = pair_concurrence(state, 1, 2);
  r.c_ca = pair_concurrence(state, 2, 0);

  // T_ij = 3 F_ij - 2 = √(τ + C²_ij); evaluated directly to skip the round trip.
  r.t_ab = std::min(1.0, std::sqrt(r.tangle + r.c_ab * r.c_ab));
  r.t_bc = std::min(1.0, std::sqrt(r.tangle + r.c_bc * r.c_bc));
  r.t_ca = std::min(1.0, std::sqrt(r.tangle + r.c_ca * r.c_ca));

  const std::array<double, 3> t{r.t_ab, r.t_bc, r.t_ca};
  const auto min_it = std::min_element(t.begin(), t.end());
  r.t_min = *min_it;
  r.t_min_pair = std::string(kPairNames3[static_cast<std::size_t>(min_it - t.begin())]);
  r.t_gm = geometric_mean(t);

  // Pivot i sees the two pairs containing it: A -> (AB, CA), B -> (AB, BC), C -> (BC, CA).
  const std::array<std::array<double, 2>, 3> pivot_pairs{
      {{r.t_ab, r.t_ca}, {r.t_ab, r.t_bc}, {r.t_bc, r.t_ca}}};
  for (std::size_t i = 0; i < 3; ++i) {
    r.t_min_pivot[i] = std::min(pivot_pairs[i][0], pivot_pairs[i][1]);
    r.t_gm_pivot[i] = geometric_mean(pivot_pairs[i]);
  }

  for (int q = 0; q < 3; ++q)
    r.c_one_vs_rest[q] = std::sqrt(std::max(0.0, one_vs_rest_concurrence_sq(state, q)));
  r.c_min = *std::min_element(r.c_one_vs_rest.begin(), r.c_one_vs_rest.end());
  r.c_gm = geometric_mean(r.c_one_vs_rest);
  return r;
}

std::array<double, 17> report_values(const MeasureReport& r) {
  return {r.t_ab,           r.t_bc,           r.t_ca,           r.t_min,          r.t_gm,
          r.t_min_pivot[0], r.t_gm_pivot[0],  r.t_min_pivot[1], r.t_gm_pivot[1],  r.t_min_pivot[2],
          r.t_gm_pivot[2],  r.c_min,          r.c_gm,           r.tangle,         r.c_ab * r.c_ab,
          r.c_bc * r.c_bc,  r.c_ca * r.c_ca};
}

}  // namespace telegme
