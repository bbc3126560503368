#include "telegme/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace telegme {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n < 1 || n > kMaxQubits)
    throw Error(ErrorKind::DimensionMismatch, "dimension " + std::to_string(dim) +
                                                  " is not 2^n for n in 1..5");
  return n;
}

void check_qubit(int qubit, int n_qubits) {
  if (qubit < 0 || qubit >= n_qubits)
    throw Error(ErrorKind::IndexOutOfRange,
                "qubit " + std::to_string(qubit) + " outside 0.." + std::to_string(n_qubits - 1));
}

std::vector<int> checked_keep(std::span<const int> keep, int n_qubits) {
  if (keep.empty()) throw Error(ErrorKind::EmptyKeepSet, "keep set is empty");
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  for (int q : sorted) check_qubit(q, n_qubits);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidArgument, "keep set contains duplicates");
  if (static_cast<int>(sorted.size()) == n_qubits)
    throw Error(ErrorKind::InvalidArgument, "keep set must be a proper subset");
  return sorted;
}

}  // namespace

PureState::PureState(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits_ < 1 || n_qubits_ > kMaxQubits)
    throw Error(ErrorKind::DimensionMismatch, "n_qubits must be in 1..5");
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits_))
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(1 << n_qubits_) + " amplitudes, got " +
                    std::to_string(amplitudes_.size()));
  if (!amplitudes_.allFinite()) throw Error(ErrorKind::NotNormalized, "non-finite amplitude");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance)
    throw Error(ErrorKind::NotNormalized, "squared norm " + std::to_string(norm2));
}

PureState PureState::renormalize(int n_qubits, CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::NotNormalized, "zero vector cannot be normalized");
  amplitudes /= norm;
  return {n_qubits, std::move(amplitudes)};
}

PureState validate(int n_qubits, const CVector& amplitudes) { return {n_qubits, amplitudes}; }

const PureState& validate(const PureState& state) {
  [[maybe_unused]] const PureState check(state.n_qubits(), state.amplitudes());
  return state;
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw Error(ErrorKind::DimensionMismatch, "density matrix must be square");
  n_qubits_ = qubits_for_dim(entries_.rows());
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw Error(ErrorKind::NumericalFailure, "density matrix is not Hermitian");
  if (std::abs(entries_.trace() - Complex(1.0)) > 1e-9)
    throw Error(ErrorKind::NotNormalized, "density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw Error(ErrorKind::NumericalFailure, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  return DensityMatrix(state.amplitudes() * state.amplitudes().adjoint());
}

MeasurementBasis MeasurementBasis::make(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi) || !(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
    throw Error(ErrorKind::ParameterOutOfRange, "basis angles outside [0,π]x[0,2π)");
  return {theta, phi};
}

MeasurementBasis MeasurementBasis::canonical(double theta, double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  if (theta > std::numbers::pi) {
    theta = two_pi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;
  return {theta, phi};
}

MeasurementBasis MeasurementBasis::x() { return {std::numbers::pi / 2.0, 0.0}; }

Vector2c MeasurementBasis::ket(int outcome) const {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex phase = std::polar(1.0, phi);
  if (outcome == 0) return Vector2c(c, phase * s);
  return Vector2c(-std::conj(phase) * s, c);
}

Bipartition Bipartition::make(std::vector<int> left, int n_qubits) {
  std::sort(left.begin(), left.end());
  if (left.empty()) throw Error(ErrorKind::InvalidArgument, "bipartition side is empty");
  for (int q : left) check_qubit(q, n_qubits);
  if (std::adjacent_find(left.begin(), left.end()) != left.end())
    throw Error(ErrorKind::InvalidArgument, "bipartition side contains duplicates");
  Bipartition cut;
  for (int q = 0; q < n_qubits; ++q)
    if (!std::binary_search(left.begin(), left.end(), q)) cut.right.push_back(q);
  if (cut.right.empty()) throw Error(ErrorKind::InvalidArgument, "bipartition side is empty");
  cut.left = std::move(left);
  return cut;
}

DensityMatrix partial_trace(const PureState& state, std::span<const int> keep) {
  const auto sorted = checked_keep(keep, state.n_qubits());
  const CMatrix m = cut_matrix(state.amplitudes(), state.n_qubits(), sorted);
  return DensityMatrix(m * m.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits();
  const auto sorted = checked_keep(keep, n);
  const int nk = static_cast<int>(sorted.size());
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << (n - nk);

  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) traced.push_back(q);
  auto full_index = [&](Eigen::Index a, Eigen::Index t) {
    Eigen::Index idx = 0;
    for (int pos = 0; pos < nk; ++pos)
      if ((a >> (nk - 1 - pos)) & 1) idx |= Eigen::Index{1} << bit_position(n, sorted[pos]);
    const int nt = n - nk;
    for (int pos = 0; pos < nt; ++pos)
      if ((t >> (nt - 1 - pos)) & 1) idx |= Eigen::Index{1} << bit_position(n, traced[pos]);
    return idx;
  };

  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index t = 0; t < dt; ++t)
    for (Eigen::Index a = 0; a < dk; ++a)
      for (Eigen::Index b = 0; b < dk; ++b) out(a, b) += rho(full_index(a, t), full_index(b, t));
  return DensityMatrix(std::move(out));
}

double purity(const DensityMatrix& rho) {
  return (rho.entries() * rho.entries()).trace().real();
}

double linear_entropy(const PureState& state, const Bipartition& cut) {
  if (cut.n_qubits() != state.n_qubits())
    throw Error(ErrorKind::DimensionMismatch, "bipartition does not match state size");
  // Pick the smaller side for the row index; the minor sum is symmetric.
  const auto& side = cut.left.size() <= cut.right.size() ? cut.left : cut.right;
  const CMatrix m = cut_matrix(state.amplitudes(), state.n_qubits(), side);
  return 2.0 * sum_squared_minors(m);
}

bool is_unitary(const Matrix2c& u, double tol) {
  return (u.adjoint() * u - Matrix2c::Identity()).cwiseAbs().maxCoeff() <= tol;
}

PureState apply_local_unitary(const PureState& state, int qubit, const Matrix2c& u) {
  check_qubit(qubit, state.n_qubits());
  if (!is_unitary(u)) throw Error(ErrorKind::NotUnitary, "operator is not unitary within 1e-9");
  return PureState::renormalize(state.n_qubits(),
                                apply_single_qubit(state.amplitudes(), state.n_qubits(), qubit, u));
}

std::array<Branch, 2> measure_qubit(const PureState& state, int qubit,
                                    const MeasurementBasis& basis) {
  check_qubit(qubit, state.n_qubits());
  if (state.n_qubits() < 2)
    throw Error(ErrorKind::DimensionMismatch, "cannot measure the only qubit of a state");
  std::array<Branch, 2> out;
  for (int t = 0; t < 2; ++t) {
    CVector post = project_qubit(state.amplitudes(), state.n_qubits(), qubit, basis.ket(t));
    const double p = post.squaredNorm();
    out[t].probability = p;
    if (p >= kZeroProbability) out[t].state = PureState(state.n_qubits() - 1, post / std::sqrt(p));
  }
  return out;
}

bool is_biseparable_pure(const PureState& state, const Bipartition& cut, double tol) {
  return 1.0 - linear_entropy(state, cut) >= 1.0 - tol;
}

PureState tensor(const PureState& lhs, const PureState& rhs) {
  const int n = lhs.n_qubits() + rhs.n_qubits();
  if (n > kMaxQubits) throw Error(ErrorKind::DimensionMismatch, "tensor product exceeds 5 qubits");
  CVector out(lhs.dim() * rhs.dim());
  for (Eigen::Index a = 0; a < lhs.dim(); ++a)
    out.segment(a * rhs.dim(), rhs.dim()) = lhs[a] * rhs.amplitudes();
  return PureState::renormalize(n, std::move(out));
}

PureState basis_state(int n_qubits, Eigen::Index index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw Error(ErrorKind::DimensionMismatch, "n_qubits must be in 1..5");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (index < 0 || index >= dim) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  CVector amps = CVector::Zero(dim);
  amps[index] = 1.0;
  return {n_qubits, std::move(amps)};
}

PureState ghz(int n_qubits) {
  CVector amps = CVector::Zero(Eigen::Index{1} << n_qubits);
  amps[0] = amps[amps.size() - 1] = std::numbers::sqrt2 / 2.0;
  return {n_qubits, std::move(amps)};
}

PureState permute_qubits(const PureState& state, std::span<const int> perm) {
  const int n = state.n_qubits();
  if (static_cast<int>(perm.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "permutation size mismatch");
  std::vector<int> seen(perm.begin(), perm.end());
  std::sort(seen.begin(), seen.end());
  for (int q = 0; q < n; ++q)
    if (seen[q] != q) throw Error(ErrorKind::InvalidArgument, "not a permutation");
  CVector out(state.dim());
  for (Eigen::Index idx = 0; idx < state.dim(); ++idx) {
    Eigen::Index target = 0;
    for (int q = 0; q < n; ++q)
      if ((idx >> bit_position(n, q)) & 1) target |= Eigen::Index{1} << bit_position(n, perm[q]);
    out[target] = state[idx];
  }
  return {n, std::move(out)};
}

namespace gates {
Matrix2c identity() { return Matrix2c::Identity(); }
Matrix2c pauli_x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}
Matrix2c pauli_y() {
  Matrix2c m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
Matrix2c pauli_z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}
Matrix2c hadamard() {
  Matrix2c m;
  m << 1, 1, 1, -1;
  return m * (std::numbers::sqrt2 / 2.0);
}
}  // namespace gates

}  // namespace telegme
