#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "telegme/error.hpp"

namespace telegme {

template <typename Real>
using CVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

using Complex = std::complex<double>;
using CVector = CVectorT<double>;
using CMatrix = CMatrixT<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

inline constexpr int kMaxQubits = 5;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kZeroProbability = 1e-12;
inline constexpr double kDefaultBiseparableTol = 1e-7;

// Basis index convention: qubit 0 (party A) is the most significant bit, so for
// three qubits the amplitude of |abc> sits at index 4a + 2b + c.
constexpr int bit_position(int n_qubits, int qubit) { return n_qubits - 1 - qubit; }

/// Normalized pure state of 1..5 qubits. Construction validates and never
/// rescales; use `renormalize` when building from unnormalized closed forms.
class PureState {
 public:
  PureState(int n_qubits, CVector amplitudes);

  static PureState renormalize(int n_qubits, CVector amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

 private:
  int n_qubits_;
  CVector amplitudes_;
};

/// Re-checks every invariant of a state; throws NotNormalized or DimensionMismatch.
PureState validate(int n_qubits, const CVector& amplitudes);
const PureState& validate(const PureState& state);

/// Hermitian, unit-trace, PSD matrix on a power-of-two dimension.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);
  static DensityMatrix from_pure(const PureState& state);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const CMatrix& entries() const noexcept { return entries_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

 private:
  int n_qubits_;
  CMatrix entries_;
};

/// One-qubit orthogonal measurement {|b0>, |b1>} with
/// |b0> = cos(θ/2)|0> + e^{iφ} sin(θ/2)|1> and |b1> its orthogonal complement.
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  /// Checked constructor: θ in [0, π], φ in [0, 2π).
  static MeasurementBasis make(double theta, double phi);
  /// Maps arbitrary real angles onto the checked range; both kets change by a
  /// global phase at most.
  static MeasurementBasis canonical(double theta, double phi);

  static MeasurementBasis z() { return {0.0, 0.0}; }
  static MeasurementBasis x();

  Vector2c ket(int outcome) const;
};

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  /// Builds the cut {left | complement}; throws on empty, full or out-of-range sets.
  static Bipartition make(std::vector<int> left, int n_qubits);
  static Bipartition one_vs_rest(int qubit, int n_qubits) { return make({qubit}, n_qubits); }
  int n_qubits() const noexcept { return static_cast<int>(left.size() + right.size()); }
};

/// Outcome of a measurement or POVM branch. A probability below 1e-12 leaves
/// `state` empty; such branches carry zero weight in every average.
struct Branch {
  double probability = 0.0;
  std::optional<PureState> state;

  bool flagged() const noexcept { return !state.has_value(); }
};

// ---------------------------------------------------------------------------
// Expression-level kernels. These work on any complex Eigen vector and are the
// building blocks of the checked PureState API below.

/// Reshapes amplitudes into M(a, t) where a runs over the basis of `keep`
/// (ascending qubit order, big-endian) and t over the remaining qubits.
/// The reduced density matrix of `keep` is M M^†.
template <typename Derived>
CMatrixT<typename Derived::RealScalar> cut_matrix(const Eigen::MatrixBase<Derived>& amps,
                                                  int n_qubits, std::span<const int> keep) {
  using Real = typename Derived::RealScalar;
  const int nk = static_cast<int>(keep.size());
  std::uint32_t keep_mask = 0;
  for (int q : keep) keep_mask |= 1u << bit_position(n_qubits, q);
  std::vector<int> rest_bits;
  for (int q = 0; q < n_qubits; ++q)
    if (!(keep_mask >> bit_position(n_qubits, q) & 1u)) rest_bits.push_back(bit_position(n_qubits, q));

  const Eigen::Index rows = Eigen::Index{1} << nk;
  const Eigen::Index cols = Eigen::Index{1} << (n_qubits - nk);
  CMatrixT<Real> m(rows, cols);
  for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
    Eigen::Index a = 0;
    for (int q : keep) a = (a << 1) | ((idx >> bit_position(n_qubits, q)) & 1);
    Eigen::Index t = 0;
    for (int b : rest_bits) t = (t << 1) | ((idx >> b) & 1);
    m(a, t) = amps[idx];
  }
  return m;
}

/// Applies a 2x2 operator to one qubit without any unitarity or norm checks.
template <typename Derived, typename OpDerived>
CVectorT<typename Derived::RealScalar> apply_single_qubit(const Eigen::MatrixBase<Derived>& amps,
                                                          int n_qubits, int qubit,
                                                          const Eigen::MatrixBase<OpDerived>& op) {
  CVectorT<typename Derived::RealScalar> out(amps.size());
  const Eigen::Index stride = Eigen::Index{1} << bit_position(n_qubits, qubit);
  for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
    if (idx & stride) continue;
    const auto a0 = amps[idx];
    const auto a1 = amps[idx + stride];
    out[idx] = op(0, 0) * a0 + op(0, 1) * a1;
    out[idx + stride] = op(1, 0) * a0 + op(1, 1) * a1;
  }
  return out;
}

/// Contracts one qubit with <ket|, i.e. returns sum_s conj(ket[s]) psi(..s..) as
/// an unnormalized vector on the remaining n-1 qubits.
template <typename Derived>
CVectorT<typename Derived::RealScalar> project_qubit(const Eigen::MatrixBase<Derived>& amps,
                                                     int n_qubits, int qubit, const Vector2c& ket) {
  CVectorT<typename Derived::RealScalar> out(amps.size() / 2);
  const int bit = bit_position(n_qubits, qubit);
  const Eigen::Index low_mask = (Eigen::Index{1} << bit) - 1;
  const auto c0 = std::conj(ket[0]);
  const auto c1 = std::conj(ket[1]);
  for (Eigen::Index r = 0; r < out.size(); ++r) {
    const Eigen::Index hi = (r & ~low_mask) << 1;
    const Eigen::Index idx0 = hi | (r & low_mask);
    out[r] = c0 * amps[idx0] + c1 * amps[idx0 | (Eigen::Index{1} << bit)];
  }
  return out;
}

/// Sum of |2x2 minors|^2 of a matrix; for M from `cut_matrix` this equals
/// (1 - Tr ρ²)/2 and stays accurate near zero where 1 - Tr ρ² cancels.
template <typename Derived>
typename Derived::RealScalar sum_squared_minors(const Eigen::MatrixBase<Derived>& m) {
  typename Derived::RealScalar acc(0);
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index c = a + 1; c < m.rows(); ++c)
      for (Eigen::Index s = 0; s < m.cols(); ++s)
        for (Eigen::Index t = s + 1; t < m.cols(); ++t)
          acc += std::norm(m(a, s) * m(c, t) - m(a, t) * m(c, s));
  return acc;
}

// ---------------------------------------------------------------------------
// Checked state operations.

DensityMatrix partial_trace(const PureState& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
inline DensityMatrix partial_trace(const PureState& state, std::initializer_list<int> keep) {
  return partial_trace(state, std::span<const int>(keep.begin(), keep.size()));
}
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

double purity(const DensityMatrix& rho);
/// 1 - Tr ρ_left² for a pure state, computed from squared minors.
double linear_entropy(const PureState& state, const Bipartition& cut);

bool is_unitary(const Matrix2c& u, double tol = 1e-9);
PureState apply_local_unitary(const PureState& state, int qubit, const Matrix2c& u);
std::array<Branch, 2> measure_qubit(const PureState& state, int qubit, const MeasurementBasis& basis);
bool is_biseparable_pure(const PureState& state, const Bipartition& cut,
                         double tol = kDefaultBiseparableTol);

PureState tensor(const PureState& lhs, const PureState& rhs);
PureState basis_state(int n_qubits, Eigen::Index index);
PureState ghz(int n_qubits);
/// Reorders qubits: qubit q of the input becomes qubit perm[q] of the output.
PureState permute_qubits(const PureState& state, std::span<const int> perm);

namespace gates {
Matrix2c identity();
Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();
Matrix2c hadamard();
}  // namespace gates

}  // namespace telegme
