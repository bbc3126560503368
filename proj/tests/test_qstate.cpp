#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "telegme/error.hpp"
#include "telegme/qstate.hpp"
#include "telegme/random.hpp"

using namespace telegme;

namespace {

const double kH = std::numbers::sqrt2 / 2.0;

CVector amps(std::initializer_list<Complex> values) {
  CVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Complex c : values) v[i++] = c;
  return v;
}

PureState w_state() {
  const double s = 1.0 / std::sqrt(3.0);
  return PureState(3, amps({0, s, s, 0, s, 0, 0, 0}));
}

// Reference reduction: ρ(a, a') = Σ_rest ψ(a, rest) ψ*(a', rest) by explicit index loops.
CMatrix reference_trace(const PureState& s, const std::vector<int>& keep) {
  const int n = s.n_qubits();
  const int k = static_cast<int>(keep.size());
  CMatrix rho = CMatrix::Zero(1 << k, 1 << k);
  auto sub_index = [&](int idx) {
    int a = 0;
    for (int q : keep) a = (a << 1) | ((idx >> (n - 1 - q)) & 1);
    return a;
  };
  auto rest_mask = [&](int idx) {
    int r = idx;
    for (int q : keep) r &= ~(1 << (n - 1 - q));
    return r;
  };
  for (int x = 0; x < (1 << n); ++x)
    for (int y = 0; y < (1 << n); ++y)
      if (rest_mask(x) == rest_mask(y)) rho(sub_index(x), sub_index(y)) += s[x] * std::conj(s[y]);
  return rho;
}

bool same_ray(const CVector& a, const CVector& b) { return std::abs(std::abs(a.dot(b)) - 1.0) < 1e-12; }

std::vector<double> nonzero_spectrum(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] > 1e-10) out.push_back(es.eigenvalues()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validate accepts normalized states and rejects bad ones") {
  CHECK_NOTHROW(PureState(3, amps({1, 0, 0, 0, 0, 0, 0, 0})));
  CHECK_NOTHROW(PureState(3, amps({kH, 0, 0, 0, 0, 0, 0, kH})));
  try {
    PureState(3, amps({1, 0, 0, 0, 0, 0, 0, 1}));
    FAIL("expected NotNormalized");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalized);
  }
  try {
    PureState(3, amps({1, 0, 0, 0}));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  CHECK_THROWS_AS(PureState(6, CVector::Zero(64)), Error);
  const PureState r = PureState::renormalize(3, amps({1, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(r[0].real() == doctest::Approx(kH).epsilon(1e-15));
  CHECK(validate(r).n_qubits() == 3);
}

TEST_CASE("density matrix invariants") {
  CMatrix bad = CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{bad}, Error);  // trace 2
  CMatrix non_hermitian = CMatrix::Identity(2, 2) * 0.5;
  non_hermitian(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix{non_hermitian}, Error);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, Error);
  CHECK_NOTHROW(DensityMatrix{CMatrix::Identity(4, 4) * 0.25});
}

TEST_CASE("measurement basis kets are orthonormal") {
  Rng rng(3);
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi), ph(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    const auto b = MeasurementBasis::make(th(rng), ph(rng));
    CHECK(std::abs(b.ket(0).squaredNorm() - 1.0) < 1e-12);
    CHECK(std::abs(b.ket(1).squaredNorm() - 1.0) < 1e-12);
    CHECK(std::abs(b.ket(0).dot(b.ket(1))) < 1e-12);
  }
  CHECK_THROWS_AS(MeasurementBasis::make(4.0, 0.0), Error);
  CHECK_THROWS_AS(MeasurementBasis::make(1.0, 7.0), Error);
  const auto c = MeasurementBasis::canonical(-1.0, 9.0);
  CHECK(c.theta >= 0.0);
  CHECK(c.theta <= std::numbers::pi);
  CHECK(c.phi >= 0.0);
  CHECK(c.phi < 2 * std::numbers::pi);
}

TEST_CASE("bipartition construction") {
  const auto b = Bipartition::make({2, 0}, 4);
  CHECK(b.left == std::vector<int>{0, 2});
  CHECK(b.right == std::vector<int>{1, 3});
  CHECK_THROWS_AS(Bipartition::make({}, 3), Error);
  CHECK_THROWS_AS(Bipartition::make({0, 1, 2}, 3), Error);
  CHECK_THROWS_AS(Bipartition::make({5}, 3), Error);
}

TEST_CASE("partial trace examples") {
  const auto zero = partial_trace(basis_state(3, 0), {0});
  CHECK((zero.entries() - (CMatrix(2, 2) << 1, 0, 0, 0).finished()).norm() < 1e-12);

  const auto g = partial_trace(ghz(3), {0});
  CHECK((g.entries() - CMatrix::Identity(2, 2) * 0.5).norm() < 1e-12);

  const auto w = partial_trace(w_state(), {1, 2});
  CMatrix expect = CMatrix::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = expect(2, 2) = 1.0 / 3.0;
  expect(1, 2) = expect(2, 1) = 1.0 / 3.0;
  CHECK((w.entries() - expect).norm() < 1e-12);

  try {
    partial_trace(ghz(3), std::span<const int>{});
    FAIL("expected EmptyKeepSet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyKeepSet);
  }
  try {
    partial_trace(ghz(3), {3});
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("partial trace matches index summation on random states") {
  Rng rng(11);
  const std::vector<std::vector<int>> keeps{{0}, {1}, {2}, {0, 2}, {1, 3}, {0, 1, 3}};
  for (int k = 0; k < 20; ++k) {
    const PureState s = haar_state(4, rng);
    for (const auto& keep : keeps) {
      const auto rho = partial_trace(s, std::span<const int>(keep));
      CHECK((rho.entries() - reference_trace(s, keep)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(rho.entries().trace() - 1.0) < 1e-9);
    }
    // Tracing a density matrix in two steps agrees with tracing the state directly.
    const auto rho3 = partial_trace(DensityMatrix::from_pure(s), {0, 1, 3});
    const auto rho13 = partial_trace(rho3, {1, 2});
    CHECK((rho13.entries() - partial_trace(s, {1, 3}).entries()).norm() < 1e-12);
  }
}

TEST_CASE("Schmidt symmetry of complementary reductions") {
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    const PureState s = haar_state(5, rng);
    const auto a = nonzero_spectrum(partial_trace(s, {0, 3}).entries());
    const auto b = nonzero_spectrum(partial_trace(s, {1, 2, 4}).entries());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
  }
}

TEST_CASE("linear entropy equals 1 - purity") {
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const PureState s = haar_state(4, rng);
    const auto cut = Bipartition::make({1, 2}, 4);
    CHECK(std::abs(linear_entropy(s, cut) - (1.0 - purity(partial_trace(s, {1, 2})))) < 1e-12);
  }
}

TEST_CASE("local unitary examples") {
  const PureState zero = basis_state(3, 0);
  CHECK(std::abs(apply_local_unitary(zero, 0, gates::pauli_x())[0b100] - 1.0) < 1e-12);
  const PureState g = apply_local_unitary(ghz(3), 2, gates::identity());
  CHECK((g.amplitudes() - ghz(3).amplitudes()).norm() < 1e-12);
  const PureState h = apply_local_unitary(zero, 1, gates::hadamard());
  CHECK((h.amplitudes() - amps({kH, 0, kH, 0, 0, 0, 0, 0})).norm() < 1e-12);

  Matrix2c not_unitary;
  not_unitary << 1, 1, 0, 1;
  try {
    apply_local_unitary(zero, 0, not_unitary);
    FAIL("expected NotUnitary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnitary);
  }
}

TEST_CASE("local unitaries round-trip and leave other reductions unchanged") {
  Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const PureState s = haar_state(4, rng);
    const Matrix2c u = haar_unitary(rng);
    const PureState t = apply_local_unitary(s, 2, u);
    const PureState back = apply_local_unitary(t, 2, u.adjoint());
    CHECK((back.amplitudes() - s.amplitudes()).norm() < 1e-9);
    for (const std::vector<int>& keep : {std::vector<int>{0, 1}, {0, 2}, {2}, {0, 1, 2}, {3}}) {
      const double p0 = purity(partial_trace(s, std::span<const int>(keep)));
      const double p1 = purity(partial_trace(t, std::span<const int>(keep)));
      CHECK(std::abs(p0 - p1) < 1e-9);
    }
  }
}

TEST_CASE("measure_qubit examples") {
  const auto ghz_x = measure_qubit(ghz(3), 0, MeasurementBasis::x());
  CHECK(ghz_x[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ghz_x[1].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(same_ray(ghz_x[0].state->amplitudes(), amps({kH, 0, 0, kH})));
  CHECK(same_ray(ghz_x[1].state->amplitudes(), amps({kH, 0, 0, -kH})));

  const auto zero_z = measure_qubit(basis_state(3, 0), 0, MeasurementBasis::z());
  CHECK(zero_z[0].probability == doctest::Approx(1.0));
  CHECK_FALSE(zero_z[0].flagged());
  CHECK(zero_z[1].flagged());
  CHECK(zero_z[1].probability < 1e-12);

  const auto w_z = measure_qubit(w_state(), 0, MeasurementBasis::z());
  CHECK(w_z[0].probability == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(w_z[1].probability == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(same_ray(w_z[0].state->amplitudes(), amps({0, kH, kH, 0})));
  CHECK(same_ray(w_z[1].state->amplitudes(), amps({1, 0, 0, 0})));

  CHECK_THROWS_AS(measure_qubit(ghz(3), 3, MeasurementBasis::z()), Error);
}

TEST_CASE("measurement probabilities sum to one") {
  Rng rng(2);
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi), ph(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const PureState s = haar_state(n, rng);
    const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const auto br = measure_qubit(s, q, MeasurementBasis::make(th(rng), ph(rng)));
    CHECK(std::abs(br[0].probability + br[1].probability - 1.0) < 1e-9);
    for (const auto& b : br)
      if (!b.flagged()) CHECK(std::abs(b.state->amplitudes().norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("biseparability examples") {
  for (int q = 0; q < 3; ++q)
    CHECK(is_biseparable_pure(basis_state(3, 0), Bipartition::one_vs_rest(q, 3)));
  CHECK_FALSE(is_biseparable_pure(ghz(3), Bipartition::one_vs_rest(0, 3)));
  const PureState xi(3, amps({kH, 0, 0, 0, 0, 0, kH, 0}));
  CHECK(is_biseparable_pure(xi, Bipartition::one_vs_rest(2, 3)));
  CHECK_FALSE(is_biseparable_pure(xi, Bipartition::one_vs_rest(0, 3)));
}

TEST_CASE("tensor and permute") {
  const PureState bell(2, amps({kH, 0, 0, kH}));
  const PureState s = tensor(basis_state(1, 1), bell);  // |1> ⊗ Bell
  CHECK(std::abs(s[0b100] - kH) < 1e-12);
  CHECK(std::abs(s[0b111] - kH) < 1e-12);
  const int perm[] = {2, 0, 1};  // A -> C, B -> A, C -> B
  const PureState p = permute_qubits(s, perm);
  CHECK(std::abs(p[0b001] - kH) < 1e-12);
  CHECK(std::abs(p[0b111] - kH) < 1e-12);
  CHECK(is_biseparable_pure(p, Bipartition::one_vs_rest(2, 3)));
}
