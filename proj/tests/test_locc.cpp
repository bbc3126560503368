#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "telegme/error.hpp"
#include "telegme/locc.hpp"
#include "telegme/random.hpp"

using namespace telegme;

namespace {

TwoOutcomePovm projective(const MeasurementBasis& b) {
  Matrix2c v;
  v.row(0) = b.ket(0).adjoint();
  v.row(1) = b.ket(1).adjoint();
  return TwoOutcomePovm::make(Matrix2c::Identity(), Matrix2c::Identity(), v, 1.0, 0.0);
}

}  // namespace

TEST_CASE("POVM construction") {
  const TwoOutcomePovm trivial{};
  CHECK((trivial.kraus(0) - Matrix2c::Identity()).norm() < 1e-15);
  CHECK(trivial.kraus(1).norm() < 1e-15);

  const double h = std::numbers::sqrt2 / 2.0;
  const auto split = TwoOutcomePovm::make(Matrix2c::Identity(), Matrix2c::Identity(), Matrix2c::Identity(), h, h);
  CHECK((split.kraus(0) - h * Matrix2c::Identity()).norm() < 1e-15);
  CHECK((split.kraus(1) - h * Matrix2c::Identity()).norm() < 1e-15);

  for (std::uint64_t seed = 0; seed < 500; ++seed) CHECK(random_povm(seed).completeness_residual() < 1e-9);

  Matrix2c bad;
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(TwoOutcomePovm::make(bad, Matrix2c::Identity(), Matrix2c::Identity(), 1, 1), Error);
  CHECK_THROWS_AS(TwoOutcomePovm::make(Matrix2c::Identity(), Matrix2c::Identity(), Matrix2c::Identity(), 1.5, 0),
                  Error);
}

TEST_CASE("apply_povm examples") {
  Rng rng(50);
  const PureState s = haar_state(3, rng);
  const auto trivial = apply_povm(s, 1, TwoOutcomePovm{});
  CHECK(trivial[0].probability == doctest::Approx(1.0));
  CHECK((trivial[0].state->amplitudes() - s.amplitudes()).norm() < 1e-12);
  CHECK(trivial[1].flagged());

  const double h = std::numbers::sqrt2 / 2.0;
  const auto split = apply_povm(ghz(3), 0, TwoOutcomePovm{Matrix2c::Identity(), Matrix2c::Identity(),
                                                          Matrix2c::Identity(), h, h});
  for (const auto& b : split) {
    CHECK(b.probability == doctest::Approx(0.5));
    CHECK((b.state->amplitudes() - ghz(3).amplitudes()).norm() < 1e-12);
  }
  CHECK_THROWS_AS(apply_povm(s, 3, TwoOutcomePovm{}), Error);
}

TEST_CASE("POVM probabilities sum to one") {
  Rng rng(51);
  for (int k = 0; k < 500; ++k) {
    const PureState s = haar_state(3, rng);
    const auto br = apply_povm(s, static_cast<int>(rng() % 3), random_povm(rng()));
    CHECK(std::abs(br[0].probability + br[1].probability - 1.0) < 1e-9);
    for (const auto& b : br)
      if (!b.flagged()) CHECK(std::abs(b.state->amplitudes().norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("projective POVM reproduces measure_qubit") {
  Rng rng(52);
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi), ph(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    const PureState s = haar_state(3, rng);
    const int q = static_cast<int>(rng() % 3);
    const auto basis = MeasurementBasis::make(th(rng), ph(rng));
    const auto povm = apply_povm(s, q, projective(basis));
    const auto meas = measure_qubit(s, q, basis);
    CHECK(std::abs(povm[0].probability - meas[0].probability) < 1e-9);
    CHECK(std::abs(povm[1].probability - meas[1].probability) < 1e-9);
    // Outcome 0 leaves the measured qubit in |0>; stripping it gives the measure_qubit post-state.
    const auto stripped = measure_qubit(*povm[0].state, q, MeasurementBasis::z());
    CHECK(stripped[0].probability == doctest::Approx(1.0));
    CHECK(std::abs(std::abs(stripped[0].state->amplitudes().dot(meas[0].state->amplitudes())) - 1.0) < 1e-9);
  }
}

TEST_CASE("monotonicity examples") {
  const auto x_on_c = projective(MeasurementBasis::x());
  CHECK(std::abs(monotonicity_trial(MeasureId::TAB, ghz(3), 2, x_on_c)) < 1e-12);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (MeasureId id : kMonotoneMeasures)
      CHECK(std::abs(monotonicity_trial(id, basis_state(3, 0), static_cast<int>(seed % 3), random_povm(seed))) < 1e-12);
}

TEST_CASE("pair concurrence can increase under LOCC") {
  const auto x_on_c = projective(MeasurementBasis::x());
  double average = 0.0;
  for (const auto& b : apply_povm(ghz(3), 2, x_on_c))
    if (!b.flagged()) average += b.probability * evaluate(MeasureId::ConcurrenceAB, *b.state);
  CHECK(evaluate(MeasureId::ConcurrenceAB, ghz(3)) == doctest::Approx(0.0));
  CHECK(average == doctest::Approx(1.0));
  CHECK(average > evaluate(MeasureId::ConcurrenceAB, ghz(3)));
  CHECK(monotonicity_trial(MeasureId::ConcurrenceAB, ghz(3), 2, x_on_c) < -0.5);
}

TEST_CASE("batched deltas match single trials") {
  Rng rng(53);
  const PureState s = haar_state(3, rng);
  const auto povm = random_povm(7);
  const auto deltas = monotonicity_deltas(s, 1, povm);
  for (std::size_t m = 0; m < kMonotoneMeasures.size(); ++m)
    CHECK(deltas[m] == doctest::Approx(monotonicity_trial(kMonotoneMeasures[m], s, 1, povm)).epsilon(1e-12));
}

TEST_CASE("monotonicity corpus") {
  const auto a = run_monotonicity_corpus(2000, 42);
  REQUIRE(a.size() == kMonotoneMeasures.size());
  for (const auto& s : a) {
    INFO(name(s.id));
    CHECK(s.trials == 2000);
    CHECK(s.passed);
    CHECK(s.min_delta >= -kMonotonicityTolerance);
  }
  const auto b = run_monotonicity_corpus(2000, 42);
  for (std::size_t m = 0; m < a.size(); ++m) CHECK(a[m].min_delta == b[m].min_delta);
}

TEST_CASE("measure names are distinct") {
  std::set<std::string_view> names;
  for (MeasureId id : kMonotoneMeasures) names.insert(name(id));
  CHECK(names.size() == kMonotoneMeasures.size());
}
