#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "telegme/measures.hpp"
#include "telegme/qstate.hpp"

namespace telegme {

/// Two-outcome single-qubit POVM in factored form A_0 = U_0 diag(a, b) V and
/// A_1 = U_1 diag(√(1-a²), √(1-b²)) V, so A_0^†A_0 + A_1^†A_1 = I.
struct TwoOutcomePovm {
  Matrix2c u0 = Matrix2c::Identity();
  Matrix2c u1 = Matrix2c::Identity();
  Matrix2c v = Matrix2c::Identity();
  double a = 1.0;
  double b = 1.0;

  /// Checked constructor: unitaries within 1e-9, a and b in [0, 1].
  static TwoOutcomePovm make(const Matrix2c& u0, const Matrix2c& u1, const Matrix2c& v, double a,
                             double b);

  Matrix2c kraus(int outcome) const;
  /// max |(A_0^†A_0 + A_1^†A_1 - I)_rc|
  double completeness_residual() const;
};

TwoOutcomePovm random_povm(std::uint64_t seed);

/// Branches A_t|φ>/√p_t with p_t = <φ|A_t^†A_t|φ>; the qubit count is unchanged.
std::array<Branch, 2> apply_povm(const PureState& state, int qubit, const TwoOutcomePovm& povm);

enum class MeasureId {
  TAB,
  TBC,
  TCA,
  TMin,
  TGM,
  TMinA,
  TGMA,
  TMinB,
  TGMB,
  TMinC,
  TGMC,
  SqrtTauC2AB,
  SqrtTauC2BC,
  SqrtTauC2CA,
  // Not LOCC monotones; used for the counterexample check.
  ConcurrenceAB,
  ConcurrenceBC,
  ConcurrenceCA,
};

inline constexpr std::array<MeasureId, 14> kMonotoneMeasures{
    MeasureId::TAB,   MeasureId::TBC,   MeasureId::TCA,         MeasureId::TMin,
    MeasureId::TGM,   MeasureId::TMinA, MeasureId::TGMA,        MeasureId::TMinB,
    MeasureId::TGMB,  MeasureId::TMinC, MeasureId::TGMC,        MeasureId::SqrtTauC2AB,
    MeasureId::SqrtTauC2BC, MeasureId::SqrtTauC2CA};

inline constexpr double kMonotonicityTolerance = 1e-7;

std::string_view name(MeasureId id);
double evaluate(MeasureId id, const MeasureReport& r);
double evaluate(MeasureId id, const PureState& state);

/// measure(state) - Σ_t p_t measure(post_t); flagged branches contribute nothing.
double monotonicity_trial(MeasureId id, const PureState& state, int qubit,
                          const TwoOutcomePovm& povm);

/// Same as `monotonicity_trial` for every id in `kMonotoneMeasures` at once.
std::array<double, kMonotoneMeasures.size()> monotonicity_deltas(const PureState& state, int qubit,
                                                                 const TwoOutcomePovm& povm);

struct CorpusSummary {
  MeasureId id;
  int trials = 0;
  double min_delta = 0.0;
  bool passed = true;
};

/// Runs `trials` independent (Haar state, random qubit, random POVM) trials.
/// Trial k draws everything from trial_seed(root_seed, k).
std::vector<CorpusSummary> run_monotonicity_corpus(int trials, std::uint64_t root_seed);

}  // namespace telegme
