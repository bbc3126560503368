#include "telegme/locc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "telegme/random.hpp"

namespace telegme {

TwoOutcomePovm TwoOutcomePovm::make(const Matrix2c& u0, const Matrix2c& u1, const Matrix2c& v,
                                    double a, double b) {
  if (!is_unitary(u0) || !is_unitary(u1) || !is_unitary(v))
    throw Error(ErrorKind::NotUnitary, "POVM factors must be unitary");
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw Error(ErrorKind::ParameterOutOfRange, "singular values must lie in [0, 1]");
  return {u0, u1, v, a, b};
}

Matrix2c TwoOutcomePovm::kraus(int outcome) const {
  const Eigen::Vector2d d = outcome == 0 ? Eigen::Vector2d(a, b)
                                         : Eigen::Vector2d(std::sqrt(1.0 - a * a),
                                                           std::sqrt(1.0 - b * b));
  const Matrix2c& u = outcome == 0 ? u0 : u1;
  return u * d.cast<Complex>().asDiagonal() * v;
}

double TwoOutcomePovm::completeness_residual() const {
  const Matrix2c k0 = kraus(0), k1 = kraus(1);
  return (k0.adjoint() * k0 + k1.adjoint() * k1 - Matrix2c::Identity()).cwiseAbs().maxCoeff();
}

TwoOutcomePovm random_povm(std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TwoOutcomePovm p;
  p.u0 = haar_unitary(rng);
  p.u1 = haar_unitary(rng);
  p.v = haar_unitary(rng);
  p.a = unit(rng);
  p.b = unit(rng);
  return p;
}

std::array<Branch, 2> apply_povm(const PureState& state, int qubit, const TwoOutcomePovm& povm) {
  if (qubit < 0 || qubit >= state.n_qubits())
    throw Error(ErrorKind::IndexOutOfRange, "POVM qubit out of range");
  std::array<Branch, 2> out;
  for (int t = 0; t < 2; ++t) {
    CVector post = apply_single_qubit(state.amplitudes(), state.n_qubits(), qubit, povm.kraus(t));
    const double p = post.squaredNorm();
    out[t].probability = p;
    if (p >= kZeroProbability) out[t].state = PureState(state.n_qubits(), post / std::sqrt(p));
  }
  return out;
}

std::string_view name(MeasureId id) {
  switch (id) {
    case MeasureId::TAB: return "T_AB";
    case MeasureId::TBC: return "T_BC";
    case MeasureId::TCA: return "T_CA";
    case MeasureId::TMin: return "T_min";
    case MeasureId::TGM: return "T_GM";
    case MeasureId::TMinA: return "T_min^(A)";
    case MeasureId::TGMA: return "T_GM^(A)";
    case MeasureId::TMinB: return "T_min^(B)";
    case MeasureId::TGMB: return "T_GM^(B)";
    case MeasureId::TMinC: return "T_min^(C)";
    case MeasureId::TGMC: return "T_GM^(C)";
    case MeasureId::SqrtTauC2AB: return "sqrt(tau+C_AB^2)";
    case MeasureId::SqrtTauC2BC: return "sqrt(tau+C_BC^2)";
    case MeasureId::SqrtTauC2CA: return "sqrt(tau+C_CA^2)";
    case MeasureId::ConcurrenceAB: return "C_AB";
    case MeasureId::ConcurrenceBC: return "C_BC";
    case MeasureId::ConcurrenceCA: return "C_CA";
  }
  return "?";
}

double evaluate(MeasureId id, const MeasureReport& r) {
  switch (id) {
    case MeasureId::TAB: return r.t_ab;
    case MeasureId::TBC: return r.t_bc;
    case MeasureId::TCA: return r.t_ca;
    case MeasureId::TMin: return r.t_min;
    case MeasureId::TGM: return r.t_gm;
    case MeasureId::TMinA: return r.t_min_pivot[0];
    case MeasureId::TGMA: return r.t_gm_pivot[0];
    case MeasureId::TMinB: return r.t_min_pivot[1];
    case MeasureId::TGMB: return r.t_gm_pivot[1];
    case MeasureId::TMinC: return r.t_min_pivot[2];
    case MeasureId::TGMC: return r.t_gm_pivot[2];
    case MeasureId::SqrtTauC2AB: return std::sqrt(r.tangle + r.c_ab * r.c_ab);
    case MeasureId::SqrtTauC2BC: return std::sqrt(r.tangle + r.c_bc * r.c_bc);
    case MeasureId::SqrtTauC2CA: return std::sqrt(r.tangle + r.c_ca * r.c_ca);
    case MeasureId::ConcurrenceAB: return r.c_ab;
    case MeasureId::ConcurrenceBC: return r.c_bc;
    case MeasureId::ConcurrenceCA: return r.c_ca;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double evaluate(MeasureId id, const PureState& state) { return evaluate(id, report(state)); }

double monotonicity_trial(MeasureId id, const PureState& state, int qubit,
                          const TwoOutcomePovm& povm) {
  double average = 0.0;
  for (const auto& branch : apply_povm(state, qubit, povm))
    if (!branch.flagged()) average += branch.probability * evaluate(id, *branch.state);
  return evaluate(id, state) - average;
}

std::array<double, kMonotoneMeasures.size()> monotonicity_deltas(const PureState& state, int qubit,
                                                                 const TwoOutcomePovm& povm) {
  const MeasureReport before = report(state);
  std::array<double, kMonotoneMeasures.size()> deltas{};
  for (std::size_t m = 0; m < deltas.size(); ++m) deltas[m] = evaluate(kMonotoneMeasures[m], before);
  for (const auto& branch : apply_povm(state, qubit, povm)) {
    if (branch.flagged()) continue;
    const MeasureReport after = report(*branch.state);
    for (std::size_t m = 0; m < deltas.size(); ++m)
      deltas[m] -= branch.probability * evaluate(kMonotoneMeasures[m], after);
  }
  return deltas;
}

std::vector<CorpusSummary> run_monotonicity_corpus(int trials, std::uint64_t root_seed) {
  std::vector<CorpusSummary> out;
  for (MeasureId id : kMonotoneMeasures)
    out.push_back({id, 0, std::numeric_limits<double>::infinity(), true});
  for (int k = 0; k < trials; ++k) {
    Rng rng(trial_seed(root_seed, static_cast<std::uint64_t>(k)));
    const PureState state = haar_state(3, rng);
    const int qubit = static_cast<int>(rng() % 3);
    const TwoOutcomePovm povm = random_povm(rng());
    const auto deltas = monotonicity_deltas(state, qubit, povm);
    for (std::size_t m = 0; m < deltas.size(); ++m) {
      out[m].trials += 1;
      out[m].min_delta = std::min(out[m].min_delta, deltas[m]);
    }
  }
  for (auto& s : out) s.passed = s.trials > 0 && s.min_delta >= -kMonotonicityTolerance;
  return out;
}

}  // namespace telegme
