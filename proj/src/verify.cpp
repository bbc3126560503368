#include "telegme/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "telegme/fourqubit.hpp"
#include "telegme/locc.hpp"
#include "telegme/measures.hpp"

namespace telegme {

namespace {

constexpr double kTwoThirds = 2.0 / 3.0;

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

Rng suite_rng(std::uint64_t seed, std::uint64_t suite) { return Rng(trial_seed(seed, suite)); }

SuiteResult concurrence_fidelity_relation(const VerifyOptions& o) {
  Rng rng = suite_rng(o.seed, 1);
  double worst = 0.0;
  for (int k = 0; k < o.trials; ++k) {
    const PureState s = haar_state(2, rng);
    const double c = concurrence_pure(s, Bipartition::one_vs_rest(0, 2));
    worst = std::max(worst, std::abs(c - (3.0 * max_fidelity_2q(s) - 2.0)));
  }
  return {"C = 3F - 2 (two-qubit pure)", worst <= 1e-9, cat("max deviation ", worst)};
}

SuiteResult lemma1_forward(const VerifyOptions& o) {
  Rng rng = suite_rng(o.seed, 2);
  double worst = 0.0;
  constexpr int kSamples = 500;
  for (int k = 0; k < kSamples; ++k) {
    const auto sample = random_biseparable_3(rng);
    for (const auto& pr : kPairs3) {
      if (pr[0] != sample.lone_qubit && pr[1] != sample.lone_qubit) continue;
      worst = std::max(worst, std::abs(fidelity_f_ij(sample.state, pr[0], pr[1]) - kTwoThirds));
    }
  }
  return {"separable cut: straddling pairs at F = 2/3", worst <= 1e-8,
          cat(kSamples, " constructions, max |F - 2/3| ", worst)};
}

SuiteResult lemma1_converse(const VerifyOptions& o) {
  Rng rng = suite_rng(o.seed, 3);
  int triggered = 0, violations = 0;
  auto check = [&](const PureState& s) {
    for (const auto& pr : kPairs3) {
      if (fidelity_f_ij(s, pr[0], pr[1]) > kTwoThirds + 1e-9) continue;
      ++triggered;
      const bool sep = is_biseparable_pure(s, Bipartition::one_vs_rest(pr[0], 3)) ||
                       is_biseparable_pure(s, Bipartition::one_vs_rest(pr[1], 3));
      if (!sep) ++violations;
    }
  };
  const int n = std::max(1, o.trials / 10);
  for (int k = 0; k < n; ++k) {
    check(haar_state(3, rng));
    check(random_biseparable_3(rng).state);
    check(random_b_separable_acin(rng));
  }
  return {"F_ij = 2/3 implies a separable cut", violations == 0 && triggered > 0,
          cat(triggered, " pairs at threshold, ", violations, " without a separable cut")};
}

SuiteResult lemma1_triple(const VerifyOptions& o) {
  Rng rng = suite_rng(o.seed, 4);
  int violations = 0, premises = 0;
  constexpr double eps = 1e-6;
  for (int k = 0; k < o.trials; ++k) {
    const PureState s = haar_state(3, rng);
    const MeasureReport r = report(s);
    const std::array<double, 3> f{(r.t_ab + 2.0) / 3.0, (r.t_bc + 2.0) / 3.0, (r.t_ca + 2.0) / 3.0};
    // Pairs AB, BC, CA: each pivot sees two of them and the third is the rest.
    for (std::size_t p = 0; p < 3; ++p) {
      const double f1 = f[p], f2 = f[(p + 1) % 3], f3 = f[(p + 2) % 3];
      if (f1 > kTwoThirds + eps && f2 > kTwoThirds + eps) {
        ++premises;
        if (!(f3 > kTwoThirds)) ++violations;
      }
    }
  }
  return {"F_ij, F_ik > 2/3 implies F_jk > 2/3", violations == 0,
          cat(premises, " premises, ", violations, " violations")};
}

std::vector<SuiteResult> monotonicity(const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  for (const auto& s : run_monotonicity_corpus(o.trials, trial_seed(o.seed, 5)))
    out.push_back({cat("monotonicity ", name(s.id)), s.passed,
                   cat(s.trials, " trials, min delta ", s.min_delta)});
  return out;
}

SuiteResult ckw_consistency(const VerifyOptions& o) {
  Rng rng = suite_rng(o.seed, 6);
  double spread = 0.0, lowest = std::numeric_limits<double>::infinity();
  for (int k = 0; k < o.trials; ++k) {
    const auto p = three_tangle_pivots(haar_state(3, rng));
    spread = std::max(spread, *std::max_element(p.begin(), p.end()) - *std::min_element(p.begin(), p.end()));
    lowest = std::min(lowest, p[0]);
  }
  return {"CKW pivot consistency", spread <= kCkwTolerance && lowest >= -kTangleClampTolerance,
          cat("max pivot spread ", spread, ", min tau ", lowest)};
}

SuiteResult oracle_agreement(const VerifyOptions& o) {
  Rng rng = suite_rng(o.seed, 7);
  double worst = 0.0, above = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < o.oracle_states; ++k) {
    const PureState s = haar_state(3, rng);
    for (const auto& pr : kPairs3) {
      const double fa = fidelity_f_ij(s, pr[0], pr[1]);
      const double fo = fidelity_from_fraction(f_ij_bruteforce(s, pr[0], pr[1], o.cfg).value);
      worst = std::max(worst, std::abs(fa - fo));
      above = std::max(above, fo - fa);
    }
  }
  return {"oracle vs closed-form F_ij", worst <= 1.5e-3 && above <= 1e-6,
          cat(o.oracle_states, " states, max |dF| ", worst, ", max overshoot ", above)};
}

SuiteResult four_qubit_constructions(const VerifyOptions& o) {
  const double h = std::numbers::sqrt2 / 2.0;
  const PureState bell = PureState(2, (CVector(4) << h, 0, 0, h).finished());
  const PureState bell_bell = tensor(bell, bell);
  const PureState zero_ghz = tensor(basis_state(1, 0), ghz(3));
  double worst = 0.0;
  for (auto [i, j] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}}) {
    worst = std::max(worst, std::abs(fidelity_from_fraction(f_ij_product_n(bell_bell, i, j, o.cfg)) - kTwoThirds));
    worst = std::max(worst, std::abs(fidelity_from_fraction(f_ij_sequential_4(bell_bell, i, j, o.cfg)) - kTwoThirds));
  }
  for (int j = 1; j < 4; ++j)
    worst = std::max(worst, std::abs(fidelity_from_fraction(f_ij_product_n(zero_ghz, 0, j, o.cfg)) - kTwoThirds));
  const auto cuts = bisep_cut_scan(bell_bell);
  const bool cut_ok = cuts.size() == 1 && cuts[0].left == std::vector<int>{0, 1};
  const bool witness_ok = genuine_entanglement_witness(ghz(4), 0, o.cfg) &&
                          !genuine_entanglement_witness(bell_bell, 0, o.cfg) &&
                          !genuine_entanglement_witness(zero_ghz, 0, o.cfg);
  return {"four-qubit product constructions", worst <= 2e-3 && cut_ok && witness_ok,
          cat("max |F - 2/3| ", worst, ", AB|CD cut ", cut_ok ? "found" : "missing", ", witness ",
              witness_ok ? "ok" : "wrong")};
}

SuiteResult sequential_ordering(const VerifyOptions& o) {
  Rng rng = suite_rng(o.seed, 9);
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < o.four_states; ++k) {
    const PureState s = haar_state(4, rng);
    for (const auto& pr : kPairs4)
      worst = std::min(worst, f_ij_sequential_4(s, pr[0], pr[1], o.cfg) - f_ij_product_n(s, pr[0], pr[1], o.cfg));
  }
  if (o.four_states <= 0) worst = 0.0;
  return {"sequential >= product (four qubits)", worst >= -1e-6,
          cat(o.four_states, " states, min (fbar - f) ", worst)};
}

}  // namespace

PureState random_b_separable_acin(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a0 = unit(rng), a1 = unit(rng), a2 = unit(rng);
  const double theta = std::numbers::pi * unit(rng);
  CVector amps = CVector::Zero(8);
  amps[0b000] = a0;
  amps[0b100] = a1 * std::polar(1.0, theta);
  amps[0b101] = a2;
  return random_local_unitaries(PureState::renormalize(3, std::move(amps)), rng);
}

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
  opts.cfg.validate();
  std::vector<SuiteResult> out{concurrence_fidelity_relation(opts), lemma1_forward(opts),
                               lemma1_converse(opts), lemma1_triple(opts)};
  for (auto& r : monotonicity(opts)) out.push_back(std::move(r));
  out.push_back(ckw_consistency(opts));
  out.push_back(oracle_agreement(opts));
  out.push_back(four_qubit_constructions(opts));
  out.push_back(sequential_ordering(opts));
  return out;
}

}  // namespace telegme
