#include "telegme/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "telegme/error.hpp"
#include "telegme/fourqubit.hpp"
#include "telegme/io.hpp"
#include "telegme/measures.hpp"
#include "telegme/oracle.hpp"
#include "telegme/random.hpp"
#include "telegme/verify.hpp"

namespace telegme::cli {

namespace {

constexpr double kOracleTolerance = 1.5e-3;
constexpr double kOracleOvershoot = 1e-6;

int parse_pivot(const std::string& text) {
  static const std::map<std::string, int> names{{"A", 0}, {"B", 1}, {"C", 2}, {"D", 3},
                                                {"a", 0}, {"b", 1}, {"c", 2}, {"d", 3},
                                                {"0", 0}, {"1", 1}, {"2", 2}, {"3", 3}};
  const auto it = names.find(text);
  if (it == names.end()) throw Error(ErrorKind::InvalidArgument, "pivot must be one of A, B, C, D");
  return it->second;
}

OptimizerConfig optimizer(const RunConfig& cfg) {
  OptimizerConfig oc;
  oc.coarse_grid = cfg.coarse_grid;
  oc.refine_iters = cfg.refine_iters;
  oc.seed = cfg.seed;
  oc.validate();
  return oc;
}

std::string four_output(const PureState& state, const RunConfig& cfg, std::ostream& err) {
  const OptimizerConfig oc = optimizer(cfg);
  const FourQubitReport r = report4(state, oc);
  const bool witness = genuine_entanglement_witness(state, cfg.pivot, oc);
  err << "witness (pivot " << static_cast<char>('A' + cfg.pivot) << "): "
      << (witness ? "genuinely four-partite entangled" : "inconclusive") << "\n";
  return cfg.format == Format::Json ? io::report4_json(r) + "\n" : io::report4_csv(r);
}

std::string report_output(const PureState& state, const RunConfig& cfg, std::ostream& err) {
  if (state.n_qubits() == 4) return four_output(state, cfg, err);
  if (state.n_qubits() != 3)
    throw Error(ErrorKind::DimensionMismatch,
                "reports are defined for 3- and 4-qubit states, got " + std::to_string(state.n_qubits()));
  const MeasureReport r = report(state);
  return cfg.format == Format::Json ? io::report_json(r) + "\n" : io::report_csv(r);
}

int run_measure(const RunConfig& cfg, std::string& text, std::ostream&) {
  const PureState state = io::read_state_json(*cfg.input_path);
  if (state.n_qubits() == 4)
    throw Error(ErrorKind::DimensionMismatch, "four-qubit input: use the `four` subcommand");
  if (state.n_qubits() != 3)
    throw Error(ErrorKind::DimensionMismatch, "`measure` needs a three-qubit state");
  const MeasureReport r = report(state);
  text = cfg.format == Format::Json ? io::report_json(r) + "\n" : io::report_csv(r);
  return kExitOk;
}

int run_four(const RunConfig& cfg, std::string& text, std::ostream& err) {
  const PureState state = io::read_state_json(*cfg.input_path);
  if (state.n_qubits() != 4)
    throw Error(ErrorKind::DimensionMismatch, "`four` needs a four-qubit state");
  text = four_output(state, cfg, err);
  return kExitOk;
}

int run_family(const RunConfig& cfg, std::string& text, std::ostream& err) {
  const FamilyId& id = *cfg.family;
  if (id.parameterized() && !id.parameter) {
    const auto points = sweep(id.family, uniform_grid(cfg.grid_points));
    text = cfg.format == Format::Json ? io::sweep_json(points) + "\n" : io::sweep_csv(points);
    return kExitOk;
  }
  text = report_output(build(id), cfg, err);
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::string& text, std::ostream&) {
  VerifyOptions opts;
  opts.trials = cfg.trials;
  opts.oracle_states = cfg.oracle_states;
  opts.four_states = cfg.four_states;
  opts.seed = cfg.seed;
  opts.cfg = optimizer(cfg);
  const auto results = run_verification(opts);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::ostringstream os;
  if (cfg.format == Format::Json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) j.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    os << nlohmann::ordered_json{{"passed", ok}, {"suites", j}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
    os << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  text = os.str();
  return ok ? kExitOk : kExitVerificationFailure;
}

int run_oracle_compare(const RunConfig& cfg, std::string& text, std::ostream& err) {
  const OptimizerConfig oc = optimizer(cfg);
  Rng rng(cfg.seed);
  double max_dev = 0.0, max_overshoot = -1.0;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << io::csv_header({"state", "pair", "fidelity_analytic", "fidelity_oracle", "abs_dev"});
  for (int k = 0; k < cfg.oracle_states; ++k) {
    const PureState s = haar_state(3, rng);
    for (std::size_t p = 0; p < kPairs3.size(); ++p) {
      const auto [i, j] = kPairs3[p];
      const double fa = fidelity_f_ij(s, i, j);
      const double fo = fidelity_from_fraction(f_ij_bruteforce(s, i, j, oc).value);
      const double dev = std::abs(fa - fo);
      max_dev = std::max(max_dev, dev);
      max_overshoot = std::max(max_overshoot, fo - fa);
      csv << k << ',' << kPairNames3[p] << ',' << io::format_number(fa) << ',' << io::format_number(fo)
          << ',' << io::format_number(dev) << '\n';
      rows.push_back({{"state", k}, {"pair", kPairNames3[p]}, {"fidelity_analytic", fa},
                      {"fidelity_oracle", fo}, {"abs_dev", dev}});
    }
  }
  if (cfg.format == Format::Json)
    text = nlohmann::ordered_json{{"max_abs_dev", max_dev}, {"rows", rows}}.dump(2) + "\n";
  else
    text = csv.str();
  err << "max |F_analytic - F_oracle| = " << io::format_number(max_dev) << "\n";
  const bool ok = max_dev <= kOracleTolerance && max_overshoot <= kOracleOvershoot;
  return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

void RunConfig::validate() const {
  switch (subcommand) {
    case Subcommand::Measure:
    case Subcommand::Four:
      if (!input_path) throw Error(ErrorKind::InvalidArgument, "--input is required");
      break;
    case Subcommand::Family:
      if (!family) throw Error(ErrorKind::InvalidArgument, "--family is required");
      if (grid_points < 2) throw Error(ErrorKind::InvalidArgument, "--grid-points must be at least 2");
      break;
    case Subcommand::Verify:
    case Subcommand::OracleCompare:
      break;
  }
  if (trials < 1 || oracle_states < 0 || four_states < 0)
    throw Error(ErrorKind::InvalidArgument, "trial counts must be positive");
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Teleportation-based genuine multipartite entanglement measures", "telegme"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input, family, pivot = "A", format = "csv";
  std::optional<double> param;
  int qubits = 3;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", cfg.output_path, "output file, '-' for stdout");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto optimizer_flags = [&](CLI::App* sub) {
    sub->add_option("--coarse-grid", cfg.coarse_grid, "grid points per angle");
    sub->add_option("--refine-iters", cfg.refine_iters, "Nelder-Mead iterations");
  };

  auto* measure = app.add_subcommand("measure", "report the three-qubit measures of a state JSON");
  measure->add_option("--input,-i,input", input, "state JSON file")->required();
  common(measure);

  auto* four = app.add_subcommand("four", "four-qubit report and witness for a state JSON");
  four->add_option("--input,-i,input", input, "state JSON file")->required();
  four->add_option("--pivot", pivot, "witness pivot party (A-D)");
  common(four);
  optimizer_flags(four);

  auto* fam = app.add_subcommand("family", "sweep or evaluate a named state family");
  fam->add_option("--family,-f", family, "ghz3, w3, phi_t, psi_r, xi_r, bisep_xi, ghz4, product_n")
      ->required();
  fam->add_option("--param,-p", param, "family parameter in [0, 1]; omit to sweep");
  fam->add_option("--grid-points", cfg.grid_points, "sweep grid size");
  fam->add_option("--qubits", qubits, "qubit count for product_n");
  fam->add_option("--pivot", pivot, "witness pivot for four-qubit families");
  common(fam);
  optimizer_flags(fam);

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--trials", cfg.trials, "corpus size");
  ver->add_option("--oracle-states", cfg.oracle_states, "random states for the oracle comparison");
  ver->add_option("--four-states", cfg.four_states, "random four-qubit states");
  ver->add_option("--seed", cfg.seed, "root seed");
  common(ver);
  optimizer_flags(ver);

  auto* cmp = app.add_subcommand("oracle-compare", "closed-form vs brute-force F_ij on random states");
  cmp->add_option("--states,--trials", cfg.oracle_states, "random three-qubit states");
  cmp->add_option("--seed", cfg.seed, "root seed");
  common(cmp);
  optimizer_flags(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::InvalidArgument, e.what());
  }

  if (measure->parsed()) cfg.subcommand = Subcommand::Measure;
  if (four->parsed()) cfg.subcommand = Subcommand::Four;
  if (fam->parsed()) cfg.subcommand = Subcommand::Family;
  if (ver->parsed()) cfg.subcommand = Subcommand::Verify;
  if (cmp->parsed()) cfg.subcommand = Subcommand::OracleCompare;

  if (!input.empty()) cfg.input_path = input;
  if (!family.empty()) {
    cfg.family = FamilyId::parse(family, param);
    if (cfg.family->family == Family::ProductN) cfg.family->n_qubits = qubits;
  }
  cfg.pivot = parse_pivot(pivot);
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  cfg.validate();
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  std::string text;
  int code = kExitOk;
  switch (cfg.subcommand) {
    case Subcommand::Measure: code = run_measure(cfg, text, err); break;
    case Subcommand::Four: code = run_four(cfg, text, err); break;
    case Subcommand::Family: code = run_family(cfg, text, err); break;
    case Subcommand::Verify: code = run_verify(cfg, text, err); break;
    case Subcommand::OracleCompare: code = run_oracle_compare(cfg, text, err); break;
  }
  if (cfg.output_path == "-") {
    out << text;
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + cfg.output_path);
    file << text;
  }
  return code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(argc, argv, out);
    if (!cfg) return kExitOk;
    return run(*cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NumericalFailure || e.kind() == ErrorKind::CkwInconsistency
               ? kExitVerificationFailure
               : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace telegme::cli
