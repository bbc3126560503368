#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "telegme/cli.hpp"
#include "telegme/error.hpp"
#include "telegme/io.hpp"
#include "telegme/random.hpp"

using namespace telegme;

namespace {

const std::filesystem::path kDir = std::filesystem::temp_directory_path() / "telegme_test_io_cli";

std::string write_file(const std::string& name, const std::string& text) {
  std::filesystem::create_directories(kDir);
  const auto path = kDir / name;
  std::ofstream(path) << text;
  return path.string();
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "telegme");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, sep);) out.push_back(cell);
  return out;
}

const char* kGhzJson =
    R"({"n_qubits": 3, "amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0, 0],
        [0, 0], [0, 0], [0, 0], [0.7071067811865476, 0]]})";

}  // namespace

TEST_CASE("state JSON parsing") {
  const PureState g = io::parse_state_json(kGhzJson);
  CHECK(g.n_qubits() == 3);
  CHECK(std::abs(g[7].real() - 0.7071067811865476) < 1e-16);

  auto kind = [](std::string_view text) {
    try {
      io::parse_state_json(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("not json") == ErrorKind::ParseError);
  CHECK(kind(R"({"n_qubits": 3})") == ErrorKind::ParseError);
  CHECK(kind(R"({"n_qubits": 2, "amplitudes": [[1, 0], [0, 0], [0, 0]]})") == ErrorKind::DimensionMismatch);
  CHECK(kind(R"({"n_qubits": 1, "amplitudes": [[1, 0], [0, 0]]})") == ErrorKind::DimensionMismatch);
  CHECK(kind(R"({"n_qubits": 2, "amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]})") == ErrorKind::NotNormalized);
  CHECK(kind(R"({"n_qubits": 2, "amplitudes": [1, 0, 0, 0]})") == ErrorKind::ParseError);

  Rng rng(70);
  const PureState s = haar_state(4, rng);
  const PureState back = io::parse_state_json(io::state_to_json(s));
  CHECK((back.amplitudes() - s.amplitudes()).norm() < 1e-10);
}

TEST_CASE("number formatting") {
  CHECK(io::format_number(0.0) == "0");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(0.5) == "0.5");
  CHECK(io::format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(io::format_number(1e-20) == "1e-20");
  CHECK(io::csv_row({1.0, 0.25}) == "1,0.25\n");
}

TEST_CASE("report serialization") {
  const std::string csv = io::report_csv(report(ghz(3)));
  const auto lines = split(csv, '\n');
  REQUIRE(lines.size() == 2);
  const auto header = split(lines[0], ',');
  REQUIRE(header.size() == kReportFields.size());
  for (std::size_t k = 0; k < header.size(); ++k) CHECK(header[k] == kReportFields[k]);
  CHECK(split(lines[1], ',')[3] == "1");
  CHECK(io::report_json(report(ghz(3))).find("\"t_min\": 1") != std::string::npos);
  const std::string four = io::report4_csv(report4(basis_state(4, 0)));
  CHECK(four.rfind("f4_ab,f4_ac,f4_ad,f4_bc,f4_bd,f4_cd,f4b_ab", 0) == 0);
}

TEST_CASE("measure subcommand") {
  const std::string ghz_path = write_file("ghz.json", kGhzJson);
  const auto r = run_cli({"measure", "--input", ghz_path});
  CHECK(r.code == cli::kExitOk);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 2);
  CHECK(split(lines[1], ',')[3] == "1");

  const auto json = run_cli({"measure", ghz_path, "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"t_min\": 1") != std::string::npos);

  const std::string four_path = write_file("ghz4.json", io::state_to_json(ghz(4)));
  const auto four = run_cli({"measure", "--input", four_path});
  CHECK(four.code == cli::kExitInvalidInput);
  CHECK(four.err.find("four") != std::string::npos);

  const std::string bad = write_file("bad.json", R"({"n_qubits": 3, "amplitudes": [[1, 0]]})");
  CHECK(run_cli({"measure", "--input", bad}).code == cli::kExitInvalidInput);
  CHECK(run_cli({"measure", "--input", (kDir / "missing.json").string()}).code == cli::kExitInvalidInput);
  CHECK(run_cli({"measure"}).code == cli::kExitInvalidInput);
}

TEST_CASE("four subcommand") {
  const std::string path = write_file("ghz4b.json", io::state_to_json(ghz(4)));
  const auto r = run_cli({"four", "--input", path, "--pivot", "B", "--coarse-grid", "16"});
  CHECK(r.code == 0);
  CHECK(r.err.find("pivot B") != std::string::npos);
  CHECK(r.err.find("genuinely") != std::string::npos);
  CHECK(r.out.rfind("f4_ab", 0) == 0);
  CHECK(run_cli({"four", "--input", path, "--pivot", "E"}).code == cli::kExitInvalidInput);
  const std::string three = write_file("ghz3b.json", kGhzJson);
  CHECK(run_cli({"four", "--input", three}).code == cli::kExitInvalidInput);
}

TEST_CASE("family subcommand") {
  const auto r = run_cli({"family", "--family", "psi_r", "--grid-points", "201"});
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 202);
  const auto header = split(lines[0], ',');
  CHECK(header[0] == "param");
  const auto col = [&](const std::string& n) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), n) - header.begin());
  };
  const auto row = split(lines[1 + 140], ',');
  CHECK(std::stod(row[0]) == doctest::Approx(0.7));
  CHECK(std::stod(row[col("c_gm")]) > 0.8);
  CHECK(std::stod(row[col("t_gm")]) < 0.8);

  const auto again = run_cli({"family", "--family", "psi_r", "--grid-points", "201"});
  CHECK(again.out == r.out);

  const auto single = run_cli({"family", "--family", "w3"});
  CHECK(single.code == 0);
  CHECK(split(single.out, '\n').size() == 2);
  CHECK(run_cli({"family", "--family", "ghz3", "--param", "0.5"}).code == cli::kExitInvalidInput);
  CHECK(run_cli({"family", "--family", "nope"}).code == cli::kExitInvalidInput);
  CHECK(run_cli({"family", "--family", "psi_r", "--format", "xml"}).code == cli::kExitInvalidInput);

  const auto out_path = (kDir / "sweep.csv").string();
  CHECK(run_cli({"family", "--family", "psi_r", "--out", out_path}).code == 0);
  std::ifstream in(out_path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == r.out);
}

TEST_CASE("verify and oracle-compare subcommands") {
  const auto v = run_cli({"verify", "--trials", "100", "--oracle-states", "3", "--four-states", "1", "--seed", "3"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("monotonicity T_min") != std::string::npos);
  const auto v2 = run_cli({"verify", "--trials", "100", "--oracle-states", "3", "--four-states", "1", "--seed", "3"});
  CHECK(v2.out == v.out);

  const auto c = run_cli({"oracle-compare", "--states", "4", "--seed", "9"});
  CHECK(c.code == 0);
  const auto lines = split(c.out, '\n');
  CHECK(lines.size() == 13);
  CHECK(lines[0] == "state,pair,fidelity_analytic,fidelity_oracle,abs_dev");
  CHECK(c.err.find("max |F_analytic - F_oracle|") != std::string::npos);
  CHECK(run_cli({"oracle-compare", "--states", "4", "--seed", "9"}).out == c.out);
  CHECK(run_cli({"oracle-compare", "--coarse-grid", "2"}).code == cli::kExitInvalidInput);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == cli::kExitInvalidInput);
  CHECK(run_cli({"bogus"}).code == cli::kExitInvalidInput);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}
