#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "telegme/families.hpp"

namespace telegme::cli {

enum class Subcommand { Measure, Family, Verify, OracleCompare, Four };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidInput = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::Measure;
  std::optional<std::string> input_path;
  std::optional<FamilyId> family;
  int grid_points = 201;
  std::uint64_t seed = 42;
  int trials = 10000;
  int oracle_states = 200;
  int four_states = 5;
  std::string output_path = "-";
  Format format = Format::Csv;
  int pivot = 0;
  int coarse_grid = 48;
  int refine_iters = 200;

  /// Throws Error(InvalidArgument) when a subcommand's required field is missing.
  void validate() const;
};

/// Parses argv (argv[0] is the program name). Throws Error(InvalidArgument)
/// with CLI11's message on bad usage; returns nullopt after printing help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes the subcommand. Data goes to `out` unless an output file is set;
/// diagnostics go to `err`. Returns one of the exit codes above.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run with exception-to-exit-code mapping.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace telegme::cli
