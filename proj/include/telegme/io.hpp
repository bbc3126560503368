#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "telegme/families.hpp"
#include "telegme/fourqubit.hpp"
#include "telegme/measures.hpp"
#include "telegme/qstate.hpp"

namespace telegme::io {

/// Parses `{"n_qubits": n, "amplitudes": [[re, im], ...]}` (ascending
/// big-endian basis order). Wrong-length arrays and unnormalized vectors are
/// rejected; n must be 2..5.
PureState parse_state_json(std::string_view text);
PureState read_state_json(const std::string& path);
std::string state_to_json(const PureState& state);

/// '.' decimal, 12 significant digits, independent of the global locale.
std::string format_number(double value);

std::string csv_header(const std::vector<std::string_view>& columns);
std::string csv_row(const std::vector<double>& values);

std::string report_csv(const MeasureReport& r, bool with_header = true);
std::string report_json(const MeasureReport& r);
std::string report4_csv(const FourQubitReport& r, bool with_header = true);
std::string report4_json(const FourQubitReport& r);

/// `param` column followed by the report columns; one row per sweep point.
std::string sweep_csv(const std::vector<SweepPoint>& points);
std::string sweep_json(const std::vector<SweepPoint>& points);

}  // namespace telegme::io
