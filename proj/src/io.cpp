#include "telegme/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace telegme::io {

using nlohmann::json;

namespace {

// Emits numbers through format_number so CSV and JSON agree digit for digit.
std::string json_object(const std::vector<std::string_view>& keys, const std::vector<double>& values) {
  std::string out = "{";
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (k) out += ", ";
    out += '"';
    out += keys[k];
    out += "\": ";
    out += std::isfinite(values[k]) ? format_number(values[k]) : "null";
  }
  out += '}';
  return out;
}

template <std::size_t N>
std::vector<std::string_view> as_vector(const std::array<std::string_view, N>& a) {
  return {a.begin(), a.end()};
}

template <std::size_t N>
std::vector<double> as_vector(const std::array<double, N>& a) {
  return {a.begin(), a.end()};
}

}  // namespace

PureState parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("amplitudes"))
    throw Error(ErrorKind::ParseError, "expected keys n_qubits and amplitudes");
  if (!doc["n_qubits"].is_number_integer())
    throw Error(ErrorKind::ParseError, "n_qubits must be an integer");
  const int n = doc["n_qubits"].get<int>();
  if (n < 2 || n > kMaxQubits) throw Error(ErrorKind::DimensionMismatch, "n_qubits must be 2..5");
  const auto& arr = doc["amplitudes"];
  if (!arr.is_array()) throw Error(ErrorKind::ParseError, "amplitudes must be an array");
  const std::size_t dim = std::size_t{1} << n;
  if (arr.size() != dim)
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dim) + " amplitudes, got " +
                                                  std::to_string(arr.size()));
  CVector amps(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const auto& pair = arr[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw Error(ErrorKind::ParseError, "amplitude " + std::to_string(k) + " must be [re, im]");
    amps[static_cast<Eigen::Index>(k)] = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return {n, std::move(amps)};
}

PureState read_state_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const PureState& state) {
  std::string out = "{\"n_qubits\": " + std::to_string(state.n_qubits()) + ", \"amplitudes\": [";
  for (Eigen::Index k = 0; k < state.dim(); ++k) {
    if (k) out += ", ";
    out += "[" + format_number(state[k].real()) + ", " + format_number(state[k].imag()) + "]";
  }
  return out + "]}";
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // fold -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string csv_header(const std::vector<std::string_view>& columns) {
  std::string out;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (k) out += ',';
    out += columns[k];
  }
  return out + '\n';
}

std::string csv_row(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += format_number(values[k]);
  }
  return out + '\n';
}

std::string report_csv(const MeasureReport& r, bool with_header) {
  return (with_header ? csv_header(as_vector(kReportFields)) : std::string()) +
         csv_row(as_vector(report_values(r)));
}

std::string report_json(const MeasureReport& r) {
  return json_object(as_vector(kReportFields), as_vector(report_values(r))) + '\n';
}

std::string report4_csv(const FourQubitReport& r, bool with_header) {
  return (with_header ? csv_header(as_vector(kFourReportFields)) : std::string()) +
         csv_row(as_vector(report_values(r)));
}

std::string report4_json(const FourQubitReport& r) {
  return json_object(as_vector(kFourReportFields), as_vector(report_values(r))) + '\n';
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::vector<std::string_view> cols{"param"};
  cols.insert(cols.end(), kReportFields.begin(), kReportFields.end());
  std::string out = csv_header(cols);
  for (const auto& p : points) {
    std::vector<double> row{p.param};
    const auto values = report_values(p.report);
    row.insert(row.end(), values.begin(), values.end());
    out += csv_row(row);
  }
  return out;
}

std::string sweep_json(const std::vector<SweepPoint>& points) {
  std::vector<std::string_view> cols{"param"};
  cols.insert(cols.end(), kReportFields.begin(), kReportFields.end());
  std::string out = "[";
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::vector<double> row{points[k].param};
    const auto values = report_values(points[k].report);
    row.insert(row.end(), values.begin(), values.end());
    out += (k ? ",\n " : "\n ") + json_object(cols, row);
  }
  return out + "\n]\n";
}

}  // namespace telegme::io
