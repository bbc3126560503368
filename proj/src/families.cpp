#include "telegme/families.hpp"

#include <cmath>
#include <numbers>

namespace telegme {

namespace {

constexpr std::array<std::pair<std::string_view, Family>, 8> kNames{{
    {"ghz3", Family::Ghz3},
    {"w3", Family::W3},
    {"phi_t", Family::PhiT},
    {"psi_r", Family::PsiR},
    {"xi_r", Family::XiR},
    {"bisep_xi", Family::BisepXi},
    {"ghz4", Family::Ghz4},
    {"product_n", Family::ProductN},
}};

PureState from_terms(int n, std::initializer_list<std::pair<int, double>> terms) {
  CVector amps = CVector::Zero(Eigen::Index{1} << n);
  for (const auto& [index, value] : terms) amps[index] = value;
  return {n, std::move(amps)};
}

}  // namespace

std::string_view name(Family family) {
  for (const auto& [n, f] : kNames)
    if (f == family) return n;
  return "?";
}

bool is_parameterized(Family family) {
  return family == Family::PhiT || family == Family::PsiR || family == Family::XiR;
}

FamilyId FamilyId::parse(std::string_view text, std::optional<double> parameter) {
  for (const auto& [n, f] : kNames)
    if (n == text) return FamilyId{f, parameter, f == Family::Ghz4 ? 4 : 3};
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(text) + "'");
}

bool FamilyId::parameterized() const noexcept { return is_parameterized(family); }

int FamilyId::qubits() const noexcept {
  if (family == Family::Ghz4) return 4;
  if (family == Family::ProductN) return n_qubits;
  return 3;
}

PureState build(const FamilyId& id) {
  if (id.parameterized()) {
    if (!id.parameter) throw Error(ErrorKind::ParameterOutOfRange, "family requires a parameter");
    const double p = *id.parameter;
    if (!(p >= 0.0 && p <= 1.0))
      throw Error(ErrorKind::ParameterOutOfRange, "parameter must lie in [0, 1]");
    const double rest = std::sqrt(std::max(0.0, 1.0 - p * p));
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    switch (id.family) {
      case Family::PhiT: return from_terms(3, {{0b000, p}, {0b111, rest}});
      case Family::PsiR:
        return from_terms(3, {{0b000, p}, {0b101, rest / 2.0}, {0b110, rest * inv_sqrt2},
                              {0b111, rest / 2.0}});
      case Family::XiR:
        return from_terms(3, {{0b001, rest * inv_sqrt2}, {0b010, rest * inv_sqrt2}, {0b100, p}});
      default: break;
    }
  }
  if (id.parameter) throw Error(ErrorKind::ParameterOutOfRange, "fixed state takes no parameter");
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  switch (id.family) {
    case Family::Ghz3: return ghz(3);
    case Family::W3: return from_terms(3, {{0b001, inv_sqrt3}, {0b010, inv_sqrt3}, {0b100, inv_sqrt3}});
    case Family::BisepXi:
      return from_terms(3, {{0b000, std::numbers::sqrt2 / 2.0}, {0b110, std::numbers::sqrt2 / 2.0}});
    case Family::Ghz4: return ghz(4);
    case Family::ProductN: return basis_state(id.n_qubits, 0);
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled family");
}

std::vector<SweepPoint> sweep(Family family, const std::vector<double>& grid) {
  if (!is_parameterized(family))
    throw Error(ErrorKind::InvalidArgument, "sweep needs a parameterized family");
  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (double p : grid) out.push_back({p, report(build(FamilyId{family, p, 3}))});
  return out;
}

std::vector<double> uniform_grid(int points) {
  if (points < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) g[static_cast<std::size_t>(k)] = static_cast<double>(k) / (points - 1);
  return g;
}

double phi_parameter_for_value(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw Error(ErrorKind::ParameterOutOfRange, "value must lie in [0, 1]");
  // 4t²(1-t²) = v²  =>  t² = (1 - √(1-v²)) / 2 on the smaller branch.
  return std::sqrt((1.0 - std::sqrt(1.0 - value * value)) / 2.0);
}

}  // namespace telegme
