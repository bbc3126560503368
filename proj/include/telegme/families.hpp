#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "telegme/measures.hpp"
#include "telegme/qstate.hpp"

namespace telegme {

enum class Family { Ghz3, W3, PhiT, PsiR, XiR, BisepXi, Ghz4, ProductN };

/// Named state family plus its parameter. φ(t), ψ(r) and ξ(r) require a
/// parameter in [0, 1]; the fixed states reject one. `n_qubits` only applies
/// to product_n.
struct FamilyId {
  Family family = Family::Ghz3;
  std::optional<double> parameter;
  int n_qubits = 3;

  static FamilyId parse(std::string_view name, std::optional<double> parameter = std::nullopt);
  bool parameterized() const noexcept;
  int qubits() const noexcept;
};

std::string_view name(Family family);
bool is_parameterized(Family family);

/// Closed-form amplitudes:
///   φ(t) = t|000> + √(1-t²)|111>
///   ψ(r) = r|000> + (√(1-r²)/2)|101> + (√(1-r²)/√2)|110> + (√(1-r²)/2)|111>
///   ξ(r) = (√(1-r²)/√2)(|001> + |010>) + r|100>
PureState build(const FamilyId& id);

struct SweepPoint {
  double param = 0.0;
  MeasureReport report;
};

/// One report per grid value; `family` must be a parameterized three-qubit family.
std::vector<SweepPoint> sweep(Family family, const std::vector<double>& grid);

/// `points` values uniformly spaced on [0, 1], endpoints included.
std::vector<double> uniform_grid(int points);

/// Smaller root t of 2t√(1-t²) = value, value in [0, 1].
double phi_parameter_for_value(double value);

}  // namespace telegme
