#include "telegme/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "telegme/detail/nelder_mead.hpp"
#include "telegme/measures.hpp"

namespace telegme {

namespace {

constexpr double kPi = std::numbers::pi;
// Candidates this close to the grid maximum count as ties for basis reporting.
constexpr double kTieTolerance = 1e-12;

void check_pair(const PureState& state, int i, int j) {
  if (i == j) throw Error(ErrorKind::InvalidArgument, "pair needs two distinct parties");
  if (i < 0 || j < 0 || i >= state.n_qubits() || j >= state.n_qubits())
    throw Error(ErrorKind::IndexOutOfRange, "pair index out of range");
}

// Grid over one measurement basis. θ only spans [0, π/2]: the basis at
// (π - θ, φ + π) is the one at (θ, φ) with its outcomes swapped, and every
// objective here sums over both outcomes.
struct BasisGrid {
  std::vector<MeasurementBasis> points;  // lexicographic in (θ, φ)
  double spacing = 0.0;

  explicit BasisGrid(int g) : spacing(kPi / g) {
    for (int k = 0; 2 * k <= g; ++k)
      for (int l = 0; l < g; ++l) points.push_back({kPi * (double(k) / g), kPi * (2.0 * l / g)});
  }
};

// p * f for an unnormalized pure two-qubit branch v: (|v|² + 2|v0 v3 - v1 v2|) / 2.
double weighted_pure_fraction(const Complex* v) {
  return 0.5 * (std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3])) +
         std::abs(v[0] * v[3] - v[1] * v[2]);
}

// Projects the listed assistants (descending qubit order, so lower indices
// never shift) with the given bases and sums p_J f over all leaves.
double product_objective(const CVector& amps, int n_qubits, const std::vector<int>& assistants,
                         const std::vector<MeasurementBasis>& bases) {
  std::vector<CVector> branches{amps};
  int n = n_qubits;
  for (std::size_t a = 0; a < assistants.size(); ++a) {
    std::vector<CVector> next;
    next.reserve(branches.size() * 2);
    for (const auto& b : branches)
      for (int t = 0; t < 2; ++t) next.push_back(project_qubit(b, n, assistants[a], bases[a].ket(t)));
    branches = std::move(next);
    --n;
  }
  double total = 0.0;
  for (const auto& b : branches) total += weighted_pure_fraction(b.data());
  return total;
}

std::vector<MeasurementBasis> bases_from_angles(const Eigen::VectorXd& x) {
  std::vector<MeasurementBasis> out;
  for (Eigen::Index k = 0; k + 1 < x.size(); k += 2) out.push_back({x[k], x[k + 1]});
  return out;
}

Eigen::VectorXd angles_from_bases(const std::vector<MeasurementBasis>& bases) {
  Eigen::VectorXd x(2 * static_cast<Eigen::Index>(bases.size()));
  for (std::size_t k = 0; k < bases.size(); ++k) {
    x[2 * static_cast<Eigen::Index>(k)] = bases[k].theta;
    x[2 * static_cast<Eigen::Index>(k) + 1] = bases[k].phi;
  }
  return x;
}

std::vector<int> assistants_descending(int n_qubits, int i, int j) {
  std::vector<int> out;
  for (int q = n_qubits - 1; q >= 0; --q)
    if (q != i && q != j) out.push_back(q);
  return out;
}

// Exhaustive product-grid search with the last assistant handled in closed
// form: for a branch v on (i, j, q) split as v = |0>_q x + |1>_q y, projecting q
// onto conj(c) gives c0 x + c1 y, whose determinant is the quadratic form
// c0² det(x) + c0 c1 m + c1² det(y). The norm part sums to |v|² over outcomes.
class ProductGridSearch {
 public:
  ProductGridSearch(const PureState& state, int i, int j, const BasisGrid& grid)
      : amps_(state.amplitudes()),
        n_(state.n_qubits()),
        assistants_(assistants_descending(state.n_qubits(), i, j)),
        grid_(grid) {
    for (const auto& b : grid_.points) {
      for (int t = 0; t < 2; ++t) {
        const Vector2c ket = b.ket(t);
        const Complex c0 = std::conj(ket[0]), c1 = std::conj(ket[1]);
        coeffs_.push_back({c0 * c0, c0 * c1, c1 * c1});
      }
    }
  }

  std::pair<double, std::vector<MeasurementBasis>> run() {
    const std::size_t m = assistants_.size();
    best_value_ = -1.0;
    current_.assign(m, 0);
    best_index_.assign(m, 0);
    recurse({amps_}, n_, 0);
    std::vector<MeasurementBasis> bases;
    for (std::size_t a = 0; a < m; ++a) bases.push_back(grid_.points[best_index_[a]]);
    return {best_value_, bases};
  }

 private:
  struct QuadForm {
    Complex a, b, c;
  };

  void recurse(const std::vector<CVector>& branches, int n, std::size_t level) {
    const std::size_t m = assistants_.size();
    if (level + 1 == m) {
      leaf_level(branches, n);
      return;
    }
    std::vector<CVector> next(branches.size() * 2);
    for (std::size_t g = 0; g < grid_.points.size(); ++g) {
      current_[level] = g;
      for (std::size_t b = 0; b < branches.size(); ++b)
        for (int t = 0; t < 2; ++t)
          next[2 * b + static_cast<std::size_t>(t)] =
              project_qubit(branches[b], n, assistants_[level], grid_.points[g].ket(t));
      recurse(next, n - 1, level + 1);
    }
  }

  void leaf_level(const std::vector<CVector>& branches, int n) {
    // Each branch lives on three qubits: i, j and the last assistant q.
    const int q = assistants_.back();
    const Eigen::Index stride = Eigen::Index{1} << bit_position(n, q);
    std::vector<QuadForm> forms;
    double norm_part = 0.0;
    for (const auto& v : branches) {
      std::array<Complex, 4> x{}, y{};
      int r = 0;
      for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
        if (idx & stride) continue;
        x[static_cast<std::size_t>(r)] = v[idx];
        y[static_cast<std::size_t>(r)] = v[idx + stride];
        ++r;
      }
      forms.push_back({x[0] * x[3] - x[1] * x[2],
                       x[0] * y[3] + y[0] * x[3] - x[1] * y[2] - y[1] * x[2],
                       y[0] * y[3] - y[1] * y[2]});
      norm_part += 0.5 * v.squaredNorm();
    }
    const std::size_t level = assistants_.size() - 1;
    for (std::size_t g = 0; g < grid_.points.size(); ++g) {
      double value = norm_part;
      for (const auto& f : forms)
        for (int t = 0; t < 2; ++t) {
          const auto& c = coeffs_[2 * g + static_cast<std::size_t>(t)];
          value += std::abs(f.a * c[0] + f.b * c[1] + f.c * c[2]);
        }
      if (value > best_value_) {
        best_value_ = value;
        current_[level] = g;
        best_index_ = current_;
      }
    }
  }

  CVector amps_;
  int n_;
  std::vector<int> assistants_;
  const BasisGrid& grid_;
  std::vector<std::array<Complex, 3>> coeffs_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_index_;
  double best_value_ = -1.0;
};

// Nelder-Mead polish of a grid optimum; keeps the grid point unless strictly improved.
template <typename Objective>
std::pair<double, Eigen::VectorXd> refine(const Objective& objective, const Eigen::VectorXd& x0,
                                          double start_value, double step,
                                          const OptimizerConfig& cfg) {
  if (cfg.refine_iters <= 0) return {start_value, x0};
  const auto result = detail::nelder_mead_maximize(objective, x0, step, cfg.refine_iters,
                                                   cfg.refine_tol);
  if (result.value > start_value) return {result.value, result.x};
  return {start_value, x0};
}

Eigen::Matrix2cd su2(double alpha, double beta, double gamma) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd rz_a, ry_b, rz_g;
  rz_a << std::exp(-i * alpha / 2.0), 0, 0, std::exp(i * alpha / 2.0);
  ry_b << std::cos(beta / 2.0), -std::sin(beta / 2.0), std::sin(beta / 2.0), std::cos(beta / 2.0);
  rz_g << std::exp(-i * gamma / 2.0), 0, 0, std::exp(i * gamma / 2.0);
  return rz_a * ry_b * rz_g;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (coarse_grid < 8) throw Error(ErrorKind::InvalidArgument, "coarse_grid must be >= 8");
  if (!(refine_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "refine_tol must be > 0");
  if (refine_iters < 0) throw Error(ErrorKind::InvalidArgument, "refine_iters must be >= 0");
}

double fef_bruteforce(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  if (rho.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "two-qubit state required");
  const Eigen::Matrix4cd r = rho.entries();
  const double h = std::numbers::sqrt2 / 2.0;
  auto overlap = [&](const Eigen::VectorXd& x) {
    const Eigen::Matrix2cd u = su2(x[0], x[1], x[2]);
    // (U ⊗ I)|Φ+> has amplitude U(a, b)/√2 on |ab>.
    Eigen::Vector4cd e(u(0, 0) * h, u(0, 1) * h, u(1, 0) * h, u(1, 1) * h);
    return (e.adjoint() * r * e)(0, 0).real();
  };

  const int g = cfg.coarse_grid;
  const double step = 2.0 * kPi / g;
  double best = -1.0;
  Eigen::VectorXd best_x(3);
  Eigen::VectorXd x(3);
  for (int a = 0; a < g; ++a)
    for (int b = 0; b <= g / 2; ++b)
      for (int c = 0; c < g; ++c) {
        x << kPi * (2.0 * a / g), kPi * (2.0 * b / g), kPi * (2.0 * c / g);
        const double v = overlap(x);
        if (v > best) {
          best = v;
          best_x = x;
        }
      }
  const auto [value, _] = refine(overlap, best_x, best, step / 2.0, cfg);
  return std::clamp(value, 0.0, 1.0);
}

double fef_bruteforce(const PureState& state, const OptimizerConfig& cfg) {
  return fef_bruteforce(DensityMatrix::from_pure(state), cfg);
}

OracleResult f_ij_bruteforce(const PureState& state, int i, int j, const OptimizerConfig& cfg) {
  cfg.validate();
  if (state.n_qubits() != 3) throw Error(ErrorKind::DimensionMismatch, "three-qubit state required");
  check_pair(state, i, j);
  const std::vector<int> assistant{3 - i - j};
  const BasisGrid grid(cfg.coarse_grid);

  std::vector<double> values;
  values.reserve(grid.points.size());
  for (const auto& b : grid.points)
    values.push_back(product_objective(state.amplitudes(), 3, assistant, {b}));
  const double best = *std::max_element(values.begin(), values.end());
  const auto first_tie = std::find_if(values.begin(), values.end(),
                                      [&](double v) { return v >= best - kTieTolerance; });
  const MeasurementBasis best_basis = grid.points[static_cast<std::size_t>(first_tie - values.begin())];
  auto objective = [&](const Eigen::VectorXd& x) {
    return product_objective(state.amplitudes(), 3, assistant, bases_from_angles(x));
  };
  const auto [value, x] =
      refine(objective, angles_from_bases({best_basis}), best, grid.spacing / 2.0, cfg);
  return {std::min(value, 1.0), MeasurementBasis::canonical(x[0], x[1])};
}

double f_ij_product_n(const PureState& state, int i, int j, const OptimizerConfig& cfg) {
  cfg.validate();
  const int n = state.n_qubits();
  if (n != 4 && n != 5) throw Error(ErrorKind::DimensionMismatch, "product oracle needs 4 or 5 qubits");
  check_pair(state, i, j);
  const int g = n == 5 ? std::min(cfg.coarse_grid, 16) : cfg.coarse_grid;
  const BasisGrid grid(g);

  ProductGridSearch search(state, i, j, grid);
  const auto [best, bases] = search.run();
  const auto assistants = assistants_descending(n, i, j);
  auto objective = [&](const Eigen::VectorXd& x) {
    return product_objective(state.amplitudes(), n, assistants, bases_from_angles(x));
  };
  const auto [value, _] = refine(objective, angles_from_bases(bases), best, grid.spacing / 2.0, cfg);
  return std::min(value, 1.0);
}

double f_ij_sequential_4(const PureState& state, int i, int j, const OptimizerConfig& cfg) {
  cfg.validate();
  if (state.n_qubits() != 4) throw Error(ErrorKind::DimensionMismatch, "four-qubit state required");
  check_pair(state, i, j);
  const BasisGrid grid(cfg.coarse_grid);

  double overall = -1.0;
  for (int first = 0; first < 4; ++first) {
    if (first == i || first == j) continue;
    // After removing `first`, qubits above it shift down by one.
    const int pi = i > first ? i - 1 : i;
    const int pj = j > first ? j - 1 : j;
    auto objective_at = [&](const MeasurementBasis& b) {
      double total = 0.0;
      for (const auto& branch : measure_qubit(state, first, b)) {
        if (branch.flagged()) continue;
        const double tau = three_tangle(*branch.state);
        const double c = pair_concurrence(*branch.state, pi, pj);
        total += branch.probability * (std::sqrt(tau + c * c) + 1.0) / 2.0;
      }
      return total;
    };
    double best = -1.0;
    MeasurementBasis best_basis;
    for (const auto& b : grid.points) {
      const double v = objective_at(b);
      if (v > best) {
        best = v;
        best_basis = b;
      }
    }
    auto objective = [&](const Eigen::VectorXd& x) { return objective_at({x[0], x[1]}); };
    const auto [value, _] =
        refine(objective, angles_from_bases({best_basis}), best, grid.spacing / 2.0, cfg);
    overall = std::max(overall, value);
  }
  return std::min(overall, 1.0);
}

}  // namespace telegme
