#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace telegme::detail {

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

/// Nelder-Mead maximization (standard coefficients 1, 2, 1/2, 1/2) started from
/// an axis-aligned simplex of edge `step` around `x0`. Stops when the spread of
/// simplex values drops below `tol` or after `max_iters` iterations.
inline SimplexResult nelder_mead_maximize(const std::function<double(const Eigen::VectorXd&)>& f,
                                          const Eigen::VectorXd& x0, double step, int max_iters,
                                          double tol) {
  const Eigen::Index d = x0.size();
  std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(d + 1), x0);
  std::vector<double> vals(static_cast<std::size_t>(d + 1));
  for (Eigen::Index k = 0; k < d; ++k) pts[static_cast<std::size_t>(k + 1)][k] += step;
  for (std::size_t k = 0; k < pts.size(); ++k) vals[k] = f(pts[k]);

  std::vector<std::size_t> order(pts.size());
  int it = 0;
  for (; it < max_iters; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];
    if (vals[best] - vals[worst] < tol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) centroid += pts[order[k]];
    centroid /= static_cast<double>(d);

    const Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
    const double f_reflected = f(reflected);
    if (f_reflected > vals[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
      const double f_expanded = f(expanded);
      if (f_expanded > f_reflected) {
        pts[worst] = expanded;
        vals[worst] = f_expanded;
      } else {
        pts[worst] = reflected;
        vals[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected > vals[second_worst]) {
      pts[worst] = reflected;
      vals[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected > vals[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
    const double f_contracted = f(contracted);
    if (f_contracted > std::max(vals[worst], outside ? f_reflected : vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = f_contracted;
      continue;
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == best) continue;
      pts[k] = pts[best] + 0.5 * (pts[k] - pts[best]);
      vals[k] = f(pts[k]);
    }
  }
  const auto best_it = std::max_element(vals.begin(), vals.end());
  return {pts[static_cast<std::size_t>(best_it - vals.begin())], *best_it, it};
}

}  // namespace telegme::detail
