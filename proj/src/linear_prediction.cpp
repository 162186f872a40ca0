#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "ptree/baselines.hpp"
#include "ptree/errors.hpp"

namespace ptree {

EstimationReport lp_run_online(std::span<const double> series, const LpConfig& cfg) {
  const std::size_t p = cfg.order;
  if (p < 1) throw ContractError("LP order must be at least 1");
  if (!(cfg.ridge >= 0.0)) throw ContractError("LP ridge must be nonnegative");
  if (series.size() <= p + 2)
    throw ContractError("series of length " + std::to_string(series.size()) + " too short for LP order " +
                        std::to_string(p));
  const std::size_t min_rows = cfg.min_history == 0 ? p + 1 : cfg.min_history;
  const auto dim = static_cast<Eigen::Index>(p + 1);

  // Feature vector for predicting x_{t+1}: (1, x_t, x_{t-1}, ..., x_{t-p+1}).
  Eigen::VectorXd row(dim);
  auto fill_row = [&](std::size_t t) {
    row(0) = 1.0;
    for (std::size_t j = 1; j <= p; ++j) row(static_cast<Eigen::Index>(j)) = series[t - j + 1];
  };

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
  Eigen::MatrixXd penalty = Eigen::MatrixXd::Identity(dim, dim) * cfg.ridge;
  penalty(0, 0) = 0.0;
  std::size_t rows = 0;

  EstimationReport report;
  report.method = "lp";
  report.depth = p;
  report.n = series.size();
  for (std::size_t i = p; i + 1 < series.size(); ++i) {
    // Newest complete row: features ending at i-1, target x_i.
    fill_row(i - 1);
    gram.noalias() += row * row.transpose();
    rhs.noalias() += row * series[i];
    ++rows;
    double x_hat = series[i];
    std::size_t used = 0;
    if (rows >= min_rows) {
      const Eigen::VectorXd coef = (gram + penalty).completeOrthogonalDecomposition().solve(rhs);
      fill_row(i);
      const double pred = row.dot(coef);
      if (std::isfinite(pred)) {
        x_hat = pred;
        used = p;
      }
    }
    report.steps.push_back({i + 1, series[i + 1], x_hat, used});
    if (used == 0)
      ++report.decisions.fallback;
    else if (x_hat > series[i])
      ++report.decisions.up;
    else
      ++report.decisions.down;
  }
  report.finalize();
  return report;
}

EstimationReport persistence_run_online(std::span<const double> series, std::size_t first) {
  if (series.size() <= first + 1) throw ContractError("series too short for persistence scoring");
  EstimationReport report;
  report.method = "persistence";
  report.depth = first;
  report.n = series.size();
  for (std::size_t i = first; i + 1 < series.size(); ++i) {
    report.steps.push_back({i + 1, series[i + 1], series[i], 0});
    ++report.decisions.fallback;
  }
  report.finalize();
  return report;
}

}  // namespace ptree
