#pragma once

#include <cstddef>
#include <span>

#include "ptree/report.hpp"

namespace ptree {

/// Expanding-window least-squares autoregression with intercept.
struct LpConfig {
  std::size_t order = 1;
  double ridge = 1e-8;          // added to the lag coefficients only
  std::size_t min_history = 0;  // rows needed before fitting; 0 means order + 1
};

/// Online adaptation of pattern-sequence forecasting: label samples by their
/// empirical-CDF bin, match the latest label window against history and
/// average the changes that followed the matches.
struct PsfConfig {
  std::size_t window = 1;
  std::size_t n_labels = 5;
};

/// Predicts x_{i+1} for i = order..n-2 from x_0..x_i only.
EstimationReport lp_run_online(std::span<const double> series, const LpConfig& cfg);

/// Predicts x_{i+1} for i = window..n-2; shrinks the window on a miss and
/// falls back to persistence once it reaches zero.
EstimationReport psf_run_online(std::span<const double> series, const PsfConfig& cfg);

/// Label of every sample in `values` under the empirical-CDF binning of the
/// whole span: floor(n_labels * #{v < x} / size), capped at n_labels - 1.
std::vector<int> empirical_labels(std::span<const double> values, std::size_t n_labels);

/// x_hat_{i+1} = x_i for i = first..n-2.
EstimationReport persistence_run_online(std::span<const double> series, std::size_t first);

}  // namespace ptree
