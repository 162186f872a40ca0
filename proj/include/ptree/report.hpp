#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace ptree {

/// One one-step-ahead prediction: x_hat was produced for sample `index`
/// using only samples 0..index-1.
struct StepRecord {
  std::size_t index = 0;
  double x = 0.0;
  double x_hat = 0.0;
  std::size_t depth_used = 0;  // 0 = persistence fallback
};

struct DecisionCounts {
  std::size_t up = 0;
  std::size_t down = 0;
  std::size_t fallback = 0;

  friend bool operator==(const DecisionCounts&, const DecisionCounts&) = default;
};

struct EstimationReport {
  std::string method;
  std::size_t depth = 0;
  std::size_t n = 0;
  std::size_t n_estimated = 0;
  double mse = 0.0;
  DecisionCounts decisions;
  std::vector<StepRecord> steps;

  /// Fills n_estimated and mse from `steps`.
  void finalize();
  friend bool operator==(const EstimationReport&, const EstimationReport&);
};

/// Mean of squared differences. Throws ContractError on empty or mismatched input.
double mse(std::span<const double> predictions, std::span<const double> truth);

nlohmann::json to_json(const EstimationReport& report, bool per_step);

}  // namespace ptree
