#include "ptree/report.hpp"

#include "ptree/errors.hpp"

namespace ptree {

double mse(std::span<const double> predictions, std::span<const double> truth) {
  if (predictions.size() != truth.size())
    throw ContractError("mse needs sequences of equal length, got " + std::to_string(predictions.size()) +
                        " and " + std::to_string(truth.size()));
  if (predictions.empty()) throw ContractError("mse of an empty sequence");
  double sum = 0.0;
  for (std::size_t k = 0; k < predictions.size(); ++k) {
    const double e = predictions[k] - truth[k];
    sum += e * e;
  }
  return sum / static_cast<double>(predictions.size());
}

void EstimationReport::finalize() {
  n_estimated = steps.size();
  if (steps.empty()) {
    mse = 0.0;
    return;
  }
  double sum = 0.0;
  for (const auto& s : steps) {
    const double e = s.x_hat - s.x;
    sum += e * e;
  }
  mse = sum / static_cast<double>(steps.size());
}

bool operator==(const EstimationReport& a, const EstimationReport& b) {
  if (a.method != b.method || a.depth != b.depth || a.n != b.n || a.n_estimated != b.n_estimated ||
      a.mse != b.mse || !(a.decisions == b.decisions) || a.steps.size() != b.steps.size())
    return false;
  for (std::size_t k = 0; k < a.steps.size(); ++k) {
    const auto& s = a.steps[k];
    const auto& t = b.steps[k];
    if (s.index != t.index || s.x != t.x || s.x_hat != t.x_hat || s.depth_used != t.depth_used) return false;
  }
  return true;
}

nlohmann::json to_json(const EstimationReport& report, bool per_step) {
  nlohmann::json j{
      {"method", report.method},
      {"depth", report.depth},
      {"n", report.n},
      {"n_estimated", report.n_estimated},
      {"mse", report.mse},
      {"decisions", {{"up", report.decisions.up}, {"down", report.decisions.down}, {"fallback", report.decisions.fallback}}},
  };
  if (per_step) {
    auto steps = nlohmann::json::array();
    for (const auto& s : report.steps)
      steps.push_back({{"i", s.index}, {"x", s.x}, {"x_hat", s.x_hat}, {"depth_used", s.depth_used}});
    j["per_step"] = std::move(steps);
  }
  return j;
}

}  // namespace ptree
