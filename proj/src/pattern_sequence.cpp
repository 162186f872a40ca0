#include <algorithm>
#include <string>
#include <vector>

#include "ptree/baselines.hpp"
#include "ptree/errors.hpp"

namespace ptree {

namespace {

int bin_of(std::size_t below, std::size_t count, std::size_t n_labels) {
  const std::size_t label = n_labels * below / count;
  return static_cast<int>(std::min(label, n_labels - 1));
}

}  // namespace

std::vector<int> empirical_labels(std::span<const double> values, std::size_t n_labels) {
  if (n_labels < 2) throw ContractError("PSF needs at least two labels");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> labels(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const auto below = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), values[j]) - sorted.begin());
    labels[j] = bin_of(below, values.size(), n_labels);
  }
  return labels;
}

EstimationReport psf_run_online(std::span<const double> series, const PsfConfig& cfg) {
  if (cfg.window < 1) throw ContractError("PSF window must be at least 1");
  if (cfg.n_labels < 2) throw ContractError("PSF needs at least two labels");
  if (series.size() <= cfg.window + 2)
    throw ContractError("series of length " + std::to_string(series.size()) + " too short for PSF window " +
                        std::to_string(cfg.window));
  const std::size_t k = cfg.n_labels;

  // below[j] = #{ l <= i : x_l < x_j } for the current prefix x_0..x_i.
  std::vector<std::size_t> below;
  std::vector<int> labels;
  below.reserve(series.size());
  labels.reserve(series.size());

  EstimationReport report;
  report.method = "psf";
  report.depth = cfg.window;
  report.n = series.size();

  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    const double x = series[i];
    std::size_t count_below = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (x < series[j]) ++below[j];
      if (series[j] < x) ++count_below;
    }
    below.push_back(count_below);
    if (i < cfg.window) continue;

    const std::size_t m = i + 1;
    labels.resize(m);
    for (std::size_t j = 0; j < m; ++j) labels[j] = bin_of(below[j], m, k);

    double x_hat = x;
    std::size_t used = 0;
    for (std::size_t w = cfg.window; w >= 1; --w) {
      double sum = 0.0;
      std::size_t matches = 0;
      for (std::size_t t = w - 1; t < i; ++t) {
        bool same = true;
        for (std::size_t q = 0; q < w && same; ++q) same = labels[t - q] == labels[i - q];
        if (same) {
          sum += series[t + 1] - series[t];
          ++matches;
        }
      }
      if (matches > 0) {
        x_hat = x + sum / static_cast<double>(matches);
        used = w;
        break;
      }
    }
    report.steps.push_back({i + 1, series[i + 1], x_hat, used});
    if (used == 0)
      ++report.decisions.fallback;
    else if (x_hat > x)
      ++report.decisions.up;
    else
      ++report.decisions.down;
  }
  report.finalize();
  return report;
}

}  // namespace ptree
