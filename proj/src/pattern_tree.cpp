#include "ptree/pattern_tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptree/errors.hpp"

namespace ptree {

PatternTree::PatternTree(std::size_t d_max, PatternTreeOptions options)
    : d_max_(d_max), options_(options) {
  if (d_max < 1 || d_max > kMaxDepth)
    throw ContractError("pattern tree depth must be in [1, " + std::to_string(kMaxDepth) + "], got " +
                        std::to_string(d_max));
  if (options_.node_capacity && *options_.node_capacity == 0)
    throw ContractError("node capacity must be positive");
  levels_.resize(d_max);
  for (std::size_t d = 1; d <= d_max; ++d) levels_[d - 1].resize(std::size_t{1} << d);
}

void PatternTree::set_pattern(std::span<const double> initial) {
  if (!buffer_.empty()) throw ContractError("set_pattern on a tree that already holds samples");
  if (initial.size() != d_max_)
    throw ContractError("set_pattern needs exactly " + std::to_string(d_max_) + " samples, got " +
                        std::to_string(initial.size()));
  for (double v : initial)
    if (!std::isfinite(v)) throw ContractError("series values must be finite");
  buffer_.assign(initial.begin(), initial.end());
  std::vector<std::uint8_t> bits;
  for (std::size_t k = d_max_ - 1; k >= 1; --k) bits.push_back(buffer_[k] > buffer_[k - 1] ? 1 : 0);
  rolling_ = PatternBits(std::move(bits));
}

void PatternTree::record(std::size_t depth, std::uint64_t key, std::size_t i, double delta) {
  Node& node = levels_[depth - 1][key];
  node.indices.push_back(i);
  node.delta_sum += delta;
  if (options_.node_capacity && node.indices.size() > *options_.node_capacity) {
    const std::size_t evicted = node.indices.front();
    node.delta_sum -= buffer_[evicted] - buffer_[evicted - 1];
    node.indices.erase(node.indices.begin());
  }
}

void PatternTree::update(std::size_t i, double x) {
  if (i != buffer_.size())
    throw ContractError("update expects index " + std::to_string(buffer_.size()) + ", got " +
                        std::to_string(i));
  if (!std::isfinite(x)) throw ContractError("series values must be finite");
  if (buffer_.empty()) {
    buffer_.push_back(x);
    return;
  }
  const double delta = x - buffer_.back();
  const int bit = x > buffer_.back() ? 1 : 0;
  PatternBits extended = rolling_.prepend(bit);
  buffer_.push_back(x);

  const std::size_t depth_limit = std::min(d_max_, i);
  std::uint64_t key = 0;
  for (std::size_t d = 1; d <= depth_limit; ++d) {
    key = (key << 1) | static_cast<std::uint64_t>(extended.bit(d));
    // key holds b1..bd with b1 most significant once all d bits are in.
    record(d, key, i, delta);
  }
  rolling_ = extended.depth() > d_max_ - 1 ? extended.newest(d_max_ - 1) : std::move(extended);
}

Estimate PatternTree::estimate() const {
  if (buffer_.empty()) throw ContractError("estimate on an empty tree");
  const double last = buffer_.back();
  for (std::size_t d = d_max_; d >= 1; --d) {
    if (rolling_.depth() < d - 1) continue;
    const std::uint64_t context = rolling_.newest(d - 1).index();
    const std::uint64_t key_up = (std::uint64_t{1} << (d - 1)) | context;
    const std::uint64_t key_down = context;
    const Node& up = node_at(d, key_up);
    const Node& down = node_at(d, key_down);
    const std::size_t c1 = up.indices.size();
    const std::size_t c0 = down.indices.size();
    if (c1 == c0) continue;

    const bool rise = c1 > c0;
    const Node& chosen = rise ? up : down;
    EstimateDecision decision;
    decision.q_hat = rise ? 0 : 1;
    decision.depth_used = d;
    decision.matched_count = chosen.indices.size();
    decision.d_hat = chosen.delta_sum / static_cast<double>(chosen.indices.size());
    const double total = static_cast<double>(c1 + c0);
    decision.p1 = static_cast<double>(c1) / total;
    decision.p0 = static_cast<double>(c0) / total;
    return {last + decision.d_hat, decision};
  }
  return {last, EstimateDecision{}};
}

const std::vector<std::size_t>& PatternTree::node(const PatternBits& key) const {
  if (key.depth() < 1 || key.depth() > d_max_)
    throw IndexError("node depth " + std::to_string(key.depth()) + " outside [1, " + std::to_string(d_max_) + "]");
  return node_at(key.depth(), key.index()).indices;
}

std::size_t PatternTree::populated_keys(std::size_t depth) const {
  if (depth < 1 || depth > d_max_) throw IndexError("depth outside tree");
  return static_cast<std::size_t>(std::count_if(levels_[depth - 1].begin(), levels_[depth - 1].end(),
                                                [](const Node& n) { return !n.indices.empty(); }));
}

std::size_t PatternTree::populated_keys() const {
  std::size_t total = 0;
  for (std::size_t d = 1; d <= d_max_; ++d) total += populated_keys(d);
  return total;
}

double PatternTree::iid_up_probability(ProbabilityBackend backend) const {
  return up_probability(rolling_, backend);
}

EstimationReport run_online(std::span<const double> series, std::size_t d_max, PatternTreeOptions options) {
  if (series.size() <= d_max + 1)
    throw ContractError("series of length " + std::to_string(series.size()) +
                        " too short for depth " + std::to_string(d_max));
  PatternTree tree(d_max, options);
  tree.set_pattern(series.first(d_max));

  EstimationReport report;
  report.method = "pt";
  report.depth = d_max;
  report.n = series.size();
  report.steps.reserve(series.size() - d_max - 1);
  for (std::size_t i = d_max; i + 1 < series.size(); ++i) {
    tree.update(i, series[i]);
    const auto [x_hat, decision] = tree.estimate();
    report.steps.push_back({i + 1, series[i + 1], x_hat, decision.depth_used});
    if (decision.depth_used == 0)
      ++report.decisions.fallback;
    else if (decision.q_hat == 0)
      ++report.decisions.up;
    else
      ++report.decisions.down;
  }
  tree.update(series.size() - 1, series.back());
  report.finalize();
  return report;
}

}  // namespace ptree
