#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ptree/decomposition.hpp"
#include "ptree/patterns.hpp"
#include "ptree/report.hpp"

namespace ptree {

struct PatternTreeOptions {
  // Keep at most this many of the newest indices per node. Unbounded when unset.
  std::optional<std::size_t> node_capacity;
};

/// Outcome of one estimate() call.
///
/// q_hat is 0 for a predicted rise and 1 for a fall. p1/p0 are the empirical
/// up/down shares at the depth where the decision was made; they are unset
/// when persistence was used (depth_used == 0).
struct EstimateDecision {
  int q_hat = 0;
  std::size_t depth_used = 0;
  double d_hat = 0.0;  // signed mean change of the chosen node
  std::optional<double> p1;
  std::optional<double> p0;
  std::size_t matched_count = 0;
};

struct Estimate {
  double x_hat = 0.0;
  EstimateDecision decision;
};

/// Online pattern tree.
///
/// Depth d holds one node per depth-d dynamic pattern; a node lists the
/// sample indices i whose d most recent comparisons (ending at i) spell its
/// key. estimate() walks from the deepest context down, picking the more
/// frequent continuation of the current context, and predicts the last sample
/// plus the mean change recorded in that continuation's node.
class PatternTree {
 public:
  static constexpr std::size_t kMaxDepth = 16;

  explicit PatternTree(std::size_t d_max, PatternTreeOptions options = {});

  /// Loads the first d_max samples without touching any node.
  void set_pattern(std::span<const double> initial);
  /// Appends sample `i` (must equal the buffer length) and files it under
  /// every depth d <= min(d_max, i).
  void update(std::size_t i, double x);
  Estimate estimate() const;

  std::size_t d_max() const noexcept { return d_max_; }
  const TimeSeries& buffer() const noexcept { return buffer_; }
  /// Most recent comparisons, newest first, at most d_max - 1 of them.
  const PatternBits& rolling() const noexcept { return rolling_; }

  /// Indices stored under `key` (its depth selects the tree level).
  const std::vector<std::size_t>& node(const PatternBits& key) const;
  /// Keys with at least one index at `depth`.
  std::size_t populated_keys(std::size_t depth) const;
  std::size_t populated_keys() const;

  /// Up probability for the current context under an i.i.d. model, for diagnostics.
  double iid_up_probability(ProbabilityBackend backend) const;

 private:
  struct Node {
    std::vector<std::size_t> indices;
    double delta_sum = 0.0;
  };

  const Node& node_at(std::size_t depth, std::uint64_t key) const { return levels_[depth - 1][key]; }
  void record(std::size_t depth, std::uint64_t key, std::size_t i, double delta);

  std::size_t d_max_;
  PatternTreeOptions options_;
  std::vector<std::vector<Node>> levels_;
  TimeSeries buffer_;
  PatternBits rolling_;
};

/// Runs the tree over `series`: set_pattern on the first d_max samples, then
/// for each i = d_max..n-2 update with x_i and predict x_{i+1}; the last
/// sample is fed at the end. Requires n > d_max + 1.
EstimationReport run_online(std::span<const double> series, std::size_t d_max,
                            PatternTreeOptions options = {});

}  // namespace ptree
