#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ptree/data.hpp"
#include "ptree/decomposition.hpp"
#include "ptree/report.hpp"

namespace ptree {

enum class Method { pt, lp, psf };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);

struct DataSource {
  enum class Kind { mackey_glass, random_walk, csv };
  Kind kind = Kind::mackey_glass;
  MackeyGlassConfig mackey_glass;
  RandomWalkConfig random_walk;
  std::filesystem::path csv_path;

  /// "mackey-glass", "random-walk" or "csv:<path>".
  static DataSource parse(std::string_view text);
  std::string describe() const;
  TimeSeries load() const;
};

struct BenchConfig {
  DataSource input;
  std::vector<Method> methods{Method::pt, Method::lp, Method::psf};
  std::vector<std::size_t> depths{1, 2, 3, 4, 5};
  std::vector<std::size_t> downsample_factors{1};
  std::size_t psf_labels = 5;
  double lp_ridge = 1e-8;

  void validate() const;
};

struct BenchRow {
  Method method = Method::pt;
  std::size_t depth = 0;
  std::size_t downsample = 1;
  std::size_t n_estimated = 0;
  double mse = 0.0;
  double runtime_ms = 0.0;  // informational; ignored by ==

  friend bool operator==(const BenchRow& a, const BenchRow& b) {
    return a.method == b.method && a.depth == b.depth && a.downsample == b.downsample &&
           a.n_estimated == b.n_estimated && a.mse == b.mse;
  }
};

/// Pattern probability and mixture from both probability backends, kept side
/// by side because they disagree from depth three on.
struct BackendComparison {
  struct Side {
    double prob = 0.0;
    std::string prob_exact;  // rational text for the exact backend, empty otherwise
    PatternDistribution mixture;
  };
  PatternBits pattern;
  Side paper;
  Side exact;
};

BackendComparison compare_backends(const PatternBits& pattern);

struct BenchResult {
  std::string source;
  std::vector<BenchRow> rows;  // sorted by (downsample, depth, method)
  BackendComparison decomposition_check;

  const BenchRow& at(Method m, std::size_t depth, std::size_t downsample = 1) const;
  friend bool operator==(const BenchResult& a, const BenchResult& b) {
    return a.source == b.source && a.rows == b.rows;
  }
};

/// Failure inside one grid cell; the message names the cell.
class BenchCellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one method at one depth/order on an already prepared series.
EstimationReport run_method(Method m, std::span<const double> series, std::size_t depth,
                            const BenchConfig& cfg);

BenchResult run_bench(const BenchConfig& cfg);
BenchResult run_bench(const BenchConfig& cfg, std::span<const double> series);

enum class TableFormat { csv, json, markdown };
TableFormat parse_table_format(std::string_view name);

void emit_table(const BenchResult& result, TableFormat format, std::ostream& out);
void emit_table(const BenchResult& result, TableFormat format, const std::filesystem::path& path);

nlohmann::json to_json(const BenchResult& result);
BenchResult bench_result_from_json(const nlohmann::json& j);

}  // namespace ptree
