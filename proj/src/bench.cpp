#include "ptree/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "ptree/baselines.hpp"
#include "ptree/errors.hpp"
#include "ptree/exact_enumeration.hpp"
#include "ptree/pattern_tree.hpp"

namespace ptree {

Method parse_method(std::string_view name) {
  if (name == "pt") return Method::pt;
  if (name == "lp") return Method::lp;
  if (name == "psf") return Method::psf;
  throw ParseError("unknown method '" + std::string(name) + "' (expected pt, lp or psf)", 0);
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::pt: return "pt";
    case Method::lp: return "lp";
    case Method::psf: return "psf";
  }
  return "?";
}

DataSource DataSource::parse(std::string_view text) {
  DataSource src;
  if (text == "mackey-glass") {
    src.kind = Kind::mackey_glass;
  } else if (text == "random-walk") {
    src.kind = Kind::random_walk;
  } else if (text.starts_with("csv:") && text.size() > 4) {
    src.kind = Kind::csv;
    src.csv_path = std::string(text.substr(4));
  } else {
    throw ParseError("unknown data source '" + std::string(text) + "'", 0);
  }
  return src;
}

std::string DataSource::describe() const {
  switch (kind) {
    case Kind::mackey_glass: {
      const auto& c = mackey_glass;
      char buf[192];
      std::snprintf(buf, sizeof buf, "mackey-glass(a=%g,b=%g,tau=%g,dt=%g,n=%zu,burn_in=%zu,sample_every=%zu,x0=%g)",
                    c.a, c.b, c.tau, c.dt, c.n, c.burn_in, c.sample_every, c.x0);
      return buf;
    }
    case Kind::random_walk: {
      const auto& c = random_walk;
      char buf[160];
      std::snprintf(buf, sizeof buf, "random-walk(n=%zu,mu=%g,sigma=%g,seed=%llu)", c.n, c.mu, c.sigma,
                    static_cast<unsigned long long>(c.seed));
      return buf;
    }
    case Kind::csv: return "csv:" + csv_path.string();
  }
  return "?";
}

TimeSeries DataSource::load() const {
  switch (kind) {
    case Kind::mackey_glass: return ptree::mackey_glass(mackey_glass);
    case Kind::random_walk: return ptree::random_walk(random_walk);
    case Kind::csv: return load_csv(csv_path);
  }
  throw ContractError("unknown data source kind");
}

void BenchConfig::validate() const {
  if (methods.empty()) throw ContractError("bench needs at least one method");
  if (depths.empty()) throw ContractError("bench needs at least one depth");
  if (downsample_factors.empty()) throw ContractError("bench needs at least one downsample factor");
  for (auto d : depths)
    if (d < 1) throw ContractError("bench depths must be positive");
  for (auto f : downsample_factors)
    if (f < 1) throw ContractError("downsample factors must be positive");
}

const BenchRow& BenchResult::at(Method m, std::size_t depth, std::size_t downsample) const {
  for (const auto& r : rows)
    if (r.method == m && r.depth == depth && r.downsample == downsample) return r;
  throw IndexError("no bench row for " + std::string(to_string(m)) + " depth " + std::to_string(depth) +
                   " downsample " + std::to_string(downsample));
}

BackendComparison compare_backends(const PatternBits& pattern) {
  BackendComparison cmp;
  cmp.pattern = pattern;
  cmp.paper.prob = dynamic_pattern_prob_paper(pattern);
  cmp.paper.mixture = dynamic_pattern_mixture(pattern, 0.0, 1.0);
  const auto law = enumerate_exact(pattern);
  cmp.exact.prob = law.prob.value();
  cmp.exact.prob_exact = law.prob.str();
  cmp.exact.mixture = exact_pattern_mixture(law, 0.0, 1.0);
  return cmp;
}

EstimationReport run_method(Method m, std::span<const double> series, std::size_t depth, const BenchConfig& cfg) {
  switch (m) {
    case Method::pt: return run_online(series, depth);
    case Method::lp: return lp_run_online(series, LpConfig{depth, cfg.lp_ridge, 0});
    case Method::psf: return psf_run_online(series, PsfConfig{depth, cfg.psf_labels});
  }
  throw ContractError("unknown method");
}

BenchResult run_bench(const BenchConfig& cfg) {
  cfg.validate();
  TimeSeries series;
  try {
    series = cfg.input.load();
  } catch (const std::exception& e) {
    throw BenchCellError("loading " + cfg.input.describe() + ": " + e.what());
  }
  auto result = run_bench(cfg, series);
  result.source = cfg.input.describe();
  return result;
}

BenchResult run_bench(const BenchConfig& cfg, std::span<const double> series) {
  cfg.validate();
  BenchResult result;
  result.source = "series";
  std::set<std::tuple<std::size_t, std::size_t, Method>> seen;
  for (std::size_t factor : cfg.downsample_factors) {
    const TimeSeries ds = downsample(series, factor);
    for (std::size_t depth : cfg.depths) {
      for (Method m : cfg.methods) {
        if (!seen.emplace(factor, depth, m).second) continue;
        const auto start = std::chrono::steady_clock::now();
        EstimationReport report;
        try {
          report = run_method(m, ds, depth, cfg);
        } catch (const std::exception& e) {
          throw BenchCellError("cell method=" + std::string(to_string(m)) + " depth=" + std::to_string(depth) +
                               " downsample=" + std::to_string(factor) + ": " + e.what());
        }
        const auto stop = std::chrono::steady_clock::now();
        result.rows.push_back({m, depth, factor, report.n_estimated, report.mse,
                               std::chrono::duration<double, std::milli>(stop - start).count()});
      }
    }
  }
  std::sort(result.rows.begin(), result.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.downsample, a.depth, a.method) < std::tie(b.downsample, b.depth, b.method);
  });
  result.decomposition_check = compare_backends(PatternBits::parse("101"));
  return result;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw ParseError("unknown table format '" + std::string(name) + "'", 0);
}

namespace {

nlohmann::json mixture_json(const PatternDistribution& d) {
  auto arr = nlohmann::json::array();
  for (const auto& c : d.components)
    arr.push_back({{"weight", c.weight}, {"alpha", c.params.alpha}, {"beta", c.params.beta}});
  return arr;
}

PatternDistribution mixture_from_json(const nlohmann::json& arr) {
  PatternDistribution d;
  for (const auto& c : arr)
    d.components.push_back({c.at("weight").get<double>(),
                            {c.at("alpha").get<double>(), c.at("beta").get<double>(), 0.0, 1.0}});
  return d;
}

std::string format_mse(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void emit_markdown(const BenchResult& result, std::ostream& out) {
  std::vector<Method> methods;
  std::map<std::size_t, std::map<std::size_t, std::map<Method, double>>> grid;
  for (const auto& r : result.rows) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
    grid[r.downsample][r.depth][r.method] = r.mse;
  }
  std::sort(methods.begin(), methods.end());
  out << "Source: " << result.source << "\n";
  for (const auto& [factor, by_depth] : grid) {
    out << "\nDownsample factor " << factor << "\n\n| Depth/Order |";
    for (Method m : methods) out << ' ' << to_string(m) << " |";
    out << "\n|---|";
    for (std::size_t k = 0; k < methods.size(); ++k) out << "---|";
    out << '\n';
    for (const auto& [depth, cells] : by_depth) {
      out << "| " << depth << " |";
      for (Method m : methods) {
        const auto it = cells.find(m);
        out << ' ' << (it == cells.end() ? std::string("-") : format_mse(it->second)) << " |";
      }
      out << '\n';
    }
  }
  const auto& chk = result.decomposition_check;
  if (!chk.pattern.empty()) {
    out << "\nPattern " << chk.pattern.str() << ": recursion probability " << chk.paper.prob
        << ", exact enumeration " << chk.exact.prob_exact << " (" << chk.exact.prob << ")\n";
  }
}

}  // namespace

nlohmann::json to_json(const BenchResult& result) {
  auto rows = nlohmann::json::array();
  for (const auto& r : result.rows)
    rows.push_back({{"method", to_string(r.method)},
                    {"depth", r.depth},
                    {"downsample", r.downsample},
                    {"n", r.n_estimated},
                    {"mse", r.mse},
                    {"runtime_ms", r.runtime_ms}});
  nlohmann::json j{{"source", result.source}, {"rows", rows}};
  const auto& chk = result.decomposition_check;
  if (!chk.pattern.empty()) {
    j["decomposition_check"] = {
        {"pattern", chk.pattern.str()},
        {"paper", {{"prob", chk.paper.prob}, {"components", mixture_json(chk.paper.mixture)}}},
        {"exact",
         {{"prob", chk.exact.prob}, {"prob_rational", chk.exact.prob_exact}, {"components", mixture_json(chk.exact.mixture)}}},
    };
  }
  return j;
}

BenchResult bench_result_from_json(const nlohmann::json& j) {
  BenchResult result;
  result.source = j.at("source").get<std::string>();
  for (const auto& r : j.at("rows")) {
    result.rows.push_back({parse_method(r.at("method").get<std::string>()), r.at("depth").get<std::size_t>(),
                           r.at("downsample").get<std::size_t>(), r.at("n").get<std::size_t>(),
                           r.at("mse").get<double>(), r.at("runtime_ms").get<double>()});
  }
  if (j.contains("decomposition_check")) {
    const auto& c = j.at("decomposition_check");
    auto& chk = result.decomposition_check;
    chk.pattern = PatternBits::parse(c.at("pattern").get<std::string>());
    chk.paper.prob = c.at("paper").at("prob").get<double>();
    chk.paper.mixture = mixture_from_json(c.at("paper").at("components"));
    chk.exact.prob = c.at("exact").at("prob").get<double>();
    chk.exact.prob_exact = c.at("exact").at("prob_rational").get<std::string>();
    chk.exact.mixture = mixture_from_json(c.at("exact").at("components"));
  }
  return result;
}

void emit_table(const BenchResult& result, TableFormat format, std::ostream& out) {
  if (result.rows.empty()) throw ContractError("nothing to emit: bench result has no rows");
  switch (format) {
    case TableFormat::csv: {
      out << "depth,method,downsample,mse,n,runtime_ms\n";
      char buf[64];
      for (const auto& r : result.rows) {
        std::snprintf(buf, sizeof buf, "%.17g", r.mse);
        out << r.depth << ',' << to_string(r.method) << ',' << r.downsample << ',' << buf << ',' << r.n_estimated
            << ',';
        std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
        out << buf << '\n';
      }
      break;
    }
    case TableFormat::json: out << to_json(result).dump(2) << '\n'; break;
    case TableFormat::markdown: emit_markdown(result, out); break;
  }
  if (!out) throw std::runtime_error("failed writing bench table");
}

void emit_table(const BenchResult& result, TableFormat format, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  emit_table(result, format, out);
}

}  // namespace ptree
