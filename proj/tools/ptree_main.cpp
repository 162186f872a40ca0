// Command-line front end: generate, resample, decompose, estimate, bench.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptree/baselines.hpp"
#include "ptree/bench.hpp"
#include "ptree/data.hpp"
#include "ptree/decomposition.hpp"
#include "ptree/errors.hpp"
#include "ptree/exact_enumeration.hpp"
#include "ptree/pattern_tree.hpp"

namespace fs = std::filesystem;
using namespace ptree;

namespace {

struct GenerateArgs {
  std::string model = "mackey-glass";
  std::size_t n = 10000;
  MackeyGlassConfig mg;
  double mu = 0.0;
  double sigma = 1.0;
  std::uint64_t seed = 1;
  std::optional<double> up_prob;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  TimeSeries s;
  if (a.model == "mackey-glass") {
    auto cfg = a.mg;
    cfg.n = a.n;
    s = mackey_glass(cfg);
  } else if (a.model == "random-walk") {
    s = random_walk(RandomWalkConfig{a.n, a.mu, a.sigma, a.seed, a.up_prob});
  } else if (a.model == "iid") {
    s = iid_gaussian(a.n, a.mu, a.sigma, a.seed);
  } else {
    throw ContractError("unknown model '" + a.model + "'");
  }
  save_csv(s, a.out);
  return 0;
}

int run_resample(const std::string& input, std::size_t factor, const std::string& out) {
  save_csv(downsample(load_csv(input), factor), out);
  return 0;
}

struct DecomposeArgs {
  std::string pattern;
  double mu = 0.0;
  double sigma = 1.0;
  std::string backend = "paper";
  std::string grid = "-4:4:161";
  std::string out;
};

int run_decompose(const DecomposeArgs& a) {
  const auto bits = PatternBits::parse(a.pattern);
  const auto backend = parse_backend(a.backend);
  const auto grid = Grid::parse(a.grid);
  const auto dist = dynamic_pattern_distribution(bits, a.mu, a.sigma, backend);

  std::ofstream csv(a.out);
  if (!csv) throw std::runtime_error("cannot write " + a.out);
  csv << "x,density\n";
  char buf[64];
  for (const auto& [x, y] : mixture_pdf_curve(dist, grid)) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, y);
    csv << buf;
  }

  nlohmann::json side{{"pattern", bits.str()}, {"backend", to_string(backend)}, {"mu", a.mu}, {"sigma", a.sigma}};
  side["prob"] = dynamic_pattern_prob(bits, backend);
  if (backend == ProbabilityBackend::exact) side["prob_rational"] = enumerate_exact(bits).prob.str();
  auto comps = nlohmann::json::array();
  for (const auto& c : dist.components)
    comps.push_back({{"weight", c.weight}, {"alpha", c.params.alpha}, {"beta", c.params.beta}});
  side["components"] = comps;
  fs::path sidecar(a.out);
  sidecar.replace_extension(".json");
  if (sidecar == fs::path(a.out)) sidecar += ".sidecar.json";
  std::ofstream js(sidecar);
  if (!js) throw std::runtime_error("cannot write " + sidecar.string());
  js << side.dump(2) << '\n';
  return 0;
}

struct EstimateArgs {
  std::string input;
  std::string method = "pt";
  std::size_t depth = 0;
  std::size_t labels = 5;
  std::string out;
  bool verbose = false;
};

int run_estimate(const EstimateArgs& a) {
  if (a.depth == 0) throw ContractError("estimate needs --depth (pt) or --order (lp, psf)");
  const auto series = load_csv(a.input);
  BenchConfig cfg;
  cfg.psf_labels = a.labels;
  const auto report = run_method(parse_method(a.method), series, a.depth, cfg);
  const auto text = to_json(report, a.verbose).dump(2);
  if (a.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << text << '\n';
  }
  return 0;
}

struct BenchArgs {
  std::string model = "mackey-glass";
  std::optional<std::size_t> n;
  std::vector<std::string> methods{"pt", "lp", "psf"};
  std::vector<std::size_t> depths{1, 2, 3, 4, 5};
  std::vector<std::size_t> downsample{1};
  std::size_t labels = 5;
  std::string format = "markdown";
  std::string out;
};

int run_bench_cmd(const BenchArgs& a) {
  BenchConfig cfg;
  cfg.input = DataSource::parse(a.model);
  if (a.n) {
    cfg.input.mackey_glass.n = *a.n;
    cfg.input.random_walk.n = *a.n;
  }
  cfg.methods.clear();
  for (const auto& m : a.methods) cfg.methods.push_back(parse_method(m));
  cfg.depths = a.depths;
  cfg.downsample_factors = a.downsample;
  cfg.psf_labels = a.labels;
  const auto format = parse_table_format(a.format);
  const auto result = run_bench(cfg);
  if (a.out.empty())
    emit_table(result, format, std::cout);
  else
    emit_table(result, format, fs::path(a.out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-tree time-series toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a synthetic series as CSV");
  g->add_option("--model", gen.model, "mackey-glass, random-walk or iid")
      ->check(CLI::IsMember({"mackey-glass", "random-walk", "iid"}));
  g->add_option("--n", gen.n, "number of samples");
  g->add_option("--a", gen.mg.a, "Mackey-Glass decay rate");
  g->add_option("--b", gen.mg.b, "Mackey-Glass feedback gain");
  g->add_option("--tau", gen.mg.tau, "Mackey-Glass delay");
  g->add_option("--dt", gen.mg.dt, "Euler step");
  g->add_option("--burn-in", gen.mg.burn_in, "integration steps discarded");
  g->add_option("--sample-every", gen.mg.sample_every, "integration steps per emitted sample");
  g->add_option("--x0", gen.mg.x0, "initial value and history");
  g->add_option("--mu", gen.mu, "start value (random-walk) or mean (iid)");
  g->add_option("--sigma", gen.sigma, "step or sample standard deviation");
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--up-prob", gen.up_prob, "random-walk probability of a rising step");
  g->add_option("--out", gen.out, "output CSV")->required();

  std::string rs_in, rs_out;
  std::size_t rs_factor = 1;
  auto* r = app.add_subcommand("resample", "Keep every k-th sample");
  r->add_option("--input", rs_in)->required();
  r->add_option("--factor", rs_factor)->required();
  r->add_option("--out", rs_out)->required();

  DecomposeArgs dec;
  auto* d = app.add_subcommand("decompose", "Beta-normal mixture of a dynamic pattern");
  d->add_option("--pattern", dec.pattern, "bits, most recent first")->required();
  d->add_option("--mu", dec.mu);
  d->add_option("--sigma", dec.sigma);
  d->add_option("--backend", dec.backend)->check(CLI::IsMember({"paper", "exact"}));
  d->add_option("--grid", dec.grid, "min:max:steps");
  d->add_option("--out", dec.out, "density CSV; the JSON sidecar sits next to it")->required();

  EstimateArgs est;
  auto* e = app.add_subcommand("estimate", "One-step-ahead estimation over a CSV series");
  e->add_option("--input", est.input)->required();
  e->add_option("--method", est.method)->check(CLI::IsMember({"pt", "lp", "psf"}));
  auto* depth_opt = e->add_option("--depth", est.depth, "pattern-tree depth");
  e->add_option("--order", est.depth, "LP order or PSF window")->excludes(depth_opt);
  e->add_option("--labels", est.labels, "PSF label count");
  e->add_option("--out", est.out, "report JSON (stdout when omitted)");
  e->add_flag("--verbose", est.verbose, "include per-step records");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "MSE grid over methods, depths and downsampling factors");
  b->add_option("--model", bench.model, "mackey-glass, random-walk or csv:<path>");
  b->add_option("--n", bench.n, "series length for generated models");
  b->add_option("--methods", bench.methods)->delimiter(',');
  b->add_option("--depths", bench.depths)->delimiter(',');
  b->add_option("--downsample", bench.downsample)->delimiter(',');
  b->add_option("--labels", bench.labels, "PSF label count");
  b->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json", "markdown", "md"}));
  b->add_option("--out", bench.out, "output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*g) return run_generate(gen);
    if (*r) return run_resample(rs_in, rs_factor, rs_out);
    if (*d) return run_decompose(dec);
    if (*e) return run_estimate(est);
    if (*b) return run_bench_cmd(bench);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}
