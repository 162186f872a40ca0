// Drives the ptree executable end to end through the shell.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ptree/data.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
  if (!ok) ++failures;
}

int run(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("\"") + PTREE_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return status == 0 ? 0 : 1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "ptree_cli_tests";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto log = dir / "log.txt";
  const auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };

  const auto mg = dir / "mg.csv";
  check(run("generate --model mackey-glass --n 1500 --out " + q(mg), log) == 0, "generate mackey-glass");
  {
    ptree::MackeyGlassConfig cfg;
    cfg.n = 1500;
    check(ptree::series_fingerprint(ptree::load_csv(mg)) == ptree::series_fingerprint(ptree::mackey_glass(cfg)),
          "generated CSV matches the library series bit for bit");
  }

  const auto rw = dir / "rw.csv";
  check(run("generate --model random-walk --n 500 --seed 3 --up-prob 0.8 --out " + q(rw), log) == 0,
        "generate random-walk");
  check(ptree::load_csv(rw).size() == 500, "random-walk length");
  check(run("generate --model iid --n 50 --mu 2 --sigma 0.5 --out " + q(dir / "iid.csv"), log) == 0, "generate iid");
  check(run("generate --model lorenz --n 50 --out " + q(dir / "x.csv"), log) != 0, "unknown model rejected");

  const auto half = dir / "half.csv";
  check(run("resample --input " + q(mg) + " --factor 2 --out " + q(half), log) == 0, "resample");
  check(ptree::load_csv(half) == ptree::downsample(ptree::load_csv(mg), 2), "resample keeps every second sample");
  check(run("resample --input " + q(mg) + " --factor 0 --out " + q(half), log) != 0, "resample factor 0 rejected");

  const auto dens = dir / "f101.csv";
  check(run("decompose --pattern 101 --backend exact --grid -4:4:81 --out " + q(dens), log) == 0, "decompose exact");
  {
    const auto text = slurp(dens);
    check(text.starts_with("x,density\n"), "density CSV header");
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    check(lines == 82, "density CSV has one row per grid point");
    const auto side = nlohmann::json::parse(slurp(dir / "f101.json"));
    check(side.at("pattern") == "101", "sidecar pattern");
    check(side.at("prob_rational") == "5/24", "sidecar exact probability");
    check(side.at("components").size() == 3, "sidecar has three components");
  }
  check(run("decompose --pattern 101 --backend paper --out " + q(dens), log) == 0, "decompose paper");
  {
    const auto side = nlohmann::json::parse(slurp(dir / "f101.json"));
    check(std::abs(side.at("prob").get<double>() - 3.0 / 16.0) < 1e-12, "sidecar recursion probability");
    const auto& c = side.at("components");
    check(c.size() == 3 && c[0].at("alpha") == 4.0 && std::abs(c[0].at("weight").get<double>() - 3.0 / 9.0) < 1e-12,
          "sidecar leading component (3/9) BN(4,1)");
  }
  check(run("decompose --pattern 1x1 --out " + q(dens), log) != 0, "malformed pattern rejected");
  check(run("decompose --pattern 101 --grid 1:0:5 --out " + q(dens), log) != 0, "bad grid rejected");

  const auto report = dir / "pt.json";
  check(run("estimate --input " + q(mg) + " --method pt --depth 2 --verbose --out " + q(report), log) == 0,
        "estimate pt");
  {
    const auto j = nlohmann::json::parse(slurp(report));
    check(j.at("method") == "pt" && j.at("depth") == 2 && j.at("n") == 1500, "report header");
    check(j.at("n_estimated") == 1497 && j.at("per_step").size() == 1497, "report per-step records");
    const auto& d = j.at("decisions");
    check(d.at("up").get<int>() + d.at("down").get<int>() + d.at("fallback").get<int>() == 1497, "decision counts");
  }
  check(run("estimate --input " + q(mg) + " --method lp --order 3", log) == 0, "estimate lp to stdout");
  check(nlohmann::json::parse(slurp(log)).at("method") == "lp", "lp report on stdout");
  check(run("estimate --input " + q(rw) + " --method psf --order 2 --labels 4", log) == 0, "estimate psf");
  check(!nlohmann::json::parse(slurp(log)).contains("per_step"), "per-step records only with --verbose");
  check(run("estimate --input " + q(dir / "missing.csv") + " --method pt --depth 2", log) != 0, "missing input rejected");

  const auto table = dir / "bench.csv";
  check(run("bench --model csv:" + q(mg) + " --methods pt,lp --depths 1,2 --downsample 1,2 --format csv --out " +
                q(table),
            log) == 0,
        "bench csv");
  {
    const auto text = slurp(table);
    check(text.starts_with("depth,method,downsample,mse,n,runtime_ms\n"), "bench CSV header");
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    check(lines == 9, "bench CSV has one row per cell");
  }
  check(run("bench --model mackey-glass --n 400 --format json --out " + q(dir / "bench.json"), log) == 0, "bench json");
  {
    const auto j = nlohmann::json::parse(slurp(dir / "bench.json"));
    check(j.at("rows").size() == 15, "bench JSON has the default grid");
    check(j.at("decomposition_check").at("exact").at("prob_rational") == "5/24", "bench JSON records exact backend");
    check(std::abs(j.at("decomposition_check").at("paper").at("prob").get<double>() - 3.0 / 16.0) < 1e-12,
          "bench JSON records recursion backend");
  }
  check(run("bench --model mackey-glass --n 400 --methods pt --depths 1 --format markdown", log) == 0, "bench markdown");
  check(slurp(log).find("| Depth/Order | pt |") != std::string::npos, "markdown pivot");

  check(run("bench --model mackey-glass --n 8 --methods lp --depths 6 --format csv", log) != 0, "failing cell exits nonzero");
  check(slurp(log).find("method=lp depth=6") != std::string::npos, "diagnostic names the failed cell");

  fs::remove_all(dir);
  std::cout << (failures == 0 ? "all CLI checks passed" : "CLI checks failed") << '\n';
  return failures == 0 ? 0 : 1;
}
