#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>

#include "ptree/data.hpp"
#include "ptree/errors.hpp"

using namespace ptree;

TEST_CASE("mackey-glass fixed point at zero") {
  MackeyGlassConfig cfg;
  cfg.x0 = 0.0;
  cfg.n = 500;
  const auto s = mackey_glass(cfg);
  CHECK(s.size() == 500);
  CHECK(std::all_of(s.begin(), s.end(), [](double v) { return v == 0.0; }));
}

TEST_CASE("mackey-glass default is bounded and chaotic") {
  const auto s = mackey_glass(MackeyGlassConfig{});
  REQUIRE(s.size() == 10000);
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  CHECK(*lo > 0.2);
  CHECK(*hi < 1.4);
  CHECK(*hi - *lo > 0.5);
  std::size_t ups = 0;
  for (std::size_t i = 1; i < s.size(); ++i) ups += s[i] > s[i - 1];
  CHECK(ups > 3000);
  CHECK(ups < 7000);
  CHECK(series_fingerprint(s) == 0x73a111aab3172262ULL);
}

TEST_CASE("mackey-glass emission schedule") {
  MackeyGlassConfig fine;
  fine.n = 101;
  fine.sample_every = 1;
  fine.burn_in = 0;
  MackeyGlassConfig coarse = fine;
  coarse.n = 11;
  coarse.sample_every = 10;
  const auto a = mackey_glass(fine);
  const auto b = mackey_glass(coarse);
  CHECK(a.front() == 1.2);
  for (std::size_t j = 0; j < b.size(); ++j) CHECK(b[j] == a[10 * j]);
}

TEST_CASE("paper-stated parameters decay to zero") {
  auto cfg = MackeyGlassConfig::paper_stated();
  cfg.n = 2000;
  const auto s = mackey_glass(cfg);
  for (std::size_t i = 1; i < s.size(); ++i) REQUIRE(s[i] <= s[i - 1]);
  CHECK(s.back() < 1e-6);
  CHECK(s.back() >= 0.0);
}

TEST_CASE("mackey-glass rejects bad configurations") {
  MackeyGlassConfig cfg;
  cfg.tau = 17.05;
  CHECK_THROWS_AS(mackey_glass(cfg), ContractError);
  cfg = {};
  cfg.dt = 0.0;
  CHECK_THROWS_AS(mackey_glass(cfg), ContractError);
  cfg = {};
  cfg.n = 0;
  CHECK_THROWS_AS(mackey_glass(cfg), ContractError);
  cfg = {};
  cfg.sample_every = 0;
  CHECK_THROWS_AS(mackey_glass(cfg), ContractError);
  cfg = {};
  cfg.dt = 30.0;
  cfg.tau = 30.0;
  cfg.a = 5.0;
  CHECK_THROWS_AS(mackey_glass(cfg), NumericError);
}

TEST_CASE("random walk") {
  RandomWalkConfig cfg{1000, 4.0, 1e-9, 3, {}};
  const auto flat = random_walk(cfg);
  CHECK(flat.front() == 4.0);
  for (double v : flat) CHECK(v == doctest::Approx(4.0).epsilon(1e-6));

  RandomWalkConfig big{200001, 0.0, 2.0, 8, {}};
  const auto s = random_walk(big);
  CHECK(s == random_walk(big));
  big.seed = 9;
  CHECK(s != random_walk(big));
  double sum = 0.0, sq = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double d = s[i] - s[i - 1];
    sum += d;
    sq += d * d;
  }
  const double m = double(s.size() - 1);
  const double var = sq / m - (sum / m) * (sum / m);
  CHECK(var == doctest::Approx(4.0).epsilon(0.01));

  RandomWalkConfig biased{20001, 0.0, 1.0, 5, 0.8};
  const auto b = random_walk(biased);
  std::size_t ups = 0;
  for (std::size_t i = 1; i < b.size(); ++i) ups += b[i] > b[i - 1];
  CHECK(double(ups) / 20000.0 == doctest::Approx(0.8).epsilon(0.02));

  CHECK_THROWS_AS(random_walk(RandomWalkConfig{10, 0.0, 0.0, 1, {}}), ContractError);
  CHECK_THROWS_AS(random_walk(RandomWalkConfig{10, 0.0, 1.0, 1, 1.5}), ContractError);
}

TEST_CASE("iid gaussian mean within the CLT bound") {
  const std::size_t n = 100000;
  const auto s = iid_gaussian(n, 3.0, 2.0, 12);
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / double(n);
  CHECK(std::abs(mean - 3.0) < 4.0 * 2.0 / std::sqrt(double(n)));
}

TEST_CASE("downsample") {
  const TimeSeries s{0, 1, 2, 3, 4, 5, 6};
  CHECK(downsample(s, 1) == s);
  CHECK(downsample(s, 2) == TimeSeries{0, 2, 4, 6});
  CHECK(downsample(s, 3) == TimeSeries{0, 3, 6});
  CHECK(downsample(s, 10) == TimeSeries{0});
  CHECK(downsample(downsample(s, 2), 3) == downsample(s, 6));
  CHECK(downsample(TimeSeries{}, 4).empty());
  CHECK_THROWS_AS(downsample(s, 0), ContractError);
}

TEST_CASE("csv parsing") {
  std::istringstream with_header("value\n1.5\n-2\n# note\n\n3e2\n");
  CHECK(read_csv(with_header) == TimeSeries{1.5, -2.0, 300.0});
  std::istringstream bare("\xEF\xBB\xBF" "0.25\r\n+4\n");
  CHECK(read_csv(bare) == TimeSeries{0.25, 4.0});

  std::istringstream bad("value\n1\n2\nabc\n");
  try {
    read_csv(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  std::istringstream inf("1\ninf\n");
  CHECK_THROWS_AS(read_csv(inf), ParseError);
  std::istringstream empty("value\n# nothing\n");
  CHECK_THROWS_AS(read_csv(empty), ContractError);
}

TEST_CASE("csv round trip is exact") {
  const auto s = iid_gaussian(500, 0.0, 1e3, 2);
  std::stringstream buf;
  write_csv(s, buf);
  CHECK(read_csv(buf) == s);

  const auto path = std::filesystem::temp_directory_path() / "ptree_roundtrip.csv";
  const auto mg = mackey_glass(MackeyGlassConfig{});
  save_csv(mg, path);
  CHECK(series_fingerprint(load_csv(path)) == series_fingerprint(mg));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_csv(path), ContractError);
}

TEST_CASE("fingerprint distinguishes series") {
  CHECK(series_fingerprint(TimeSeries{}) == 0xcbf29ce484222325ULL);
  CHECK(series_fingerprint(TimeSeries{1.0, 2.0}) != series_fingerprint(TimeSeries{2.0, 1.0}));
  CHECK(series_fingerprint(TimeSeries{0.0}) != series_fingerprint(TimeSeries{-0.0}));
}
