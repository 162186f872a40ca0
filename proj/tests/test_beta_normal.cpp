#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ptree/decomposition.hpp"
#include "ptree/errors.hpp"

using namespace ptree;

TEST_CASE("beta_fn small integer values") {
  CHECK(beta_fn(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(4, 1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(beta_fn(3, 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("beta_fn matches factorials to 1e-12 relative for arguments up to 50") {
  for (int a = 1; a <= 50; ++a)
    for (int b = 1; b <= 50; ++b) {
      const double expected = oracle::beta_int(a, b);
      REQUIRE(std::abs(beta_fn(a, b) - expected) <= 1e-12 * expected);
    }
  // Non-integer arguments against Boost.
  for (double a : {0.3, 1.7, 12.25, 49.5})
    for (double b : {0.6, 2.5, 33.3}) {
      const double expected = boost::math::beta(a, b);
      CHECK(std::abs(beta_fn(a, b) - expected) <= 1e-12 * expected);
    }
}

TEST_CASE("beta_fn domain errors") {
  CHECK_THROWS_AS(beta_fn(0, 1), DomainError);
  CHECK_THROWS_AS(beta_fn(1, -2), DomainError);
  CHECK_THROWS_AS(beta_fn(NAN, 1), DomainError);
}

TEST_CASE("normal_cdf accuracy") {
  // Reference values of Phi.
  CHECK(std::abs(normal_cdf(0.0) - 0.5) < 1e-16);
  CHECK(std::abs(normal_cdf(1.0) - 0.8413447460685429) < 1e-15);
  CHECK(std::abs(normal_cdf(-1.96) - 0.024997895148220435) < 1e-15);
  CHECK(std::abs(normal_cdf(-8.0) - 6.220960574271785e-16) < 1e-24);
  CHECK(std::abs(normal_cdf(5.0) - 0.9999997133484281) < 1e-15);
}

TEST_CASE("beta_normal_pdf closed forms") {
  const double phi0 = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  CHECK(beta_normal_pdf(0, {1, 1, 0, 1}) == doctest::Approx(phi0).epsilon(1e-14));
  CHECK(beta_normal_pdf(0, {2, 1, 0, 1}) == doctest::Approx(phi0).epsilon(1e-14));
  // BN(1,1,mu,sigma) is the N(mu, sigma^2) density.
  for (double x : {-3.0, -0.5, 0.7, 2.2}) {
    const double z = (x - 1.5) / 2.0;
    CHECK(beta_normal_pdf(x, {1, 1, 1.5, 2.0}) == doctest::Approx(std::exp(-0.5 * z * z) * phi0 / 2.0).epsilon(1e-13));
  }
  // BN(2,1) = 2 Phi phi.
  CHECK(beta_normal_pdf(0.8, {2, 1, 0, 1}) ==
        doctest::Approx(2 * 0.7881446014166034 * std::exp(-0.32) * phi0).epsilon(1e-13));
}

TEST_CASE("beta_normal_pdf integrates to one") {
  const double mass = oracle::integrate([](double x) { return beta_normal_pdf(x, {4, 1, 0, 1}); }, -8, 8);
  CHECK(std::abs(mass - 1.0) < 1e-8);
  for (auto [a, b] : {std::pair{1.0, 7.0}, {3.0, 3.0}, {2.5, 0.5}, {11.0, 1.0}}) {
    const BetaNormalParams p{a, b, -1.0, 0.5};
    const double m = oracle::integrate([&](double x) { return beta_normal_pdf(x, p); }, -1.0 - 6.0, -1.0 + 6.0);
    CHECK(std::abs(m - 1.0) < 1e-7);
  }
}

TEST_CASE("beta_normal_pdf rejects invalid parameters and stays finite in the tails") {
  CHECK_THROWS_AS(beta_normal_pdf(0, {0, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(beta_normal_pdf(0, {1, 1, 0, 0}), DomainError);
  CHECK_THROWS_AS(beta_normal_pdf(0, {1, 1, INFINITY, 1}), DomainError);
  for (double x : {-40.0, -8.0, 8.0, 40.0}) {
    const double v = beta_normal_pdf(x, {5, 3, 0, 1});
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
  }
}

TEST_CASE("mixture_pdf_curve") {
  PatternDistribution normal{{{1.0, {1, 1, 0, 1}}}};
  const auto curve = mixture_pdf_curve(normal, Grid{-1, 1, 3});
  REQUIRE(curve.size() == 3);
  const double phi0 = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  CHECK(curve[0].first == -1.0);
  CHECK(curve[0].second == doctest::Approx(phi0 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(curve[1].second == doctest::Approx(phi0).epsilon(1e-14));
  CHECK(curve[2].second == doctest::Approx(phi0 * std::exp(-0.5)).epsilon(1e-14));

  // A degenerate-width grid evaluates the density at that point.
  const auto point = mixture_pdf_curve(normal, Grid{0.25, 0.25, 2});
  CHECK(point[0].second == doctest::Approx(normal.pdf(0.25)).epsilon(1e-15));
  CHECK(point[1].second == doctest::Approx(normal.pdf(0.25)).epsilon(1e-15));

  CHECK_THROWS_AS(mixture_pdf_curve(normal, Grid{0, 1, 1}), ContractError);
  CHECK_THROWS_AS(mixture_pdf_curve(normal, Grid{0, NAN, 5}), ContractError);
}

TEST_CASE("Grid parsing") {
  const auto g = Grid::parse("-4:4:161");
  CHECK(g.lo == -4.0);
  CHECK(g.hi == 4.0);
  CHECK(g.points == 161);
  const auto xs = g.values();
  CHECK(xs.front() == -4.0);
  CHECK(xs.back() == 4.0);
  CHECK(xs[80] == doctest::Approx(0.0));
  CHECK_THROWS_AS(Grid::parse("1:2"), ParseError);
  CHECK_THROWS_AS(Grid::parse("a:2:3"), ParseError);
  CHECK_THROWS_AS(Grid::parse("0:1:3:4"), ParseError);
}
