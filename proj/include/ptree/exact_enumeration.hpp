#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "ptree/decomposition.hpp"
#include "ptree/patterns.hpp"

namespace ptree {

/// Nonnegative rational number kept in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Ground truth for a dynamic pattern over i.i.d. continuous samples.
struct ExactPatternLaw {
  PatternBits pattern;
  std::uint64_t consistent = 0;    // rank orders of the D+1 window matching the pattern
  std::uint64_t total = 0;         // (D+1)!
  Rational prob;                   // consistent / total
  std::map<int, Rational> rank_weights;  // rank of x_i (1 = smallest) -> conditional probability
};

inline constexpr std::size_t kMaxExactDepth = 10;

/// Enumerates every rank order of x_{i-D}...x_i, keeping those whose
/// consecutive comparisons reproduce `b`, and tallies the rank of x_i.
/// Throws ResourceError for depth above kMaxExactDepth.
ExactPatternLaw enumerate_exact(const PatternBits& b);

/// Rank r of x_i among D+1 samples maps to BN(r, D + 2 - r, mu, sigma).
PatternDistribution exact_pattern_mixture(const ExactPatternLaw& law, double mu, double sigma);

}  // namespace ptree
