#include "ptree/exact_enumeration.hpp"

#include <numeric>
#include <vector>

#include "ptree/errors.hpp"

namespace ptree {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational operator+(const Rational& a, const Rational& b) {
  const auto g = std::gcd(a.den_, b.den_);
  const auto scale_a = b.den_ / g;
  return Rational(a.num_ * scale_a + b.num_ * (a.den_ / g), a.den_ * scale_a);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Operands stay far below 2^32 for the depths enumerated here.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

namespace {

// Assigns distinct ranks to window positions 0..D (oldest first), pruning as
// soon as a consecutive comparison disagrees with the pattern.
class RankOrderCounter {
 public:
  explicit RankOrderCounter(const PatternBits& b)
      : depth_(b.depth()), up_(depth_ + 1, 0), used_(depth_ + 2, false), last_rank_counts_(depth_ + 2, 0) {
    // up_[p] is the required relation between positions p and p-1.
    for (std::size_t p = 1; p <= depth_; ++p) up_[p] = static_cast<std::uint8_t>(b.bit(depth_ - p + 1));
  }

  void run() { place(0, 0); }
  const std::vector<std::uint64_t>& last_rank_counts() const { return last_rank_counts_; }

 private:
  void place(std::size_t pos, std::size_t prev_rank) {
    const std::size_t n = depth_ + 1;
    for (std::size_t r = 1; r <= n; ++r) {
      if (used_[r]) continue;
      if (pos > 0 && (r > prev_rank) != static_cast<bool>(up_[pos])) continue;
      if (pos == depth_) {
        ++last_rank_counts_[r];
        continue;
      }
      used_[r] = true;
      place(pos + 1, r);
      used_[r] = false;
    }
  }

  std::size_t depth_;
  std::vector<std::uint8_t> up_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> last_rank_counts_;
};

}  // namespace

ExactPatternLaw enumerate_exact(const PatternBits& b) {
  if (b.depth() < 1) throw ContractError("pattern depth must be at least 1");
  if (b.depth() > kMaxExactDepth)
    throw ResourceError("exact enumeration limited to depth " + std::to_string(kMaxExactDepth));

  RankOrderCounter counter(b);
  counter.run();

  ExactPatternLaw law;
  law.pattern = b;
  law.total = 1;
  for (std::uint64_t k = 2; k <= b.depth() + 1; ++k) law.total *= k;
  const auto& counts = counter.last_rank_counts();
  law.consistent = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  law.prob = Rational(law.consistent, law.total);
  for (std::size_t r = 1; r < counts.size(); ++r)
    if (counts[r] > 0) law.rank_weights[static_cast<int>(r)] = Rational(counts[r], law.consistent);
  return law;
}

PatternDistribution exact_pattern_mixture(const ExactPatternLaw& law, double mu, double sigma) {
  const int n = static_cast<int>(law.pattern.depth()) + 2;
  PatternDistribution d;
  for (auto it = law.rank_weights.rbegin(); it != law.rank_weights.rend(); ++it)
    d.components.push_back({it->second.value(), {double(it->first), double(n - it->first), mu, sigma}});
  validate(d, 1e-12);
  return d;
}

}  // namespace ptree
