#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ptree/decomposition.hpp"
#include "ptree/errors.hpp"
#include "ptree/exact_enumeration.hpp"

namespace ptree {

namespace {

constexpr std::size_t kMaxMixtureDepth = 25;

void require_pattern(const PatternBits& p) {
  if (p.depth() < 1) throw ContractError("pattern depth must be at least 1");
}

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive and finite");
}

// Depth-two starting values. Only the b1 = 1 rows are listed explicitly in the
// literature; the b1 = 0 rows follow by complement symmetry and agree with the
// eight-row conditional table (0, 1 or 1/2).
double psi_depth_two(int b1, int b2, int k1) {
  if (b1 == k1) return 0.5;  // x_{i-1} and x_{i-2} on the same side of x_i
  return b2 == k1 ? 1.0 : 0.0;
}

double psi_unchecked(const PatternBits& b, const PatternBits& k) {
  double value = psi_depth_two(b.bit(1), b.bit(2), k.bit(1));
  for (std::size_t d = 3; d <= b.depth() && value != 0.0; ++d) {
    const int k_prev = k.bit(d - 2);
    const int k_last = k.bit(d - 1);
    const int b_d = b.bit(d);
    const double xnor = k_prev == k_last ? 1.0 : 0.0;
    const double xr = 1.0 - xnor;
    value *= 0.5 * xnor + xr * (k_last * b_d + k_prev * (1 - b_d));
  }
  return value;
}

void require_psi_args(const PatternBits& b, const PatternBits& k) {
  if (b.depth() < 2) throw ContractError("psi needs a pattern of depth at least 2");
  if (k.depth() + 1 != b.depth())
    throw ContractError("psi needs depth(K) = depth(B) - 1, got " + std::to_string(b.depth()) +
                        " and " + std::to_string(k.depth()));
  if (b.depth() > kMaxMixtureDepth) throw ResourceError("pattern too deep for the psi mixture");
}

std::pair<int, int> component_shape(const PatternBits& b, const PatternBits& k) {
  const int depth = static_cast<int>(b.depth());
  const int sk = k.ones_count();
  const int b1 = b.bit(1);
  return {sk + b1 + 1, depth - b1 - sk + 1};
}

// Un-normalized mixture terms psi(B, K) B(alpha_K, beta_K), one per K.
std::vector<double> psi_terms(const PatternBits& b) {
  const std::size_t kdepth = b.depth() - 1;
  std::vector<double> terms(std::size_t{1} << kdepth);
  for (std::uint64_t v = 0; v < terms.size(); ++v) {
    const auto k = PatternBits::from_index(v, kdepth);
    const double ps = psi_unchecked(b, k);
    if (ps == 0.0) continue;
    const auto [a, bb] = component_shape(b, k);
    terms[v] = ps * beta_fn(a, bb);
  }
  return terms;
}

}  // namespace

double static_pattern_prob(const PatternBits& p) {
  require_pattern(p);
  const int ones = p.ones_count();
  const int depth = static_cast<int>(p.depth());
  return beta_fn(ones + 1, depth - ones + 1);
}

PatternDistribution static_pattern_pdf(const PatternBits& p, double mu, double sigma) {
  require_pattern(p);
  require_sigma(sigma);
  const int ones = p.ones_count();
  const int depth = static_cast<int>(p.depth());
  PatternDistribution d;
  d.components.push_back({1.0, {double(ones + 1), double(depth - ones + 1), mu, sigma}});
  return d;
}

double psi(const PatternBits& b, const PatternBits& k) {
  require_psi_args(b, k);
  return psi_unchecked(b, k);
}

BetaNormalParams psi_component(const PatternBits& b, const PatternBits& k, double mu, double sigma) {
  require_psi_args(b, k);
  const auto [a, bb] = component_shape(b, k);
  return {double(a), double(bb), mu, sigma};
}

double psi_weighted(const PatternBits& b, const PatternBits& k) {
  require_psi_args(b, k);
  const auto terms = psi_terms(b);
  double denom = 0.0;
  for (double t : terms) denom += t;
  if (!(denom > 0.0)) throw NumericError("psi mixture normalizer is zero for pattern " + b.str());
  return terms[k.index()] / denom;
}

double dynamic_pattern_prob_paper(const PatternBits& b) {
  require_pattern(b);
  if (b.depth() == 1) return static_pattern_prob(b);
  if (b.depth() > kMaxMixtureDepth) throw ResourceError("pattern too deep for the psi mixture");
  double sum = 0.0;
  for (double t : psi_terms(b)) sum += t;
  return sum;
}

PatternDistribution dynamic_pattern_mixture(const PatternBits& b, double mu, double sigma) {
  require_pattern(b);
  require_sigma(sigma);
  if (b.depth() == 1) return static_pattern_pdf(b, mu, sigma);
  if (b.depth() > kMaxMixtureDepth) throw ResourceError("pattern too deep for the psi mixture");

  const auto terms = psi_terms(b);
  double denom = 0.0;
  for (double t : terms) denom += t;
  if (!(denom > 0.0)) throw NumericError("psi mixture normalizer is zero for pattern " + b.str());

  // Merge K sharing the same shape; keyed by alpha descending.
  std::map<int, double, std::greater<>> by_alpha;
  const std::size_t kdepth = b.depth() - 1;
  for (std::uint64_t v = 0; v < terms.size(); ++v) {
    if (terms[v] == 0.0) continue;
    const auto [a, bb] = component_shape(b, PatternBits::from_index(v, kdepth));
    by_alpha[a] += terms[v] / denom;
  }
  const int n = static_cast<int>(b.depth()) + 2;
  PatternDistribution d;
  for (const auto& [a, w] : by_alpha) d.components.push_back({w, {double(a), double(n - a), mu, sigma}});
  return d;
}

ProbabilityBackend parse_backend(std::string_view name) {
  if (name == "paper") return ProbabilityBackend::paper;
  if (name == "exact") return ProbabilityBackend::exact;
  throw ParseError("unknown probability backend '" + std::string(name) + "'", 0);
}

std::string_view to_string(ProbabilityBackend backend) {
  return backend == ProbabilityBackend::paper ? "paper" : "exact";
}

double dynamic_pattern_prob(const PatternBits& b, ProbabilityBackend backend) {
  if (backend == ProbabilityBackend::paper) return dynamic_pattern_prob_paper(b);
  require_pattern(b);
  return enumerate_exact(b).prob.value();
}

PatternDistribution dynamic_pattern_distribution(const PatternBits& b, double mu, double sigma,
                                                 ProbabilityBackend backend) {
  if (backend == ProbabilityBackend::paper) return dynamic_pattern_mixture(b, mu, sigma);
  require_pattern(b);
  return exact_pattern_mixture(enumerate_exact(b), mu, sigma);
}

double up_probability(const PatternBits& context, ProbabilityBackend backend) {
  if (context.empty()) return 0.5;
  // Pr(context) taken as the sum of its two extensions: identical for the exact
  // law, and keeps the recursion backend inside (0, 1) where its extensions do
  // not add up to the context probability.
  const double up = dynamic_pattern_prob(context.prepend(1), backend);
  const double down = dynamic_pattern_prob(context.prepend(0), backend);
  return up / (up + down);
}

}  // namespace ptree
