#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "ptree/patterns.hpp"

namespace ptree {

/// Parameters of the beta-normal density BN(alpha, beta, mu, sigma).
///
/// For integer alpha and beta this is the density of the alpha-th smallest of
/// alpha + beta - 1 i.i.d. N(mu, sigma^2) draws.
struct BetaNormalParams {
  double alpha = 1.0;
  double beta = 1.0;
  double mu = 0.0;
  double sigma = 1.0;

  friend bool operator==(const BetaNormalParams&, const BetaNormalParams&) = default;
};

struct MixtureComponent {
  double weight = 0.0;
  BetaNormalParams params;
};

/// Finite mixture of beta-normal components with weights summing to one.
struct PatternDistribution {
  std::vector<MixtureComponent> components;

  double pdf(double x) const;
  double total_weight() const;
};

/// Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), via log-gamma.
double beta_fn(double alpha, double beta);

/// Standard normal density and distribution function.
double normal_pdf(double z);
double normal_cdf(double z);

/// Beta-normal density at x. Throws DomainError on invalid parameters.
double beta_normal_pdf(double x, const BetaNormalParams& p);

void validate(const BetaNormalParams& p);
/// Checks nonnegative weights summing to one within `tol`.
void validate(const PatternDistribution& d, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Static patterns: x_i compared with each of the previous D samples.

/// Pr(static pattern) = B(alpha, beta) with alpha = #ones + 1, beta = #zeros + 1.
double static_pattern_prob(const PatternBits& p);
/// Single-component mixture BN(#ones + 1, #zeros + 1, mu, sigma).
PatternDistribution static_pattern_pdf(const PatternBits& p, double mu, double sigma);

// ---------------------------------------------------------------------------
// Dynamic patterns through the Psi recursion.
//
// psi(B, K) with depth(B) = depth(K) + 1 is the conditional probability that
// the older consecutive comparisons b2...bD hold given x_i and the static
// relation K of x_i against x_{i-2}...x_{i-D}, under the pairwise
// factorization used by the recursion. The mixture components are
// BN(alpha_K, beta_K) with alpha_K = sum(K) + b1 + 1, beta_K = D - b1 - sum(K) + 1.

double psi(const PatternBits& b, const PatternBits& k);
double psi_weighted(const PatternBits& b, const PatternBits& k);
BetaNormalParams psi_component(const PatternBits& b, const PatternBits& k, double mu, double sigma);

/// Mixture sum_K psi_w(B, K) BN(alpha_K, beta_K, mu, sigma). Components sharing
/// (alpha, beta) are merged; exact-zero weights are dropped. Depth one
/// delegates to the static result.
PatternDistribution dynamic_pattern_mixture(const PatternBits& b, double mu, double sigma);

/// sum_K psi(B, K) B(alpha_K, beta_K): the recursion's pattern probability.
double dynamic_pattern_prob_paper(const PatternBits& b);

// ---------------------------------------------------------------------------

enum class ProbabilityBackend { paper, exact };

ProbabilityBackend parse_backend(std::string_view name);
std::string_view to_string(ProbabilityBackend backend);

/// Dynamic pattern probability under the chosen backend.
double dynamic_pattern_prob(const PatternBits& b, ProbabilityBackend backend);
/// Dynamic pattern density under the chosen backend.
PatternDistribution dynamic_pattern_distribution(const PatternBits& b, double mu, double sigma,
                                                 ProbabilityBackend backend);

/// Pr(next move is up | context) = Pr(1.context) / (Pr(1.context) + Pr(0.context));
/// 1/2 for an empty context.
double up_probability(const PatternBits& context, ProbabilityBackend backend);

/// Inclusive uniform grid lo, ..., hi with `points` samples.
struct Grid {
  double lo = -4.0;
  double hi = 4.0;
  std::size_t points = 161;

  /// Parses "min:max:steps".
  static Grid parse(std::string_view text);
  std::vector<double> values() const;
};

std::vector<std::pair<double, double>> mixture_pdf_curve(const PatternDistribution& dist,
                                                         const Grid& grid);

}  // namespace ptree
