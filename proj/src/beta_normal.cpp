#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "ptree/decomposition.hpp"
#include "ptree/errors.hpp"

namespace ptree {

double beta_fn(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("beta function requires positive finite arguments");
  return std::exp(std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta));
}

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

void validate(const BetaNormalParams& p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
    throw DomainError("beta-normal alpha must be positive and finite");
  if (!(p.beta > 0.0) || !std::isfinite(p.beta))
    throw DomainError("beta-normal beta must be positive and finite");
  if (!std::isfinite(p.mu)) throw DomainError("beta-normal mu must be finite");
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma))
    throw DomainError("beta-normal sigma must be positive and finite");
}

double beta_normal_pdf(double x, const BetaNormalParams& p) {
  validate(p);
  const double z = (x - p.mu) / p.sigma;
  // Lower and upper tails from erfc separately so neither loses precision.
  const double lower = 0.5 * std::erfc(-z / std::numbers::sqrt2);
  const double upper = 0.5 * std::erfc(z / std::numbers::sqrt2);
  double log_density = -0.5 * z * z - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(p.sigma) -
                       (std::lgamma(p.alpha) + std::lgamma(p.beta) - std::lgamma(p.alpha + p.beta));
  if (p.alpha != 1.0) {
    if (lower == 0.0) return 0.0;
    log_density += (p.alpha - 1.0) * std::log(lower);
  }
  if (p.beta != 1.0) {
    if (upper == 0.0) return 0.0;
    log_density += (p.beta - 1.0) * std::log(upper);
  }
  return std::exp(log_density);
}

double PatternDistribution::pdf(double x) const {
  double sum = 0.0;
  for (const auto& c : components) sum += c.weight * beta_normal_pdf(x, c.params);
  return sum;
}

double PatternDistribution::total_weight() const {
  double sum = 0.0;
  for (const auto& c : components) sum += c.weight;
  return sum;
}

void validate(const PatternDistribution& d, double tol) {
  if (d.components.empty()) throw ContractError("mixture has no components");
  for (const auto& c : d.components) {
    if (!(c.weight >= 0.0)) throw ContractError("mixture weight is negative");
    validate(c.params);
  }
  if (std::abs(d.total_weight() - 1.0) > tol) throw ContractError("mixture weights do not sum to one");
}

Grid Grid::parse(std::string_view text) {
  auto next = [&text](std::string_view& field) {
    const auto colon = text.find(':');
    field = text.substr(0, colon);
    text = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    return colon != std::string_view::npos;
  };
  auto to_double = [](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ParseError("invalid grid bound '" + std::string(s) + "'", 0);
    return v;
  };
  const std::string original(text);
  std::string_view lo, hi, steps;
  if (!next(lo) || !next(hi)) throw ParseError("grid must be min:max:steps, got '" + original + "'", 0);
  next(steps);
  if (!text.empty()) throw ParseError("grid must be min:max:steps, got '" + original + "'", 0);

  Grid g;
  g.lo = to_double(lo);
  g.hi = to_double(hi);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), n);
  if (ec != std::errc{} || ptr != steps.data() + steps.size())
    throw ParseError("invalid grid step count '" + std::string(steps) + "'", 0);
  g.points = n;
  return g;
}

std::vector<double> Grid::values() const {
  if (points < 2) throw ContractError("grid needs at least two points");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi >= lo))
    throw ContractError("grid bounds must be finite with min <= max");
  std::vector<double> xs(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) xs[k] = lo + step * static_cast<double>(k);
  xs.back() = hi;
  return xs;
}

std::vector<std::pair<double, double>> mixture_pdf_curve(const PatternDistribution& dist,
                                                         const Grid& grid) {
  validate(dist, 1e-9);
  std::vector<std::pair<double, double>> curve;
  for (double x : grid.values()) curve.emplace_back(x, dist.pdf(x));
  return curve;
}

}  // namespace ptree
