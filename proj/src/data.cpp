#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "ptree/data.hpp"
#include "ptree/errors.hpp"

namespace ptree {

MackeyGlassConfig MackeyGlassConfig::paper_stated() {
  MackeyGlassConfig cfg;
  cfg.a = 0.2;
  cfg.b = 0.1;
  return cfg;
}

TimeSeries mackey_glass(const MackeyGlassConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ContractError("Mackey-Glass dt must be positive");
  if (!(cfg.tau > 0.0) || !std::isfinite(cfg.tau)) throw ContractError("Mackey-Glass tau must be positive");
  if (!(cfg.a > 0.0) || !(cfg.b > 0.0)) throw ContractError("Mackey-Glass a and b must be positive");
  if (cfg.n < 1) throw ContractError("Mackey-Glass needs n >= 1");
  if (cfg.sample_every < 1) throw ContractError("Mackey-Glass sample_every must be at least 1");
  if (!std::isfinite(cfg.x0)) throw ContractError("Mackey-Glass x0 must be finite");
  const double ratio = cfg.tau / cfg.dt;
  const double lag_rounded = std::round(ratio);
  if (lag_rounded < 1.0 || std::abs(ratio - lag_rounded) > 1e-9 * ratio)
    throw ContractError("Mackey-Glass tau/dt must be a positive integer, got " + std::to_string(ratio));
  const auto lag = static_cast<std::size_t>(lag_rounded);

  const std::size_t steps = cfg.burn_in + (cfg.n - 1) * cfg.sample_every + 1;
  TimeSeries x(steps);
  x[0] = cfg.x0;
  for (std::size_t k = 0; k + 1 < steps; ++k) {
    const double delayed = k >= lag ? x[k - lag] : cfg.x0;
    const double feedback = cfg.b * delayed / (1.0 + std::pow(delayed, 10.0));
    x[k + 1] = x[k] + cfg.dt * (-cfg.a * x[k] + feedback);
    if (!std::isfinite(x[k + 1]) || std::abs(x[k + 1]) > 1e6)
      throw NumericError("Mackey-Glass integration diverged at step " + std::to_string(k + 1));
  }
  TimeSeries out(cfg.n);
  for (std::size_t j = 0; j < cfg.n; ++j) out[j] = x[cfg.burn_in + j * cfg.sample_every];
  return out;
}

TimeSeries random_walk(const RandomWalkConfig& cfg) {
  if (!(cfg.sigma > 0.0)) throw ContractError("random walk sigma must be positive");
  if (cfg.up_probability && !(*cfg.up_probability >= 0.0 && *cfg.up_probability <= 1.0))
    throw ContractError("up probability must lie in [0, 1]");
  if (cfg.n < 1) return {};
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> step(0.0, cfg.sigma);
  std::bernoulli_distribution up(cfg.up_probability.value_or(0.5));
  TimeSeries x(cfg.n);
  x[0] = cfg.mu;
  for (std::size_t i = 1; i < cfg.n; ++i) {
    double d = step(rng);
    if (cfg.up_probability) d = up(rng) ? std::abs(d) : -std::abs(d);
    x[i] = x[i - 1] + d;
  }
  return x;
}

TimeSeries iid_gaussian(std::size_t n, double mu, double sigma, std::uint64_t seed) {
  if (!(sigma > 0.0)) throw ContractError("sigma must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> draw(mu, sigma);
  TimeSeries x(n);
  for (auto& v : x) v = draw(rng);
  return x;
}

TimeSeries downsample(std::span<const double> series, std::size_t factor) {
  if (factor < 1) throw ContractError("downsample factor must be at least 1");
  TimeSeries out;
  out.reserve(series.size() / factor + 1);
  for (std::size_t i = 0; i < series.size(); i += factor) out.push_back(series[i]);
  return out;
}

std::uint64_t series_fingerprint(std::span<const double> series) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : series) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= bits & 0xffU;
      h *= 0x100000001b3ULL;
      bits >>= 8;
    }
  }
  return h;
}

}  // namespace ptree
