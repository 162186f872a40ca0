#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>

#include "ptree/patterns.hpp"

namespace ptree {

/// dx/dt = -a x(t) + b x(t - tau) / (1 + x(t - tau)^10), Euler-integrated
/// with constant history x0 for t <= 0.
///
/// burn_in counts integration steps; after it, every sample_every-th state is
/// emitted (the default emits one sample per unit of time). Defaults are the
/// usual chaotic setting; paper_stated() uses a = 0.2, b = 0.1 in this
/// equation's roles, which decays to zero.
struct MackeyGlassConfig {
  double a = 0.1;
  double b = 0.2;
  double tau = 17.0;
  double dt = 0.1;
  std::size_t n = 10000;
  std::size_t burn_in = 10000;
  std::size_t sample_every = 10;
  double x0 = 1.2;

  static MackeyGlassConfig paper_stated();
};

/// x_0 = mu, x_{i+1} = x_i + d_{i+1}, d ~ N(0, sigma^2). With up_probability
/// set, the step is +|d| with that probability and -|d| otherwise.
struct RandomWalkConfig {
  std::size_t n = 10000;
  double mu = 0.0;
  double sigma = 1.0;
  std::uint64_t seed = 1;
  std::optional<double> up_probability;
};

TimeSeries mackey_glass(const MackeyGlassConfig& cfg);
TimeSeries random_walk(const RandomWalkConfig& cfg);
TimeSeries iid_gaussian(std::size_t n, double mu, double sigma, std::uint64_t seed);

/// Keeps samples 0, factor, 2 factor, ...
TimeSeries downsample(std::span<const double> series, std::size_t factor);

/// One value per line, optional `value` header, '#' comment lines.
TimeSeries read_csv(std::istream& in);
void write_csv(std::span<const double> series, std::ostream& out);
TimeSeries load_csv(const std::filesystem::path& path);
void save_csv(std::span<const double> series, const std::filesystem::path& path);

/// FNV-1a over the IEEE-754 bit patterns; used for golden-output checks.
std::uint64_t series_fingerprint(std::span<const double> series);

}  // namespace ptree
