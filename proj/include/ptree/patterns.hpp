#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptree {

using TimeSeries = std::vector<double>;

/// Binary comparison pattern b1 b2 ... bD, stored newest comparison first.
///
/// A bit is 1 when the later sample is strictly greater; ties and decreases
/// are 0. The textual form writes b1 first, so "101" means the latest move was
/// up, the one before down, and the one before that up.
///
/// Depth 0 is permitted only as an empty context (for example the context of
/// a depth-1 candidate); every probability routine rejects it.
class PatternBits {
 public:
  PatternBits() = default;
  explicit PatternBits(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters, newest bit first.
  static PatternBits parse(std::string_view text);
  /// Inverse of index(): bit b1 is the most significant bit of `index`.
  static PatternBits from_index(std::uint64_t index, std::size_t depth);
  static PatternBits ones(std::size_t depth);
  static PatternBits zeros(std::size_t depth);

  std::size_t depth() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// b_j with 1-based j, matching the usual b1...bD notation.
  int bit(std::size_t j) const;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  /// Number of 1 bits.
  int ones_count() const noexcept;

  /// Pattern with `newest` placed in front as the new b1.
  PatternBits prepend(int newest) const;
  /// The first `depth` bits (the most recent comparisons).
  PatternBits newest(std::size_t depth) const;
  /// Drops b1; the result describes the window one step earlier.
  PatternBits tail() const;
  /// Every bit flipped.
  PatternBits complement() const;

  std::uint64_t index() const;
  std::string str() const;

  friend bool operator==(const PatternBits&, const PatternBits&) = default;
  friend auto operator<=>(const PatternBits&, const PatternBits&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Consecutive-pair comparisons ending at sample `i`: bit j is x[i-j+1] > x[i-j].
PatternBits extract_dynamic(std::span<const double> series, std::size_t i, std::size_t depth);

/// Comparisons of x[i] against each of the previous `depth` samples: bit j is x[i] > x[i-j].
PatternBits extract_static(std::span<const double> series, std::size_t i, std::size_t depth);

/// Binary value of the pattern with b1 as the most significant bit.
std::uint64_t pattern_index(const PatternBits& p);

/// All 2^depth patterns in increasing index order.
std::vector<PatternBits> all_patterns(std::size_t depth);

}  // namespace ptree
