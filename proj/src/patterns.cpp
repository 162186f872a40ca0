#include "ptree/patterns.hpp"

#include <algorithm>
#include <numeric>

#include "ptree/errors.hpp"

namespace ptree {

namespace {

constexpr std::size_t kMaxIndexDepth = 63;

void check_window(std::span<const double> series, std::size_t i, std::size_t depth) {
  if (depth < 1) throw IndexError("pattern depth must be at least 1");
  if (i >= series.size())
    throw IndexError("sample index " + std::to_string(i) + " outside series of length " +
                     std::to_string(series.size()));
  if (i < depth)
    throw IndexError("sample index " + std::to_string(i) + " has fewer than " +
                     std::to_string(depth) + " predecessors");
}

}  // namespace

PatternBits::PatternBits(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw ContractError("pattern bits must be 0 or 1");
}

PatternBits PatternBits::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw ParseError("invalid pattern literal '" + std::string(text) + "'", 0);
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return PatternBits(std::move(bits));
}

PatternBits PatternBits::from_index(std::uint64_t index, std::size_t depth) {
  if (depth > kMaxIndexDepth) throw ContractError("pattern depth too large for integer index");
  if (depth < 64 && index >> depth)
    throw ContractError("index " + std::to_string(index) + " does not fit in depth " +
                        std::to_string(depth));
  std::vector<std::uint8_t> bits(depth);
  for (std::size_t j = 0; j < depth; ++j)
    bits[j] = static_cast<std::uint8_t>((index >> (depth - 1 - j)) & 1U);
  return PatternBits(std::move(bits));
}

PatternBits PatternBits::ones(std::size_t depth) {
  return PatternBits(std::vector<std::uint8_t>(depth, 1));
}

PatternBits PatternBits::zeros(std::size_t depth) {
  return PatternBits(std::vector<std::uint8_t>(depth, 0));
}

int PatternBits::bit(std::size_t j) const {
  if (j < 1 || j > bits_.size())
    throw IndexError("bit " + std::to_string(j) + " outside pattern of depth " +
                     std::to_string(bits_.size()));
  return bits_[j - 1];
}

int PatternBits::ones_count() const noexcept {
  return std::accumulate(bits_.begin(), bits_.end(), 0);
}

PatternBits PatternBits::prepend(int newest) const {
  if (newest != 0 && newest != 1) throw ContractError("pattern bits must be 0 or 1");
  std::vector<std::uint8_t> bits;
  bits.reserve(bits_.size() + 1);
  bits.push_back(static_cast<std::uint8_t>(newest));
  bits.insert(bits.end(), bits_.begin(), bits_.end());
  PatternBits out;
  out.bits_ = std::move(bits);
  return out;
}

PatternBits PatternBits::newest(std::size_t depth) const {
  if (depth > bits_.size()) throw IndexError("prefix longer than pattern");
  PatternBits out;
  out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(depth));
  return out;
}

PatternBits PatternBits::tail() const {
  if (bits_.empty()) throw IndexError("tail of an empty pattern");
  PatternBits out;
  out.bits_.assign(bits_.begin() + 1, bits_.end());
  return out;
}

PatternBits PatternBits::complement() const {
  PatternBits out = *this;
  for (auto& b : out.bits_) b ^= 1U;
  return out;
}

std::uint64_t PatternBits::index() const {
  if (bits_.size() > kMaxIndexDepth) throw ContractError("pattern depth too large for integer index");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string PatternBits::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

PatternBits extract_dynamic(std::span<const double> series, std::size_t i, std::size_t depth) {
  check_window(series, i, depth);
  std::vector<std::uint8_t> bits(depth);
  for (std::size_t j = 1; j <= depth; ++j)
    bits[j - 1] = series[i - j + 1] > series[i - j] ? 1 : 0;
  return PatternBits(std::move(bits));
}

PatternBits extract_static(std::span<const double> series, std::size_t i, std::size_t depth) {
  check_window(series, i, depth);
  std::vector<std::uint8_t> bits(depth);
  for (std::size_t j = 1; j <= depth; ++j) bits[j - 1] = series[i] > series[i - j] ? 1 : 0;
  return PatternBits(std::move(bits));
}

std::uint64_t pattern_index(const PatternBits& p) { return p.index(); }

std::vector<PatternBits> all_patterns(std::size_t depth) {
  if (depth > 24) throw ResourceError("refusing to enumerate more than 2^24 patterns");
  std::vector<PatternBits> out;
  out.reserve(std::size_t{1} << depth);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << depth); ++v)
    out.push_back(PatternBits::from_index(v, depth));
  return out;
}

}  // namespace ptree
