#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cudtaus {

/// An ordered multiset of s-dimensional points whose coordinates are w-bit
/// binary fractions stored as integers (value = word / 2^w).
class PointSet {
 public:
  PointSet() = default;
  PointSet(int s, int w) : s_(s), w_(w) {}

  int dimension() const { return s_; }
  int word_bits() const { return w_; }
  std::size_t size() const { return s_ == 0 ? 0 : words_.size() / static_cast<std::size_t>(s_); }

  std::span<const std::uint64_t> point(std::size_t i) const {
    return {words_.data() + i * static_cast<std::size_t>(s_), static_cast<std::size_t>(s_)};
  }
  std::span<std::uint64_t> point(std::size_t i) {
    return {words_.data() + i * static_cast<std::size_t>(s_), static_cast<std::size_t>(s_)};
  }

  void push_back(std::span<const std::uint64_t> coords) {
    words_.insert(words_.end(), coords.begin(), coords.end());
  }
  void reserve(std::size_t n) { words_.reserve(n * static_cast<std::size_t>(s_)); }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int s_ = 0;
  int w_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Converts a w-bit fraction word to a double in [0, 1).
inline double to_unit(std::uint64_t word, int w) {
  return std::ldexp(static_cast<double>(word), -w);
}

}  // namespace cudtaus
