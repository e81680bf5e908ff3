#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kingdom {

/// Fixed-width bitset over canonical vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  /// Builds a set of width `size` from the low bits of `mask`.
  static VertexSet from_mask(std::size_t size, std::uint64_t mask) {
    VertexSet s(size);
    if (size > 0) s.words_[0] = size >= 64 ? mask : mask & ((std::uint64_t{1} << size) - 1);
    return s;
  }

  static VertexSet full(std::size_t size) {
    VertexSet s(size);
    for (std::size_t i = 0; i < size; ++i) s.set(i);
    return s;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool all() const noexcept { return count() == size_; }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Indices of set bits in increasing order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    return out;
  }

  /// Low 64 bits; meaningful when size() <= 64.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  /// '0'/'1' string, index 0 first.
  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

}  // namespace kingdom
