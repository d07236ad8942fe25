#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polycode {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() in the
/// last word are always zero, so word-wise comparisons and popcounts are exact.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_(num_words(nbits), 0) {}

  static std::size_t num_words(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

  /// Parses a string of '0'/'1' characters, bit 0 first.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::size_t popcount() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;

  /// Parity of the bitwise AND, i.e. the GF(2) inner product.
  bool dot(const BitVec& other) const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  /// Concatenation `head ∥ tail`.
  static BitVec concat(const BitVec& head, const BitVec& tail);
  BitVec slice(std::size_t begin, std::size_t length) const;

  /// '0'/'1' characters, bit 0 first.
  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

 private:
  void check_same_size(const BitVec& other) const;

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace polycode
