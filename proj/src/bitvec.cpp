#include "polycode/bitvec.hpp"

#include "polycode/error.hpp"

namespace polycode {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string: unexpected character '" + std::string(1, bits[i]) +
                           "' at position " + std::to_string(i + 1),
                       i + 1);
    }
  }
  return out;
}

std::size_t BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return nbits_;
}

bool BitVec::dot(const BitVec& other) const {
  check_same_size(other);
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

BitVec BitVec::concat(const BitVec& head, const BitVec& tail) {
  BitVec out(head.size() + tail.size());
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head.get(i)) out.set(i);
  }
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail.get(i)) out.set(head.size() + i);
  }
  return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t length) const {
  if (begin + length > nbits_) throw LengthMismatch("BitVec::slice out of range");
  BitVec out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (get(begin + i)) out.set(i);
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string out(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

void BitVec::check_same_size(const BitVec& other) const {
  if (nbits_ != other.nbits_) {
    throw LengthMismatch("bit vector length mismatch: " + std::to_string(nbits_) + " vs " +
                         std::to_string(other.nbits_));
  }
}

}  // namespace polycode
