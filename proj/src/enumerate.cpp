#include "polycode/enumerate.hpp"

#include <limits>
#include <vector>

namespace polycode {

namespace {

void set_letter(BitVec& x, BitVec& z, std::size_t q, int digit) {
  // digit 0 = X, 1 = Y, 2 = Z
  x.set(q, digit != 2);
  z.set(q, digit != 0);
}

// Letters for a fixed support, odometer with the last position fastest.
bool visit_letters(const std::vector<std::size_t>& support, BitVec& x, BitVec& z,
                   const PauliVisitor& visit) {
  const std::size_t w = support.size();
  std::vector<int> digits(w, 0);
  for (std::size_t i = 0; i < w; ++i) set_letter(x, z, support[i], 0);
  while (true) {
    if (!visit(x, z)) return false;
    std::size_t pos = w;
    while (pos > 0 && digits[pos - 1] == 2) {
      --pos;
      digits[pos] = 0;
      set_letter(x, z, support[pos], 0);
    }
    if (pos == 0) break;
    ++digits[pos - 1];
    set_letter(x, z, support[pos - 1], digits[pos - 1]);
  }
  for (std::size_t q : support) {
    x.set(q, false);
    z.set(q, false);
  }
  return true;
}

}  // namespace

bool for_each_pauli_with_first(std::size_t n, std::size_t w, std::size_t first,
                               const PauliVisitor& visit) {
  if (w == 0 || first >= n || n - first < w) return true;
  BitVec x(n);
  BitVec z(n);
  // support = {first} ∪ combination of w-1 indices from (first, n).
  std::vector<std::size_t> support(w);
  support[0] = first;
  for (std::size_t i = 1; i < w; ++i) support[i] = first + i;
  while (true) {
    if (!visit_letters(support, x, z, visit)) return false;
    // Advance the tail combination.
    std::size_t i = w;
    while (i > 1 && support[i - 1] == n - w + (i - 1)) --i;
    if (i == 1) break;
    ++support[i - 1];
    for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
  }
  return true;
}

bool for_each_pauli(std::size_t n, std::size_t w, const PauliVisitor& visit) {
  if (w == 0 || w > n) return true;
  for (std::size_t first = 0; first + w <= n; ++first) {
    if (!for_each_pauli_with_first(n, w, first, visit)) return false;
  }
  return true;
}

std::uint64_t count_paulis(std::size_t n, std::size_t w) {
  if (w > n) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  long double value = 1;
  for (std::size_t i = 0; i < w; ++i) value = value * 3 * static_cast<long double>(n - i) / (i + 1);
  if (value >= static_cast<long double>(kMax)) return kMax;
  return static_cast<std::uint64_t>(value + 0.5L);
}

PauliOperator pauli_from_bits(const BitVec& x, const BitVec& z) {
  return PauliOperator(x, z, static_cast<unsigned>((x & z).popcount()));
}

}  // namespace polycode
