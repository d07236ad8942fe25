#pragma once

// Reference computations for tests. Nothing here calls into the library: each
// works from letter strings or plain integer masks.

#include <algorithm>
#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polycode::oracle {

using Cx = std::complex<double>;
using Mat2 = std::array<Cx, 4>;  // row-major

inline Mat2 letter_matrix(char c) {
  const Cx i{0, 1};
  switch (c) {
    case 'I':
      return {1, 0, 0, 1};
    case 'X':
      return {0, 1, 1, 0};
    case 'Y':
      return {0, -i, i, 0};
    case 'Z':
      return {1, 0, 0, -1};
  }
  throw std::invalid_argument("bad letter");
}

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

/// Identifies m = s · P for a single-qubit Pauli P and s ∈ {1, i, -1, -i}.
/// Returns (letter, exponent of i).
inline std::pair<char, int> identify(const Mat2& m) {
  for (char c : std::string("IXYZ")) {
    const Mat2 p = letter_matrix(c);
    for (int e = 0; e < 4; ++e) {
      const Cx s = std::pow(Cx{0, 1}, e);
      bool eq = true;
      for (int k = 0; k < 4; ++k) eq = eq && std::abs(m[k] - s * p[k]) < 1e-9;
      if (eq) return {c, e};
    }
  }
  throw std::logic_error("not a scaled Pauli");
}

struct DenseProduct {
  std::string letters;
  int phase = 0;  // overall scalar is i^phase
};

/// Ordered product of sign-free Pauli strings, computed qubit by qubit with
/// explicit 2x2 complex matrices.
inline DenseProduct dense_product(const std::vector<std::string>& rows) {
  DenseProduct out;
  const std::size_t n = rows.front().size();
  for (std::size_t q = 0; q < n; ++q) {
    Mat2 acc = letter_matrix('I');
    for (const auto& r : rows) acc = matmul(acc, letter_matrix(r[q]));
    const auto [c, e] = identify(acc);
    out.letters.push_back(c);
    out.phase = (out.phase + e) % 4;
  }
  return out;
}

/// Counts positions where both letters are non-identity and differ.
inline int anticommutes(const std::string& a, const std::string& b) {
  int t = 0;
  for (std::size_t q = 0; q < a.size(); ++q) t += a[q] != 'I' && b[q] != 'I' && a[q] != b[q];
  return t % 2;
}

inline int letter_weight(const std::string& a) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](char c) { return c != 'I'; }));
}

/// Pauli on at most 32 qubits as integer masks, phases ignored.
struct Mask {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  static Mask of(const std::string& s) {
    Mask m;
    for (std::size_t q = 0; q < s.size(); ++q) {
      if (s[q] == 'X' || s[q] == 'Y') m.x |= 1u << q;
      if (s[q] == 'Z' || s[q] == 'Y') m.z |= 1u << q;
    }
    return m;
  }
  Mask operator*(const Mask& o) const { return {x ^ o.x, z ^ o.z}; }
  int weight() const { return std::popcount(x | z); }
  bool anticommutes(const Mask& o) const { return (std::popcount(x & o.z) + std::popcount(z & o.x)) & 1; }
  std::uint64_t key() const { return (std::uint64_t{x} << 32) | z; }
};

/// Every GF(2) combination of the generators (2^m elements, m ≤ 20).
inline std::set<std::uint64_t> span_of(const std::vector<Mask>& gens) {
  std::set<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << gens.size()); ++s) {
    Mask acc;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((s >> i) & 1) acc = acc * gens[i];
    }
    out.insert(acc.key());
  }
  return out;
}

/// Rank as log2 of the span size.
inline int rank_by_enumeration(const std::vector<Mask>& gens) {
  return std::countr_zero(static_cast<std::uint64_t>(span_of(gens).size()));
}

/// Minimum weight over (every stabilizer element) × (every nontrivial
/// combination of the 2k logical generators).
inline int coset_distance(const std::vector<Mask>& stabilizers, const std::vector<Mask>& logicals) {
  int best = 1 << 30;
  const std::uint64_t nl = std::uint64_t{1} << logicals.size();
  const std::uint64_t ns = std::uint64_t{1} << stabilizers.size();
  for (std::uint64_t l = 1; l < nl; ++l) {
    Mask lop;
    for (std::size_t i = 0; i < logicals.size(); ++i) {
      if ((l >> i) & 1) lop = lop * logicals[i];
    }
    for (std::uint64_t s = 0; s < ns; ++s) {
      Mask acc = lop;
      for (std::size_t i = 0; i < stabilizers.size(); ++i) {
        if ((s >> i) & 1) acc = acc * stabilizers[i];
      }
      best = std::min(best, acc.weight());
    }
  }
  return best;
}

/// All ways to order each 4-vertex support into a cycle such that every
/// edge lies on exactly two faces.
inline std::vector<std::vector<std::array<int, 4>>> quad_cycle_solutions(
    const std::vector<std::array<int, 4>>& supports) {
  std::vector<std::vector<std::array<int, 4>>> out;
  std::map<std::pair<int, int>, int> count;
  std::vector<std::array<int, 4>> chosen;
  auto edges_of = [](const std::array<int, 4>& c) {
    std::array<std::pair<int, int>, 4> e;
    for (int i = 0; i < 4; ++i) e[i] = std::minmax(c[i], c[(i + 1) % 4]);
    return e;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == supports.size()) {
      if (std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 0 || kv.second == 2; })) {
        out.push_back(chosen);
      }
      return;
    }
    const auto [a, b, c, d] = supports[i];
    for (const std::array<int, 4>& cyc : {std::array<int, 4>{a, b, c, d}, std::array<int, 4>{a, b, d, c},
                                          std::array<int, 4>{a, c, b, d}}) {
      const auto e = edges_of(cyc);
      if (std::any_of(e.begin(), e.end(), [&](const auto& x) { return count[x] >= 2; })) continue;
      for (const auto& x : e) ++count[x];
      chosen.push_back(cyc);
      rec(i + 1);
      chosen.pop_back();
      for (const auto& x : e) --count[x];
    }
  };
  rec(0);
  return out;
}

}  // namespace polycode::oracle
