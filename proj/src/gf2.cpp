#include "polycode/gf2.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "polycode/error.hpp"
#include "polycode/pauli.hpp"

namespace polycode {

namespace {

std::vector<std::size_t> symmetric_difference(const std::vector<std::size_t>& a,
                                              const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_width(const BitVec& v, std::size_t ncols) {
  if (v.size() != ncols) {
    throw LengthMismatch("vector length " + std::to_string(v.size()) + " does not match " +
                         std::to_string(ncols) + " columns");
  }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t ncols, std::vector<BitVec> rows) : ncols_(ncols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) add_row(std::move(r));
}

void BitMatrix::add_row(BitVec row) {
  require_width(row, ncols_);
  rows_.push_back(std::move(row));
}

bool SpanBasis::insert(const BitVec& v) {
  require_width(v, ncols_);
  Row candidate{v, 0, {inserted_++}};
  for (const Row& r : rows_) {
    if (candidate.bits.get(r.pivot)) {
      candidate.bits ^= r.bits;
      candidate.sources = symmetric_difference(candidate.sources, r.sources);
    }
  }
  candidate.pivot = candidate.bits.first_set();
  if (candidate.pivot == ncols_) return false;
  // Keep the basis fully reduced on pivot columns.
  for (Row& r : rows_) {
    if (r.bits.get(candidate.pivot)) {
      r.bits ^= candidate.bits;
      r.sources = symmetric_difference(r.sources, candidate.sources);
    }
  }
  rows_.push_back(std::move(candidate));
  return true;
}

BitVec SpanBasis::reduce(BitVec v) const {
  require_width(v, ncols_);
  for (const Row& r : rows_) {
    if (v.get(r.pivot)) v ^= r.bits;
  }
  return v;
}

std::optional<std::vector<std::size_t>> SpanBasis::witness(const BitVec& v) const {
  require_width(v, ncols_);
  BitVec rest = v;
  std::vector<std::size_t> sources;
  for (const Row& r : rows_) {
    if (rest.get(r.pivot)) {
      rest ^= r.bits;
      sources = symmetric_difference(sources, r.sources);
    }
  }
  if (rest.any()) return std::nullopt;
  return sources;
}

std::size_t rank(const BitMatrix& m) {
  SpanBasis basis(m.ncols());
  for (const BitVec& r : m.rows()) basis.insert(r);
  return basis.rank();
}

std::optional<std::vector<std::size_t>> in_span(const BitVec& v, const BitMatrix& m) {
  require_width(v, m.ncols());
  SpanBasis basis(m.ncols());
  for (const BitVec& r : m.rows()) basis.insert(r);
  return basis.witness(v);
}

std::vector<BitVec> kernel(const BitMatrix& m) {
  const std::size_t ncols = m.ncols();
  // Reduced row echelon form with leftmost-pivot order.
  std::vector<BitVec> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    BitVec v(ncols);
    v.set(free);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rows[r].get(free)) v.set(pivots[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SymplecticBasis symplectic_gram_schmidt(const BitMatrix& checks) {
  const std::size_t width = checks.ncols();
  if (width % 2 != 0) throw LengthMismatch("symplectic rows must have even length");
  const std::size_t n = width / 2;

  for (std::size_t i = 0; i < checks.num_rows(); ++i) {
    for (std::size_t j = i + 1; j < checks.num_rows(); ++j) {
      if (symplectic_form(checks.row(i), checks.row(j))) {
        throw Error("checks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " anticommute");
      }
    }
  }

  SymplecticBasis out;
  out.independent_checks = BitMatrix(width);
  SpanBasis span(width);
  for (std::size_t i = 0; i < checks.num_rows(); ++i) {
    if (span.insert(checks.row(i))) {
      out.independent_rows.push_back(i);
      out.independent_checks.add_row(checks.row(i));
    }
  }

  // Normalizer: v with sp(v, c) = 0 for every check c, i.e. kernel of the
  // checks with their x and z halves swapped.
  BitMatrix swapped(width);
  for (const BitVec& c : checks.rows()) {
    swapped.add_row(BitVec::concat(c.slice(n, n), c.slice(0, n)));
  }
  std::vector<BitVec> candidates;
  for (BitVec& v : kernel(swapped)) {
    if (span.insert(v)) candidates.push_back(std::move(v));
  }

  while (!candidates.empty()) {
    BitVec a = candidates.front();
    auto partner = std::find_if(candidates.begin() + 1, candidates.end(),
                                [&](const BitVec& c) { return symplectic_form(a, c); });
    if (partner == candidates.end()) {
      throw Error("symplectic_gram_schmidt: logical candidate has no anticommuting partner");
    }
    BitVec b = *partner;
    candidates.erase(partner);
    candidates.erase(candidates.begin());
    for (BitVec& c : candidates) {
      const bool with_b = symplectic_form(c, b);
      const bool with_a = symplectic_form(c, a);
      if (with_b) c ^= a;
      if (with_a) c ^= b;
    }
    out.logical_pairs.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

BitVec reduce_weight_greedy(BitVec v, const BitMatrix& stabilizers) {
  require_width(v, stabilizers.ncols());
  std::size_t best = symplectic_weight(v);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const BitVec& s : stabilizers.rows()) {
      BitVec trial = v ^ s;
      const std::size_t w = symplectic_weight(trial);
      if (w < best) {
        best = w;
        v = std::move(trial);
        improved = true;
      }
    }
  }
  return v;
}

}  // namespace polycode
