#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polycode/bitvec.hpp"

namespace polycode {

/// Dense GF(2) matrix stored as packed rows of equal length.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t ncols) : ncols_(ncols) {}
  BitMatrix(std::size_t ncols, std::vector<BitVec> rows);

  void add_row(BitVec row);

  std::size_t ncols() const { return ncols_; }
  std::size_t num_rows() const { return rows_.size(); }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }

 private:
  std::size_t ncols_ = 0;
  std::vector<BitVec> rows_;
};

/// Incremental row-echelon basis of a GF(2) row space. Each basis row
/// remembers which inserted vectors it is the sum of, so membership queries
/// can return a witness combination.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t ncols) : ncols_(ncols) {}

  /// Inserts `v`; returns false (and leaves the basis unchanged) when `v` is
  /// already in the span. Inserted vectors are numbered 0, 1, ... including
  /// rejected ones.
  bool insert(const BitVec& v);

  /// Reduces `v` against the basis; zero iff `v` is in the span.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).none(); }

  /// Indices of inserted vectors summing to `v`, or nullopt when `v` is
  /// outside the span.
  std::optional<std::vector<std::size_t>> witness(const BitVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

 private:
  struct Row {
    BitVec bits;
    std::size_t pivot;
    std::vector<std::size_t> sources;  // sorted inserted-vector indices
  };

  std::size_t ncols_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

std::size_t rank(const BitMatrix& m);

/// Witness row-index set when `v` is a GF(2) combination of the rows of `m`.
std::optional<std::vector<std::size_t>> in_span(const BitVec& v, const BitMatrix& m);

/// Basis of {v : m·v = 0}, one vector per free column in ascending order.
std::vector<BitVec> kernel(const BitMatrix& m);

struct SymplecticBasis {
  /// Indices into the input of a maximal independent subset, chosen greedily
  /// in input order.
  std::vector<std::size_t> independent_rows;
  BitMatrix independent_checks;
  /// Canonical pairs (x̄_i, z̄_i): sp(x̄_i, z̄_j) = δ_ij and all other
  /// products vanish.
  std::vector<std::pair<BitVec, BitVec>> logical_pairs;
};

/// Independent checks plus canonical logical pairs for the code whose check
/// rows (x ∥ z, length 2n) are the rows of `checks`. Throws Error naming the
/// first anticommuting pair of rows.
SymplecticBasis symplectic_gram_schmidt(const BitMatrix& checks);

/// Greedily multiplies `v` by rows of `stabilizers` while that lowers the
/// qubit weight. Symplectic products with anything commuting with the
/// stabilizers are unchanged.
BitVec reduce_weight_greedy(BitVec v, const BitMatrix& stabilizers);

}  // namespace polycode
