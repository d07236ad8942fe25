#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycode/gf2.hpp"
#include "polycode/pauli.hpp"

namespace polycode {

/// Stabilizer code defined by an ordered (possibly dependent) list of
/// pairwise-commuting checks. Immutable once built.
class StabilizerCode {
 public:
  /// Throws Error naming the first anticommuting pair. An empty check list
  /// is allowed and encodes k = n.
  static StabilizerCode build(std::size_t n, std::vector<PauliOperator> checks);
  /// Same, with n taken from the first check (the list must be non-empty).
  static StabilizerCode build(std::vector<PauliOperator> checks);

  std::size_t n() const { return n_; }
  const std::vector<PauliOperator>& checks() const { return checks_; }
  /// Independent check count r.
  std::size_t rank() const { return independent_.size(); }
  std::size_t k() const { return n_ - rank(); }

  /// Positions in checks() of the independent checks; this order is the
  /// syndrome bit order.
  const std::vector<std::size_t>& independent_indices() const { return independent_; }
  const PauliOperator& independent_check(std::size_t i) const { return checks_[independent_[i]]; }

  const std::vector<PauliOperator>& logical_x() const { return logical_x_; }
  const std::vector<PauliOperator>& logical_z() const { return logical_z_; }

  /// True iff the symplectic row of `p` lies in the span of the checks.
  bool in_stabilizer_span(const PauliOperator& p) const;
  bool commutes_with_checks(const PauliOperator& p) const;
  /// Same test on raw x/z bits, against the independent checks only.
  bool commutes_with_checks(const BitVec& x, const BitVec& z) const;

  /// Syndrome over the independent checks packed into an integer, bit i for
  /// independent check i. Requires rank() ≤ 64.
  std::uint64_t syndrome_index(const BitVec& x, const BitVec& z) const;

  /// Copy with a caller-chosen logical basis; throws Error unless the pairs
  /// commute with the checks, lie outside their span and pair canonically.
  StabilizerCode with_logicals(std::vector<PauliOperator> xs, std::vector<PauliOperator> zs) const;
  /// Copy with each logical representative greedily weight-reduced by
  /// multiplying with independent checks.
  StabilizerCode with_reduced_logicals() const;

 private:
  StabilizerCode(std::size_t n, std::vector<PauliOperator> checks);

  std::size_t n_ = 0;
  std::vector<PauliOperator> checks_;
  std::vector<std::size_t> independent_;
  BitMatrix independent_rows_;
  SpanBasis span_{0};
  std::vector<PauliOperator> logical_x_;
  std::vector<PauliOperator> logical_z_;
};

struct DistanceResult {
  /// Minimum weight of a nontrivial logical, or nullopt when none exists up
  /// to `max_weight`.
  std::optional<std::size_t> d;
  /// First logical of minimum weight in enumeration order.
  std::optional<PauliOperator> witness;
  std::size_t max_weight = 0;
};

/// Exhaustive scan by increasing weight 1..max_weight for an operator that
/// commutes with every check and is outside the check span. Phases are
/// ignored. `threads` = 0 picks hardware concurrency; the result does not
/// depend on it. Throws Error when k = 0.
DistanceResult distance(const StabilizerCode& code, std::size_t max_weight, unsigned threads = 0);

/// Number of Paulis a scan up to `max_weight` visits in the worst case.
std::uint64_t distance_scan_cost(std::size_t n, std::size_t max_weight);

struct WeightScanReport {
  bool all_detected = true;
  std::size_t checked = 0;
  /// First weight ≤ 2 Pauli commuting with every check, if any.
  std::optional<PauliOperator> undetected;
};

/// Does every non-identity Pauli of weight ≤ 2 anticommute with some check?
WeightScanReport weight_two_scan(const StabilizerCode& code);

struct LogicalReport {
  struct Item {
    std::string name;
    bool passed = false;
    std::string detail;
  };
  std::vector<Item> items;

  bool all_passed() const;
};

/// Checks a supplied logical basis: commutation with checks, canonical
/// pairing, mutual commutation within each family, exclusion from the check
/// span, and pairwise-disjoint z̄ supports.
LogicalReport verify_golden_logicals(const StabilizerCode& code, const std::vector<PauliOperator>& xbars,
                                     const std::vector<PauliOperator>& zbars);

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  /// Set when the scan stopped at this weight without finding a logical.
  std::optional<std::size_t> d_exceeds;

  /// "[[n,k,d]]", "[[n,k,>w]]" or "[[n,0]]".
  std::string str() const;
};

CodeParams params(const StabilizerCode& code, std::size_t max_weight, unsigned threads = 0);

}  // namespace polycode
