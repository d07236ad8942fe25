#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polycode/bitvec.hpp"
#include "polycode/pauli.hpp"
#include "polycode/stabcode.hpp"

namespace polycode {

/// Check outcomes over the independent checks of a code; bit i is the
/// symplectic product of the error with independent check i.
struct Syndrome {
  BitVec bits;

  std::uint64_t index() const;
  static Syndrome from_index(std::size_t num_checks, std::uint64_t index);
  /// '0'/'1' characters, bit 0 first.
  std::string str() const { return bits.to_string(); }

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

Syndrome syndrome_of(const StabilizerCode& code, const PauliOperator& error);

/// Complete map from each of the 2^r syndromes to a minimum-weight
/// correction. Immutable after build_table().
class DecoderTable {
 public:
  std::size_t num_checks() const { return num_checks_; }
  std::size_t size() const { return entries_.size(); }
  const PauliOperator& entry(std::uint64_t syndrome_index) const { return entries_.at(syndrome_index); }
  /// Largest correction weight in the table.
  std::size_t max_weight() const;

  /// One line per syndrome in index order: "<bits> <pauli>", bit 0 first.
  void write(std::ostream& out) const;

 private:
  friend DecoderTable build_table(const StabilizerCode& code, std::size_t max_checks);

  std::size_t num_checks_ = 0;
  std::vector<PauliOperator> entries_;
};

/// Fills the table by enumerating Paulis in increasing weight (supports in
/// combinatorial order, letters X < Y < Z); the first error realizing a
/// syndrome becomes its entry. Refuses codes with more than `max_checks`
/// independent checks.
DecoderTable build_table(const StabilizerCode& code, std::size_t max_checks = 24);

PauliOperator decode(const DecoderTable& table, const Syndrome& s);

enum class DecodeOutcome { success, logical_failure };

const char* to_string(DecodeOutcome outcome);

struct ResidualReport {
  DecodeOutcome outcome = DecodeOutcome::success;
  /// error · correction
  PauliOperator residual;
  /// Indices i where the residual anticommutes with x̄_i (resp. z̄_i) of the
  /// code's logical basis.
  std::vector<std::size_t> detected_by_xbar;
  std::vector<std::size_t> detected_by_zbar;
};

/// Success iff error · correction lies in the check span. Throws Error when
/// the two syndromes differ.
ResidualReport classify_residual(const StabilizerCode& code, const PauliOperator& error,
                                 const PauliOperator& correction);

}  // namespace polycode
