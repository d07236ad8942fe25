#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "polycode/bitvec.hpp"

namespace polycode {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char to_char(PauliLetter letter);

/// An n-qubit Pauli operator in symplectic form:
///
///     i^phase · ⊗_q X^{x_q} Z^{z_q}
///
/// so a single-qubit Y is x=1, z=1, phase=1 (Y = i·XZ). Qubits are 0-based
/// here; text I/O is positional with the leftmost letter on qubit 1.
class PauliOperator {
 public:
  PauliOperator() = default;
  /// Identity on `n` qubits.
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVec x, BitVec z, unsigned phase);

  /// Hermitian operator with sign +1 built from letters, e.g. {X, I, Y}.
  static PauliOperator from_letters(std::span<const PauliLetter> letters);
  /// `letter` on one qubit, identity elsewhere.
  static PauliOperator single(std::size_t n, std::size_t qubit, PauliLetter letter);
  /// The Hermitian, sign +1 operator whose symplectic row is `row` = x ∥ z.
  static PauliOperator from_symplectic_row(const BitVec& row);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  unsigned phase() const { return phase_; }

  PauliLetter letter(std::size_t qubit) const;
  std::size_t weight() const;
  bool is_identity_pattern() const { return x_.none() && z_.none(); }
  /// x ∥ z, length 2n.
  BitVec symplectic_row() const { return BitVec::concat(x_, z_); }

  /// Exact group product `*this · rhs` including phase.
  PauliOperator operator*(const PauliOperator& rhs) const;

  /// Text form: optional sign in {-, +i, -i} then one letter per qubit. The
  /// +1 sign is omitted.
  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVec x_;
  BitVec z_;
  unsigned phase_ = 0;
};

/// Parses `sign? [IXYZ]+` with sign in {+, -, +i, -i}.
PauliOperator parse_pauli(std::string_view text);

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

/// 0 iff a and b commute: <a.x, b.z> + <a.z, b.x> mod 2.
bool symplectic_product(const PauliOperator& a, const PauliOperator& b);

/// Symplectic form on rows laid out as x ∥ z (length 2n each).
bool symplectic_form(const BitVec& a, const BitVec& b);

/// Number of qubits where (x or z) is set in a symplectic row x ∥ z.
std::size_t symplectic_weight(const BitVec& row);

inline std::size_t weight(const PauliOperator& p) { return p.weight(); }

}  // namespace polycode
