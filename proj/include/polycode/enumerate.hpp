#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "polycode/bitvec.hpp"
#include "polycode/pauli.hpp"

namespace polycode {

/// Visitor over non-identity Paulis given as (x, z) bit vectors. Return false
/// to stop the enumeration.
using PauliVisitor = std::function<bool(const BitVec& x, const BitVec& z)>;

/// Visits every weight-`w` Pauli on `n` qubits whose lowest support qubit is
/// `first`. Supports go in combinatorial (lexicographic) order; for each
/// support the letters run in base-3 order X < Y < Z with the lowest qubit as
/// the most significant digit. Returns false if the visitor stopped early.
bool for_each_pauli_with_first(std::size_t n, std::size_t w, std::size_t first,
                               const PauliVisitor& visit);

/// All weight-`w` Paulis on `n` qubits, in the order above.
bool for_each_pauli(std::size_t n, std::size_t w, const PauliVisitor& visit);

/// 3^w · C(n, w): number of weight-w Paulis on n qubits (saturating).
std::uint64_t count_paulis(std::size_t n, std::size_t w);

/// Hermitian, sign +1 Pauli with the given x/z bits.
PauliOperator pauli_from_bits(const BitVec& x, const BitVec& z);

}  // namespace polycode
