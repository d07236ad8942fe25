#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polycode/pauli.hpp"
#include "polycode/polyhedron.hpp"

namespace polycode {

/// Pauli letter carried by faces of each color: red→X, green→Y, blue→Z.
PauliLetter letter_for(Color c);

/// One check per face in face order: the face's letter on every vertex of
/// the face, sign +1. Qubits are vertices.
std::vector<PauliOperator> checks_from_polyhedron(const Polyhedron& p);

struct CommutationReport {
  bool commuting = true;
  /// Lowest (i, j), i < j, in lexicographic order with anticommuting checks.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

CommutationReport verify_commuting(const std::vector<PauliOperator>& checks);

/// Logical qubits predicted from disclination twists: every twist after the
/// first pair adds a factor √2 to the logical dimension, so k = t/2 − 1.
/// Zero twists give k = 0. Odd counts are rejected.
std::size_t predict_k_from_twists(std::size_t twist_count);

/// True iff every check is purely X-type or purely Z-type.
bool is_css(const std::vector<PauliOperator>& checks);

/// First proper 3-coloring (lexicographic) whose checks pairwise commute.
/// Returns the colored polyhedron and how many colorings were tried. Throws
/// InfeasibleError when none exists.
std::pair<Polyhedron, std::size_t> color_commuting(const Polyhedron& p);

}  // namespace polycode
