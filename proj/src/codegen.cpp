#include "polycode/codegen.hpp"

#include <string>

#include "polycode/error.hpp"

namespace polycode {

PauliLetter letter_for(Color c) {
  switch (c) {
    case Color::red:
      return PauliLetter::X;
    case Color::green:
      return PauliLetter::Y;
    case Color::blue:
      return PauliLetter::Z;
  }
  return PauliLetter::I;
}

std::vector<PauliOperator> checks_from_polyhedron(const Polyhedron& p) {
  std::vector<PauliOperator> checks;
  checks.reserve(p.num_faces());
  for (std::size_t fi = 0; fi < p.num_faces(); ++fi) {
    const Face& f = p.face(fi);
    if (!f.color) throw Error("face " + std::to_string(fi + 1) + " is uncolored");
    std::vector<PauliLetter> letters(p.num_vertices(), PauliLetter::I);
    for (std::size_t v : f.vertices) letters.at(v) = letter_for(*f.color);
    checks.push_back(PauliOperator::from_letters(letters));
  }
  return checks;
}

CommutationReport verify_commuting(const std::vector<PauliOperator>& checks) {
  for (std::size_t i = 0; i < checks.size(); ++i) {
    for (std::size_t j = i + 1; j < checks.size(); ++j) {
      if (symplectic_product(checks[i], checks[j])) return {false, std::pair{i, j}};
    }
  }
  return {};
}

std::size_t predict_k_from_twists(std::size_t twist_count) {
  if (twist_count % 2 != 0) {
    throw Error("twist count " + std::to_string(twist_count) +
                " is odd; disclination twists come in pairs");
  }
  return twist_count == 0 ? 0 : twist_count / 2 - 1;
}

bool is_css(const std::vector<PauliOperator>& checks) {
  for (const PauliOperator& c : checks) {
    if (c.x_bits().any() && c.z_bits().any()) return false;
  }
  return true;
}

std::pair<Polyhedron, std::size_t> color_commuting(const Polyhedron& p) {
  std::optional<Polyhedron> found;
  const std::size_t tried = for_each_coloring(p, [&](const std::vector<Color>& colors) {
    Polyhedron candidate = p.with_colors(colors);
    if (verify_commuting(checks_from_polyhedron(candidate)).commuting) {
      found = std::move(candidate);
      return false;
    }
    return true;
  });
  if (!found) {
    if (tried == 0) color_faces(p);  // throws with an obstruction description
    throw InfeasibleError("none of the " + std::to_string(tried) +
                          " proper 3-colorings yields commuting checks");
  }
  return {std::move(*found), tried};
}

}  // namespace polycode
