#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycode {

enum class Color : unsigned char { red, green, blue };

char to_char(Color c);

struct Face {
  /// Cyclic vertex order, 0-based. Orientation is irrelevant.
  std::vector<std::size_t> vertices;
  std::optional<Color> color;

  friend bool operator==(const Face&, const Face&) = default;
};

/// An undirected polyhedron edge with the two faces that contain it.
struct Edge {
  std::size_t u;
  std::size_t v;
  std::vector<std::size_t> faces;
};

/// Combinatorial closed surface given by its faces. Construction does not
/// validate; call validate() before relying on sphere invariants.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::size_t n_vertices, std::vector<Face> faces)
      : n_vertices_(n_vertices), faces_(std::move(faces)) {}

  std::size_t num_vertices() const { return n_vertices_; }
  std::size_t num_faces() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t i) const { return faces_[i]; }

  bool fully_colored() const;
  /// Copy with face i colored colors[i].
  Polyhedron with_colors(const std::vector<Color>& colors) const;
  Polyhedron without_colors() const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Face> faces_;
};

struct PolyStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  /// Degree-3 vertices, read as disclination twists.
  std::size_t twist_count = 0;
  long euler_characteristic = 0;
};

/// Checks the closed-sphere invariants and returns the counts. Throws
/// ValidationError naming the first offending face, vertex or edge.
PolyStats validate(const Polyhedron& p);

/// Edges in order of first appearance while walking faces in order. Each edge
/// lists the faces it borders. Does not validate.
std::vector<Edge> edges(const Polyhedron& p);

std::vector<std::size_t> vertex_degrees(const Polyhedron& p);

/// Sorted neighbor lists: faces f and g are adjacent iff they share an edge.
using FaceGraph = std::vector<std::vector<std::size_t>>;
FaceGraph face_adjacency(const Polyhedron& p);

/// Lexicographically first proper 3-coloring of the face graph, in face order
/// with red < green < blue. Throws InfeasibleError describing an obstruction.
Polyhedron color_faces(const Polyhedron& p);

/// Visits proper 3-colorings in lexicographic order until `visit` returns
/// false. Returns the number visited.
std::size_t for_each_coloring(const Polyhedron& p,
                              const std::function<bool(const std::vector<Color>&)>& visit);

/// Glues a pyramid onto every face and merges the coplanar triangle pairs:
/// one apex per face (vertex n_vertices + f) and one quadrilateral
/// (u, apex f1, v, apex f2) per edge {u, v}, in edge order. Output is
/// uncolored.
Polyhedron rhombify(const Polyhedron& p);

/// Vertex bijection mapping the faces of `a` onto the faces of `b` (as
/// vertex sets), found by backtracking on the vertex-edge graph.
std::optional<std::vector<std::size_t>> find_isomorphism(const Polyhedron& a, const Polyhedron& b);

/// "cube", "rhombic_dodecahedron" or "tetrahedron".
Polyhedron builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Text format:
///   v <n_vertices>
///   f [r|g|b]? <i1> ... <ik>
/// with 1-based vertex indices and `#` comments.
Polyhedron read_polyhedron(std::istream& in);
Polyhedron parse_polyhedron(std::string_view text);
void write_polyhedron(std::ostream& out, const Polyhedron& p);
std::string format_polyhedron(const Polyhedron& p);

}  // namespace polycode
