#include "polycode/polyhedron.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "polycode/error.hpp"

namespace polycode {

namespace {

using VertexPair = std::pair<std::size_t, std::size_t>;

VertexPair ordered(std::size_t a, std::size_t b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

std::string edge_name(std::size_t u, std::size_t v) {
  return "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}";
}

Face make_face(std::initializer_list<std::size_t> one_based, std::optional<Color> color) {
  Face f;
  for (std::size_t v : one_based) f.vertices.push_back(v - 1);
  f.color = color;
  return f;
}

std::vector<std::vector<bool>> vertex_adjacency(const Polyhedron& p) {
  std::vector<std::vector<bool>> adj(p.num_vertices(), std::vector<bool>(p.num_vertices(), false));
  for (const Edge& e : edges(p)) {
    adj[e.u][e.v] = true;
    adj[e.v][e.u] = true;
  }
  return adj;
}

std::multiset<std::vector<std::size_t>> face_supports(const Polyhedron& p,
                                                      const std::vector<std::size_t>& relabel) {
  std::multiset<std::vector<std::size_t>> out;
  for (const Face& f : p.faces()) {
    std::vector<std::size_t> s;
    for (std::size_t v : f.vertices) s.push_back(relabel[v]);
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
  }
  return out;
}

std::string describe_obstruction(const FaceGraph& g) {
  const std::size_t nf = g.size();
  auto adjacent = [&](std::size_t a, std::size_t b) {
    return std::binary_search(g[a].begin(), g[a].end(), b);
  };
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b : g[a]) {
      if (b <= a) continue;
      for (std::size_t c : g[b]) {
        if (c <= b || !adjacent(a, c)) continue;
        for (std::size_t d : g[c]) {
          if (d <= c || !adjacent(a, d) || !adjacent(b, d)) continue;
          return "faces " + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ", " +
                 std::to_string(c + 1) + ", " + std::to_string(d + 1) +
                 " are mutually adjacent (K4)";
        }
      }
    }
  }
  // Odd wheel: a face whose neighborhood is not bipartite needs four colors.
  for (std::size_t hub = 0; hub < nf; ++hub) {
    const auto& rim = g[hub];
    std::vector<int> side(nf, -1);
    for (std::size_t start : rim) {
      if (side[start] != -1) continue;
      side[start] = 0;
      std::vector<std::size_t> stack{start};
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (std::size_t nb : g[cur]) {
          if (!std::binary_search(rim.begin(), rim.end(), nb)) continue;
          if (side[nb] == -1) {
            side[nb] = 1 - side[cur];
            stack.push_back(nb);
          } else if (side[nb] == side[cur]) {
            return "face " + std::to_string(hub + 1) +
                   " is the hub of an odd wheel (its neighbors contain an odd cycle through faces " +
                   std::to_string(cur + 1) + " and " + std::to_string(nb + 1) + ")";
          }
        }
      }
    }
  }
  return "backtracking search exhausted";
}

}  // namespace

char to_char(Color c) {
  switch (c) {
    case Color::red:
      return 'r';
    case Color::green:
      return 'g';
    case Color::blue:
      return 'b';
  }
  return '?';
}

bool Polyhedron::fully_colored() const {
  return std::all_of(faces_.begin(), faces_.end(), [](const Face& f) { return f.color.has_value(); });
}

Polyhedron Polyhedron::with_colors(const std::vector<Color>& colors) const {
  if (colors.size() != faces_.size()) throw LengthMismatch("one color per face required");
  Polyhedron out = *this;
  for (std::size_t i = 0; i < colors.size(); ++i) out.faces_[i].color = colors[i];
  return out;
}

Polyhedron Polyhedron::without_colors() const {
  Polyhedron out = *this;
  for (Face& f : out.faces_) f.color.reset();
  return out;
}

std::vector<Edge> edges(const Polyhedron& p) {
  std::vector<Edge> out;
  std::map<VertexPair, std::size_t> index;
  for (std::size_t fi = 0; fi < p.num_faces(); ++fi) {
    const auto& vs = p.face(fi).vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto key = ordered(vs[i], vs[(i + 1) % vs.size()]);
      auto [it, fresh] = index.emplace(key, out.size());
      if (fresh) out.push_back(Edge{key.first, key.second, {}});
      out[it->second].faces.push_back(fi);
    }
  }
  return out;
}

std::vector<std::size_t> vertex_degrees(const Polyhedron& p) {
  std::vector<std::size_t> deg(p.num_vertices(), 0);
  for (const Edge& e : edges(p)) {
    if (e.u < deg.size()) ++deg[e.u];
    if (e.v < deg.size()) ++deg[e.v];
  }
  return deg;
}

PolyStats validate(const Polyhedron& p) {
  const std::size_t nv = p.num_vertices();
  if (nv == 0) throw ValidationError("polyhedron has no vertices");
  if (p.num_faces() == 0) throw ValidationError("polyhedron has no faces");

  std::vector<bool> used(nv, false);
  for (std::size_t fi = 0; fi < p.num_faces(); ++fi) {
    const auto& vs = p.face(fi).vertices;
    const std::string name = "face " + std::to_string(fi + 1);
    if (vs.size() < 3) throw ValidationError(name + " has fewer than 3 vertices");
    std::set<std::size_t> seen;
    for (std::size_t v : vs) {
      if (v >= nv) {
        throw ValidationError(name + ": vertex index " + std::to_string(v + 1) + " outside 1.." +
                              std::to_string(nv));
      }
      if (!seen.insert(v).second) {
        throw ValidationError(name + " repeats vertex " + std::to_string(v + 1));
      }
      used[v] = true;
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!used[v]) throw ValidationError("vertex " + std::to_string(v + 1) + " lies on no face");
  }

  const auto all_edges = edges(p);
  for (const Edge& e : all_edges) {
    if (e.faces.size() != 2) {
      throw ValidationError("edge " + edge_name(e.u, e.v) + " is shared by " +
                            std::to_string(e.faces.size()) + " face(s), expected 2");
    }
  }

  PolyStats stats;
  stats.vertices = nv;
  stats.edges = all_edges.size();
  stats.faces = p.num_faces();
  stats.euler_characteristic = static_cast<long>(nv) - static_cast<long>(stats.edges) +
                               static_cast<long>(stats.faces);
  if (stats.euler_characteristic != 2) {
    throw ValidationError("Euler characteristic V - E + F = " +
                          std::to_string(stats.euler_characteristic) + ", expected 2 for a sphere");
  }
  for (std::size_t d : vertex_degrees(p)) {
    ++stats.degree_histogram[d];
    if (d == 3) ++stats.twist_count;
  }
  return stats;
}

FaceGraph face_adjacency(const Polyhedron& p) {
  FaceGraph g(p.num_faces());
  for (const Edge& e : edges(p)) {
    for (std::size_t a : e.faces) {
      for (std::size_t b : e.faces) {
        if (a != b) g[a].push_back(b);
      }
    }
  }
  for (auto& nbrs : g) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

std::size_t for_each_coloring(const Polyhedron& p,
                              const std::function<bool(const std::vector<Color>&)>& visit) {
  const FaceGraph g = face_adjacency(p);
  const std::size_t nf = g.size();
  std::vector<int> color(nf, -1);
  std::size_t visited = 0;
  bool stop = false;

  std::function<void(std::size_t)> assign = [&](std::size_t f) {
    if (stop) return;
    if (f == nf) {
      std::vector<Color> out(nf);
      for (std::size_t i = 0; i < nf; ++i) out[i] = static_cast<Color>(color[i]);
      ++visited;
      if (!visit(out)) stop = true;
      return;
    }
    for (int c = 0; c < 3 && !stop; ++c) {
      const bool clash = std::any_of(g[f].begin(), g[f].end(),
                                     [&](std::size_t nb) { return color[nb] == c; });
      if (clash) continue;
      color[f] = c;
      assign(f + 1);
      color[f] = -1;
    }
  };
  assign(0);
  return visited;
}

Polyhedron color_faces(const Polyhedron& p) {
  std::optional<std::vector<Color>> first;
  for_each_coloring(p, [&](const std::vector<Color>& c) {
    first = c;
    return false;
  });
  if (!first) {
    throw InfeasibleError("no proper 3-coloring of the faces exists: " +
                          describe_obstruction(face_adjacency(p)));
  }
  return p.with_colors(*first);
}

Polyhedron rhombify(const Polyhedron& p) {
  validate(p);
  const std::size_t nv = p.num_vertices();
  std::vector<Face> faces;
  for (const Edge& e : edges(p)) {
    faces.push_back(Face{{e.u, nv + e.faces[0], e.v, nv + e.faces[1]}, std::nullopt});
  }
  return Polyhedron(nv + p.num_faces(), std::move(faces));
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Polyhedron& a, const Polyhedron& b) {
  const std::size_t nv = a.num_vertices();
  if (nv != b.num_vertices() || a.num_faces() != b.num_faces()) return std::nullopt;
  const auto adj_a = vertex_adjacency(a);
  const auto adj_b = vertex_adjacency(b);
  const auto deg_a = vertex_degrees(a);
  const auto deg_b = vertex_degrees(b);
  {
    auto sa = deg_a;
    auto sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::size_t> identity(nv);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  const auto target_faces = face_supports(b, identity);

  // BFS order so each vertex after the first has a mapped neighbor.
  std::vector<std::size_t> order;
  std::vector<bool> queued(nv, false);
  for (std::size_t root = 0; root < nv; ++root) {
    if (queued[root]) continue;
    queued[root] = true;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (std::size_t w = 0; w < nv; ++w) {
        if (adj_a[order[head]][w] && !queued[w]) {
          queued[w] = true;
          order.push_back(w);
        }
      }
    }
  }

  constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(nv, kUnmapped);
  std::vector<bool> taken(nv, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == nv) return face_supports(a, map) == target_faces;
    const std::size_t s = order[depth];
    for (std::size_t t = 0; t < nv; ++t) {
      if (taken[t] || deg_a[s] != deg_b[t]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t w = order[k];
        consistent = adj_a[s][w] == adj_b[t][map[w]];
      }
      if (!consistent) continue;
      map[s] = t;
      taken[t] = true;
      if (extend(depth + 1)) return true;
      taken[t] = false;
      map[s] = kUnmapped;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

std::vector<std::string> builtin_names() { return {"cube", "rhombic_dodecahedron", "tetrahedron"}; }

Polyhedron builtin(std::string_view name) {
  constexpr auto R = Color::red;
  constexpr auto G = Color::green;
  constexpr auto B = Color::blue;
  if (name == "cube") {
    // Vertex 1 + x + 2y + 4z for (x, y, z) in {0,1}^3; opposite faces share a color.
    return Polyhedron(8, {
                             make_face({1, 3, 7, 5}, R),
                             make_face({2, 4, 8, 6}, R),
                             make_face({1, 2, 6, 5}, G),
                             make_face({3, 4, 8, 7}, G),
                             make_face({1, 2, 4, 3}, B),
                             make_face({5, 6, 8, 7}, B),
                         });
  }
  if (name == "rhombic_dodecahedron") {
    // Supports are the check supports S_1^X..S_4^X, S_1^Y..S_4^Y,
    // S_1^Z..S_4^Z. Each cycle alternates degree-3 and degree-4 vertices.
    return Polyhedron(14, {
                              make_face({1, 2, 3, 6}, R),
                              make_face({3, 4, 8, 7}, R),
                              make_face({8, 9, 13, 12}, R),
                              make_face({1, 10, 13, 14}, R),
                              make_face({2, 3, 4, 5}, G),
                              make_face({3, 6, 11, 7}, G),
                              make_face({5, 9, 13, 10}, G),
                              make_face({11, 12, 13, 14}, G),
                              make_face({1, 2, 5, 10}, B),
                              make_face({4, 5, 9, 8}, B),
                              make_face({7, 8, 12, 11}, B),
                              make_face({1, 6, 11, 14}, B),
                          });
  }
  if (name == "tetrahedron") {
    return Polyhedron(4, {
                             make_face({1, 2, 3}, std::nullopt),
                             make_face({1, 2, 4}, std::nullopt),
                             make_face({1, 3, 4}, std::nullopt),
                             make_face({2, 3, 4}, std::nullopt),
                         });
  }
  throw Error("unknown builtin polyhedron '" + std::string(name) + "'");
}

Polyhedron read_polyhedron(std::istream& in) {
  std::optional<std::size_t> n_vertices;
  std::vector<Face> faces;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg, lineno);
    };
    std::vector<std::string> args;
    for (std::string tok; tokens >> tok;) args.push_back(tok);

    auto parse_index = [&](const std::string& tok) -> std::size_t {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        fail("expected an integer, got '" + tok + "'");
      }
      if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
      if (value < 1) fail("vertex indices are 1-based, got " + tok);
      return static_cast<std::size_t>(value);
    };

    if (keyword == "v") {
      if (n_vertices) fail("duplicate 'v' statement");
      if (!faces.empty()) fail("'v' must precede all faces");
      if (args.size() != 1) fail("'v' takes exactly one argument");
      n_vertices = parse_index(args[0]);
    } else if (keyword == "f") {
      if (!n_vertices) fail("'f' before 'v'");
      Face face;
      std::size_t first = 0;
      if (!args.empty() && (args[0] == "r" || args[0] == "g" || args[0] == "b")) {
        face.color = args[0] == "r" ? Color::red : args[0] == "g" ? Color::green : Color::blue;
        first = 1;
      }
      if (args.size() == first) fail("face has no vertices");
      for (std::size_t i = first; i < args.size(); ++i) face.vertices.push_back(parse_index(args[i]) - 1);
      faces.push_back(std::move(face));
    } else {
      fail("unknown statement '" + keyword + "'");
    }
  }
  if (!n_vertices) throw ParseError("missing 'v' statement", lineno == 0 ? 1 : lineno);
  return Polyhedron(*n_vertices, std::move(faces));
}

Polyhedron parse_polyhedron(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_polyhedron(in);
}

void write_polyhedron(std::ostream& out, const Polyhedron& p) {
  out << "v " << p.num_vertices() << '\n';
  for (const Face& f : p.faces()) {
    out << 'f';
    if (f.color) out << ' ' << to_char(*f.color);
    for (std::size_t v : f.vertices) out << ' ' << v + 1;
    out << '\n';
  }
}

std::string format_polyhedron(const Polyhedron& p) {
  std::ostringstream out;
  write_polyhedron(out, p);
  return out.str();
}

}  // namespace polycode
