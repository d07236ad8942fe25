#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "polycode/error.hpp"
#include "polycode/polyhedron.hpp"
#include "rd_fixture.hpp"

using namespace polycode;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const Polyhedron& p) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : edges(p)) out.emplace(e.u, e.v);
  return out;
}

// Sphere triangulation grown from a tetrahedron by random stellar subdivisions.
Polyhedron random_triangulation(std::mt19937_64& rng, std::size_t extra_vertices) {
  std::vector<std::vector<std::size_t>> faces = {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}};
  std::size_t nv = 4;
  for (std::size_t i = 0; i < extra_vertices; ++i) {
    const std::size_t f = rng() % faces.size();
    const auto tri = faces[f];
    const std::size_t v = nv++;
    faces[f] = {tri[0], tri[1], v};
    faces.push_back({tri[1], tri[2], v});
    faces.push_back({tri[2], tri[0], v});
  }
  std::vector<Face> out;
  for (auto& f : faces) out.push_back(Face{f, std::nullopt});
  return Polyhedron(nv, std::move(out));
}

bool proper(const Polyhedron& p) {
  for (const Edge& e : edges(p)) {
    if (p.face(e.faces[0]).color == p.face(e.faces[1]).color) return false;
  }
  return true;
}

}  // namespace

TEST(polyhedron, validate_rhombic_dodecahedron) {
  const PolyStats s = validate(builtin("rhombic_dodecahedron"));
  EXPECT_EQ(s.vertices, 14u);
  EXPECT_EQ(s.edges, 24u);
  EXPECT_EQ(s.faces, 12u);
  EXPECT_EQ(s.degree_histogram, (std::map<std::size_t, std::size_t>{{3, 8}, {4, 6}}));
  EXPECT_EQ(s.twist_count, 8u);
  EXPECT_EQ(s.euler_characteristic, 2);
}

TEST(polyhedron, validate_cube) {
  const PolyStats s = validate(builtin("cube"));
  EXPECT_EQ(s.vertices, 8u);
  EXPECT_EQ(s.edges, 12u);
  EXPECT_EQ(s.faces, 6u);
  EXPECT_EQ(s.degree_histogram, (std::map<std::size_t, std::size_t>{{3, 8}}));
  EXPECT_EQ(s.twist_count, 8u);
}

TEST(polyhedron, two_triangles_on_one_support_close_up) {
  const PolyStats s = validate(parse_polyhedron("v 3\nf 1 2 3\nf 1 3 2\n"));
  EXPECT_EQ(s.edges, 3u);
  EXPECT_EQ(s.euler_characteristic, 2);
}

TEST(polyhedron, open_surface_rejected_naming_edge) {
  // Cube with the top face removed.
  const Polyhedron p = parse_polyhedron("v 8\nf 1 3 7 5\nf 2 4 8 6\nf 1 2 6 5\nf 3 4 8 7\nf 1 2 4 3\n");
  try {
    validate(p);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()), "edge {5,7} is shared by 1 face(s), expected 2");
  }
}

TEST(polyhedron, validation_errors) {
  EXPECT_THROW(validate(parse_polyhedron("v 4\nf 1 2 5\n")), ValidationError);
  EXPECT_THROW(validate(parse_polyhedron("v 4\nf 1 2 2 3\n")), ValidationError);
  EXPECT_THROW(validate(parse_polyhedron("v 4\nf 1 2\n")), ValidationError);
  EXPECT_THROW(validate(parse_polyhedron("v 5\nf 1 2 3\nf 1 2 4\nf 1 3 4\nf 2 3 4\n")), ValidationError);
  // 3x3 quad torus: every edge on two faces, Euler characteristic 0.
  std::string torus = "v 9\n";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      auto id = [](int rr, int cc) { return std::to_string(1 + ((rr + 3) % 3) * 3 + (cc + 3) % 3); };
      torus += "f " + id(r, c) + " " + id(r, c + 1) + " " + id(r + 1, c + 1) + " " + id(r + 1, c) + "\n";
    }
  }
  try {
    validate(parse_polyhedron(torus));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("Euler characteristic V - E + F = 0"), std::string::npos);
  }
}

TEST(polyhedron, rd_faces_are_check_supports) {
  const Polyhedron rd = builtin("rhombic_dodecahedron");
  ASSERT_EQ(rd.num_faces(), fixture::kRdChecks.size());
  for (std::size_t f = 0; f < rd.num_faces(); ++f) {
    const std::string& row = fixture::kRdChecks[f];
    std::vector<std::size_t> support;
    char letter = 'I';
    for (std::size_t q = 0; q < row.size(); ++q) {
      if (row[q] != 'I') {
        support.push_back(q);
        letter = row[q];
      }
    }
    auto face = rd.face(f).vertices;
    std::sort(face.begin(), face.end());
    EXPECT_EQ(face, support) << "face " << f + 1;
    const Color expected = letter == 'X' ? Color::red : letter == 'Y' ? Color::green : Color::blue;
    EXPECT_EQ(rd.face(f).color, expected);
  }
}

TEST(polyhedron, rd_cycle_orders_are_the_unique_valid_assignment) {
  std::vector<std::array<int, 4>> supports;
  for (const auto& row : fixture::kRdChecks) {
    std::array<int, 4> s{};
    int k = 0;
    for (std::size_t q = 0; q < row.size(); ++q) {
      if (row[q] != 'I') s[k++] = static_cast<int>(q);
    }
    supports.push_back(s);
  }
  const auto solutions = oracle::quad_cycle_solutions(supports);
  ASSERT_EQ(solutions.size(), 1u);

  std::vector<Face> faces;
  for (const auto& cyc : solutions[0]) faces.push_back(Face{{cyc.begin(), cyc.end()}, std::nullopt});
  const Polyhedron searched(14, faces);
  EXPECT_EQ(edge_set(searched), edge_set(builtin("rhombic_dodecahedron")));
}

TEST(polyhedron, unknown_builtin) { EXPECT_THROW(builtin("icosahedron"), Error); }

TEST(polyhedron, face_adjacency_rd_is_four_regular) {
  const Polyhedron rd = builtin("rhombic_dodecahedron");
  const FaceGraph g = face_adjacency(rd);
  for (std::size_t f = 0; f < g.size(); ++f) {
    ASSERT_EQ(g[f].size(), 4u);
    // Brute force: faces are adjacent iff some cyclic edge of one is a cyclic edge of the other.
    for (std::size_t h = 0; h < g.size(); ++h) {
      bool shares = false;
      const auto& a = rd.face(f).vertices;
      const auto& b = rd.face(h).vertices;
      for (std::size_t i = 0; i < a.size() && h != f; ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          const auto ea = std::minmax(a[i], a[(i + 1) % a.size()]);
          const auto eb = std::minmax(b[j], b[(j + 1) % b.size()]);
          shares = shares || ea == eb;
        }
      }
      ASSERT_EQ(std::binary_search(g[f].begin(), g[f].end(), h), shares);
    }
  }
}

TEST(polyhedron, face_adjacency_cube_and_tetrahedron) {
  const FaceGraph cube = face_adjacency(builtin("cube"));
  for (std::size_t f = 0; f < 6; ++f) {
    ASSERT_EQ(cube[f].size(), 4u);
    // Builtin lists opposite faces consecutively: (0,1), (2,3), (4,5).
    const std::size_t opposite = f ^ 1u;
    ASSERT_FALSE(std::binary_search(cube[f].begin(), cube[f].end(), opposite));
  }
  const FaceGraph tet = face_adjacency(builtin("tetrahedron"));
  for (std::size_t f = 0; f < 4; ++f) ASSERT_EQ(tet[f].size(), 3u);
}

TEST(polyhedron, color_rd_gives_equators) {
  const Polyhedron rd = builtin("rhombic_dodecahedron");
  const Polyhedron colored = color_faces(rd.without_colors());
  ASSERT_TRUE(proper(colored));
  std::map<Color, int> sizes;
  for (const Face& f : colored.faces()) ++sizes[*f.color];
  EXPECT_EQ(sizes, (std::map<Color, int>{{Color::red, 4}, {Color::green, 4}, {Color::blue, 4}}));
  EXPECT_EQ(colored, rd);

  std::size_t count = for_each_coloring(rd, [&](const std::vector<Color>& c) {
    EXPECT_TRUE(proper(rd.with_colors(c)));
    return true;
  });
  std::size_t brute = 0;
  std::vector<Color> c(rd.num_faces());
  for (int code = 0; code < 531441; ++code) {
    for (int f = 0, r = code; f < 12; ++f, r /= 3) c[f] = static_cast<Color>(r % 3);
    brute += proper(rd.with_colors(c));
  }
  EXPECT_EQ(count, brute);
  EXPECT_EQ(count, 24u);
}

TEST(polyhedron, color_cube_pairs_opposite_faces) {
  const Polyhedron colored = color_faces(builtin("cube").without_colors());
  ASSERT_TRUE(proper(colored));
  for (std::size_t f = 0; f < 6; f += 2) EXPECT_EQ(colored.face(f).color, colored.face(f + 1).color);
}

TEST(polyhedron, tetrahedron_is_not_three_colorable) {
  try {
    color_faces(builtin("tetrahedron"));
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_NE(std::string(e.what()).find("K4"), std::string::npos);
  }
}

TEST(polyhedron, octahedron_obstruction_reported) {
  // Octahedron faces form a cube graph, which is bipartite, so it colors.
  const Polyhedron octa = parse_polyhedron(
      "v 6\nf 1 2 3\nf 1 3 4\nf 1 4 5\nf 1 5 2\nf 6 3 2\nf 6 4 3\nf 6 5 4\nf 6 2 5\n");
  validate(octa);
  EXPECT_TRUE(proper(color_faces(octa)));
  // Square pyramid plus stellated square: base face sees an odd wheel.
  const Polyhedron pyramid = parse_polyhedron("v 6\nf 1 2 3 4 5\nf 6 1 2\nf 6 2 3\nf 6 3 4\nf 6 4 5\nf 6 5 1\n");
  validate(pyramid);
  try {
    color_faces(pyramid);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_NE(std::string(e.what()).find("odd wheel"), std::string::npos) << e.what();
  }
}

TEST(polyhedron, rhombify_cube_is_rhombic_dodecahedron) {
  const Polyhedron r = rhombify(builtin("cube"));
  const PolyStats s = validate(r);
  EXPECT_EQ(s.vertices, 14u);
  EXPECT_EQ(s.edges, 24u);
  EXPECT_EQ(s.faces, 12u);
  for (const Face& f : r.faces()) EXPECT_EQ(f.vertices.size(), 4u);
  const auto iso = find_isomorphism(r, builtin("rhombic_dodecahedron"));
  ASSERT_TRUE(iso.has_value());
}

TEST(polyhedron, rhombify_tetrahedron_is_cube) {
  const Polyhedron r = rhombify(builtin("tetrahedron"));
  const PolyStats s = validate(r);
  EXPECT_EQ(s.vertices, 8u);
  EXPECT_EQ(s.edges, 12u);
  EXPECT_EQ(s.faces, 6u);
  for (const Face& f : r.faces()) EXPECT_EQ(f.vertices.size(), 4u);
  EXPECT_TRUE(find_isomorphism(r, builtin("cube")).has_value());
}

TEST(polyhedron, rhombify_rejects_invalid_input) {
  EXPECT_THROW(rhombify(parse_polyhedron("v 4\nf 1 2 3\n")), ValidationError);
}

TEST(polyhedron, isomorphism_negative_cases) {
  EXPECT_FALSE(find_isomorphism(builtin("cube"), builtin("rhombic_dodecahedron")).has_value());
  // Hexagonal bipyramid: 8 vertices, 12 triangles.
  std::string bipyramid = "v 8\n";
  for (int i = 0; i < 6; ++i) {
    const int a = 1 + i;
    const int b = 1 + (i + 1) % 6;
    bipyramid += "f 7 " + std::to_string(a) + " " + std::to_string(b) + "\n";
    bipyramid += "f 8 " + std::to_string(b) + " " + std::to_string(a) + "\n";
  }
  const Polyhedron bp = parse_polyhedron(bipyramid);
  validate(bp);
  EXPECT_FALSE(find_isomorphism(builtin("cube"), bp).has_value());
  // A relabelled RD is still isomorphic.
  const Polyhedron rd = builtin("rhombic_dodecahedron");
  std::vector<Face> shuffled = rd.faces();
  for (auto& f : shuffled) {
    for (auto& v : f.vertices) v = 13 - v;
  }
  std::reverse(shuffled.begin(), shuffled.end());
  EXPECT_TRUE(find_isomorphism(rd, Polyhedron(14, shuffled)).has_value());
}

TEST(polyhedron_properties, rhombify_counts_and_degrees) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Polyhedron p = random_triangulation(rng, rng() % 12);
    if (trial % 3 == 0) p = rhombify(p);  // quadrangulations too
    const PolyStats before = validate(p);
    const Polyhedron r = rhombify(p);
    const PolyStats after = validate(r);
    ASSERT_EQ(after.vertices, before.vertices + before.faces);
    ASSERT_EQ(after.faces, before.edges);
    ASSERT_EQ(after.edges, 2 * before.edges);
    const auto deg_before = vertex_degrees(p);
    const auto deg_after = vertex_degrees(r);
    for (std::size_t v = 0; v < p.num_vertices(); ++v) ASSERT_EQ(deg_after[v], deg_before[v]);
    for (std::size_t f = 0; f < p.num_faces(); ++f) {
      ASSERT_EQ(deg_after[p.num_vertices() + f], p.face(f).vertices.size());
    }
  }
}

TEST(polyhedron_properties, colorings_are_proper) {
  std::mt19937_64 rng(32);
  int colored = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Polyhedron p = rhombify(random_triangulation(rng, rng() % 10));
    try {
      ASSERT_TRUE(proper(color_faces(p)));
      ++colored;
    } catch (const InfeasibleError&) {
    }
  }
  EXPECT_GT(colored, 0);
}

TEST(polyhedron_io, round_trip) {
  for (const auto& name : builtin_names()) {
    const Polyhedron p = builtin(name);
    EXPECT_EQ(parse_polyhedron(format_polyhedron(p)), p) << name;
  }
}

TEST(polyhedron_io, golden_rd_file) {
  const Polyhedron golden = parse_polyhedron(read_file(std::string(POLYCODE_GOLDEN_DIR) + "/rd.poly"));
  EXPECT_EQ(golden, builtin("rhombic_dodecahedron"));
  EXPECT_EQ(format_polyhedron(golden), read_file(std::string(POLYCODE_GOLDEN_DIR) + "/rd.poly"));
}

TEST(polyhedron_io, comments_whitespace_and_colors) {
  const Polyhedron p = parse_polyhedron("# a cube\n\n  v 8   # eight\nf r 1 3 7 5\nf\tr 2 4 8 6\n"
                                        "f g 1 2 6 5\nf g 3 4 8 7\nf b 1 2 4 3\nf b 5 6 8 7\n");
  EXPECT_EQ(p, builtin("cube"));
}

TEST(polyhedron_io, parse_errors_carry_line_numbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_polyhedron(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(line_of("f 1 2 3\n"), 1u);
  EXPECT_EQ(line_of("v 4\nv 4\n"), 2u);
  EXPECT_EQ(line_of("v 4\nf 1 2 x\n"), 2u);
  EXPECT_EQ(line_of("v 4\n\nf 0 1 2\n"), 3u);
  EXPECT_EQ(line_of("v 4\nq 1\n"), 2u);
  EXPECT_EQ(line_of("v 4\nf r\n"), 2u);
  EXPECT_EQ(line_of("# nothing\n"), 1u);
}
