#include <catch_amalgamated.hpp>

#include <set>

#include "gph/affine_coxeter.hpp"
#include "gph/torus.hpp"

using namespace gph;

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(-2, 3)) == "-2/3");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(floor_of(Rational(-1, 3)) == Rational(-1));
  CHECK(floor_of(Rational(7, 3)) == Rational(2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("fundamental vertices pair with the roots as a dual basis") {
  for (int q = 3; q <= 6; ++q) {
    const auto v = fundamental_vertices(q);
    const auto a = root_basis(q);
    for (int i = 1; i < q; ++i) {
      for (int j = 1; j < q; ++j) {
        const Rational expected(i == j ? 1 : 0);
        CHECK(dot(v[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(j - 1)]) == expected);
      }
    }
    CHECK(coordinate_sum(a[static_cast<std::size_t>(q - 1)]).numerator() == 0);
    RationalVector total = zero_vector(q);
    for (const auto& x : a) total = total + x;
    CHECK(total == zero_vector(q));
    for (const auto& x : v) CHECK(coordinate_sum(x).numerator() == 0);
    CHECK(v[static_cast<std::size_t>(q - 1)] == zero_vector(q));
  }
  const auto v3 = fundamental_vertices(3);
  CHECK(v3[0] == RationalVector{Rational(-2, 3), Rational(1, 3), Rational(1, 3)});
}

TEST_CASE("reflections are involutions fixing their mirrors") {
  for (int q = 3; q <= 5; ++q) {
    const auto v = fundamental_vertices(q);
    for (int i = 1; i <= q; ++i) {
      const AffineMap r = reflection(q, i);
      CHECK(r * r == AffineMap::identity(q));
      // r_i fixes every vertex of S except v_i.
      for (int k = 1; k <= q; ++k) {
        const auto& x = v[static_cast<std::size_t>(k - 1)];
        if (k == i) CHECK(r(x) != x);
        else CHECK(r(x) == x);
      }
    }
  }
  CHECK_THROWS_AS(reflection(3, 4), InvalidArgument);
  CHECK_THROWS_AS(fundamental_vertices(2), InvalidArgument);
}

TEST_CASE("translation identity") {
  for (int q = 3; q <= 5; ++q) CHECK(translation_identity_check(q));
}

TEST_CASE("dual lattice index and classes") {
  for (int q = 3; q <= 6; ++q) {
    CHECK(dual_lattice_index(q) == q);
    CHECK(dual_class_count(q) == q);
    // Multiples of v_1 run through the classes and q v_1 is a root vector.
    const auto v1 = fundamental_vertices(q)[0];
    std::set<RationalVector> seen;
    for (int k = 0; k < q; ++k) seen.insert(reduced_coordinates(q, Rational(k) * v1));
    CHECK(seen.size() == static_cast<std::size_t>(q));
    CHECK(reduced_coordinates(q, Rational(q) * v1) == RationalVector(static_cast<std::size_t>(q - 1), Rational(0)));
  }
}

TEST_CASE("chambers modulo the root lattice") {
  for (int q = 3; q <= 5; ++q) {
    const auto chambers = enumerate_chambers_mod_lattice(q);
    std::uint64_t fact = 1;
    for (int i = 2; i <= q; ++i) fact *= static_cast<std::uint64_t>(i);
    CHECK(chambers.size() == fact);
    std::set<std::vector<int>> marks;
    for (const auto& c : chambers) {
      marks.insert(c.mark.one_line());
      const Rational r2 = squared_distance(c.center, c.vertex.front());
      for (const auto& x : c.vertex) CHECK(squared_distance(c.center, x) == r2);
      CHECK(coordinate_sum(c.center).numerator() == 0);
      CHECK(voronoi_vertex_check(q, c));
    }
    CHECK(marks.size() == fact);
  }
  CHECK_THROWS_AS(enumerate_chambers_mod_lattice(4, 10), CapExceeded);
}

TEST_CASE("circumcenter of the fundamental simplex") {
  const auto v = fundamental_vertices(4);
  CHECK(circumcenter(v) == RationalVector{Rational(-3, 8), Rational(-1, 8), Rational(1, 8), Rational(3, 8)});
  // For q = 3 it is the barycenter.
  const auto w = fundamental_vertices(3);
  CHECK(circumcenter(w) == Rational(1, 3) * (w[0] + w[1] + w[2]));
}

TEST_CASE("torus tessellation counts") {
  const std::vector<std::vector<std::size_t>> expected{{6, 9, 3}, {24, 48, 28, 4}, {120, 300, 250, 75, 5}};
  for (int q = 3; q <= 5; ++q) {
    const TorusTessellation t = build_torus_tessellation(q);
    CHECK(t.f_vector() == expected[static_cast<std::size_t>(q - 3)]);
    const auto checks = check_tessellation(t);
    CHECK(checks.face_to_face);
    CHECK(checks.vertex_in_q_tiles);
    CHECK(checks.tiles_are_permutahedra);
    CHECK(checks.tiles == static_cast<std::size_t>(q));
    std::set<int> classes(t.tile_class().begin(), t.tile_class().end());
    CHECK(classes.size() == static_cast<std::size_t>(q));
    CHECK(verify_polytope_axioms(t.poset()).ok());
  }
}

TEST_CASE("torus flags number (q!)^2") {
  CHECK(check_tessellation(build_torus_tessellation(3)).flags == 36);
  CHECK(check_tessellation(build_torus_tessellation(4)).flags == 576);
  CHECK(check_tessellation(build_torus_tessellation(5)).flags == 14400);
}

TEST_CASE("explicit map to the C_q graphicahedron is an isomorphism") {
  for (int q = 3; q <= 5; ++q) {
    INFO(q);
    const auto r = torus_isomorphism(q, q <= 4);
    CHECK(r.well_defined);
    CHECK(r.rank_preserving);
    CHECK(r.bijective);
    CHECK(r.order_isomorphism);
    if (q <= 4) CHECK(r.search_confirms);
    CHECK(r.ok());
  }
}

TEST_CASE("using the mark instead of its inverse is not well defined") {
  const TorusTessellation t = build_torus_tessellation(4);
  const FaceLattice lat = build_graphicahedron(cycle_graph(4));
  bool consistent = true;
  for (const auto& f : t.faces()) {
    const int first = lat.id_of(f.labels, t.chambers()[static_cast<std::size_t>(f.chambers.front())].mark);
    for (int c : f.chambers)
      consistent = consistent && lat.id_of(f.labels, t.chambers()[static_cast<std::size_t>(c)].mark) == first;
  }
  CHECK_FALSE(consistent);
}

TEST_CASE("torus JSON round trip") {
  for (int q = 3; q <= 4; ++q) {
    const TorusGeometry g = torus_geometry(build_torus_tessellation(q));
    const auto text = to_json(g).dump();
    CHECK(torus_geometry_from_json(nlohmann::json::parse(text)) == g);
    CHECK(g.vertices.size() == (q == 3 ? 6u : 24u));
    CHECK(g.tiles.size() == static_cast<std::size_t>(q));
  }
  CHECK_THROWS_AS(torus_geometry_from_json(nlohmann::json::parse("{\"q\": 3}")), ParseError);
  CHECK_THROWS_AS(torus_geometry_from_json(nlohmann::json::parse(
                      R"({"q": 3, "vertices": [{"coords": ["1", "0", "0"], "mark": [1, 2, 3]}], "faces": [], "tiles": []})")),
                  ParseError);
}

TEST_CASE("OFF export") {
  const std::string off3 = export_off(build_torus_tessellation(3));
  CHECK(off3.rfind("OFF\n", 0) == 0);
  CHECK(off3 == export_off(build_torus_tessellation(3)));
  CHECK(off3.find("# identify torus vertex 5:") != std::string::npos);
  const std::string off4 = export_off(build_torus_tessellation(4));
  CHECK(off4.find("4 tiles, 24 torus vertices") != std::string::npos);
  CHECK_THROWS_AS(export_off(build_torus_tessellation(5)), InvalidArgument);
  CHECK_THROWS_AS(build_torus_tessellation(2), InvalidArgument);
}
