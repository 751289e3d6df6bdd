#include <catch_amalgamated.hpp>

#include "gph/graphicahedron.hpp"
#include "oracles.hpp"

using namespace gph;

namespace {

Graph k4_minus_edge() { return parse_graph("p=4; 1 2; 2 3; 3 1; 1 4; 2 4"); }

}  // namespace

TEST_CASE("f-vectors agree with brute-force coset listing") {
  for (const Graph& g : {star_graph(2), star_graph(3), cycle_graph(3), cycle_graph(4), path_graph(3), path_graph(4),
                         k4_minus_edge()}) {
    const FaceLattice lat = build_graphicahedron(g);
    const auto expected = oracle::f_vector(g);
    CHECK(lat.f_vector() == expected);
    const auto formula = graphicahedron_f_vector_formula(g);
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(formula[i] == expected[i]);
  }
}

TEST_CASE("known face vectors") {
  CHECK(build_graphicahedron(star_graph(2)).f_vector() == std::vector<std::size_t>{6, 6});
  CHECK(build_graphicahedron(star_graph(3)).f_vector() == std::vector<std::size_t>{24, 36, 12});
  CHECK(build_graphicahedron(cycle_graph(3)).f_vector() == std::vector<std::size_t>{6, 9, 3});
  CHECK(build_graphicahedron(cycle_graph(4)).f_vector() == std::vector<std::size_t>{24, 48, 28, 4});
  CHECK(build_graphicahedron(star_graph(4)).f_vector() == std::vector<std::size_t>{120, 240, 120, 20});
}

TEST_CASE("face order agrees with coset inclusion") {
  const Graph g = cycle_graph(3);
  const FaceLattice lat = build_graphicahedron(g);
  std::vector<std::set<Permutation>> cosets(lat.size());
  for (std::size_t id = 1; id < lat.size(); ++id) {
    const Face& f = lat.face(static_cast<int>(id));
    for (const auto& c : oracle::right_cosets(g, f.edges.mask()))
      if (c.contains(f.rep)) cosets[id] = c;
    REQUIRE_FALSE(cosets[id].empty());
  }
  for (std::size_t a = 1; a < lat.size(); ++a) {
    for (std::size_t b = 1; b < lat.size(); ++b) {
      const bool expected = oracle::face_leq(lat.face(static_cast<int>(a)).edges.mask(), cosets[a],
                                             lat.face(static_cast<int>(b)).edges.mask(), cosets[b]);
      CHECK(face_leq(lat, static_cast<int>(a), static_cast<int>(b)) == expected);
      CHECK(lat.poset().leq(static_cast<int>(a), static_cast<int>(b)) == expected);
    }
  }
}

TEST_CASE("flag counts are p! q!") {
  for (const Graph& g : {star_graph(2), star_graph(3), cycle_graph(3), cycle_graph(4), path_graph(4), k4_minus_edge()}) {
    const FaceLattice lat = build_graphicahedron(g);
    const auto expected = detail::factorial(g.p()) * detail::factorial(g.q());
    CHECK(enumerate_flags(lat).size() == expected);
    CHECK(maximal_chains(lat.poset()).size() == expected);
  }
}

TEST_CASE("flags as (ordering, alpha) match maximal chains") {
  const Graph g = cycle_graph(3);
  const FaceLattice lat = build_graphicahedron(g);
  const auto flags = enumerate_flags(g);
  std::set<Chain> chains;
  for (const auto& f : flags) {
    const Chain c = flag_chain(lat, f);
    chains.insert(c);
    CHECK(chain_flag(lat, c) == f);
    for (int j = 0; j < g.q(); ++j) {
      const Flag adj = adjacent_flag(g, f, j);
      CHECK(adj != f);
      CHECK(adjacent_flag(g, adj, j) == f);
      CHECK(flag_chain(lat, adj) == *adjacent_flag(lat.poset(), c, j));
    }
  }
  CHECK(chains.size() == flags.size());
  CHECK(build_graph_flag_graph(g).component_count() == 1);
}

TEST_CASE("graphicahedra satisfy the polytope axioms") {
  for (const Graph& g : {star_graph(2), star_graph(3), star_graph(4), cycle_graph(3), cycle_graph(4), cycle_graph(5),
                         path_graph(4), k4_minus_edge()}) {
    const auto report = verify_polytope_axioms(build_graphicahedron(g));
    INFO(to_edge_list(g));
    CHECK(report.ok());
    CHECK(report.flag_count == detail::factorial(g.p()) * detail::factorial(g.q()));
  }
}

TEST_CASE("Schlafli types, Euler characteristic and simplicity") {
  const FaceLattice hexagon = build_graphicahedron(star_graph(2));
  CHECK(schlafli_string(schlafli_type(hexagon)) == "{6}");
  const FaceLattice k13 = build_graphicahedron(star_graph(3));
  CHECK(schlafli_string(schlafli_type(k13)) == "{6, 3}");
  CHECK(euler_characteristic(k13) == 0);
  const FaceLattice c3 = build_graphicahedron(cycle_graph(3));
  CHECK(schlafli_string(schlafli_type(c3)) == "{6, 3}");
  CHECK(euler_characteristic(c3) == 0);
  const FaceLattice c4 = build_graphicahedron(cycle_graph(4));
  CHECK_FALSE(schlafli_type(c4).has_value());
  CHECK(schlafli_string(schlafli_type(build_graphicahedron(star_graph(4)))) == "{6, 3, 3}");
  for (const FaceLattice* lat : {&hexagon, &k13, &c3, &c4}) CHECK(is_simple(*lat));
}

TEST_CASE("facets of the C_4 graphicahedron are permutahedra") {
  const FaceLattice lat = build_graphicahedron(cycle_graph(4));
  const auto& facets = lat.poset().at_rank(3);
  REQUIRE(facets.size() == 4);
  const FaceLattice p3 = build_graphicahedron(path_graph(3));
  for (int f : facets) {
    const Section s = section(lat, lat.bottom(), f);
    CHECK(s.poset.at_rank(0).size() == 24);
    CHECK(s.poset.f_vector(0, 2) == std::vector<std::size_t>{24, 36, 14});
    CHECK(poset_isomorphism(s.poset, p3.poset()).has_value());
  }
}

TEST_CASE("construction rejects disconnected graphs and honours the cap") {
  CHECK_THROWS_AS(build_graphicahedron(parse_graph("p=4; 1 2; 3 4")), InvalidArgument);
  CHECK_THROWS_AS(build_graphicahedron(star_graph(4), 100), CapExceeded);
}

TEST_CASE("JSON and DOT exports are deterministic") {
  const FaceLattice lat = build_graphicahedron(cycle_graph(3));
  const auto j = to_json(lat);
  CHECK(j["faces"].size() == lat.size());
  CHECK(j.dump() == to_json(build_graphicahedron(cycle_graph(3))).dump());
  CHECK(hasse_dot(lat).find("digraph") == 0);
  CHECK(flag_graph_dot(lat).find("graph") != std::string::npos);
}
