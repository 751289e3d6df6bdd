#include <catch_amalgamated.hpp>

#include "gph/graph_symmetry.hpp"
#include "gph/symmetry.hpp"
#include "oracles.hpp"

using namespace gph;

namespace {

Graph k4_minus_edge() { return parse_graph("p=4; 1 2; 2 3; 3 1; 1 4; 2 4"); }

std::vector<Graph> battery() {
  return {star_graph(2), star_graph(3), star_graph(4), cycle_graph(3), cycle_graph(4), cycle_graph(5),
          path_graph(4), k4_minus_edge()};
}

}  // namespace

TEST_CASE("graph automorphisms match exhaustive search") {
  for (const Graph& g : battery()) {
    CHECK(graph_automorphisms(g).size() == oracle::graph_automorphisms(g).size());
  }
}

TEST_CASE("j-subgraph orbits match exhaustive search") {
  for (const Graph& g : battery()) {
    for (int j = 0; j <= g.q(); ++j) CHECK(j_subgraph_orbits(g, j).size() == oracle::j_subgraph_orbits(g, j));
  }
}

TEST_CASE("automorphism group order is p! |Aut G| for small graphs") {
  for (const Graph& g : {star_graph(2), star_graph(3), cycle_graph(3), cycle_graph(4), path_graph(3), path_graph(4)}) {
    INFO(to_edge_list(g));
    const FaceLattice lat = build_graphicahedron(g);
    const std::size_t brute = oracle::automorphism_count(lat.poset());
    CHECK(polytope_group_order(g) == brute);
    CHECK(all_polytope_automorphisms(g).size() == brute);
  }
}

TEST_CASE("automorphisms act on faces and preserve order") {
  const Graph g = cycle_graph(4);
  const FaceLattice lat = build_graphicahedron(g);
  for (const auto& a : polytope_automorphism_generators(g)) {
    std::vector<int> image(lat.size());
    for (std::size_t id = 1; id < lat.size(); ++id)
      image[id] = lat.id_of(act_on_face(g, a, lat.face(static_cast<int>(id))).edges,
                            act_on_face(g, a, lat.face(static_cast<int>(id))).rep);
    for (std::size_t x = 1; x < lat.size(); ++x)
      for (int y : lat.poset().up(static_cast<int>(x)))
        if (y != lat.top()) CHECK(lat.poset().covers(image[x], image[static_cast<std::size_t>(y)]));
  }
  const auto all = all_polytope_automorphisms(g);
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& a = all[i * 17 % all.size()];
    const auto& b = all[i * 31 % all.size()];
    const Face f = lat.face(5);
    CHECK(act_on_face(g, a * b, f) == act_on_face(g, a, act_on_face(g, b, f)));
    CHECK((a * a.inverse()).is_identity());
  }
}

TEST_CASE("regularity") {
  CHECK(is_regular(star_graph(2)));
  CHECK(is_regular(star_graph(3)));
  CHECK(is_regular(star_graph(4)));
  CHECK(is_regular(cycle_graph(3)));
  CHECK_FALSE(is_regular(cycle_graph(4)));
  CHECK_FALSE(is_regular(cycle_graph(5)));
  CHECK_FALSE(is_regular(path_graph(4)));
  for (const Graph& g : {star_graph(3), cycle_graph(3), cycle_graph(4), path_graph(4)}) {
    const FaceLattice lat = build_graphicahedron(g);
    const bool brute = oracle::automorphism_count(lat.poset()) == maximal_chains(lat.poset()).size();
    CHECK(is_regular(g) == brute);
  }
}

TEST_CASE("face transitivity routes agree over the battery") {
  for (const Graph& g : battery()) {
    INFO(to_edge_list(g));
    const SymmetryAnalysis sym(g);
    for (const auto& r : sym.transitivity_report()) {
      CHECK(r.routes_agree);
      CHECK(r.chain_agrees);
      CHECK(r.dual_agrees);
      CHECK(r.face_orbits == r.subgraph_orbits);
    }
    CHECK(sym.is_j_face_transitive(0));
    // Facets correspond to single deleted edges.
    CHECK(sym.is_j_face_transitive(g.q() - 1) == (oracle::j_subgraph_orbits(g, 1) == 1));
  }
  const SymmetryAnalysis c4(cycle_graph(4));
  CHECK(c4.is_j_face_transitive(1));
  CHECK_FALSE(c4.is_j_face_transitive(2));
}

TEST_CASE("distinguished generators of the star graphicahedron") {
  for (int q = 2; q <= 4; ++q) {
    const Graph g = star_graph(q);
    const auto rho = distinguished_generators(g);
    REQUIRE(rho.has_value());
    REQUIRE(rho->size() == static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < rho->size(); ++i) {
      CHECK(((*rho)[i] * (*rho)[i]).is_identity());
      CHECK_FALSE((*rho)[i].is_identity());
      for (std::size_t j = i + 2; j < rho->size(); ++j) CHECK((*rho)[i] * (*rho)[j] == (*rho)[j] * (*rho)[i]);
    }
    CHECK(generated_order(*rho, g.p()) == polytope_group_order(g));
  }
  CHECK_FALSE(distinguished_generators(cycle_graph(4)).has_value());
}

TEST_CASE("graph census agrees with the edge-subset oracle") {
  for (int q = 1; q <= 5; ++q) {
    const auto census = connected_graph_census(q);
    const auto expected = oracle::connected_graphs(q);
    CHECK(census.size() == expected.size());
    std::set<std::vector<std::pair<int, int>>> keys;
    for (const Graph& g : census) keys.insert(oracle::canonical_key(g, q + 1));
    CHECK(keys == expected);
  }
  CHECK(connected_graph_census(6).size() == 30);
  CHECK(connected_graph_census(7).size() == 79);
}

TEST_CASE("only stars are j-subgraph transitive in the middle ranks") {
  const CensusReport report = subgraph_transitivity_census(6);
  CHECK(report.ok());
  for (const auto& e : report.entries) {
    const int q = e.graph.q();
    for (int j = 0; j <= q; ++j)
      CHECK(e.orbit_counts[static_cast<std::size_t>(j)] == e.orbit_counts[static_cast<std::size_t>(q - j)]);
    bool middle = false;
    for (int j = 2; j <= q - 2; ++j) middle = middle || e.transitive[static_cast<std::size_t>(j)];
    if (middle) CHECK(e.star);
  }
  CHECK_THROWS_AS(subgraph_transitivity_census(8), CapExceeded);
  CHECK(to_csv(report).rfind("q,p,graph", 0) == 0);
  CHECK(to_json(report)["ok"] == true);
}
