#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gph/error.hpp"
#include "gph/graph.hpp"
#include "gph/permgroup.hpp"
#include "gph/permutation.hpp"

namespace gph {

/// All adjacency-preserving vertex permutations of g, in lexicographic order
/// of their one-line words. Backtracks over vertex images with degree
/// pruning.
inline std::vector<Permutation> graph_automorphisms(const Graph& g,
                                                    int max_degree = Caps::automorphism_degree) {
  const int p = g.p();
  if (p > max_degree) {
    throw CapExceeded("automorphism search limited to p <= " + std::to_string(max_degree));
  }
  std::vector<int> deg(static_cast<std::size_t>(p + 1));
  for (int v = 1; v <= p; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

  std::vector<Permutation> out;
  std::vector<int> image(static_cast<std::size_t>(p + 1), 0);
  std::vector<bool> used(static_cast<std::size_t>(p + 1), false);

  auto extend = [&](auto&& self, int v) -> void {
    if (v > p) {
      out.push_back(Permutation::from_one_line({image.begin() + 1, image.end()}));
      return;
    }
    for (int w = 1; w <= p; ++w) {
      if (used[static_cast<std::size_t>(w)] || deg[static_cast<std::size_t>(w)] != deg[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u) {
        ok = g.adjacent(u, v) == g.adjacent(image[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      self(self, v + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  extend(extend, 1);
  return out;
}

/// Edge permutation induced by a graph automorphism: result[k-1] is the
/// index of kappa(e_k).
inline std::vector<int> induced_edge_map(const Graph& g, const Permutation& kappa) {
  std::vector<int> out(static_cast<std::size_t>(g.q()));
  for (int k = 1; k <= g.q(); ++k) {
    const Edge& e = g.edge(k);
    const int image = g.edge_index(kappa(e.u), kappa(e.v));
    if (image == 0) throw InvalidArgument("permutation is not a graph automorphism");
    out[static_cast<std::size_t>(k - 1)] = image;
  }
  return out;
}

inline EdgeSubset apply_edge_map(const std::vector<int>& edge_map, EdgeSubset k) {
  EdgeSubset out;
  for (int e : k.members()) out.insert(edge_map[static_cast<std::size_t>(e - 1)]);
  return out;
}

inline EdgeSubset act_on_edges(const Graph& g, const Permutation& kappa, EdgeSubset k) {
  return apply_edge_map(induced_edge_map(g, kappa), k);
}

/// Orbits of the j-element edge subsets under the automorphism group.
/// Each orbit is sorted in EdgeSubset order; orbits are ordered by their
/// least member.
inline std::vector<std::vector<EdgeSubset>> j_subgraph_orbits(
    const Graph& g, int j, const std::vector<Permutation>& automorphisms) {
  if (j < 0 || j > g.q()) throw InvalidArgument("j out of range 0..q");
  std::vector<std::vector<int>> maps;
  for (const auto& a : automorphisms) maps.push_back(induced_edge_map(g, a));

  std::vector<EdgeSubset> subsets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.q()); ++m) {
    if (std::popcount(m) == j) subsets.emplace_back(static_cast<std::uint32_t>(m));
  }
  std::sort(subsets.begin(), subsets.end());

  std::map<std::uint32_t, bool> assigned;
  std::vector<std::vector<EdgeSubset>> orbits;
  auto act = [](EdgeSubset k, const std::vector<int>& map) { return apply_edge_map(map, k); };
  struct MaskHash {
    std::size_t operator()(EdgeSubset s) const { return std::hash<std::uint32_t>{}(s.mask()); }
  };
  for (EdgeSubset s : subsets) {
    if (assigned.contains(s.mask())) continue;
    auto orb = orbit<EdgeSubset, std::vector<int>>(s, maps, act, Caps::closure, MaskHash{});
    std::sort(orb.begin(), orb.end());
    for (EdgeSubset t : orb) assigned[t.mask()] = true;
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

inline std::vector<std::vector<EdgeSubset>> j_subgraph_orbits(const Graph& g, int j) {
  return j_subgraph_orbits(g, j, graph_automorphisms(g));
}

inline bool is_j_subgraph_transitive(const Graph& g, int j,
                                     const std::vector<Permutation>& automorphisms) {
  return j_subgraph_orbits(g, j, automorphisms).size() == 1;
}

inline bool is_j_subgraph_transitive(const Graph& g, int j) {
  return is_j_subgraph_transitive(g, j, graph_automorphisms(g));
}

/// Isomorphism-invariant fingerprint: the least sorted edge list over all
/// relabelings that order vertices by a degree-based invariant.
struct CanonicalForm {
  int p = 0;
  std::vector<Edge> edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "p=" << p;
    for (const Edge& e : edges) os << "; " << e.u << ' ' << e.v;
    return os.str();
  }

  Graph graph() const { return Graph(p, edges); }
};

inline CanonicalForm canonical_form(const Graph& g, int max_degree = Caps::canonical_degree) {
  const int p = g.p();
  if (p > max_degree) {
    throw CapExceeded("canonical form limited to p <= " + std::to_string(max_degree));
  }
  // Vertex invariant: degree, then the sorted neighbour degrees.
  using Invariant = std::pair<int, std::vector<int>>;
  std::vector<Invariant> inv(static_cast<std::size_t>(p + 1));
  for (int v = 1; v <= p; ++v) {
    std::vector<int> nd;
    for (int w = 1; w <= p; ++w)
      if (g.adjacent(v, w)) nd.push_back(g.degree(w));
    std::sort(nd.rbegin(), nd.rend());
    inv[static_cast<std::size_t>(v)] = {g.degree(v), std::move(nd)};
  }
  std::vector<int> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inv[static_cast<std::size_t>(a)] > inv[static_cast<std::size_t>(b)];
  });
  // Class boundaries in `order`.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && inv[static_cast<std::size_t>(order[j])] == inv[static_cast<std::size_t>(order[i])]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  CanonicalForm best;
  best.p = p;
  bool have_best = false;
  std::vector<int> label(static_cast<std::size_t>(p + 1));
  std::vector<Edge> relabeled(g.edges().size());

  auto evaluate = [&] {
    for (std::size_t i = 0; i < order.size(); ++i) label[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      int a = label[static_cast<std::size_t>(g.edges()[k].u)];
      int b = label[static_cast<std::size_t>(g.edges()[k].v)];
      if (a > b) std::swap(a, b);
      relabeled[k] = {a, b};
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (!have_best || relabeled < best.edges) {
      best.edges = relabeled;
      have_best = true;
    }
  };
  auto permute_class = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(classes[c].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(classes[c].second);
    std::sort(first, last);
    do {
      self(self, c + 1);
    } while (std::next_permutation(first, last));
  };
  permute_class(permute_class, 0);
  return best;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  return a.p() == b.p() && a.q() == b.q() && canonical_form(a) == canonical_form(b);
}

inline bool is_star(const Graph& g) { return g.q() >= 1 && is_isomorphic(g, star_graph(g.q())); }

/// Connected graphs with exactly q edges and at most p_max vertices, one per
/// isomorphism class, each given by its canonical form, ordered by
/// (p, canonical edge list).
///
/// Built by growing the (q-1)-edge census: every connected graph with q >= 2
/// edges arises from a connected graph with q-1 edges by adding an edge
/// between existing vertices or a pendant edge to a new vertex (delete a
/// cycle edge, or a leaf edge of a tree).
inline std::vector<Graph> connected_graph_census(int q, int p_max = -1,
                                                 int max_edges = Caps::census_edges) {
  if (q < 1) throw InvalidArgument("census needs q >= 1");
  if (q > max_edges) {
    throw CapExceeded("census limited to q <= " + std::to_string(max_edges));
  }
  std::map<CanonicalForm, bool> level;
  level[canonical_form(Graph(2, {{1, 2}}))] = true;
  for (int m = 2; m <= q; ++m) {
    std::map<CanonicalForm, bool> next;
    for (const auto& [form, unused] : level) {
      const Graph g = form.graph();
      for (int u = 1; u <= g.p(); ++u) {
        for (int v = u + 1; v <= g.p(); ++v) {
          if (g.adjacent(u, v)) continue;
          auto edges = g.edges();
          edges.push_back({u, v});
          next[canonical_form(Graph(g.p(), edges))] = true;
        }
        auto edges = g.edges();
        edges.push_back({u, g.p() + 1});
        next[canonical_form(Graph(g.p() + 1, edges))] = true;
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& [form, unused] : level) {
    if (p_max < 0 || form.p <= p_max) out.push_back(form.graph());
  }
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return a.p() < b.p();
  });
  return out;
}

}  // namespace gph
