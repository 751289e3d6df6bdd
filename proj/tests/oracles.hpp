#pragma once

// Brute-force reference computations used only by the tests. They share
// nothing with the library beyond the Permutation, Graph and RankedPoset
// value types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gph/graph.hpp"
#include "gph/permutation.hpp"
#include "gph/poset.hpp"

namespace oracle {

using gph::Graph;
using gph::Permutation;

inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Subgroup generated by `gens`: multiply until nothing new appears.
inline std::set<Permutation> naive_closure(int n, const std::vector<Permutation>& gens) {
  std::set<Permutation> group{Permutation::identity(n)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> snapshot(group.begin(), group.end());
    for (const auto& a : snapshot)
      for (const auto& g : gens) grew = group.insert(a * g).second || grew;
  }
  return group;
}

inline std::vector<Permutation> edge_generators(const Graph& g, std::uint32_t mask) {
  std::vector<Permutation> gens;
  for (int k = 1; k <= g.q(); ++k)
    if (mask >> (k - 1) & 1u) gens.push_back(Permutation::transposition(g.p(), g.edge(k).u, g.edge(k).v));
  return gens;
}

/// The right cosets T_K alpha of one edge subset, each as a sorted element set.
inline std::set<std::set<Permutation>> right_cosets(const Graph& g, std::uint32_t mask) {
  const auto tk = naive_closure(g.p(), edge_generators(g, mask));
  std::set<std::set<Permutation>> out;
  for (const auto& a : symmetric_group(g.p())) {
    std::set<Permutation> c;
    for (const auto& t : tk) c.insert(t * a);
    out.insert(std::move(c));
  }
  return out;
}

/// Number of rank-i faces for i = 0..q-1, by listing cosets.
inline std::vector<std::size_t> f_vector(const Graph& g) {
  std::vector<std::size_t> f(static_cast<std::size_t>(g.q()), 0);
  for (std::uint32_t m = 0; m + 1 < (std::uint32_t{1} << g.q()); ++m)
    f[static_cast<std::size_t>(std::popcount(m))] += right_cosets(g, m).size();
  return f;
}

/// Face order: (K, A) <= (L, B) iff K within L and the coset A within B.
inline bool face_leq(std::uint32_t k, const std::set<Permutation>& a, std::uint32_t l,
                     const std::set<Permutation>& b) {
  if ((k & ~l) != 0) return false;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Vertex-permutation automorphisms, by trying every permutation.
inline std::vector<Permutation> graph_automorphisms(const Graph& g) {
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::vector<Permutation> out;
  for (const auto& k : symmetric_group(g.p())) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      const int a = k(e.u), b = k(e.v);
      ok = ok && edges.contains({std::min(a, b), std::max(a, b)});
    }
    if (ok) out.push_back(k);
  }
  return out;
}

/// Orbits of Aut(G) on j-edge subsets.
inline std::size_t j_subgraph_orbits(const Graph& g, int j) {
  const auto autos = oracle::graph_automorphisms(g);
  std::map<std::pair<int, int>, int> index;
  for (int k = 1; k <= g.q(); ++k) {
    const auto& e = g.edge(k);
    index[{std::min(e.u, e.v), std::max(e.u, e.v)}] = k;
  }
  std::set<std::uint32_t> seen;
  std::size_t orbits = 0;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << g.q()); ++m) {
    if (std::popcount(m) != j || seen.contains(m)) continue;
    ++orbits;
    for (const auto& a : autos) {
      std::uint32_t image = 0;
      for (int k = 1; k <= g.q(); ++k) {
        if (!(m >> (k - 1) & 1u)) continue;
        const auto& e = g.edge(k);
        const int u = a(e.u), v = a(e.v);
        image |= std::uint32_t{1} << (index.at({std::min(u, v), std::max(u, v)}) - 1);
      }
      seen.insert(image);
    }
  }
  return orbits;
}

/// Lexicographically least relabelled edge list of g viewed on n >= p vertices.
inline std::vector<std::pair<int, int>> canonical_key(const Graph& g, int n) {
  std::vector<std::pair<int, int>> best;
  for (const auto& k : symmetric_group(n)) {
    std::vector<std::pair<int, int>> image;
    for (const auto& e : g.edges()) image.push_back({std::min(k(e.u), k(e.v)), std::max(k(e.u), k(e.v))});
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  }
  return best;
}

inline Graph to_graph_on(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<gph::Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, list);
}

/// Connected graphs with q edges up to isomorphism, from edge subsets of
/// K_{q+1} (a connected graph with q edges has at most q+1 vertices).
/// Each graph is keyed by its lexicographically least relabelled edge list.
inline std::set<std::vector<std::pair<int, int>>> connected_graphs(int q) {
  const int n = q + 1;
  std::vector<std::pair<int, int>> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
  std::set<std::vector<std::pair<int, int>>> out;
  std::vector<int> choose(all.size(), 0);
  std::fill(choose.end() - q, choose.end(), 1);
  do {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (choose[i]) edges.push_back(all[i]);
    // Connected on the vertices it touches.
    std::set<int> touched;
    for (auto [u, v] : edges) touched.insert({u, v});
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (auto [u, v] : edges) parent[static_cast<std::size_t>(find(u))] = find(v);
    std::set<int> roots;
    for (int v : touched) roots.insert(find(v));
    if (roots.size() != 1) continue;
    const std::vector<std::pair<int, int>> best = canonical_key(to_graph_on(n, edges), n);
    out.insert(best);
  } while (std::next_permutation(choose.begin(), choose.end()));
  return out;
}

inline Graph to_graph(const std::vector<std::pair<int, int>>& edges) {
  int p = 0;
  for (auto [u, v] : edges) p = std::max({p, u, v});
  std::vector<gph::Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(p, list);
}

/// Number of order automorphisms of a ranked poset. A flag-connected
/// polytope's automorphism is fixed by the image of one flag, so each
/// candidate image is extended along flag adjacencies and checked.
inline std::size_t automorphism_count(const gph::RankedPoset& P) {
  std::vector<std::vector<int>> flags;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& chain) {
    const int last = chain.back();
    if (P.up(last).empty()) {
      flags.push_back(chain);
      return;
    }
    for (int y : P.up(last)) {
      chain.push_back(y);
      grow(chain);
      chain.pop_back();
    }
  };
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (P.down(static_cast<int>(x)).empty()) {
      std::vector<int> chain{static_cast<int>(x)};
      grow(chain);
    }
  }
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < flags.size(); ++i) id[flags[i]] = static_cast<int>(i);
  const std::size_t len = flags.front().size();
  auto neighbour = [&](int f, std::size_t pos) {
    const auto& c = flags[static_cast<std::size_t>(f)];
    for (const auto& [other, j] : id) {
      bool differs_only_at_pos = other[pos] != c[pos];
      for (std::size_t t = 0; t < len && differs_only_at_pos; ++t)
        if (t != pos && other[t] != c[t]) differs_only_at_pos = false;
      if (differs_only_at_pos) return j;
    }
    return -1;
  };
  std::vector<std::vector<int>> adj(flags.size(), std::vector<int>(len, -1));
  for (std::size_t f = 0; f < flags.size(); ++f)
    for (std::size_t pos = 1; pos + 1 < len; ++pos) adj[f][pos] = neighbour(static_cast<int>(f), pos);

  std::size_t count = 0;
  for (std::size_t target = 0; target < flags.size(); ++target) {
    std::vector<int> flag_image(flags.size(), -1);
    std::vector<int> elem_image(P.size(), -1);
    flag_image[0] = static_cast<int>(target);
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t h = 0; h < queue.size() && ok; ++h) {
      const int f = queue[h];
      const auto& src = flags[static_cast<std::size_t>(f)];
      const auto& dst = flags[static_cast<std::size_t>(flag_image[static_cast<std::size_t>(f)])];
      for (std::size_t t = 0; t < len && ok; ++t) {
        int& e = elem_image[static_cast<std::size_t>(src[t])];
        if (e < 0) e = dst[t];
        ok = e == dst[t];
      }
      for (std::size_t pos = 1; pos + 1 < len && ok; ++pos) {
        const int g = adj[static_cast<std::size_t>(f)][pos];
        const int gi = adj[static_cast<std::size_t>(flag_image[static_cast<std::size_t>(f)])][pos];
        if (g < 0 || gi < 0) {
          ok = g == gi;
          continue;
        }
        if (flag_image[static_cast<std::size_t>(g)] < 0) {
          flag_image[static_cast<std::size_t>(g)] = gi;
          queue.push_back(g);
        } else {
          ok = flag_image[static_cast<std::size_t>(g)] == gi;
        }
      }
    }
    if (!ok) continue;
    // Must be an order automorphism on covers.
    std::set<int> hit(elem_image.begin(), elem_image.end());
    ok = hit.size() == P.size() && !hit.contains(-1);
    for (std::size_t x = 0; x < P.size() && ok; ++x)
      for (int y : P.up(static_cast<int>(x))) ok = ok && P.covers(elem_image[x], elem_image[static_cast<std::size_t>(y)]);
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace oracle
