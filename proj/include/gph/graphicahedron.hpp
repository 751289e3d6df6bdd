#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "gph/error.hpp"
#include "gph/graph.hpp"
#include "gph/permgroup.hpp"
#include "gph/permutation.hpp"
#include "gph/poset.hpp"

namespace gph {

/// A face (K, T_K alpha) stored with its canonical coset representative.
/// The least face F_{-1} has `bottom` set and no meaningful K or rep.
struct Face {
  EdgeSubset edges;
  Permutation rep;
  bool bottom = false;

  int rank() const { return bottom ? -1 : edges.size(); }

  friend bool operator==(const Face&, const Face&) = default;
};

struct FaceKeyHash {
  std::size_t operator()(const std::pair<std::uint32_t, Permutation>& k) const noexcept {
    return PermutationHash{}(k.second) * 31u + k.first;
  }
};

namespace detail {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// p! / prod |c|! = number of right T_K-cosets.
inline std::uint64_t coset_count(const Graph& g, EdgeSubset k) {
  std::uint64_t denom = 1;
  for (const auto& block : connected_components(g, k)) denom *= factorial(static_cast<int>(block.size()));
  return factorial(g.p()) / denom;
}

}  // namespace detail

/// Expected number of faces of each rank 0..q from the index formula.
inline std::vector<std::uint64_t> graphicahedron_f_vector_formula(const Graph& g) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(g.q() + 1), 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.q()); ++m) {
    const EdgeSubset k(static_cast<std::uint32_t>(m));
    f[static_cast<std::size_t>(k.size())] += detail::coset_count(g, k);
  }
  return f;
}

/// The face poset of P_G. Face 0 is F_{-1}; the remaining faces are ordered
/// by (|K|, K, canonical representative), so the last face is (E, epsilon).
class FaceLattice {
 public:
  const Graph& graph() const { return graph_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[static_cast<std::size_t>(id)]; }
  const RankedPoset& poset() const { return poset_; }
  std::size_t size() const { return faces_.size(); }
  int rank() const { return graph_.q(); }
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(faces_.size()) - 1; }

  /// Counts of faces of ranks 0..q-1.
  std::vector<std::size_t> f_vector() const { return poset_.f_vector(0, graph_.q() - 1); }

  /// Id of the face (K, T_K alpha) for any coset member alpha.
  int id_of(EdgeSubset k, const Permutation& alpha) const {
    const auto it = index_.find({k.mask(), canonical_coset_rep(graph_, k, alpha)});
    if (it == index_.end()) throw InvalidArgument("no such face");
    return it->second;
  }

  std::string label(int id) const {
    const Face& f = face(id);
    if (f.bottom) return "F-1";
    std::ostringstream os;
    os << '{';
    const auto m = f.edges.members();
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "} [";
    const auto w = f.rep.one_line();
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << ']';
    return os.str();
  }

  friend FaceLattice build_graphicahedron(const Graph& g, std::size_t cap);

 private:
  explicit FaceLattice(Graph g) : graph_(std::move(g)) {}

  Graph graph_;
  std::vector<Face> faces_;
  std::unordered_map<std::pair<std::uint32_t, Permutation>, int, FaceKeyHash> index_;
  RankedPoset poset_;
};

inline FaceLattice build_graphicahedron(const Graph& g, std::size_t cap = Caps::faces) {
  if (!is_connected(g)) throw InvalidArgument("graphicahedron needs a connected graph");
  if (g.q() > 20) throw CapExceeded("too many edges for subset enumeration");
  std::uint64_t total = 1;
  for (auto n : graphicahedron_f_vector_formula(g)) total += n;
  if (total > cap) {
    throw CapExceeded("graphicahedron has " + std::to_string(total) + " faces, cap is " +
                      std::to_string(cap));
  }

  FaceLattice lat(g);
  lat.faces_.push_back(Face{EdgeSubset{}, Permutation::identity(g.p()), true});

  std::vector<EdgeSubset> subsets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.q()); ++m) subsets.emplace_back(static_cast<std::uint32_t>(m));
  std::sort(subsets.begin(), subsets.end());

  for (EdgeSubset k : subsets) {
    // A canonical representative is determined by which component each
    // position maps into; within a component values appear in increasing
    // order. Enumerate the multiset permutations of component labels.
    const auto label = component_labels(g, k);
    std::vector<int> pattern(label.begin() + 1, label.end());
    std::sort(pattern.begin(), pattern.end());
    std::vector<std::vector<int>> values_of(static_cast<std::size_t>(g.p() + 1));
    for (int v = 1; v <= g.p(); ++v) values_of[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<Permutation> reps;
    do {
      std::vector<int> next(static_cast<std::size_t>(g.p() + 1), 0);
      std::vector<int> word(pattern.size());
      for (std::size_t i = 0; i < pattern.size(); ++i) {
        const auto c = static_cast<std::size_t>(pattern[i]);
        word[i] = values_of[c][static_cast<std::size_t>(next[c]++)];
      }
      reps.push_back(Permutation::from_one_line(word));
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    std::sort(reps.begin(), reps.end());
    for (auto& r : reps) {
      lat.index_.emplace(std::make_pair(k.mask(), r), static_cast<int>(lat.faces_.size()));
      lat.faces_.push_back(Face{k, std::move(r), false});
    }
  }

  std::vector<int> ranks(lat.faces_.size());
  std::vector<std::vector<int>> up(lat.faces_.size());
  ranks[0] = -1;
  for (std::size_t id = 1; id < lat.faces_.size(); ++id) {
    const Face& f = lat.faces_[id];
    ranks[id] = f.rank();
    if (f.edges.empty()) up[0].push_back(static_cast<int>(id));
    for (int e = 1; e <= g.q(); ++e) {
      if (f.edges.contains(e)) continue;
      const EdgeSubset larger = f.edges.with(e);
      up[id].push_back(lat.index_.at({larger.mask(), canonical_coset_rep(g, larger, f.rep)}));
    }
  }
  lat.poset_ = RankedPoset(std::move(ranks), std::move(up));
  return lat;
}

/// K1 subset of K2 and T_{K1} alpha1 contained in T_{K2} alpha2.
inline bool face_leq(const Graph& g, const Face& a, const Face& b) {
  if (a.bottom) return true;
  if (b.bottom) return false;
  return a.edges.subset_of(b.edges) && coset_equal(g, b.edges, a.rep, b.rep);
}

inline bool face_leq(const FaceLattice& lat, int a, int b) {
  return face_leq(lat.graph(), lat.face(a), lat.face(b));
}

/// A flag (edge ordering, exact vertex permutation). Its rank-i face is
/// ({first i edges}, T alpha).
struct Flag {
  std::vector<int> ordering;
  Permutation alpha;

  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag& a, const Flag& b) {
    if (auto c = a.ordering <=> b.ordering; c != 0) return c;
    return a.alpha <=> b.alpha;
  }
};

struct FlagHash {
  std::size_t operator()(const Flag& f) const noexcept {
    std::size_t h = PermutationHash{}(f.alpha);
    for (int e : f.ordering) h = h * 131u + static_cast<std::size_t>(e);
    return h;
  }
};

inline EdgeSubset flag_subset(const Flag& f, int i) {
  EdgeSubset k;
  for (int t = 0; t < i; ++t) k.insert(f.ordering[static_cast<std::size_t>(t)]);
  return k;
}

/// Base flag (e_1, ..., e_q; epsilon).
inline Flag base_flag(const Graph& g) {
  Flag f{std::vector<int>(static_cast<std::size_t>(g.q())), Permutation::identity(g.p())};
  std::iota(f.ordering.begin(), f.ordering.end(), 1);
  return f;
}

/// Face ids F_{-1}, F_0, ..., F_q of the flag.
inline Chain flag_chain(const FaceLattice& lat, const Flag& f) {
  Chain c{lat.bottom()};
  for (int i = 0; i <= lat.rank(); ++i) c.push_back(lat.id_of(flag_subset(f, i), f.alpha));
  return c;
}

/// Inverse of flag_chain.
inline Flag chain_flag(const FaceLattice& lat, const Chain& c) {
  Flag f;
  f.alpha = lat.face(c.at(1)).rep;
  for (std::size_t i = 2; i < c.size(); ++i) {
    const auto added = lat.face(c[i]).edges.mask() & ~lat.face(c[i - 1]).edges.mask();
    f.ordering.push_back(std::countr_zero(added) + 1);
  }
  return f;
}

/// All p! q! flags: every edge ordering combined with every alpha.
inline std::vector<Flag> enumerate_flags(const Graph& g, std::size_t cap = Caps::flags) {
  const std::uint64_t count = detail::factorial(g.p()) * detail::factorial(g.q());
  if (count > cap) throw CapExceeded("flag count " + std::to_string(count) + " exceeds cap");
  std::vector<Flag> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> ordering(static_cast<std::size_t>(g.q()));
  std::iota(ordering.begin(), ordering.end(), 1);
  std::vector<int> word(static_cast<std::size_t>(g.p()));
  do {
    std::iota(word.begin(), word.end(), 1);
    do {
      out.push_back(Flag{ordering, Permutation::from_one_line(word)});
    } while (std::next_permutation(word.begin(), word.end()));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return out;
}

inline std::vector<Flag> enumerate_flags(const FaceLattice& lat, std::size_t cap = Caps::flags) {
  return enumerate_flags(lat.graph(), cap);
}

/// Phi^j. For j >= 1 the edges in positions j and j+1 swap; for j = 0 the
/// vertex moves along the first edge: alpha becomes tau_{e_1} alpha.
inline Flag adjacent_flag(const Graph& g, const Flag& f, int j) {
  if (j < 0 || j >= g.q()) throw InvalidArgument("flag adjacency rank out of range 0..q-1");
  Flag out = f;
  if (j == 0) {
    out.alpha = edge_transposition(g, f.ordering.front()) * f.alpha;
  } else {
    std::swap(out.ordering[static_cast<std::size_t>(j - 1)], out.ordering[static_cast<std::size_t>(j)]);
  }
  return out;
}

/// Flag graph over the p! q! flags, with neighbour[f][j] = index of Phi^j.
struct GraphFlagGraph {
  std::vector<Flag> flags;
  std::vector<std::vector<int>> neighbour;

  std::size_t component_count() const {
    std::vector<bool> seen(flags.size(), false);
    std::size_t comps = 0;
    for (std::size_t s = 0; s < flags.size(); ++s) {
      if (seen[s]) continue;
      ++comps;
      std::vector<int> stack{static_cast<int>(s)};
      seen[s] = true;
      while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (int n : neighbour[static_cast<std::size_t>(f)]) {
          if (!seen[static_cast<std::size_t>(n)]) {
            seen[static_cast<std::size_t>(n)] = true;
            stack.push_back(n);
          }
        }
      }
    }
    return comps;
  }
};

inline GraphFlagGraph build_graph_flag_graph(const Graph& g, std::size_t cap = Caps::flags) {
  GraphFlagGraph fg;
  fg.flags = enumerate_flags(g, cap);
  std::unordered_map<Flag, int, FlagHash> index;
  for (std::size_t i = 0; i < fg.flags.size(); ++i) index.emplace(fg.flags[i], static_cast<int>(i));
  fg.neighbour.assign(fg.flags.size(), std::vector<int>(static_cast<std::size_t>(g.q())));
  for (std::size_t i = 0; i < fg.flags.size(); ++i)
    for (int j = 0; j < g.q(); ++j)
      fg.neighbour[i][static_cast<std::size_t>(j)] = index.at(adjacent_flag(g, fg.flags[i], j));
  return fg;
}

/// Combinatorial type checks on the graphicahedron.
inline AxiomReport verify_polytope_axioms(const FaceLattice& lat, std::size_t max_strong_pairs = 10'000) {
  return verify_polytope_axioms(lat.poset(), max_strong_pairs);
}

inline Section section(const FaceLattice& lat, int lower, int upper) {
  return section(lat.poset(), lower, upper);
}

/// Every vertex-figure is a Boolean lattice, i.e. the face lattice of a
/// (q-1)-simplex.
inline bool is_simple(const RankedPoset& poset) {
  const int top = poset.maximal_elements().size() == 1 ? poset.maximal_elements().front() : -1;
  if (top < 0) return false;
  for (int v : poset.at_rank(poset.min_rank() + 1)) {
    if (!boolean_lattice_witness(section(poset, v, top).poset)) return false;
  }
  return true;
}

inline bool is_simple(const FaceLattice& lat) { return is_simple(lat.poset()); }

inline std::optional<std::vector<int>> schlafli_type(const FaceLattice& lat) {
  return schlafli_type(lat.poset());
}

inline long euler_characteristic(const FaceLattice& lat) { return euler_characteristic(lat.poset()); }

inline std::string hasse_dot(const FaceLattice& lat) {
  return hasse_dot(lat.poset(), [&](int id) { return lat.label(id); });
}

/// Flag graph in DOT form; edges labelled by the adjacency rank.
inline std::string flag_graph_dot(const FaceLattice& lat, std::size_t cap = Caps::flags) {
  const auto fg = build_graph_flag_graph(lat.graph(), cap);
  std::ostringstream os;
  os << "graph flags {\n  node [shape=point];\n";
  for (std::size_t i = 0; i < fg.flags.size(); ++i)
    for (std::size_t j = 0; j < fg.neighbour[i].size(); ++j)
      if (static_cast<int>(i) < fg.neighbour[i][j])
        os << "  f" << i << " -- f" << fg.neighbour[i][j] << " [label=\"" << j << "\"];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json to_json(const FaceLattice& lat) {
  nlohmann::json faces = nlohmann::json::array();
  nlohmann::json covers = nlohmann::json::array();
  for (std::size_t id = 0; id < lat.size(); ++id) {
    const Face& f = lat.face(static_cast<int>(id));
    nlohmann::json jf{{"id", id}, {"rank", f.rank()}};
    if (f.bottom) {
      jf["edges"] = nullptr;
      jf["rep"] = nullptr;
    } else {
      jf["edges"] = f.edges.members();
      jf["rep"] = f.rep.one_line();
    }
    faces.push_back(std::move(jf));
    covers.push_back(lat.poset().up(static_cast<int>(id)));
  }
  return {{"graph", to_json(lat.graph())}, {"faces", std::move(faces)}, {"covers", std::move(covers)}};
}

}  // namespace gph
