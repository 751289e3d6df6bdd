#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "gph/error.hpp"
#include "gph/graph.hpp"
#include "gph/graph_symmetry.hpp"
#include "gph/graphicahedron.hpp"
#include "gph/permgroup.hpp"
#include "gph/permutation.hpp"

namespace gph {

/// Element (gamma, kappa) of S_p x| Aut(G). It acts on faces by
///
///     (K, alpha)  ->  (kappa(K), kappa alpha kappa^-1 gamma^-1)
///
/// and products are taken so that (a * b) acts as "b first, then a".
struct PolytopeAut {
  Permutation gamma;
  Permutation kappa;

  static PolytopeAut identity(int p) { return {Permutation::identity(p), Permutation::identity(p)}; }

  friend PolytopeAut operator*(const PolytopeAut& a, const PolytopeAut& b) {
    return {a.gamma * a.kappa * b.gamma * a.kappa.inverse(), a.kappa * b.kappa};
  }

  PolytopeAut inverse() const {
    const Permutation ki = kappa.inverse();
    return {ki * gamma.inverse() * kappa, ki};
  }

  bool is_identity() const { return gamma.is_identity() && kappa.is_identity(); }

  std::string to_string() const { return "gamma=" + gamma.cycles() + " kappa=" + kappa.cycles(); }

  friend bool operator==(const PolytopeAut&, const PolytopeAut&) = default;
};

struct PolytopeAutHash {
  std::size_t operator()(const PolytopeAut& a) const noexcept {
    return PermutationHash{}(a.gamma) * 1000003u ^ PermutationHash{}(a.kappa);
  }
};

inline Permutation conjugate_by(const Permutation& kappa, const Permutation& alpha) {
  return kappa * alpha * kappa.inverse();
}

inline Face act_on_face(const Graph& g, const PolytopeAut& a, const Face& f) {
  if (f.bottom) return f;
  const EdgeSubset k = act_on_edges(g, a.kappa, f.edges);
  return Face{k, canonical_coset_rep(g, k, conjugate_by(a.kappa, f.rep) * a.gamma.inverse()), false};
}

/// Image flag: the ordering is mapped edge by edge and alpha as on faces.
inline Flag act_on_flag(const Graph& g, const PolytopeAut& a, const Flag& f) {
  const auto edge_map = induced_edge_map(g, a.kappa);
  Flag out;
  out.ordering.reserve(f.ordering.size());
  for (int e : f.ordering) out.ordering.push_back(edge_map[static_cast<std::size_t>(e - 1)]);
  out.alpha = conjugate_by(a.kappa, f.alpha) * a.gamma.inverse();
  return out;
}

/// Order of the automorphism group: p! |Aut(G)| for q != 1; the segment
/// (q = 1) has a group of order 2.
inline std::uint64_t polytope_group_order(const Graph& g) {
  if (g.q() == 1) return 2;
  return detail::factorial(g.p()) * graph_automorphisms(g).size();
}

/// Adjacent transpositions (i i+1) spanning S_p, followed by a generating
/// set of Aut(G). For q = 1 only the S_p part is returned: the graph
/// automorphism swapping the two vertices acts trivially on the segment.
inline std::vector<PolytopeAut> polytope_automorphism_generators(const Graph& g) {
  const int p = g.p();
  std::vector<PolytopeAut> gens;
  for (int i = 1; i < p; ++i) gens.push_back({Permutation::transposition(p, i, i + 1), Permutation::identity(p)});
  if (g.q() == 1) return gens;
  const auto autos = graph_automorphisms(g);
  for (const auto& k : generating_subset(p, autos)) gens.push_back({Permutation::identity(p), k});
  return gens;
}

/// Every element (gamma, kappa), gamma in S_p, kappa in Aut(G).
inline std::vector<PolytopeAut> all_polytope_automorphisms(const Graph& g, std::size_t cap = Caps::closure) {
  const auto autos = graph_automorphisms(g);
  if (detail::factorial(g.p()) * autos.size() > cap) throw CapExceeded("automorphism group exceeds cap");
  std::vector<PolytopeAut> out;
  std::vector<int> word(static_cast<std::size_t>(g.p()));
  std::iota(word.begin(), word.end(), 1);
  do {
    const auto gamma = Permutation::from_one_line(word);
    for (const auto& k : autos) out.push_back({gamma, k});
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

/// Size of the subgroup generated by the given elements.
inline std::size_t generated_order(const std::vector<PolytopeAut>& gens, int p, std::size_t cap = Caps::closure) {
  auto act = [](const PolytopeAut& x, const PolytopeAut& s) { return x * s; };
  return orbit<PolytopeAut, PolytopeAut>(PolytopeAut::identity(p), gens, act, cap, PolytopeAutHash{}).size();
}

struct RankTransitivity {
  int j = 0;
  std::size_t face_orbits = 0;
  std::size_t subgraph_orbits = 0;
  bool transitive = false;
  bool routes_agree = false;   // face orbits vs. subgraph orbits
  bool chain_agrees = false;   // j-face transitive vs. {0, j}-transitive
  bool dual_agrees = false;    // j vs. q - j
};

/// Symmetry computations for one graphicahedron. Each generator is turned
/// into a permutation of face ids once; orbit questions then reduce to
/// union-find over those tables.
class SymmetryAnalysis {
 public:
  explicit SymmetryAnalysis(const Graph& g, std::size_t face_cap = Caps::faces)
      : lattice_(build_graphicahedron(g, face_cap)),
        automorphisms_(graph_automorphisms(g)),
        generators_(polytope_automorphism_generators(g)) {
    for (const auto& a : generators_) {
      std::vector<int> table(lattice_.size());
      for (std::size_t id = 0; id < lattice_.size(); ++id) {
        const Face img = act_on_face(g, a, lattice_.face(static_cast<int>(id)));
        table[id] = img.bottom ? 0 : lattice_.id_of(img.edges, img.rep);
      }
      tables_.push_back(std::move(table));
    }
  }

  const FaceLattice& lattice() const { return lattice_; }
  const Graph& graph() const { return lattice_.graph(); }
  const std::vector<PolytopeAut>& generators() const { return generators_; }
  const std::vector<Permutation>& graph_automorphism_list() const { return automorphisms_; }
  const std::vector<std::vector<int>>& face_tables() const { return tables_; }

  std::size_t face_orbit_count(int j) const {
    const auto& level = lattice_.poset().at_rank(j);
    std::vector<std::vector<int>> chains;
    for (int f : level) chains.push_back({f});
    return chain_orbits(chains);
  }

  std::size_t subgraph_orbit_count(int j) const {
    return j_subgraph_orbits(graph(), j, automorphisms_).size();
  }

  /// Decided by face orbits and by subgraph orbits; the two must agree.
  bool is_j_face_transitive(int j) const {
    if (j < 0 || j > graph().q()) throw InvalidArgument("rank out of range");
    const bool by_faces = face_orbit_count(j) == 1;
    if (j == 0 || j == graph().q()) {
      if (!by_faces) throw InternalInconsistency("S_p should be transitive on vertices");
      return true;
    }
    const bool by_subgraphs = subgraph_orbit_count(j) == 1;
    if (by_faces != by_subgraphs) {
      throw InternalInconsistency("face orbits and subgraph orbits disagree at rank " + std::to_string(j));
    }
    return by_faces;
  }

  /// Chains with one face of each rank in J (ranks in 0..q-1).
  std::vector<std::vector<int>> chains_of_type(std::vector<int> ranks, std::size_t cap = Caps::flags) const {
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (int r : ranks)
      if (r < 0 || r >= graph().q()) throw InvalidArgument("chain type must lie in 0..q-1");
    std::vector<std::vector<int>> out;
    if (ranks.empty()) return {{}};
    std::vector<int> current;
    const RankedPoset& P = lattice_.poset();
    auto extend = [&](auto&& self, std::size_t t) -> void {
      if (t == ranks.size()) {
        if (out.size() >= cap) throw CapExceeded("chain enumeration exceeds cap");
        out.push_back(current);
        return;
      }
      std::vector<int> candidates;
      if (t == 0) {
        candidates = P.at_rank(ranks[0]);
      } else {
        for (int x : P.upset(current.back()))
          if (P.rank(x) == ranks[t]) candidates.push_back(x);
        std::sort(candidates.begin(), candidates.end());
      }
      for (int c : candidates) {
        current.push_back(c);
        self(self, t + 1);
        current.pop_back();
      }
    };
    extend(extend, 0);
    return out;
  }

  std::size_t chain_orbit_count(const std::vector<int>& ranks) const {
    return chain_orbits(chains_of_type(ranks));
  }

  bool is_chain_transitive(const std::vector<int>& ranks) const { return chain_orbit_count(ranks) == 1; }

  /// Orbit of the base flag under the generators has p! q! elements.
  bool is_regular(std::size_t cap = Caps::flags) const {
    const std::uint64_t flags = detail::factorial(graph().p()) * detail::factorial(graph().q());
    return base_flag_orbit_size(cap) == flags;
  }

  std::size_t base_flag_orbit_size(std::size_t cap = Caps::flags) const {
    const Graph& g = graph();
    auto act = [&](const Flag& f, const PolytopeAut& a) { return act_on_flag(g, a, f); };
    return orbit<Flag, PolytopeAut>(base_flag(g), generators_, act, cap, FlagHash{}).size();
  }

  /// Per-rank report with the cross-checks between the three routes.
  std::vector<RankTransitivity> transitivity_report() const {
    const int q = graph().q();
    std::vector<RankTransitivity> out;
    std::vector<bool> transitive(static_cast<std::size_t>(q + 1));
    for (int j = 0; j <= q; ++j) {
      RankTransitivity r;
      r.j = j;
      r.face_orbits = face_orbit_count(j);
      r.subgraph_orbits = j == 0 || j == q ? 1 : subgraph_orbit_count(j);
      r.transitive = r.face_orbits == 1;
      r.routes_agree = (r.face_orbits == 1) == (r.subgraph_orbits == 1);
      if (j >= 1 && j < q) {
        r.chain_agrees = is_chain_transitive({0, j}) == r.transitive;
      } else {
        r.chain_agrees = true;
      }
      transitive[static_cast<std::size_t>(j)] = r.transitive;
      out.push_back(r);
    }
    for (auto& r : out) r.dual_agrees = transitive[static_cast<std::size_t>(r.j)] == transitive[static_cast<std::size_t>(q - r.j)];
    return out;
  }

 private:
  std::size_t chain_orbits(const std::vector<std::vector<int>>& chains) const {
    if (chains.empty()) return 0;
    std::unordered_map<std::vector<int>, int, ChainHash> index;
    for (std::size_t i = 0; i < chains.size(); ++i) index.emplace(chains[i], static_cast<int>(i));
    std::vector<int> parent(chains.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    std::size_t orbits = chains.size();
    std::vector<int> image;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      for (const auto& table : tables_) {
        image.clear();
        for (int f : chains[i]) image.push_back(table[static_cast<std::size_t>(f)]);
        const auto it = index.find(image);
        if (it == index.end()) throw InternalInconsistency("automorphism image is not a chain");
        const int a = find(static_cast<int>(i)), b = find(it->second);
        if (a != b) {
          parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
          --orbits;
        }
      }
    }
    return orbits;
  }

  FaceLattice lattice_;
  std::vector<Permutation> automorphisms_;
  std::vector<PolytopeAut> generators_;
  std::vector<std::vector<int>> tables_;
};

inline bool is_j_face_transitive(const Graph& g, int j) { return SymmetryAnalysis(g).is_j_face_transitive(j); }

inline bool is_chain_transitive(const Graph& g, const std::vector<int>& ranks) {
  return SymmetryAnalysis(g).is_chain_transitive(ranks);
}

inline bool is_regular(const Graph& g) { return SymmetryAnalysis(g).is_regular(); }

/// The automorphism carrying `from` to `to`, if any (unique for q >= 2).
inline std::optional<PolytopeAut> automorphism_mapping_flag(const Graph& g, const Flag& from, const Flag& to,
                                                            const std::vector<Permutation>& autos) {
  for (const auto& kappa : autos) {
    const auto edge_map = induced_edge_map(g, kappa);
    bool match = true;
    for (std::size_t i = 0; i < from.ordering.size() && match; ++i)
      match = edge_map[static_cast<std::size_t>(from.ordering[i] - 1)] == to.ordering[i];
    if (!match) continue;
    // to.alpha = kappa from.alpha kappa^-1 gamma^-1
    const Permutation gamma = to.alpha.inverse() * conjugate_by(kappa, from.alpha);
    return PolytopeAut{gamma, kappa};
  }
  return std::nullopt;
}

/// rho_0, ..., rho_{q-1} for the given base flag: rho_j maps the base flag to
/// its j-adjacent flag. Empty if some rho_j does not exist or the polytope is
/// not regular.
inline std::optional<std::vector<PolytopeAut>> distinguished_generators(const Graph& g, const Flag& base) {
  if (g.q() < 2) throw InvalidArgument("distinguished generators need q >= 2");
  const SymmetryAnalysis analysis(g);
  if (!analysis.is_regular()) return std::nullopt;
  std::vector<PolytopeAut> rho;
  for (int j = 0; j < g.q(); ++j) {
    auto r = automorphism_mapping_flag(g, base, adjacent_flag(g, base, j), analysis.graph_automorphism_list());
    if (!r) return std::nullopt;
    if (!((*r) * (*r)).is_identity()) throw InternalInconsistency("distinguished generator is not an involution");
    rho.push_back(*r);
  }
  return rho;
}

inline std::optional<std::vector<PolytopeAut>> distinguished_generators(const Graph& g) {
  return distinguished_generators(g, base_flag(g));
}

struct CensusEntry {
  Graph graph;
  std::string canonical;
  bool star = false;
  std::vector<std::size_t> orbit_counts;  // j = 0..q
  std::vector<bool> transitive;           // j = 0..q
};

struct CensusReport {
  int q_max = 0;
  std::vector<CensusEntry> entries;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For every connected graph with 1..q_max edges: the j-subgraph
/// transitivity profile. Violations: a non-star transitive at some
/// 2 <= j <= q-2, or orbit counts differing between j and q-j.
inline CensusReport subgraph_transitivity_census(int q_max, int max_edges = Caps::census_edges) {
  if (q_max > max_edges) throw CapExceeded("census limited to q <= " + std::to_string(max_edges));
  CensusReport report;
  report.q_max = q_max;
  for (int q = 1; q <= q_max; ++q) {
    for (const Graph& g : connected_graph_census(q, -1, max_edges)) {
      CensusEntry e{g, canonical_form(g).to_string(), is_star(g), {}, {}};
      const auto autos = graph_automorphisms(g);
      for (int j = 0; j <= q; ++j) {
        const std::size_t n = j_subgraph_orbits(g, j, autos).size();
        e.orbit_counts.push_back(n);
        e.transitive.push_back(n == 1);
      }
      for (int j = 0; j <= q; ++j) {
        if (e.orbit_counts[static_cast<std::size_t>(j)] != e.orbit_counts[static_cast<std::size_t>(q - j)]) {
          report.violations.push_back(e.canonical + ": orbit counts differ at j=" + std::to_string(j) +
                                      " and q-j=" + std::to_string(q - j));
        }
        if (j >= 2 && j <= q - 2 && e.transitive[static_cast<std::size_t>(j)] && !e.star) {
          report.violations.push_back(e.canonical + ": non-star graph is " + std::to_string(j) +
                                      "-subgraph transitive");
        }
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

inline nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    std::vector<int> transitive_ranks;
    for (std::size_t j = 0; j < e.transitive.size(); ++j)
      if (e.transitive[j]) transitive_ranks.push_back(static_cast<int>(j));
    entries.push_back({{"q", e.graph.q()},
                       {"p", e.graph.p()},
                       {"graph", e.canonical},
                       {"star", e.star},
                       {"orbit_counts", e.orbit_counts},
                       {"transitive_ranks", transitive_ranks}});
  }
  return {{"q_max", r.q_max}, {"graphs", entries}, {"violations", r.violations}, {"ok", r.ok()}};
}

inline std::string to_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "q,p,graph,star,transitive_ranks,orbit_counts\n";
  for (const auto& e : r.entries) {
    os << e.graph.q() << ',' << e.graph.p() << ",\"" << e.canonical << "\"," << (e.star ? "yes" : "no") << ',';
    bool first = true;
    for (std::size_t j = 0; j < e.transitive.size(); ++j) {
      if (!e.transitive[j]) continue;
      os << (first ? "" : " ") << j;
      first = false;
    }
    os << ',';
    for (std::size_t j = 0; j < e.orbit_counts.size(); ++j) os << (j ? " " : "") << e.orbit_counts[j];
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json to_json(const std::vector<RankTransitivity>& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : report) {
    out.push_back({{"j", r.j},
                   {"face_orbits", r.face_orbits},
                   {"subgraph_orbits", r.subgraph_orbits},
                   {"transitive", r.transitive},
                   {"face_vs_subgraph", r.routes_agree},
                   {"face_vs_chain", r.chain_agrees},
                   {"duality", r.dual_agrees}});
  }
  return out;
}

}  // namespace gph
