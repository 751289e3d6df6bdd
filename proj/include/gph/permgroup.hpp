#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_set>
#include <vector>

#include "gph/error.hpp"
#include "gph/graph.hpp"
#include "gph/permutation.hpp"

namespace gph {

/// tau_e = (i j) for the edge e = {i, j}.
inline Permutation transposition_of_edge(const Edge& e, int p) {
  return Permutation::transposition(p, e.u, e.v);
}

inline Permutation edge_transposition(const Graph& g, int k) {
  return transposition_of_edge(g.edge(k), g.p());
}

// T_K = <tau_e : e in K> is the direct product of the full symmetric groups
// on the components of (V(G), K). Membership and coset tests below use that
// description directly instead of generating the subgroup.

inline bool in_TK(const Permutation& gamma, const Graph& g, EdgeSubset k) {
  if (gamma.degree() != g.p()) throw InvalidArgument("degree mismatch with graph");
  const auto label = component_labels(g, k);
  for (int v = 1; v <= g.p(); ++v) {
    if (label[static_cast<std::size_t>(gamma(v))] != label[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

/// Same-coset test with precomputed component labels.
inline bool same_right_coset(const std::vector<int>& label, const Permutation& alpha,
                             const Permutation& beta) {
  for (int i = 1; i <= alpha.degree(); ++i) {
    if (label[static_cast<std::size_t>(alpha(i))] != label[static_cast<std::size_t>(beta(i))]) {
      return false;
    }
  }
  return true;
}

/// T_K * alpha == T_K * beta.
inline bool coset_equal(const Graph& g, EdgeSubset k, const Permutation& alpha,
                        const Permutation& beta) {
  if (alpha.degree() != g.p() || beta.degree() != g.p()) {
    throw InvalidArgument("degree mismatch with graph");
  }
  return same_right_coset(component_labels(g, k), alpha, beta);
}

/// Lexicographically least one-line word of T_K * alpha, with precomputed
/// component labels. Position i may take any value in the component of
/// alpha(i); the greedy choice hands out each component's values in
/// increasing order.
inline Permutation canonical_coset_rep(const std::vector<int>& label, const Permutation& alpha) {
  const int p = alpha.degree();
  std::vector<int> next_value(static_cast<std::size_t>(p + 1), 0);
  std::vector<std::vector<int>> values_of(static_cast<std::size_t>(p + 1));
  for (int v = 1; v <= p; ++v) values_of[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<int> word(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) {
    const auto c = static_cast<std::size_t>(label[static_cast<std::size_t>(alpha(i))]);
    word[static_cast<std::size_t>(i - 1)] = values_of[c][static_cast<std::size_t>(next_value[c]++)];
  }
  return Permutation::from_one_line(word);
}

inline Permutation canonical_coset_rep(const Graph& g, EdgeSubset k, const Permutation& alpha) {
  if (alpha.degree() != g.p()) throw InvalidArgument("degree mismatch with graph");
  return canonical_coset_rep(component_labels(g, k), alpha);
}

/// Explicit element set of a permutation group, in breadth-first order.
class ElementSet {
 public:
  ElementSet() = default;

  bool insert(const Permutation& x) {
    if (!index_.insert(x).second) return false;
    elements_.push_back(x);
    return true;
  }
  bool contains(const Permutation& x) const { return index_.contains(x); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Same underlying set, regardless of order.
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a.elements_) {
      if (!b.contains(x)) return false;
    }
    return true;
  }

 private:
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation, PermutationHash> index_;
};

/// Breadth-first orbit of `seed` under the generators. `act(x, g)` must be a
/// group action. Insertion order is deterministic.
template <class T, class Gen, class Action, class Hash = std::hash<T>>
std::vector<T> orbit(const T& seed, std::span<const Gen> generators, Action&& act,
                     std::size_t cap = Caps::closure, Hash hash = Hash{}) {
  std::unordered_set<T, Hash> seen(16, hash);
  std::vector<T> out;
  seen.insert(seed);
  out.push_back(seed);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Gen& g : generators) {
      T y = act(out[head], g);
      if (seen.insert(y).second) {
        if (out.size() >= cap) throw CapExceeded("orbit exceeds cap of " + std::to_string(cap));
        out.push_back(std::move(y));
      }
    }
  }
  return out;
}

/// The subgroup of S_degree generated by `generators`.
inline ElementSet closure(int degree, std::span<const Permutation> generators,
                          std::size_t cap = Caps::closure) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  }
  ElementSet group;
  group.insert(Permutation::identity(degree));
  for (std::size_t head = 0; head < group.size(); ++head) {
    const Permutation x = group.elements()[head];
    for (const auto& g : generators) {
      Permutation y = x * g;
      if (!group.contains(y)) {
        if (group.size() >= cap) {
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap));
        }
        group.insert(std::move(y));
      }
    }
  }
  return group;
}

inline ElementSet closure(std::span<const Permutation> generators, std::size_t cap = Caps::closure) {
  if (generators.empty()) throw InvalidArgument("closure of no generators needs a degree");
  return closure(generators.front().degree(), generators, cap);
}

/// A generating subset of the given group elements, chosen greedily in
/// input order.
inline std::vector<Permutation> generating_subset(int degree, std::span<const Permutation> elements,
                                                  std::size_t cap = Caps::closure) {
  std::vector<Permutation> gens;
  ElementSet generated = closure(degree, gens, cap);
  for (const auto& x : elements) {
    if (generated.contains(x)) continue;
    gens.push_back(x);
    generated = closure(degree, gens, cap);
  }
  return gens;
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  const ElementSet& small = a.size() <= b.size() ? a : b;
  const ElementSet& large = a.size() <= b.size() ? b : a;
  for (const auto& x : small) {
    if (large.contains(x)) out.insert(x);
  }
  return out;
}

}  // namespace gph
