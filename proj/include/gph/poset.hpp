#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gph/error.hpp"

namespace gph {

/// Finite graded poset given by element ranks and cover relations.
/// Element ids are 0..size()-1.
class RankedPoset {
 public:
  RankedPoset() = default;

  RankedPoset(std::vector<int> ranks, std::vector<std::vector<int>> up_covers)
      : rank_(std::move(ranks)), up_(std::move(up_covers)) {
    if (up_.size() != rank_.size()) throw InvalidArgument("cover lists do not match element count");
    down_.assign(rank_.size(), {});
    if (!rank_.empty()) {
      min_rank_ = *std::min_element(rank_.begin(), rank_.end());
      max_rank_ = *std::max_element(rank_.begin(), rank_.end());
    }
    by_rank_.assign(static_cast<std::size_t>(max_rank_ - min_rank_ + 1), {});
    for (std::size_t x = 0; x < rank_.size(); ++x) {
      by_rank_[static_cast<std::size_t>(rank_[x] - min_rank_)].push_back(static_cast<int>(x));
      auto& ups = up_[x];
      std::sort(ups.begin(), ups.end());
      if (std::adjacent_find(ups.begin(), ups.end()) != ups.end()) {
        throw InvalidArgument("repeated cover relation");
      }
      for (int y : ups) {
        if (y < 0 || static_cast<std::size_t>(y) >= rank_.size()) throw InvalidArgument("cover target out of range");
        if (rank_[static_cast<std::size_t>(y)] != rank_[x] + 1) {
          throw InvalidArgument("cover relation must raise rank by exactly one");
        }
        down_[static_cast<std::size_t>(y)].push_back(static_cast<int>(x));
      }
    }
    for (auto& d : down_) std::sort(d.begin(), d.end());
  }

  std::size_t size() const { return rank_.size(); }
  int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
  int min_rank() const { return min_rank_; }
  int max_rank() const { return max_rank_; }
  const std::vector<int>& up(int x) const { return up_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& down(int x) const { return down_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& ranks() const { return rank_; }
  const std::vector<std::vector<int>>& up_covers() const { return up_; }

  const std::vector<int>& at_rank(int r) const {
    static const std::vector<int> none;
    if (r < min_rank_ || r > max_rank_ || rank_.empty()) return none;
    return by_rank_[static_cast<std::size_t>(r - min_rank_)];
  }

  /// Element counts for ranks min_rank()..max_rank().
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : by_rank_) f.push_back(level.size());
    return f;
  }

  /// Counts for the given rank range, inclusive.
  std::vector<std::size_t> f_vector(int from, int to) const {
    std::vector<std::size_t> f;
    for (int r = from; r <= to; ++r) f.push_back(at_rank(r).size());
    return f;
  }

  bool covers(int lower, int upper) const {
    const auto& u = up(lower);
    return std::binary_search(u.begin(), u.end(), upper);
  }

  bool leq(int a, int b) const {
    if (a == b) return true;
    if (rank(a) >= rank(b)) return false;
    std::vector<int> frontier{a};
    std::unordered_set<int> seen{a};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int y : up(x)) {
          if (y == b) return true;
          if (rank(y) < rank(b) && seen.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    return false;
  }

  /// All elements >= a (including a).
  std::vector<int> upset(int a) const {
    std::vector<int> out{a};
    std::unordered_set<int> seen{a};
    for (std::size_t h = 0; h < out.size(); ++h)
      for (int y : up(out[h]))
        if (seen.insert(y).second) out.push_back(y);
    return out;
  }

  /// All elements <= a (including a).
  std::vector<int> downset(int a) const {
    std::vector<int> out{a};
    std::unordered_set<int> seen{a};
    for (std::size_t h = 0; h < out.size(); ++h)
      for (int y : down(out[h]))
        if (seen.insert(y).second) out.push_back(y);
    return out;
  }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (down_[x].empty()) out.push_back(static_cast<int>(x));
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (up_[x].empty()) out.push_back(static_cast<int>(x));
    return out;
  }

  /// Copy with one cover relation removed.
  RankedPoset without_cover(int lower, int upper) const {
    auto ups = up_;
    auto& u = ups[static_cast<std::size_t>(lower)];
    u.erase(std::remove(u.begin(), u.end(), upper), u.end());
    return RankedPoset(rank_, std::move(ups));
  }

 private:
  std::vector<int> rank_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<int>> by_rank_;
  int min_rank_ = 0;
  int max_rank_ = -1;
};

/// A chain of element ids listed by increasing rank.
using Chain = std::vector<int>;

struct ChainHash {
  std::size_t operator()(const Chain& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : c) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Maximal chains, depth first from each minimal element.
inline std::vector<Chain> maximal_chains(const RankedPoset& poset, std::size_t cap = Caps::flags) {
  std::vector<Chain> out;
  Chain current;
  auto walk = [&](auto&& self, int x) -> void {
    current.push_back(x);
    if (poset.up(x).empty()) {
      if (out.size() >= cap) throw CapExceeded("flag enumeration exceeds cap of " + std::to_string(cap));
      out.push_back(current);
    } else {
      for (int y : poset.up(x)) self(self, y);
    }
    current.pop_back();
  };
  for (int m : poset.minimal_elements()) walk(walk, m);
  return out;
}

/// The unique flag differing from `flag` exactly in its rank-j element, if
/// the rank-j interval of the flag has exactly two middle elements.
inline std::optional<Chain> adjacent_flag(const RankedPoset& poset, const Chain& flag, int j) {
  const int idx = j - poset.rank(flag.front());
  if (idx <= 0 || idx + 1 >= static_cast<int>(flag.size())) return std::nullopt;
  const auto& above = poset.up(flag[static_cast<std::size_t>(idx - 1)]);
  const auto& below = poset.down(flag[static_cast<std::size_t>(idx + 1)]);
  std::vector<int> middle;
  std::set_intersection(above.begin(), above.end(), below.begin(), below.end(),
                        std::back_inserter(middle));
  if (middle.size() != 2) return std::nullopt;
  Chain out = flag;
  out[static_cast<std::size_t>(idx)] =
      middle[0] == flag[static_cast<std::size_t>(idx)] ? middle[1] : middle[0];
  return out;
}

/// Flags as nodes, j-adjacency as labelled edges.
struct FlagGraph {
  std::vector<Chain> flags;
  std::unordered_map<Chain, int, ChainHash> index;
  /// neighbour[f][j - lowest proper rank] = adjacent flag index or -1.
  std::vector<std::vector<int>> neighbour;
  int lowest_rank = 0;

  std::size_t size() const { return flags.size(); }

  std::size_t component_count() const {
    std::vector<bool> seen(flags.size(), false);
    std::size_t comps = 0;
    for (std::size_t s = 0; s < flags.size(); ++s) {
      if (seen[s]) continue;
      ++comps;
      std::vector<int> stack{static_cast<int>(s)};
      seen[s] = true;
      while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : neighbour[static_cast<std::size_t>(f)]) {
          if (g >= 0 && !seen[static_cast<std::size_t>(g)]) {
            seen[static_cast<std::size_t>(g)] = true;
            stack.push_back(g);
          }
        }
      }
    }
    return comps;
  }
};

inline FlagGraph build_flag_graph(const RankedPoset& poset, std::size_t cap = Caps::flags) {
  FlagGraph fg;
  fg.flags = maximal_chains(poset, cap);
  fg.lowest_rank = poset.min_rank() + 1;
  for (std::size_t i = 0; i < fg.flags.size(); ++i) fg.index.emplace(fg.flags[i], static_cast<int>(i));
  const int proper = std::max(0, poset.max_rank() - poset.min_rank() - 1);
  fg.neighbour.assign(fg.flags.size(), std::vector<int>(static_cast<std::size_t>(proper), -1));
  for (std::size_t i = 0; i < fg.flags.size(); ++i) {
    for (int j = 0; j < proper; ++j) {
      auto adj = adjacent_flag(poset, fg.flags[i], fg.lowest_rank + j);
      if (!adj) continue;
      auto it = fg.index.find(*adj);
      if (it != fg.index.end()) fg.neighbour[i][static_cast<std::size_t>(j)] = it->second;
    }
  }
  return fg;
}

struct AxiomReport {
  bool unique_least = false;
  bool unique_greatest = false;
  bool graded = false;
  bool diamond = false;
  bool flag_connected = false;
  bool strongly_flag_connected = false;
  bool adjacency_involutive = false;
  std::size_t flag_count = 0;
  std::size_t strong_pairs_checked = 0;
  std::vector<std::string> violations;

  bool ok() const {
    return unique_least && unique_greatest && graded && diamond && flag_connected &&
           strongly_flag_connected && adjacency_involutive;
  }
};

namespace detail {

/// Flags containing `common` reachable from `from` through flags that all
/// contain `common`; true if `to` is reached.
inline bool strongly_joined(const FlagGraph& fg, int from, int to) {
  const Chain& a = fg.flags[static_cast<std::size_t>(from)];
  const Chain& b = fg.flags[static_cast<std::size_t>(to)];
  std::vector<bool> fixed(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) fixed[i] = a[i] == b[i];
  std::vector<bool> seen(fg.size(), false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    if (f == to) return true;
    const auto& nb = fg.neighbour[static_cast<std::size_t>(f)];
    for (std::size_t j = 0; j < nb.size(); ++j) {
      // Moving the rank-j element is allowed only if it is not shared.
      if (fixed[j + 1] || nb[j] < 0 || seen[static_cast<std::size_t>(nb[j])]) continue;
      seen[static_cast<std::size_t>(nb[j])] = true;
      stack.push_back(nb[j]);
    }
  }
  return false;
}

}  // namespace detail

/// Abstract-polytope axioms. Strong flag-connectedness is checked on every
/// flag pair when there are at most `max_strong_pairs` pairs, otherwise on
/// that many pairs drawn with a fixed seed.
inline AxiomReport verify_polytope_axioms(const RankedPoset& poset,
                                          std::size_t max_strong_pairs = 10'000,
                                          std::size_t cap = Caps::flags) {
  AxiomReport r;
  const auto mins = poset.minimal_elements();
  const auto maxs = poset.maximal_elements();
  r.unique_least = mins.size() == 1;
  r.unique_greatest = maxs.size() == 1;
  if (!r.unique_least) r.violations.push_back("least face is not unique");
  if (!r.unique_greatest) r.violations.push_back("greatest face is not unique");

  const FlagGraph fg = build_flag_graph(poset, cap);
  r.flag_count = fg.size();
  const std::size_t length = static_cast<std::size_t>(poset.max_rank() - poset.min_rank() + 1);
  r.graded = true;
  for (const auto& f : fg.flags) {
    if (f.size() != length) {
      r.graded = false;
      r.violations.push_back("maximal chain of length " + std::to_string(f.size()));
      break;
    }
  }

  r.diamond = true;
  for (std::size_t x = 0; x < poset.size() && r.diamond; ++x) {
    std::map<int, int> middle_count;
    for (int y : poset.up(static_cast<int>(x)))
      for (int z : poset.up(y)) ++middle_count[z];
    for (auto [z, count] : middle_count) {
      if (count != 2) {
        r.diamond = false;
        r.violations.push_back("diamond condition fails between " + std::to_string(x) + " and " +
                               std::to_string(z) + " (" + std::to_string(count) + " middle faces)");
        break;
      }
    }
  }

  r.adjacency_involutive = r.diamond;
  if (r.diamond) {
    for (std::size_t f = 0; f < fg.size() && r.adjacency_involutive; ++f) {
      for (std::size_t j = 0; j < fg.neighbour[f].size(); ++j) {
        const int g = fg.neighbour[f][j];
        if (g < 0 || fg.neighbour[static_cast<std::size_t>(g)][j] != static_cast<int>(f) ||
            g == static_cast<int>(f)) {
          r.adjacency_involutive = false;
          r.violations.push_back("flag adjacency is not an involution");
          break;
        }
      }
    }
  }

  r.flag_connected = fg.size() > 0 && fg.component_count() == 1;
  if (!r.flag_connected) r.violations.push_back("flag graph is disconnected");

  r.strongly_flag_connected = r.flag_connected;
  if (r.flag_connected) {
    const std::size_t n = fg.size();
    const std::size_t pairs = n * (n - 1) / 2;
    auto check = [&](std::size_t a, std::size_t b) {
      ++r.strong_pairs_checked;
      if (!detail::strongly_joined(fg, static_cast<int>(a), static_cast<int>(b))) {
        r.strongly_flag_connected = false;
        r.violations.push_back("flags " + std::to_string(a) + " and " + std::to_string(b) +
                               " are not strongly connected");
      }
    };
    if (pairs <= max_strong_pairs) {
      for (std::size_t a = 0; a < n && r.strongly_flag_connected; ++a)
        for (std::size_t b = a + 1; b < n && r.strongly_flag_connected; ++b) check(a, b);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < max_strong_pairs && r.strongly_flag_connected; ++s) {
        const std::size_t a = pick(rng), b = pick(rng);
        if (a != b) check(a, b);
      }
    }
  }
  return r;
}

/// Interval [lower, upper], re-ranked so that `lower` has rank -1.
struct Section {
  RankedPoset poset;
  std::vector<int> original;  // section id -> id in the source poset
};

inline Section section(const RankedPoset& poset, int lower, int upper) {
  if (!poset.leq(lower, upper)) throw InvalidArgument("section bounds are not comparable");
  const auto ups = poset.upset(lower);
  const auto downs = poset.downset(upper);
  std::unordered_set<int> below(downs.begin(), downs.end());
  std::vector<int> members;
  for (int x : ups)
    if (below.contains(x)) members.push_back(x);
  std::sort(members.begin(), members.end(), [&](int a, int b) {
    return std::make_pair(poset.rank(a), a) < std::make_pair(poset.rank(b), b);
  });
  std::unordered_map<int, int> local;
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  const int shift = poset.rank(lower) + 1;
  std::vector<int> ranks;
  std::vector<std::vector<int>> covers;
  for (int x : members) {
    ranks.push_back(poset.rank(x) - shift);
    std::vector<int> u;
    for (int y : poset.up(x)) {
      auto it = local.find(y);
      if (it != local.end()) u.push_back(it->second);
    }
    covers.push_back(std::move(u));
  }
  return {RankedPoset(std::move(ranks), std::move(covers)), std::move(members)};
}

/// If the poset is isomorphic to the Boolean lattice of its atoms, returns
/// the witness: element -> bitmask of the atoms below it.
inline std::optional<std::vector<std::uint32_t>> boolean_lattice_witness(const RankedPoset& poset) {
  const auto mins = poset.minimal_elements();
  if (mins.size() != 1 || poset.rank(mins[0]) != poset.min_rank()) return std::nullopt;
  const auto& atoms = poset.at_rank(poset.min_rank() + 1);
  if (atoms.size() > 31) return std::nullopt;
  if (poset.size() != (std::size_t{1} << atoms.size())) return std::nullopt;
  std::vector<std::uint32_t> mask(poset.size(), 0);
  for (std::size_t a = 0; a < atoms.size(); ++a) mask[static_cast<std::size_t>(atoms[a])] = std::uint32_t{1} << a;
  for (int r = poset.min_rank() + 2; r <= poset.max_rank(); ++r)
    for (int x : poset.at_rank(r))
      for (int y : poset.down(x)) mask[static_cast<std::size_t>(x)] |= mask[static_cast<std::size_t>(y)];
  std::unordered_set<std::uint32_t> seen;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    const int r = poset.rank(static_cast<int>(x)) - poset.min_rank();
    if (std::popcount(mask[x]) != r || !seen.insert(mask[x]).second) return std::nullopt;
    if (poset.up(static_cast<int>(x)).size() != atoms.size() - static_cast<std::size_t>(r)) return std::nullopt;
    for (int y : poset.up(static_cast<int>(x))) {
      if ((mask[x] & ~mask[static_cast<std::size_t>(y)]) != 0) return std::nullopt;
    }
  }
  return mask;
}

/// Entries of the Schlafli symbol {p_1, ..., p_{n-1}} of a polytope ranked
/// -1..n, or nullopt if some entry is not constant across sections.
inline std::optional<std::vector<int>> schlafli_type(const RankedPoset& poset) {
  if (poset.min_rank() != -1 || poset.max_rank() < 2) {
    throw InvalidArgument("Schlafli type needs a polytope of rank >= 2");
  }
  std::vector<int> symbol;
  for (int i = 1; i <= poset.max_rank() - 1; ++i) {
    std::optional<int> common;
    for (int f : poset.at_rank(i - 2)) {
      const auto ups = poset.upset(f);
      std::unordered_set<int> above(ups.begin(), ups.end());
      for (int g : ups) {
        if (poset.rank(g) != i + 1) continue;
        int count = 0;
        for (int y : poset.down(g)) count += above.contains(y) ? 1 : 0;
        if (!common) common = count;
        if (*common != count) return std::nullopt;
      }
    }
    if (!common) return std::nullopt;
    symbol.push_back(*common);
  }
  return symbol;
}

inline std::string schlafli_string(const std::optional<std::vector<int>>& symbol) {
  if (!symbol) return "not equivelar";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < symbol->size(); ++i) os << (i ? ", " : "") << (*symbol)[i];
  os << '}';
  return os.str();
}

/// f_0 - f_1 + f_2 for a polytope ranked -1..3.
inline long euler_characteristic(const RankedPoset& poset) {
  if (poset.min_rank() != -1 || poset.max_rank() != 3) {
    throw InvalidArgument("Euler characteristic is defined here for rank-3 polytopes");
  }
  return static_cast<long>(poset.at_rank(0).size()) - static_cast<long>(poset.at_rank(1).size()) +
         static_cast<long>(poset.at_rank(2).size());
}

/// Rank- and cover-preserving bijection a -> b, searched by backtracking
/// along the Hasse diagram with (rank, up-degree, down-degree) pruning.
/// `max_nodes` bounds the number of search nodes.
inline std::optional<std::vector<int>> poset_isomorphism(const RankedPoset& a, const RankedPoset& b,
                                                         std::size_t max_nodes = 50'000'000) {
  if (a.size() != b.size() || a.min_rank() != b.min_rank() || a.max_rank() != b.max_rank() ||
      a.f_vector() != b.f_vector()) {
    return std::nullopt;
  }
  using Invariant = std::tuple<int, std::size_t, std::size_t>;
  auto invariant = [](const RankedPoset& p, int x) {
    return Invariant{p.rank(x), p.up(x).size(), p.down(x).size()};
  };
  std::map<Invariant, std::vector<int>> classes_b;
  std::map<Invariant, std::size_t> count_a;
  for (std::size_t x = 0; x < a.size(); ++x) ++count_a[invariant(a, static_cast<int>(x))];
  for (std::size_t x = 0; x < b.size(); ++x) classes_b[invariant(b, static_cast<int>(x))].push_back(static_cast<int>(x));
  for (const auto& [inv, n] : count_a) {
    auto it = classes_b.find(inv);
    if (it == classes_b.end() || it->second.size() != n) return std::nullopt;
  }

  // Visit order: breadth first over the undirected Hasse diagram, starting
  // from an element whose invariant class is smallest. parent[i] is an
  // earlier neighbour (or -1 for a component root).
  const std::size_t n = a.size();
  std::vector<int> order;
  std::vector<int> parent_of(n, -1);
  std::vector<bool> placed(n, false);
  std::vector<int> roots(n);
  std::iota(roots.begin(), roots.end(), 0);
  std::stable_sort(roots.begin(), roots.end(), [&](int x, int y) {
    return count_a[invariant(a, x)] < count_a[invariant(a, y)];
  });
  for (int root : roots) {
    if (placed[static_cast<std::size_t>(root)]) continue;
    placed[static_cast<std::size_t>(root)] = true;
    std::size_t head = order.size();
    order.push_back(root);
    for (; head < order.size(); ++head) {
      const int x = order[head];
      // Elements alone in their class are forced; growing through them
      // (the least and greatest faces) would leave whole ranks unconstrained.
      if (count_a[invariant(a, x)] == 1) continue;
      for (const auto* nbrs : {&a.up(x), &a.down(x)}) {
        for (int y : *nbrs) {
          if (placed[static_cast<std::size_t>(y)]) continue;
          placed[static_cast<std::size_t>(y)] = true;
          parent_of[static_cast<std::size_t>(y)] = x;
          order.push_back(y);
        }
      }
    }
  }

  std::vector<int> forward(n, -1), backward(n, -1);
  std::size_t nodes = 0;

  auto consistent = [&](int x, int c) {
    // Every mapped cover of x must map to a cover of c in the same
    // direction, and c must have no other mapped covers.
    std::size_t mapped_up = 0, mapped_down = 0;
    for (int y : a.up(x)) {
      if (forward[static_cast<std::size_t>(y)] < 0) continue;
      ++mapped_up;
      if (!b.covers(c, forward[static_cast<std::size_t>(y)])) return false;
    }
    for (int y : a.down(x)) {
      if (forward[static_cast<std::size_t>(y)] < 0) continue;
      ++mapped_down;
      if (!b.covers(forward[static_cast<std::size_t>(y)], c)) return false;
    }
    std::size_t img_up = 0, img_down = 0;
    for (int z : b.up(c)) img_up += backward[static_cast<std::size_t>(z)] >= 0 ? 1 : 0;
    for (int z : b.down(c)) img_down += backward[static_cast<std::size_t>(z)] >= 0 ? 1 : 0;
    return img_up == mapped_up && img_down == mapped_down;
  };

  auto search = [&](auto&& self, std::size_t t) -> bool {
    if (t == n) return true;
    if (++nodes > max_nodes) throw CapExceeded("poset isomorphism search exceeded node budget");
    const int x = order[t];
    const Invariant inv = invariant(a, x);
    const int parent = parent_of[static_cast<std::size_t>(x)];
    const std::vector<int>* candidates = &classes_b[inv];
    if (parent >= 0) {
      const int image = forward[static_cast<std::size_t>(parent)];
      candidates = a.rank(x) > a.rank(parent) ? &b.up(image) : &b.down(image);
    }
    for (int c : *candidates) {
      if (backward[static_cast<std::size_t>(c)] >= 0 || invariant(b, c) != inv) continue;
      if (!consistent(x, c)) continue;
      forward[static_cast<std::size_t>(x)] = c;
      backward[static_cast<std::size_t>(c)] = x;
      if (self(self, t + 1)) return true;
      forward[static_cast<std::size_t>(x)] = -1;
      backward[static_cast<std::size_t>(c)] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return forward;
}

/// True if `map` is a bijection a -> b preserving ranks and preserving and
/// reflecting covers.
inline bool is_poset_isomorphism(const RankedPoset& a, const RankedPoset& b, const std::vector<int>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (std::size_t x = 0; x < a.size(); ++x) {
    const int y = map[x];
    if (y < 0 || static_cast<std::size_t>(y) >= b.size() || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = true;
    if (a.rank(static_cast<int>(x)) != b.rank(y)) return false;
    if (a.up(static_cast<int>(x)).size() != b.up(y).size()) return false;
    for (int z : a.up(static_cast<int>(x))) {
      if (!b.covers(y, map[static_cast<std::size_t>(z)])) return false;
    }
  }
  return true;
}

/// Graphviz rendering of the Hasse diagram, bottom to top.
inline std::string hasse_dot(const RankedPoset& poset,
                             const std::function<std::string(int)>& label = {}) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t x = 0; x < poset.size(); ++x) {
    os << "  n" << x << " [label=\"";
    if (label) {
      os << label(static_cast<int>(x));
    } else {
      os << x;
    }
    os << "\"];\n";
  }
  for (std::size_t x = 0; x < poset.size(); ++x)
    for (int y : poset.up(static_cast<int>(x))) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gph
