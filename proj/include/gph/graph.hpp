#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gph/error.hpp"

namespace gph {

/// Subset of the edge indices 1..q of a graph, q <= 32.
class EdgeSubset {
 public:
  static constexpr int max_edges = 32;

  EdgeSubset() = default;
  explicit EdgeSubset(std::uint32_t mask) : mask_(mask) {}
  EdgeSubset(std::initializer_list<int> edges) {
    for (int e : edges) insert(e);
  }

  static EdgeSubset all(int q) {
    return EdgeSubset(q >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << q) - 1);
  }

  bool contains(int k) const { return (mask_ >> (k - 1)) & 1u; }
  void insert(int k) {
    if (k < 1 || k > max_edges) throw InvalidArgument("edge index out of range");
    mask_ |= std::uint32_t{1} << (k - 1);
  }
  void erase(int k) { mask_ &= ~(std::uint32_t{1} << (k - 1)); }
  EdgeSubset with(int k) const {
    EdgeSubset s = *this;
    s.insert(k);
    return s;
  }

  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint32_t mask() const { return mask_; }
  bool subset_of(EdgeSubset other) const { return (mask_ & ~other.mask_) == 0; }

  /// Members in increasing order (1-based).
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend EdgeSubset operator|(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.mask_ | b.mask_); }
  friend EdgeSubset operator&(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.mask_ & b.mask_); }
  friend bool operator==(EdgeSubset, EdgeSubset) = default;

  /// Canonical order: by size, then lexicographically by sorted members.
  friend std::strong_ordering operator<=>(EdgeSubset a, EdgeSubset b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.members() <=> b.members();
  }

 private:
  std::uint32_t mask_ = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on vertices 1..p with indexed edges e_1..e_q.
/// Edge indices follow construction order and name the generators tau_{e_k}.
class Graph {
 public:
  Graph() = default;

  Graph(int p, std::vector<Edge> edges) : p_(p), edges_(std::move(edges)) {
    if (p_ < 0) throw InvalidArgument("vertex count must be non-negative");
    if (static_cast<int>(edges_.size()) > EdgeSubset::max_edges) {
      throw InvalidArgument("at most 32 edges are supported");
    }
    adjacency_.assign(static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_), 0);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      Edge& e = edges_[k];
      if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
      if (e.u < 1 || e.v < 1) throw InvalidArgument("non-positive vertex label");
      if (e.u > p_ || e.v > p_) throw InvalidArgument("vertex label exceeds p");
      if (e.u > e.v) std::swap(e.u, e.v);
      auto& cell = adjacency_[index(e.u, e.v)];
      if (cell != 0) {
        throw InvalidArgument("duplicate edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "}");
      }
      cell = static_cast<std::uint8_t>(k + 1);
      adjacency_[index(e.v, e.u)] = static_cast<std::uint8_t>(k + 1);
    }
  }

  int p() const { return p_; }
  int q() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge e_k, k in 1..q.
  const Edge& edge(int k) const { return edges_.at(static_cast<std::size_t>(k - 1)); }

  bool adjacent(int u, int v) const { return edge_index(u, v) != 0; }
  /// Index k of the edge {u, v}, or 0 if absent.
  int edge_index(int u, int v) const {
    if (u < 1 || v < 1 || u > p_ || v > p_) return 0;
    return adjacency_[index(u, v)];
  }

  int degree(int v) const {
    int d = 0;
    for (int w = 1; w <= p_; ++w) d += adjacent(v, w) ? 1 : 0;
    return d;
  }

  EdgeSubset all_edges() const { return EdgeSubset::all(q()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.p_ == b.p_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(p_) +
           static_cast<std::size_t>(v - 1);
  }

  int p_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

// Named graphs. Edge orders follow the conventions used for stars and cycles:
// K_{1,q} has e_i = {i, q+1}; C_q has e_i = {i, i+1} with e_q = {q, 1}.

inline Graph star_graph(int q) {
  std::vector<Edge> edges;
  for (int i = 1; i <= q; ++i) edges.push_back({i, q + 1});
  return Graph(q + 1, std::move(edges));
}

inline Graph cycle_graph(int q) {
  if (q < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= q; ++i) edges.push_back({i, i % q + 1});
  return Graph(q, std::move(edges));
}

/// Path with q edges on q+1 vertices.
inline Graph path_graph(int q) {
  std::vector<Edge> edges;
  for (int i = 1; i <= q; ++i) edges.push_back({i, i + 1});
  return Graph(q + 1, std::move(edges));
}

inline Graph complete_graph(int p) {
  std::vector<Edge> edges;
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) edges.push_back({i, j});
  return Graph(p, std::move(edges));
}

/// Vertex partition of the spanning subgraph (V(G), k). Blocks are sorted
/// internally and ordered by their least element.
inline std::vector<std::vector<int>> connected_components(const Graph& g, EdgeSubset k) {
  std::vector<int> parent(static_cast<std::size_t>(g.p() + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e : k.members()) {
    if (e > g.q()) throw InvalidArgument("edge subset exceeds the graph's edges");
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(g.p() + 1), -1);
  for (int v = 1; v <= g.p(); ++v) {
    const int r = find(v);
    auto& slot = block_of[static_cast<std::size_t>(r)];
    if (slot < 0) {
      slot = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot)].push_back(v);
  }
  return blocks;
}

/// component_label[v] = index of v's block in connected_components(g, k).
inline std::vector<int> component_labels(const Graph& g, EdgeSubset k) {
  std::vector<int> label(static_cast<std::size_t>(g.p() + 1), -1);
  const auto blocks = connected_components(g, k);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) label[static_cast<std::size_t>(v)] = static_cast<int>(b);
  return label;
}

inline bool is_connected(const Graph& g) {
  return g.p() <= 1 || connected_components(g, g.all_edges()).size() == 1;
}

/// Node k of the result corresponds to edge e_k; nodes k < l are joined
/// when e_k and e_l share a vertex. Branches are listed in (k, l) order.
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> branches;
  for (int k = 1; k <= g.q(); ++k) {
    for (int l = k + 1; l <= g.q(); ++l) {
      const Edge& a = g.edge(k);
      const Edge& b = g.edge(l);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) branches.push_back({k, l});
    }
  }
  return Graph(g.q(), std::move(branches));
}

// ---------------------------------------------------------------------------
// External formats.
//
// Edge-list text:  "p=4; 1 4; 2 4; 3 4"
// JSON:            {"p": 4, "edges": [[1, 4], [2, 4], [3, 4]]}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline int parse_int(std::string_view token, std::string_view what) {
  const std::string t = trim(token);
  if (t.empty()) throw ParseError("missing " + std::string(what));
  std::size_t i = 0;
  if (t[0] == '-' || t[0] == '+') i = 1;
  if (i == t.size()) throw ParseError("bad " + std::string(what) + ": '" + t + "'");
  for (std::size_t j = i; j < t.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
      throw ParseError("bad " + std::string(what) + ": '" + t + "'");
    }
  }
  if (t.size() > 9) throw ParseError(std::string(what) + " too large");
  return std::stoi(t);
}

inline Graph validated_input_graph(int p, std::vector<Edge> edges) {
  if (p < 1) throw ParseError("p must be positive");
  for (const Edge& e : edges) {
    if (e.u == e.v) throw ParseError("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v < 1) throw ParseError("non-positive vertex label");
    if (e.u > p || e.v > p) {
      throw ParseError("vertex label " + std::to_string(std::max(e.u, e.v)) +
                       " exceeds declared p=" + std::to_string(p));
    }
  }
  Graph g;
  try {
    g = Graph(p, std::move(edges));
  } catch (const InvalidArgument& ex) {
    throw ParseError(ex.what());
  }
  if (g.p() > 1) {
    for (int v = 1; v <= g.p(); ++v) {
      if (g.degree(v) == 0) throw ParseError("vertex " + std::to_string(v) + " is isolated");
    }
  }
  return g;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : text) {
      if (c == ';' || c == '\n') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
  }
  std::vector<std::string> items;
  for (auto& s : parts) {
    auto t = detail::trim(s);
    if (!t.empty()) items.push_back(std::move(t));
  }
  if (items.empty()) throw ParseError("empty graph description");
  const std::string& head = items.front();
  if (head.rfind("p=", 0) != 0 && head.rfind("p =", 0) != 0) {
    throw ParseError("graph text must start with 'p=<int>'");
  }
  const int p = detail::parse_int(head.substr(head.find('=') + 1), "vertex count");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < items.size(); ++i) {
    std::istringstream is(items[i]);
    std::string a, b, extra;
    is >> a >> b;
    if (a.empty() || b.empty() || (is >> extra)) {
      throw ParseError("edge must be two labels: '" + items[i] + "'");
    }
    edges.push_back({detail::parse_int(a, "vertex label"), detail::parse_int(b, "vertex label")});
  }
  return detail::validated_input_graph(p, std::move(edges));
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("edges")) {
    throw ParseError("graph JSON needs fields 'p' and 'edges'");
  }
  if (!j["p"].is_number_integer()) throw ParseError("'p' must be an integer");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("each edge must be a 2-array of integers");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return detail::validated_input_graph(j["p"].get<int>(), std::move(edges));
}

/// Accepts either the edge-list text or the JSON object form.
inline Graph parse_graph(std::string_view text) {
  const std::string t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("invalid graph JSON: ") + ex.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(t);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "p=" << g.p();
  for (const Edge& e : g.edges()) os << "; " << e.u << ' ' << e.v;
  return os.str();
}

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"p", g.p()}, {"edges", edges}};
}

}  // namespace gph
