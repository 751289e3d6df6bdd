#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gph/affine_coxeter.hpp"
#include "gph/error.hpp"
#include "gph/graph.hpp"
#include "gph/graphicahedron.hpp"
#include "gph/poset.hpp"

namespace gph {

/// A face of the permutahedral tessellation of the torus. Its label set K
/// names the mirrors r_k, k in K; the face is the class of chambers that
/// share every vertex whose label lies outside K.
struct TorusFace {
  int rank = 0;
  EdgeSubset labels;
  RationalVector key;         // reduced barycenter of the shared vertices
  std::vector<int> chambers;  // chambers in the face, increasing
};

/// Permutahedral tiling of E^{q-1} by Voronoi cells of the dual root
/// lattice, taken modulo the root lattice. Element 0 of the poset is the
/// least face, element size()-1 the greatest; elements in between are the
/// entries of faces() shifted by one.
class TorusTessellation {
 public:
  int q() const { return q_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const std::vector<TorusFace>& faces() const { return faces_; }
  const TorusFace& face(int poset_id) const { return faces_[static_cast<std::size_t>(poset_id - 1)]; }
  const RankedPoset& poset() const { return poset_; }
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(faces_.size()) + 1; }

  /// Poset id of the face with label set K containing the chamber.
  int face_of(int chamber, EdgeSubset k) const {
    return face_index_[static_cast<std::size_t>(chamber)][k.mask()];
  }

  /// Poset ids of the tiles; tile_class()[t] is the dual class index of
  /// tiles()[t] (0 for the class of the origin).
  const std::vector<int>& tiles() const { return tiles_; }
  const std::vector<int>& tile_class() const { return tile_class_; }

  std::vector<std::size_t> f_vector() const { return poset_.f_vector(0, q_ - 1); }

  friend TorusTessellation build_torus_tessellation(int q, std::size_t cap);

 private:
  int q_ = 0;
  std::vector<Chamber> chambers_;
  std::vector<TorusFace> faces_;
  std::vector<std::vector<int>> face_index_;
  std::vector<int> tiles_;
  std::vector<int> tile_class_;
  RankedPoset poset_;
};

inline TorusTessellation build_torus_tessellation(int q, std::size_t cap = Caps::faces) {
  check_rank(q);
  if (q > 8) throw CapExceeded("torus tessellation limited to q <= 8");
  TorusTessellation t;
  t.q_ = q;
  t.chambers_ = enumerate_chambers_mod_lattice(q, cap);
  const std::size_t n = t.chambers_.size();
  const std::uint32_t full = (std::uint32_t{1} << q) - 1;
  t.face_index_.assign(n, std::vector<int>(full + 1, -1));

  std::vector<EdgeSubset> subsets;
  for (std::uint32_t m = 0; m < full; ++m) subsets.emplace_back(m);
  std::sort(subsets.begin(), subsets.end());

  for (EdgeSubset k : subsets) {
    std::map<RationalVector, int> by_key;
    for (std::size_t c = 0; c < n; ++c) {
      RationalVector s = zero_vector(q);
      int count = 0;
      for (int label = 1; label <= q; ++label) {
        if (k.contains(label)) continue;
        s = s + t.chambers_[c].vertex[static_cast<std::size_t>(label - 1)];
        ++count;
      }
      RationalVector key = reduced_coordinates(q, Rational(1, count) * s);
      auto [it, fresh] = by_key.emplace(key, static_cast<int>(t.faces_.size()) + 1);
      if (fresh) {
        if (t.faces_.size() >= cap) throw CapExceeded("torus face count exceeds cap");
        t.faces_.push_back(TorusFace{k.size(), k, std::move(key), {}});
      }
      t.faces_[static_cast<std::size_t>(it->second - 1)].chambers.push_back(static_cast<int>(c));
      t.face_index_[c][k.mask()] = it->second;
    }
  }
  const int top = static_cast<int>(t.faces_.size()) + 1;
  for (std::size_t c = 0; c < n; ++c) t.face_index_[c][full] = top;

  std::vector<int> ranks(t.faces_.size() + 2);
  std::vector<std::vector<int>> up(t.faces_.size() + 2);
  ranks.front() = -1;
  ranks.back() = q;
  for (std::size_t f = 0; f < t.faces_.size(); ++f) {
    const TorusFace& face = t.faces_[f];
    const int id = static_cast<int>(f) + 1;
    ranks[static_cast<std::size_t>(id)] = face.rank;
    if (face.rank == 0) up[0].push_back(id);
    // Covers computed from every member chamber must agree.
    std::vector<int> expected;
    for (int member : face.chambers) {
      std::vector<int> covers;
      for (int label = 1; label <= q; ++label) {
        if (!face.labels.contains(label)) covers.push_back(t.face_of(member, face.labels.with(label)));
      }
      std::sort(covers.begin(), covers.end());
      covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
      if (member == face.chambers.front()) {
        expected = covers;
      } else if (covers != expected) {
        throw InternalInconsistency("torus face covers depend on the chosen chamber");
      }
    }
    up[static_cast<std::size_t>(id)] = expected;
    if (face.rank == q - 1) {
      t.tiles_.push_back(id);
      int missing = 1;
      while (face.labels.contains(missing)) ++missing;
      t.tile_class_.push_back(missing % q);
    }
  }
  t.poset_ = RankedPoset(std::move(ranks), std::move(up));
  return t;
}

struct TessellationChecks {
  bool face_to_face = false;  // every (q-2)-face in exactly 2 tiles
  bool vertex_in_q_tiles = false;
  bool tiles_are_permutahedra = false;  // each tile has q! vertices
  std::size_t tiles = 0;
  std::size_t vertices = 0;
  std::size_t flags = 0;
};

inline TessellationChecks check_tessellation(const TorusTessellation& t) {
  TessellationChecks r;
  const RankedPoset& P = t.poset();
  const int q = t.q();
  r.tiles = t.tiles().size();
  r.vertices = P.at_rank(0).size();
  r.flags = maximal_chains(P).size();
  r.face_to_face = true;
  for (int f : P.at_rank(q - 2)) r.face_to_face = r.face_to_face && P.up(f).size() == 2;
  std::set<int> tile_set(t.tiles().begin(), t.tiles().end());
  r.vertex_in_q_tiles = true;
  for (int v : P.at_rank(0)) {
    std::size_t count = 0;
    for (int x : P.upset(v)) count += tile_set.contains(x) ? 1 : 0;
    r.vertex_in_q_tiles = r.vertex_in_q_tiles && count == static_cast<std::size_t>(q);
  }
  r.tiles_are_permutahedra = true;
  for (int tile : t.tiles()) {
    std::size_t count = 0;
    for (int x : P.downset(tile)) count += P.rank(x) == 0 ? 1 : 0;
    r.tiles_are_permutahedra = r.tiles_are_permutahedra && count == detail::factorial(q);
  }
  return r;
}

struct IsomorphismResult {
  bool well_defined = false;
  bool rank_preserving = false;
  bool bijective = false;
  bool order_isomorphism = false;
  bool search_checked = false;
  bool search_confirms = false;
  std::vector<int> witness;  // torus poset id -> graphicahedron face id

  bool ok() const {
    return well_defined && rank_preserving && bijective && order_isomorphism && (!search_checked || search_confirms);
  }
};

/// The explicit map from the torus tessellation to the C_q-graphicahedron:
/// the face with label set K at a chamber with mark m goes to
/// (K, T_K m^-1), where label k names the edge {k, k+1 mod q} of C_q.
///
/// Chambers sharing a face with label set K at w(S) are w u(S) for u in the
/// parabolic subgroup on K, so their marks form the left coset m <tau_k>.
/// With products applied right to left, the graphicahedron's faces are right
/// cosets T_K alpha; inverting the mark converts one into the other.
inline IsomorphismResult torus_isomorphism(const TorusTessellation& t, const FaceLattice& lat,
                                              bool run_search) {
  IsomorphismResult r;
  const RankedPoset& P = t.poset();
  r.witness.assign(P.size(), -1);
  r.witness[static_cast<std::size_t>(t.bottom())] = lat.bottom();
  r.witness[static_cast<std::size_t>(t.top())] = lat.top();
  r.well_defined = true;
  for (std::size_t f = 0; f < t.faces().size(); ++f) {
    const TorusFace& face = t.faces()[f];
    int image = -1;
    for (int c : face.chambers) {
      const int id = lat.id_of(face.labels, t.chambers()[static_cast<std::size_t>(c)].mark.inverse());
      if (image < 0) image = id;
      r.well_defined = r.well_defined && image == id;
    }
    r.witness[f + 1] = image;
  }
  r.rank_preserving = P.size() == lat.size();
  for (std::size_t x = 0; x < P.size() && r.rank_preserving; ++x) {
    r.rank_preserving = lat.poset().rank(r.witness[x]) == P.rank(static_cast<int>(x));
  }
  std::vector<int> sorted = r.witness;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = P.size() == lat.size() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                sorted.front() == 0;
  r.order_isomorphism = r.bijective && is_poset_isomorphism(P, lat.poset(), r.witness);
  if (r.order_isomorphism) {
    // Order both ways on every pair, directly from the definitions.
    for (std::size_t a = 1; a + 1 < P.size() && r.order_isomorphism; ++a) {
      const auto ups = P.upset(static_cast<int>(a));
      const std::set<int> above(ups.begin(), ups.end());
      for (std::size_t b = 1; b + 1 < P.size(); ++b) {
        const bool geometric = above.contains(static_cast<int>(b));
        const bool combinatorial = face_leq(lat, r.witness[a], r.witness[b]);
        if (geometric != combinatorial) {
          r.order_isomorphism = false;
          break;
        }
      }
    }
  }
  if (run_search) {
    r.search_checked = true;
    const auto found = poset_isomorphism(P, lat.poset());
    r.search_confirms = found.has_value() && is_poset_isomorphism(P, lat.poset(), *found);
  }
  return r;
}

inline IsomorphismResult torus_isomorphism(int q, bool run_search) {
  const TorusTessellation t = build_torus_tessellation(q);
  const FaceLattice lat = build_graphicahedron(cycle_graph(q));
  return torus_isomorphism(t, lat, run_search);
}

/// Serializable view of the tessellation. Vertex coordinates are the
/// circumcenters of the chambers, reduced modulo the root lattice.
struct TorusGeometry {
  struct Vertex {
    std::vector<std::string> coords;
    std::vector<int> mark;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct FaceRecord {
    int rank = 0;
    std::vector<int> labels;
    std::vector<int> vertex_ids;
    friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
  };
  struct Tile {
    int cls = 0;
    std::vector<int> face_ids;
    friend bool operator==(const Tile&, const Tile&) = default;
  };

  int q = 0;
  std::vector<Vertex> vertices;
  std::vector<FaceRecord> faces;
  std::vector<Tile> tiles;

  friend bool operator==(const TorusGeometry&, const TorusGeometry&) = default;
};

inline TorusGeometry torus_geometry(const TorusTessellation& t) {
  TorusGeometry g;
  g.q = t.q();
  for (const auto& c : t.chambers()) {
    TorusGeometry::Vertex v;
    for (const auto& x : reduce_mod_root_lattice(t.q(), c.center)) v.coords.push_back(to_string(x));
    v.mark = c.mark.one_line();
    g.vertices.push_back(std::move(v));
  }
  for (const auto& f : t.faces()) g.faces.push_back({f.rank, f.labels.members(), f.chambers});
  for (std::size_t i = 0; i < t.tiles().size(); ++i) {
    TorusGeometry::Tile tile{t.tile_class()[i], {}};
    for (int x : t.poset().downset(t.tiles()[i]))
      if (x != t.bottom()) tile.face_ids.push_back(x - 1);
    std::sort(tile.face_ids.begin(), tile.face_ids.end());
    g.tiles.push_back(std::move(tile));
  }
  return g;
}

inline nlohmann::json to_json(const TorusGeometry& g) {
  nlohmann::json vertices = nlohmann::json::array(), faces = nlohmann::json::array(),
                 tiles = nlohmann::json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"coords", v.coords}, {"mark", v.mark}});
  for (const auto& f : g.faces) faces.push_back({{"rank", f.rank}, {"labels", f.labels}, {"vertex_ids", f.vertex_ids}});
  for (const auto& t : g.tiles) tiles.push_back({{"class", t.cls}, {"face_ids", t.face_ids}});
  return {{"q", g.q}, {"vertices", vertices}, {"faces", faces}, {"tiles", tiles}};
}

inline TorusGeometry torus_geometry_from_json(const nlohmann::json& j) {
  TorusGeometry g;
  try {
    g.q = j.at("q").get<int>();
    for (const auto& v : j.at("vertices"))
      g.vertices.push_back({v.at("coords").get<std::vector<std::string>>(), v.at("mark").get<std::vector<int>>()});
    for (const auto& f : j.at("faces"))
      g.faces.push_back({f.at("rank").get<int>(), f.at("labels").get<std::vector<int>>(),
                         f.at("vertex_ids").get<std::vector<int>>()});
    for (const auto& t : j.at("tiles")) g.tiles.push_back({t.at("class").get<int>(), t.at("face_ids").get<std::vector<int>>()});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad torus JSON: ") + e.what());
  }
  for (const auto& v : g.vertices) {
    if (static_cast<int>(v.coords.size()) != g.q) throw ParseError("vertex has wrong dimension");
    Rational sum{0};
    for (const auto& s : v.coords) sum += parse_rational(s);
    if (sum.numerator() != 0) throw ParseError("vertex is off the zero-sum hyperplane");
  }
  return g;
}

namespace detail {

/// Orthonormal coordinates on the zero-sum hyperplane (Helmert basis).
inline std::vector<double> hyperplane_coordinates(const RationalVector& x) {
  const std::size_t q = x.size();
  std::vector<double> out;
  for (std::size_t k = 1; k < q; ++k) {
    double s = 0;
    for (std::size_t i = 0; i < k; ++i) s += boost::rational_cast<double>(x[i]);
    s -= static_cast<double>(k) * boost::rational_cast<double>(x[k]);
    out.push_back(s / std::sqrt(static_cast<double>(k * (k + 1))));
  }
  return out;
}

struct AffineMapLess {
  bool operator()(const AffineMap& a, const AffineMap& b) const {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.shift < b.shift;
  }
};

}  // namespace detail

/// One copy of each tile, centred at v_l, as polygons in OFF format. The
/// polygons are the 2-faces of the tiles, deduplicated where tiles meet;
/// comments list which OFF vertices are identified on the torus.
inline std::string export_off(const TorusTessellation& t) {
  const int q = t.q();
  if (q != 3 && q != 4) throw InvalidArgument("OFF export supports q = 3 or 4");
  std::map<RationalVector, int> point_id;
  std::vector<RationalVector> points;
  std::vector<int> torus_vertex;
  std::map<RationalVector, int> chamber_by_key;
  for (std::size_t c = 0; c < t.chambers().size(); ++c) chamber_by_key.emplace(t.chambers()[c].key, static_cast<int>(c));

  auto point_of = [&](const AffineMap& w) {
    std::vector<RationalVector> verts;
    for (const auto& v : fundamental_vertices(q)) verts.push_back(w(v));
    const RationalVector c = circumcenter(verts);
    auto [it, fresh] = point_id.emplace(c, static_cast<int>(points.size()));
    if (fresh) {
      points.push_back(c);
      torus_vertex.push_back(chamber_by_key.at(chamber_key(q, w)));
    }
    return it->second;
  };

  std::vector<std::vector<int>> polygons;
  std::set<std::vector<int>> polygon_keys;
  for (int l = 1; l <= q; ++l) {
    // Chambers around v_l: the parabolic subgroup generated by r_k, k != l.
    std::vector<AffineMap> around{AffineMap::identity(q)};
    std::set<AffineMap, detail::AffineMapLess> seen{around.front()};
    for (std::size_t h = 0; h < around.size(); ++h) {
      for (int k = 1; k <= q; ++k) {
        if (k == l) continue;
        AffineMap w = around[h] * reflection(q, k);
        if (seen.insert(w).second) around.push_back(std::move(w));
      }
    }
    for (const auto& w : around) {
      for (int a = 1; a <= q; ++a) {
        for (int b = a + 1; b <= q; ++b) {
          if (a == l || b == l) continue;
          std::vector<int> cycle;
          AffineMap cur = w;
          for (int step = 0;; ++step) {
            cycle.push_back(point_of(cur));
            cur = cur * reflection(q, step % 2 == 0 ? a : b);
            if (cur == w) break;
          }
          std::vector<int> key = cycle;
          std::sort(key.begin(), key.end());
          if (polygon_keys.insert(key).second) polygons.push_back(std::move(cycle));
        }
      }
    }
  }

  std::ostringstream os;
  os << "OFF\n";
  os << "# permutahedral torus tessellation, q=" << q << ", " << t.tiles().size() << " tiles, "
     << t.chambers().size() << " torus vertices\n";
  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < points.size(); ++i) classes[torus_vertex[i]].push_back(static_cast<int>(i));
  for (const auto& [v, ids] : classes) {
    os << "# identify torus vertex " << v << ':';
    for (int i : ids) os << ' ' << i;
    os << '\n';
  }
  os << points.size() << ' ' << polygons.size() << " 0\n";
  char buf[64];
  for (const auto& p : points) {
    auto xyz = detail::hyperplane_coordinates(p);
    xyz.resize(3, 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
      std::snprintf(buf, sizeof buf, "%.6f", std::abs(xyz[i]) < 5e-7 ? 0.0 : xyz[i]);
      os << (i ? " " : "") << buf;
    }
    os << '\n';
  }
  for (const auto& poly : polygons) {
    os << poly.size();
    for (int i : poly) os << ' ' << i;
    os << '\n';
  }
  return os.str();
}

}  // namespace gph
