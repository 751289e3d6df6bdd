#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gph/error.hpp"
#include "gph/permutation.hpp"

namespace gph {

// Compare against Rational values only: mixed comparisons with int literals
// recurse without end in some Boost versions when the integer type is long.
using Rational = boost::rational<std::int64_t>;

/// Point of R^q; the geometry lives in the hyperplane x_1 + ... + x_q = 0.
using RationalVector = std::vector<Rational>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

inline Rational floor_of(const Rational& r) {
  std::int64_t n = r.numerator(), d = r.denominator();  // d > 0
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return Rational(f);
}

inline RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RationalVector operator*(const Rational& s, const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational coordinate_sum(const RationalVector& a) {
  Rational s = 0;
  for (const auto& x : a) s += x;
  return s;
}

inline RationalVector zero_vector(int q) { return RationalVector(static_cast<std::size_t>(q), Rational(0)); }

inline void check_rank(int q) {
  if (q < 3) throw InvalidArgument("the q-cycle geometry needs q >= 3");
}

/// v_i = (i/q)(b_1 + ... + b_q) - (b_1 + ... + b_i), i = 1..q; v_q = o.
/// Result index i-1 holds v_i.
inline std::vector<RationalVector> fundamental_vertices(int q) {
  check_rank(q);
  std::vector<RationalVector> v;
  for (int i = 1; i <= q; ++i) {
    RationalVector x(static_cast<std::size_t>(q));
    for (int k = 1; k <= q; ++k) x[static_cast<std::size_t>(k - 1)] = Rational(i, q) - (k <= i ? 1 : 0);
    v.push_back(std::move(x));
  }
  return v;
}

/// a_i = b_{i+1} - b_i for i < q and a_q = -(a_1 + ... + a_{q-1}) = b_1 - b_q.
inline std::vector<RationalVector> root_basis(int q) {
  check_rank(q);
  std::vector<RationalVector> a;
  for (int i = 1; i <= q; ++i) {
    RationalVector x = zero_vector(q);
    if (i < q) {
      x[static_cast<std::size_t>(i)] = 1;
      x[static_cast<std::size_t>(i - 1)] = -1;
    } else {
      x[0] = 1;
      x[static_cast<std::size_t>(q - 1)] = -1;
    }
    a.push_back(std::move(x));
  }
  return a;
}

/// Affine map y_k = x_{perm[k]} + shift[k] (0-based indices). Every element
/// of the affine Coxeter group has this form.
struct AffineMap {
  std::vector<int> perm;
  RationalVector shift;

  static AffineMap identity(int q) {
    AffineMap m{std::vector<int>(static_cast<std::size_t>(q)), zero_vector(q)};
    std::iota(m.perm.begin(), m.perm.end(), 0);
    return m;
  }

  RationalVector operator()(const RationalVector& x) const {
    RationalVector y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[static_cast<std::size_t>(perm[k])] + shift[k];
    return y;
  }

  /// (f * g)(x) = f(g(x)).
  friend AffineMap operator*(const AffineMap& f, const AffineMap& g) {
    AffineMap h;
    h.perm.resize(f.perm.size());
    h.shift.resize(f.perm.size());
    for (std::size_t k = 0; k < f.perm.size(); ++k) {
      const auto j = static_cast<std::size_t>(f.perm[k]);
      h.perm[k] = g.perm[j];
      h.shift[k] = g.shift[j] + f.shift[k];
    }
    return h;
  }

  bool is_translation() const {
    for (std::size_t k = 0; k < perm.size(); ++k)
      if (perm[k] != static_cast<int>(k)) return false;
    return true;
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// r_i for i < q swaps x_i and x_{i+1}; r_q maps x to
/// (x_q - 1, x_2, ..., x_{q-1}, x_1 + 1).
inline AffineMap reflection(int q, int i) {
  check_rank(q);
  if (i < 1 || i > q) throw InvalidArgument("mirror index out of range 1..q");
  AffineMap m = AffineMap::identity(q);
  if (i < q) {
    std::swap(m.perm[static_cast<std::size_t>(i - 1)], m.perm[static_cast<std::size_t>(i)]);
  } else {
    m.perm[0] = q - 1;
    m.perm[static_cast<std::size_t>(q - 1)] = 0;
    m.shift[0] = -1;
    m.shift[static_cast<std::size_t>(q - 1)] = 1;
  }
  return m;
}

inline RationalVector reflect(int q, int i, const RationalVector& x) { return reflection(q, i)(x); }

/// Composite of the reflections named by `word`, leftmost outermost.
inline AffineMap reflection_word(int q, const std::vector<int>& word) {
  AffineMap m = AffineMap::identity(q);
  for (int i : word) m = m * reflection(q, i);
  return m;
}

/// r_1 r_2 ... r_{q-1} r_q r_{q-1} ... r_2.
inline std::vector<int> translation_word(int q) {
  std::vector<int> w;
  for (int i = 1; i <= q; ++i) w.push_back(i);
  for (int i = q - 1; i >= 2; --i) w.push_back(i);
  return w;
}

/// The composite of translation_word(q) moves every point by -a_1.
inline bool translation_identity_check(int q) {
  const AffineMap m = reflection_word(q, translation_word(q));
  const RationalVector minus_a1 = Rational(-1) * root_basis(q)[0];
  if (!m.is_translation() || m.shift != minus_a1) return false;
  // Evaluate on a generic point as well.
  RationalVector x(static_cast<std::size_t>(q));
  Rational sum = 0;
  for (int k = 0; k + 1 < q; ++k) {
    x[static_cast<std::size_t>(k)] = Rational(2 * k + 3, 7 + k);
    sum += x[static_cast<std::size_t>(k)];
  }
  x[static_cast<std::size_t>(q - 1)] = -sum;
  return m(x) == x + minus_a1;
}

/// Coefficients of x in the basis a_1..a_{q-1}: c_j = <x, v_j>.
inline RationalVector root_coordinates(int q, const RationalVector& x) {
  const auto v = fundamental_vertices(q);
  RationalVector c(static_cast<std::size_t>(q - 1));
  for (int j = 0; j + 1 < q; ++j) c[static_cast<std::size_t>(j)] = dot(x, v[static_cast<std::size_t>(j)]);
  return c;
}

/// Root coordinates reduced into [0, 1): equal exactly when the inputs
/// differ by a root-lattice vector.
inline RationalVector reduced_coordinates(int q, const RationalVector& x) {
  RationalVector c = root_coordinates(q, x);
  for (auto& t : c) t -= floor_of(t);
  return c;
}

inline RationalVector reduce_mod_root_lattice(int q, const RationalVector& x) {
  if (coordinate_sum(x).numerator() != 0) throw InvalidArgument("point is not in the zero-sum hyperplane");
  const RationalVector c = reduced_coordinates(q, x);
  const auto a = root_basis(q);
  RationalVector y = zero_vector(q);
  for (int j = 0; j + 1 < q; ++j) y = y + c[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(j)];
  return y;
}

namespace detail {

/// Row-style Hermite reduction of integer vectors; returns a basis of the
/// generated lattice.
inline std::vector<std::vector<std::int64_t>> integer_row_basis(std::vector<std::vector<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> basis;
  if (rows.empty()) return basis;
  const std::size_t n = rows.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (pivot == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[pivot][col]))) {
          pivot = r;
        }
      }
      if (pivot == rows.size()) break;
      std::swap(rows[top], rows[pivot]);
      bool reduced = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        const std::int64_t f = rows[r][col] / rows[top][col];
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= f * rows[top][k];
        if (rows[r][col] != 0) reduced = false;
      }
      if (reduced) {
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

inline Rational determinant(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].numerator() == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

inline Rational gram_determinant(const std::vector<RationalVector>& basis) {
  std::vector<RationalVector> g(basis.size(), RationalVector(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = dot(basis[i], basis[j]);
  return determinant(std::move(g));
}

/// Solves m x = b exactly; throws if singular.
inline RationalVector solve(std::vector<RationalVector> m, RationalVector b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].numerator() == 0) ++p;
    if (p == n) throw InternalInconsistency("singular linear system");
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].numerator() == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

inline std::int64_t exact_sqrt(const Rational& r) {
  if (r.denominator() != 1 || r.numerator() < 0) throw InternalInconsistency("index squared is not a square integer");
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(r.numerator()))));
  while (s * s > r.numerator()) --s;
  while ((s + 1) * (s + 1) <= r.numerator()) ++s;
  if (s * s != r.numerator()) throw InternalInconsistency("index squared is not a square integer");
  return s;
}

}  // namespace detail

/// Index of the root lattice in the lattice generated by a_1..a_{q-1} and
/// v_1, from the ratio of Gram determinants of the two lattice bases.
inline std::int64_t dual_lattice_index(int q) {
  check_rank(q);
  const auto a = root_basis(q);
  const auto v = fundamental_vertices(q);
  // Generators in root coordinates, scaled to integers by q.
  std::vector<RationalVector> gens(a.begin(), a.end() - 1);
  gens.push_back(v[0]);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    std::vector<std::int64_t> row;
    for (const auto& c : root_coordinates(q, g)) {
      const Rational scaled = c * q;
      if (scaled.denominator() != 1) throw InternalInconsistency("unexpected denominator");
      row.push_back(scaled.numerator());
    }
    rows.push_back(std::move(row));
  }
  const auto basis_coords = detail::integer_row_basis(rows);
  if (basis_coords.size() != static_cast<std::size_t>(q - 1)) throw InternalInconsistency("lattice is not full rank");
  std::vector<RationalVector> basis;
  for (const auto& row : basis_coords) {
    RationalVector x = zero_vector(q);
    for (int j = 0; j + 1 < q; ++j) x = x + Rational(row[static_cast<std::size_t>(j)], q) * a[static_cast<std::size_t>(j)];
    basis.push_back(std::move(x));
  }
  const std::vector<RationalVector> root_lattice_basis(a.begin(), a.end() - 1);
  return detail::exact_sqrt(detail::gram_determinant(root_lattice_basis) / detail::gram_determinant(basis));
}

/// Number of distinct classes among o, v_1, ..., v_{q-1} modulo the root
/// lattice; also checks that it agrees with dual_lattice_index.
inline std::int64_t dual_class_count(int q) {
  const auto v = fundamental_vertices(q);
  std::vector<RationalVector> classes;
  for (const auto& x : v) {
    const auto c = reduced_coordinates(q, x);
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
  }
  const auto n = static_cast<std::int64_t>(classes.size());
  if (n != dual_lattice_index(q)) throw InternalInconsistency("dual class count disagrees with the lattice index");
  return n;
}

/// Point equidistant from the given q affinely independent points of the
/// zero-sum hyperplane, lying in that hyperplane.
inline RationalVector circumcenter(const std::vector<RationalVector>& points) {
  const std::size_t q = points.size();
  std::vector<RationalVector> m;
  RationalVector b;
  for (std::size_t i = 1; i < q; ++i) {
    RationalVector row(q);
    for (std::size_t k = 0; k < q; ++k) row[k] = 2 * (points[i][k] - points[0][k]);
    m.push_back(std::move(row));
    b.push_back(dot(points[i], points[i]) - dot(points[0], points[0]));
  }
  m.emplace_back(q, Rational(1));
  b.emplace_back(0);
  return detail::solve(std::move(m), std::move(b));
}

inline Rational squared_distance(const RationalVector& a, const RationalVector& b) {
  const RationalVector d = a - b;
  return dot(d, d);
}

/// Image of a chamber of the affine Coxeter complex modulo the root lattice.
struct Chamber {
  AffineMap element;                  // w with this chamber = w(S)
  std::vector<RationalVector> vertex;  // vertex[i-1] = w(v_i), label i
  Permutation mark;                   // pi(w), r_j -> (j j+1 mod q)
  RationalVector key;                 // reduced coordinates of the barycenter
  RationalVector center;              // circumcenter

  RationalVector barycenter() const {
    RationalVector s = zero_vector(static_cast<int>(vertex.size()));
    for (const auto& v : vertex) s = s + v;
    return Rational(1, static_cast<std::int64_t>(vertex.size())) * s;
  }
};

/// Reduced barycenter of w(S).
inline RationalVector chamber_key(int q, const AffineMap& w) {
  RationalVector s = zero_vector(q);
  for (const auto& v : fundamental_vertices(q)) s = s + w(v);
  return reduced_coordinates(q, Rational(1, q) * s);
}

inline Chamber make_chamber(int q, const AffineMap& w, Permutation mark) {
  Chamber c;
  c.element = w;
  for (const auto& v : fundamental_vertices(q)) c.vertex.push_back(w(v));
  c.mark = std::move(mark);
  c.key = reduced_coordinates(q, c.barycenter());
  c.center = circumcenter(c.vertex);
  return c;
}

/// tau_j = (j j+1), subscripts mod q: the image of r_j in S_q.
inline Permutation mark_of_reflection(int q, int j) { return Permutation::transposition(q, j, j % q + 1); }

/// The q! chambers modulo the root lattice, in breadth-first order from the
/// fundamental chamber S under left multiplication by r_1..r_q.
inline std::vector<Chamber> enumerate_chambers_mod_lattice(int q, std::size_t cap = Caps::faces) {
  check_rank(q);
  std::vector<Chamber> out;
  std::map<RationalVector, std::size_t> seen;
  out.push_back(make_chamber(q, AffineMap::identity(q), Permutation::identity(q)));
  seen.emplace(out.front().key, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j = 1; j <= q; ++j) {
      const AffineMap w = reflection(q, j) * out[head].element;
      const Permutation mark = mark_of_reflection(q, j) * out[head].mark;
      const auto it = seen.find(chamber_key(q, w));
      if (it != seen.end()) {
        if (out[it->second].mark != mark) throw InternalInconsistency("chamber marks are not lattice invariant");
        continue;
      }
      if (out.size() >= cap) throw CapExceeded("chamber enumeration exceeds cap");
      out.push_back(make_chamber(q, w, mark));
      seen.emplace(out.back().key, out.size() - 1);
    }
  }
  return out;
}

/// Voronoi vertex check at one chamber: the circumcenter is equidistant
/// from the chamber's vertices and strictly closer to them than to any
/// other vertex of the chambers within two steps (w r_k S, w r_k r_l S).
inline bool voronoi_vertex_check(int q, const Chamber& c) {
  const Rational r2 = squared_distance(c.center, c.vertex.front());
  for (const auto& v : c.vertex)
    if (squared_distance(c.center, v) != r2) return false;
  const auto fv = fundamental_vertices(q);
  auto check_chamber = [&](const AffineMap& m) {
    for (const auto& v : fv) {
      const RationalVector x = m(v);
      if (std::find(c.vertex.begin(), c.vertex.end(), x) != c.vertex.end()) continue;
      if (squared_distance(c.center, x) <= r2) return false;
    }
    return true;
  };
  for (int k = 1; k <= q; ++k) {
    const AffineMap one = c.element * reflection(q, k);
    if (!check_chamber(one)) return false;
    for (int l = 1; l <= q; ++l) {
      if (l != k && !check_chamber(one * reflection(q, l))) return false;
    }
  }
  return true;
}

}  // namespace gph
