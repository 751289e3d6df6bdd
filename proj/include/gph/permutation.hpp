#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gph/error.hpp"

namespace gph {

/// A permutation of {1, ..., n} stored in one-line form.
///
/// Composition convention (used everywhere in this library):
///
///     (a * b)(i) == a(b(i))
///
/// i.e. `b` is applied first. Right cosets are written `T * alpha`, so two
/// permutations alpha, beta lie in the same right coset of T exactly when
/// `alpha * beta.inverse()` is in T.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    check_degree(n);
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
    return p;
  }

  /// From a one-line word over 1..n.
  static Permutation from_one_line(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    check_degree(n);
    Permutation p;
    p.images_.resize(word.size());
    std::vector<bool> seen(word.size(), false);
    for (std::size_t i = 0; i < word.size(); ++i) {
      const int v = word[i];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
        throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
      p.images_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  static Permutation transposition(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) {
      throw InvalidArgument("invalid transposition (" + std::to_string(i) + " " +
                            std::to_string(j) + ") in degree " + std::to_string(n));
    }
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)],
              p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  /// Product of disjoint or overlapping cycles, e.g. "(1 4)(2 3)".
  /// The cycles are composed with the library convention, rightmost first.
  static Permutation from_cycles(std::string_view text, int n) {
    Permutation result = identity(n);
    std::size_t pos = 0;
    std::vector<Permutation> factors;
    auto skip_space = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
      if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
      ++pos;
      std::vector<int> cycle;
      for (;;) {
        skip_space();
        if (pos >= text.size()) throw ParseError("unterminated cycle");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
          throw ParseError("unexpected character in cycle notation");
        }
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          ++pos;
        }
        if (v < 1 || v > n) throw ParseError("cycle entry out of range 1.." + std::to_string(n));
        if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) {
          throw ParseError("repeated entry in a cycle");
        }
        cycle.push_back(v);
      }
      Permutation c = identity(n);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        c.images_[static_cast<std::size_t>(cycle[k] - 1)] =
            static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()] - 1);
      }
      factors.push_back(std::move(c));
      skip_space();
    }
    for (const auto& f : factors) result = result * f;
    return result;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

  std::vector<int> one_line() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      p.images_[images_[i]] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  /// a * b applies b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
      throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                            std::to_string(b.degree()));
    }
    Permutation p;
    p.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
    return p;
  }

  /// Order of the element in the cyclic group it generates.
  std::size_t order() const {
    std::size_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      os << '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) os << ' ';
        os << j + 1;
      }
      os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
  }

  const std::vector<std::uint8_t>& raw() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  static void check_degree(int n) {
    if (n < 0 || n > 255) throw InvalidArgument("permutation degree out of range");
  }

  std::vector<std::uint8_t> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.raw()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace gph

template <>
struct std::hash<gph::Permutation> : gph::PermutationHash {};
