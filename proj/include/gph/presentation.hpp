#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "gph/error.hpp"
#include "gph/permutation.hpp"

namespace gph {

/// A group word over generators 1..n: letter +k is generator k, -k its
/// inverse. Words are freely reduced on construction.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}
  explicit Word(const std::vector<int>& letters) {
    for (int x : letters) append(x);
  }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(-*it);
    return w;
  }

  Word power(int k) const {
    Word w;
    for (int i = 0; i < k; ++i) w = w * *this;
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    for (int x : b.letters_) w.append(x);
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void append(int x) {
    if (x == 0) throw InvalidArgument("word letter 0");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }

  std::vector<int> letters_;
};

/// Product of the generator images, read left to right: the word
/// [a, b] evaluates to images[a] * images[b].
inline Permutation evaluate(const Word& w, const std::vector<Permutation>& images) {
  if (images.empty()) throw InvalidArgument("no generator images");
  Permutation r = Permutation::identity(images.front().degree());
  for (int x : w.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(x) - 1);
    if (k >= images.size()) throw InvalidArgument("letter out of range");
    r = r * (x > 0 ? images[k] : images[k].inverse());
  }
  return r;
}

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;

  void validate() const {
    if (generators < 1) throw InvalidArgument("presentation needs at least one generator");
    for (const auto& r : relators) {
      if (r.empty()) throw InvalidArgument("empty relator");
      for (int x : r.letters())
        if (std::abs(x) > generators) throw InvalidArgument("relator letter out of range");
    }
  }

  /// True if every relator evaluates to the identity under the images.
  bool satisfied_by(const std::vector<Permutation>& images) const {
    if (static_cast<int>(images.size()) != generators) throw InvalidArgument("wrong number of images");
    return std::all_of(relators.begin(), relators.end(),
                       [&](const Word& r) { return evaluate(r, images).is_identity(); });
  }
};

inline nlohmann::json to_json(const GroupPresentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relators) rels.push_back(r.letters());
  return {{"generators", p.generators}, {"relators", rels}};
}

inline GroupPresentation presentation_from_json(const nlohmann::json& j) {
  GroupPresentation p;
  try {
    p.generators = j.at("generators").get<int>();
    for (const auto& r : j.at("relators")) p.relators.emplace_back(r.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad presentation JSON: ") + e.what());
  }
  p.validate();
  return p;
}

/// tau_i^2, (tau_i tau_j)^3 and (tau_i tau_j tau_k tau_j)^2 for distinct
/// i, j, k in 1..q.
inline GroupPresentation star_presentation(int q) {
  if (q < 2) throw InvalidArgument("star presentation needs q >= 2");
  GroupPresentation p{q, {}};
  for (int i = 1; i <= q; ++i) p.relators.push_back(Word{i, i});
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j) p.relators.push_back(Word{i, j}.power(3));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j)
      for (int k = 1; k <= q; ++k)
        if (i != j && j != k && i != k) p.relators.push_back(Word{i, j, k, j}.power(2));
  return p;
}

/// Coxeter relations of the q-cycle diagram (subscripts mod q) together
/// with tau_1 tau_2 ... tau_{q-1} tau_q tau_{q-1} ... tau_2.
inline GroupPresentation cycle_presentation(int q) {
  if (q < 3) throw InvalidArgument("cycle presentation needs q >= 3");
  GroupPresentation p{q, {}};
  for (int i = 1; i <= q; ++i) p.relators.push_back(Word{i, i});
  for (int i = 1; i <= q; ++i) p.relators.push_back(Word{i, i % q + 1}.power(3));
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j) {
      const bool adjacent = j == i + 1 || (i == 1 && j == q);
      if (!adjacent) p.relators.push_back(Word{i, j}.power(2));
    }
  std::vector<int> long_word;
  for (int i = 1; i <= q; ++i) long_word.push_back(i);
  for (int i = q - 1; i >= 2; --i) long_word.push_back(i);
  p.relators.emplace_back(long_word);
  return p;
}

/// The Coxeter relations of the q-cycle diagram alone (an infinite group).
inline GroupPresentation affine_cycle_presentation(int q) {
  GroupPresentation p = cycle_presentation(q);
  p.relators.pop_back();
  return p;
}

/// tau_i = (i q+1), i = 1..q.
inline std::vector<Permutation> star_transpositions(int q) {
  std::vector<Permutation> out;
  for (int i = 1; i <= q; ++i) out.push_back(Permutation::transposition(q + 1, i, q + 1));
  return out;
}

/// tau_i = (i i+1), subscripts mod q.
inline std::vector<Permutation> cycle_transpositions(int q) {
  std::vector<Permutation> out;
  for (int i = 1; i <= q; ++i) out.push_back(Permutation::transposition(q, i, i % q + 1));
  return out;
}

struct EnumerationResult {
  bool complete = false;
  std::size_t index = 0;           // number of cosets when complete
  std::size_t cosets_defined = 0;  // total definitions made
  std::size_t max_live = 0;
  /// Compacted table: table[c][2(g-1)] = c * g, table[c][2(g-1)+1] = c * g^-1.
  std::vector<std::vector<int>> table;
};

/// Coset enumeration (HLT with a deduction stack; lookahead and compaction
/// when the live coset count reaches `max_rows`). An incomplete result means
/// the cap was hit; it says nothing about the true index.
class ToddCoxeter {
 public:
  ToddCoxeter(const GroupPresentation& pres, const std::vector<Word>& subgroup, std::size_t max_rows)
      : n_(pres.generators), cols_(2 * static_cast<std::size_t>(pres.generators)), max_rows_(max_rows) {
    pres.validate();
    for (const auto& r : pres.relators) relators_.push_back(to_columns(r));
    for (const auto& h : subgroup) subgroup_.push_back(to_columns(h));
    // Cyclic conjugates of relators and their inverses, grouped by their
    // first column, for deduction processing.
    rotations_.assign(cols_, {});
    for (const auto& r : relators_) {
      for (const auto& w : {r, inverse_columns(r)}) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
          auto& bucket = rotations_[static_cast<std::size_t>(rot.front())];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(rot);
        }
      }
    }
  }

  EnumerationResult run() {
    new_coset();
    for (const auto& h : subgroup_) scan_and_fill(0, h);
    process_deductions();
    for (int c = 0; c < static_cast<int>(forward_.size()); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
        process_deductions();
        if (overflow_) return give_up();
      }
      for (std::size_t x = 0; x < cols_ && alive(c); ++x) {
        if (at(c, x) < 0) {
          if (!define(c, x)) return give_up();
          process_deductions();
        }
      }
      if (overflow_) return give_up();
    }
    return finish(true);
  }

 private:
  std::vector<int> to_columns(const Word& w) const {
    std::vector<int> out;
    for (int x : w.letters()) out.push_back(x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1);
    return out;
  }
  static std::vector<int> inverse_columns(const std::vector<int>& w) {
    std::vector<int> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(*it ^ 1);
    return out;
  }

  int& at(int c, std::size_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  bool alive(int c) const { return forward_[static_cast<std::size_t>(c)] == c; }

  int rep(int c) {
    int r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      const int next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  int new_coset() {
    const int c = static_cast<int>(forward_.size());
    forward_.push_back(c);
    table_.insert(table_.end(), cols_, -1);
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
    return c;
  }

  /// Defines c * x as a new coset. Returns false when the row cap is hit
  /// and lookahead cannot free space.
  bool define(int c, std::size_t x) {
    if (live_ >= max_rows_) {
      lookahead();
      if (live_ >= max_rows_ || !alive(c)) {
        if (live_ >= max_rows_) overflow_ = true;
        return !overflow_;
      }
    }
    const int d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
    push_deduction(c, x);
    return true;
  }

  void push_deduction(int c, std::size_t x) {
    if (deductions_.size() >= max_deductions_) {
      deductions_.clear();
      deductions_lost_ = true;
      return;
    }
    deductions_.emplace_back(c, x);
  }

  /// Scans c through w, defining new cosets to close gaps if `fill`.
  /// Returns false if the scan stopped before the relator closed at c.
  bool scan(int c, const std::vector<int>& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, static_cast<std::size_t>(w[static_cast<std::size_t>(i)])) >= 0) {
        f = at(f, static_cast<std::size_t>(w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, static_cast<std::size_t>(w[static_cast<std::size_t>(j)] ^ 1)) >= 0) {
        b = at(b, static_cast<std::size_t>(w[static_cast<std::size_t>(j)] ^ 1));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        const auto x = static_cast<std::size_t>(w[static_cast<std::size_t>(i)]);
        at(f, x) = b;
        at(b, x ^ 1) = f;
        push_deduction(f, x);
        return true;
      }
      if (!fill) return false;
      if (!define(f, static_cast<std::size_t>(w[static_cast<std::size_t>(i)]))) return false;
      // Lookahead inside define may have merged f or b away.
      if (!alive(c) || !alive(f) || !alive(b)) return false;
    }
  }

  /// Repeats the filling scan until the relator closes at c, c dies, or the
  /// row cap is exhausted.
  void scan_and_fill(int c, const std::vector<int>& w) {
    while (alive(c) && !overflow_ && !scan(c, w, true)) {
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& rot : rotations_[x]) {
        if (!alive(c)) break;
        scan(c, rot, false);
      }
      const int d = at(c, x);
      if (d >= 0 && alive(d)) {
        for (const auto& rot : rotations_[x ^ 1]) {
          if (!alive(d)) break;
          scan(d, rot, false);
        }
      }
    }
    if (deductions_lost_) {
      deductions_lost_ = false;
      lookahead();
    }
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int g = queue[h];
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = at(g, x);
        if (d < 0) continue;
        if (at(d, x ^ 1) == g) at(d, x ^ 1) = -1;
        const int mu = rep(g), nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
          push_deduction(mu, x);
        }
      }
    }
  }

  /// Scans every live coset under every relator without defining anything.
  void lookahead() {
    if (in_lookahead_) return;
    in_lookahead_ = true;
    for (int c = 0; c < static_cast<int>(forward_.size()); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
    }
    while (!deductions_.empty()) {
      // Deductions from lookahead are already consistent with every
      // relator scan above; drop them.
      deductions_.pop_back();
    }
    in_lookahead_ = false;
  }

  EnumerationResult give_up() { return finish(false); }

  EnumerationResult finish(bool complete) {
    EnumerationResult res;
    res.complete = complete;
    res.cosets_defined = defined_;
    res.max_live = max_live_;
    if (!complete) {
      res.index = live_;
      return res;
    }
    // Compact: live cosets renumbered in order of their ids.
    std::vector<int> number(forward_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c)
      if (forward_[c] == static_cast<int>(c)) number[c] = next++;
    res.index = static_cast<std::size_t>(next);
    res.table.assign(res.index, std::vector<int>(cols_, -1));
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (number[c] < 0) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = at(static_cast<int>(c), x);
        if (d < 0) throw InternalInconsistency("coset table has a gap after enumeration");
        res.table[static_cast<std::size_t>(number[c])][x] = number[static_cast<std::size_t>(rep(d))];
      }
    }
    return res;
  }

  int n_;
  std::size_t cols_;
  std::size_t max_rows_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<std::vector<std::vector<int>>> rotations_;
  std::vector<int> table_;
  std::vector<int> forward_;
  std::vector<std::pair<int, std::size_t>> deductions_;
  std::size_t max_deductions_ = 100'000;
  bool deductions_lost_ = false;
  bool overflow_ = false;
  bool in_lookahead_ = false;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
  std::size_t max_live_ = 0;
};

inline EnumerationResult todd_coxeter(const GroupPresentation& pres, const std::vector<Word>& subgroup = {},
                                      std::size_t max_rows = Caps::cosets) {
  return ToddCoxeter(pres, subgroup, max_rows).run();
}

/// True if the table is closed, every row is a permutation of the cosets
/// under each generator, and every relator fixes every coset.
inline bool verify_coset_table(const GroupPresentation& pres, const EnumerationResult& res) {
  if (!res.complete) return false;
  const std::size_t n = res.table.size();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t x = 0; x < res.table[c].size(); ++x) {
      const int d = res.table[c][x];
      if (d < 0 || static_cast<std::size_t>(d) >= n) return false;
      if (res.table[static_cast<std::size_t>(d)][x ^ 1] != static_cast<int>(c)) return false;
    }
    for (const auto& r : pres.relators) {
      int e = static_cast<int>(c);
      for (int letter : r.letters()) {
        const std::size_t x = letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
        e = res.table[static_cast<std::size_t>(e)][x];
      }
      if (e != static_cast<int>(c)) return false;
    }
  }
  return true;
}

}  // namespace gph
