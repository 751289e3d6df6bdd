#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gph/error.hpp"
#include "gph/graph.hpp"
#include "gph/permgroup.hpp"
#include "gph/permutation.hpp"
#include "gph/presentation.hpp"
#include "gph/symmetry.hpp"

namespace gph {

/// Group of the K_{1,q}-graphicahedron inside S_{2q+1}: tau_i = (i q+1)
/// generate S_{q+1} on the first block; omega_i = (i i+1)(q+i+1 q+i+2)
/// permute the tau's by conjugation. sigma_0 = tau_1, sigma_j = omega_j.
struct TwistedGroup {
  int q = 0;
  std::vector<Permutation> tau;    // tau_1..tau_q
  std::vector<Permutation> omega;  // omega_1..omega_{q-1}
  std::vector<Permutation> sigma;  // sigma_0..sigma_{q-1}
};

inline TwistedGroup twisted_generators(int q) {
  if (q < 2) throw InvalidArgument("twisted group needs q >= 2");
  const int n = 2 * q + 1;
  TwistedGroup t;
  t.q = q;
  for (int i = 1; i <= q; ++i) t.tau.push_back(Permutation::transposition(n, i, q + 1));
  for (int i = 1; i < q; ++i) {
    t.omega.push_back(Permutation::transposition(n, i, i + 1) *
                      Permutation::transposition(n, q + i + 1, q + i + 2));
  }
  t.sigma.push_back(t.tau.front());
  for (const auto& w : t.omega) t.sigma.push_back(w);
  return t;
}

inline std::size_t twisted_group_order(int q, std::size_t cap = Caps::closure) {
  const auto t = twisted_generators(q);
  return closure(2 * q + 1, t.sigma, cap).size();
}

struct CheckReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
};

/// Involutory generators, commuting non-adjacent pairs, and the
/// intersection property over every pair of generator subsets.
inline CheckReport verify_string_cgroup(const std::vector<Permutation>& gens, std::size_t cap = Caps::closure) {
  CheckReport r;
  if (gens.empty()) throw InvalidArgument("no generators");
  const int n = static_cast<int>(gens.size());
  if (n > 16) throw CapExceeded("intersection check limited to 16 generators");
  const int degree = gens.front().degree();
  for (int i = 0; i < n; ++i) {
    const auto& g = gens[static_cast<std::size_t>(i)];
    r.expect(!g.is_identity() && (g * g).is_identity(), "generator " + std::to_string(i) + " is not an involution");
    for (int j = i + 2; j < n; ++j) {
      const auto& h = gens[static_cast<std::size_t>(j)];
      r.expect(g * h == h * g, "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
    }
  }
  std::vector<ElementSet> sub(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < sub.size(); ++m) {
    std::vector<Permutation> chosen;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) chosen.push_back(gens[static_cast<std::size_t>(i)]);
    sub[m] = closure(degree, chosen, cap);
  }
  for (std::uint32_t a = 0; a < sub.size(); ++a) {
    for (std::uint32_t b = a + 1; b < sub.size(); ++b) {
      r.expect(intersect(sub[a], sub[b]) == sub[a & b],
               "intersection property fails for subsets " + std::to_string(a) + " and " + std::to_string(b));
    }
  }
  return r;
}

/// Conjugation by omega_j permutes tau_j and tau_{j+1} and fixes the other
/// tau's, and agrees with conjugation by (j j+1) inside S_{q+1}.
inline CheckReport twisting_action_check(int q) {
  const auto t = twisted_generators(q);
  CheckReport r;
  for (int j = 1; j < q; ++j) {
    const auto& w = t.omega[static_cast<std::size_t>(j - 1)];
    const Permutation inner = Permutation::transposition(q + 1, j, j + 1);
    for (int i = 1; i <= q; ++i) {
      const int k = i == j ? j + 1 : i == j + 1 ? j : i;
      r.expect(w * t.tau[static_cast<std::size_t>(i - 1)] * w == t.tau[static_cast<std::size_t>(k - 1)],
               "omega_" + std::to_string(j) + " does not send tau_" + std::to_string(i) + " to tau_" + std::to_string(k));
      const Permutation small = Permutation::transposition(q + 1, i, q + 1);
      const Permutation small_image = Permutation::transposition(q + 1, k, q + 1);
      r.expect(inner * small * inner == small_image,
               "(j j+1) conjugation differs from omega_" + std::to_string(j) + " on tau_" + std::to_string(i));
    }
  }
  return r;
}

/// eta_j = (j j+1) in S_q and theta_i = eta_i eta_{i-1} ... eta_1:
/// eta_j theta_i equals theta_i eta_{j+1}, theta_{i-1}, theta_{i+1} or
/// theta_i eta_j according as j <= i-1, j = i, j = i+1, j >= i+2.
inline CheckReport theta_relations_check(int q) {
  if (q < 3) throw InvalidArgument("needs q >= 3");
  std::vector<Permutation> eta(static_cast<std::size_t>(q + 1), Permutation::identity(q));
  for (int j = 1; j < q; ++j) eta[static_cast<std::size_t>(j)] = Permutation::transposition(q, j, j + 1);
  std::vector<Permutation> theta(static_cast<std::size_t>(q), Permutation::identity(q));
  for (int i = 1; i < q; ++i) theta[static_cast<std::size_t>(i)] = eta[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(i - 1)];
  CheckReport r;
  for (int i = 0; i < q; ++i) {
    for (int j = 1; j < q; ++j) {
      const Permutation lhs = eta[static_cast<std::size_t>(j)] * theta[static_cast<std::size_t>(i)];
      Permutation rhs;
      if (j <= i - 1) {
        rhs = theta[static_cast<std::size_t>(i)] * eta[static_cast<std::size_t>(j + 1)];
      } else if (j == i) {
        rhs = theta[static_cast<std::size_t>(i - 1)];
      } else if (j == i + 1) {
        rhs = theta[static_cast<std::size_t>(i + 1)];
      } else {
        rhs = theta[static_cast<std::size_t>(i)] * eta[static_cast<std::size_t>(j)];
      }
      r.expect(lhs == rhs, "case (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return r;
}

/// mu_{i+1} = theta_i eta_0 theta_i^-1 built from eta_j = sigma_j of the
/// twisted group.
inline std::vector<Permutation> mu_generators(const TwistedGroup& t) {
  const int q = t.q;
  const auto& eta = t.sigma;
  std::vector<Permutation> theta(static_cast<std::size_t>(q), Permutation::identity(2 * q + 1));
  for (int i = 1; i < q; ++i) theta[static_cast<std::size_t>(i)] = eta[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(i - 1)];
  std::vector<Permutation> mu;
  for (int i = 0; i < q; ++i) {
    mu.push_back(theta[static_cast<std::size_t>(i)] * eta[0] * theta[static_cast<std::size_t>(i)].inverse());
  }
  return mu;
}

/// Conjugation relations among the mu's, the recursive description,
/// |<mu_1..mu_q>| = (q+1)!, and the star relators on the mu's.
inline CheckReport mu_generators_check(int q, std::size_t cap = Caps::closure) {
  if (q < 3) throw InvalidArgument("needs q >= 3");
  const auto t = twisted_generators(q);
  const auto& eta = t.sigma;
  const auto mu = mu_generators(t);  // mu[0] = mu_1
  auto mu_at = [&](int k) -> const Permutation& { return mu[static_cast<std::size_t>(k - 1)]; };
  CheckReport r;
  r.expect(mu_at(1) == eta[0], "mu_1 differs from eta_0");
  for (int i = 1; i < q; ++i) {
    r.expect(mu_at(i + 1) == eta[static_cast<std::size_t>(i)] * mu_at(i) * eta[static_cast<std::size_t>(i)],
             "mu_" + std::to_string(i + 1) + " differs from eta_i mu_i eta_i");
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 1; j < q; ++j) {
      const Permutation lhs = eta[static_cast<std::size_t>(j)] * mu_at(i + 1) * eta[static_cast<std::size_t>(j)];
      const int k = j == i ? i : j == i + 1 ? i + 2 : i + 1;
      r.expect(lhs == mu_at(k), "conjugation relation at (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  std::uint64_t expected = 1;
  for (int i = 2; i <= q + 1; ++i) expected *= static_cast<std::uint64_t>(i);
  r.expect(closure(2 * q + 1, mu, cap).size() == expected, "<mu_1..mu_q> does not have order (q+1)!");
  r.expect(star_presentation(q).satisfied_by(mu), "mu generators violate a star relator");
  return r;
}

/// Image in S_{2q+1} of an automorphism (gamma, kappa) of the
/// K_{1,q}-graphicahedron: gamma kappa on 1..q+1 and kappa restricted to
/// 1..q, shifted to q+2..2q+1.
inline Permutation embed_star_automorphism(int q, const PolytopeAut& a) {
  const Permutation first = a.gamma * a.kappa;
  std::vector<int> word(static_cast<std::size_t>(2 * q + 1));
  for (int i = 1; i <= q + 1; ++i) word[static_cast<std::size_t>(i - 1)] = first(i);
  for (int i = 1; i <= q; ++i) {
    const int image = a.kappa(i);
    if (image > q) throw InvalidArgument("kappa moves the central vertex");
    word[static_cast<std::size_t>(q + i)] = q + 1 + image;
  }
  return Permutation::from_one_line(word);
}

/// The twisted group preserves the blocks {1..q+1} and {q+2..2q+1} and has
/// order (q+1)! q!, so it is the full product of the two symmetric groups.
/// The distinguished generators of the K_{1,q}-graphicahedron embed onto
/// sigma_0..sigma_{q-1}.
inline CheckReport direct_product_check(int q, std::size_t cap = Caps::closure) {
  if (q < 3) throw InvalidArgument("needs q >= 3");
  const auto t = twisted_generators(q);
  CheckReport r;
  for (std::size_t s = 0; s < t.sigma.size(); ++s) {
    bool preserves = true;
    for (int i = 1; i <= 2 * q + 1; ++i) preserves = preserves && ((i <= q + 1) == (t.sigma[s](i) <= q + 1));
    r.expect(preserves, "sigma_" + std::to_string(s) + " mixes the blocks");
  }
  std::uint64_t expected = 1;
  for (int i = 2; i <= q + 1; ++i) expected *= static_cast<std::uint64_t>(i);
  for (int i = 2; i <= q; ++i) expected *= static_cast<std::uint64_t>(i);
  r.expect(closure(2 * q + 1, t.sigma, cap).size() == expected, "order differs from (q+1)! q!");

  const Graph g = star_graph(q);
  const auto rho = distinguished_generators(g);
  r.expect(rho.has_value(), "no distinguished generators for the star graphicahedron");
  if (rho) {
    for (std::size_t j = 0; j < rho->size(); ++j) {
      r.expect(embed_star_automorphism(q, (*rho)[j]) == t.sigma[j],
               "rho_" + std::to_string(j) + " does not correspond to sigma_" + std::to_string(j));
    }
    // The embedding is a homomorphism: check on all generator pairs.
    for (const auto& a : *rho)
      for (const auto& b : *rho)
        r.expect(embed_star_automorphism(q, a * b) ==
                     embed_star_automorphism(q, a) * embed_star_automorphism(q, b),
                 "embedding is not multiplicative");
  }
  return r;
}

}  // namespace gph
