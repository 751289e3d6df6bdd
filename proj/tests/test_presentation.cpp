#include <catch_amalgamated.hpp>

#include "gph/presentation.hpp"
#include "gph/star_group.hpp"
#include "oracles.hpp"

using namespace gph;

TEST_CASE("words reduce freely") {
  const Word w{1, 2, -2, 3};
  CHECK(w.letters() == std::vector<int>{1, 3});
  CHECK((w * w.inverse()).empty());
  CHECK(Word{1, 2}.power(3).size() == 6);
  CHECK_THROWS_AS(Word{0}, InvalidArgument);
}

TEST_CASE("evaluation reads words left to right") {
  const std::vector<Permutation> img{Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3)};
  CHECK(evaluate(Word{1, 2}, img) == img[0] * img[1]);
  CHECK(evaluate(Word{1, 2}.power(3), img).is_identity());
  CHECK(evaluate(Word{-1}, img) == img[0]);
}

TEST_CASE("the concrete transpositions satisfy the relators") {
  for (int q = 2; q <= 5; ++q) {
    CHECK(star_presentation(q).satisfied_by(star_transpositions(q)));
    if (q >= 3) CHECK(cycle_presentation(q).satisfied_by(cycle_transpositions(q)));
  }
}

TEST_CASE("coset enumeration of the star presentation") {
  for (int q = 2; q <= 5; ++q) {
    const auto pres = star_presentation(q);
    const auto res = todd_coxeter(pres);
    REQUIRE(res.complete);
    CHECK(res.index == detail::factorial(q + 1));
    CHECK(verify_coset_table(pres, res));
    CHECK(res.index == oracle::naive_closure(q + 1, star_transpositions(q)).size());
  }
}

TEST_CASE("coset enumeration of the cycle presentation") {
  for (int q = 3; q <= 5; ++q) {
    const auto pres = cycle_presentation(q);
    const auto res = todd_coxeter(pres);
    REQUIRE(res.complete);
    CHECK(res.index == detail::factorial(q));
    CHECK(verify_coset_table(pres, res));
  }
}

TEST_CASE("subgroup index") {
  // <tau_1> has index 12 in S_4 presented on three star transpositions.
  const auto res = todd_coxeter(star_presentation(3), {Word{1}});
  REQUIRE(res.complete);
  CHECK(res.index == 12);
  const auto whole = todd_coxeter(star_presentation(3), {Word{1}, Word{2}, Word{3}});
  CHECK(whole.index == 1);
}

TEST_CASE("small textbook groups") {
  // <a, b | a^2, b^3, (ab)^5> is A_5.
  const GroupPresentation a5{2, {Word{1, 1}, Word{2, 2, 2}, Word{1, 2}.power(5)}};
  CHECK(todd_coxeter(a5).index == 60);
  // <a | a^7> is cyclic of order 7.
  CHECK(todd_coxeter(GroupPresentation{1, {Word{1}.power(7)}}).index == 7);
  // Trivial group.
  CHECK(todd_coxeter(GroupPresentation{2, {Word{1}, Word{2}}}).index == 1);
}

TEST_CASE("infinite groups hit the cap and report incomplete") {
  // Dropping the closing relator leaves the affine Coxeter group.
  const auto res = todd_coxeter(affine_cycle_presentation(3), {}, 2000);
  CHECK_FALSE(res.complete);
  CHECK_FALSE(verify_coset_table(affine_cycle_presentation(3), res));
  const GroupPresentation free_group{2, {Word{1, 2, -1, -2}}};
  CHECK_FALSE(todd_coxeter(free_group, {}, 500).complete);
}

TEST_CASE("presentation JSON round trip") {
  const auto p = star_presentation(3);
  const auto back = presentation_from_json(nlohmann::json::parse(to_json(p).dump()));
  CHECK(back.generators == p.generators);
  CHECK(back.relators == p.relators);
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse("{\"generators\": 2}")), ParseError);
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse("{\"generators\": 1, \"relators\": [[2]]}")),
                  InvalidArgument);
}
