#include <doctest.h>

#include "superkl/bases.hpp"
#include "superkl/hecke.hpp"
#include "superkl/suites.hpp"
#include "superkl/truncation.hpp"

using namespace superkl;

namespace {
Weight S(const char* s) { return parse_weight(s, Flavor::super); }
Weight R(const char* s) { return parse_weight(s, Flavor::reductive); }
LaurentPoly q(int e) { return LaurentPoly::monomial(e); }
}  // namespace

TEST_CASE("reductive canonical vectors agree with the tensor space oracle") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; m + n <= 4; ++n)
      for (const auto& f : all_finite(Flavor::reductive, m, n, -2, 2)) {
        INFO(f.to_string());
        CHECK(red_canonical(f) == oracle_canonical(f));
      }
}

TEST_CASE("worked example from both sides") {
  Expansion want;
  want.add(S("0,-1,-3,-4|-2,-1,0,*"), q(0));
  want.add(S("-1,-3,-4,-6|-6,-2,-1,*"), q(1));
  want.add(S("0,-3,-4,-5|-5,-2,0,*"), q(1));
  want.add(S("-3,-4,-5,-6|-6,-5,-2,*"), q(2));
  CHECK(super_canonical(S("0,-1,-3,-4|-2,-1,0,*")) == want);
  Expansion red = red_canonical(R("0,-1,-3,-4|3,2,1,*"));
  CHECK(red.size() == 4);
  CHECK(red.coefficient(R("-3,-4,-5,-6|3,2,1,0,-1,-3,-4,*")) == q(2));
}

TEST_CASE("finite super canonical vectors: shift route and direct formula") {
  for (const auto& f : all_finite(Flavor::super, 2, 2, -2, 3)) {
    INFO(f.to_string());
    CHECK(super_canonical(f) == super_canonical_direct(f));
  }
}

TEST_CASE("dual coefficients on the worked dual example") {
  CHECK(kl_l(S("-2,-4|-4,-2,*"), S("0,-2|-2,0,*")).at_neg_q_inverse() == q(2) + q(4));
  CHECK(kl_l(R("-2,-4|2,1,0,-1,-3,-5,*"), R("0,-2|2,1,-1,-3,*")).at_neg_q_inverse() == q(2) + q(4));
}

TEST_CASE("coefficient accessors match the expansions") {
  Weight f = R("2,1,0|3,0,-2");
  const Expansion u = red_canonical(f), l = red_dual_canonical(f);
  for (const auto& [g, c] : u.terms()) CHECK(kl_u(g, f) == c);
  for (const auto& [g, c] : l.terms()) CHECK(kl_l(g, f) == c);
}

TEST_CASE("monomial vectors expand back to themselves") {
  Weight f = R("2,1,0|3,0,-2");
  Expansion back;
  for (const auto& g : reductive_block(f)) {
    LaurentPoly c = red_K_in_U(f, g);
    if (!c.is_zero()) back.add(red_canonical(g), c);
  }
  CHECK(back == Expansion::single(f));
}

TEST_CASE("coinciding super lowerings are summed, never deduplicated") {
  // Every weight of a small sweep has at most 2^# terms and unit leading term.
  for (const auto& f : all_finite(Flavor::super, 2, 3, -2, 3)) {
    Expansion x = super_canonical(f);
    CHECK(x.coefficient(f).is_one());
    LaurentPoly total;
    for (const auto& [g, c] : x.terms()) total += c;
    CHECK(eval_one(total) == (Integer(1) << super_atypicality(f)));
  }
}
