#include <doctest.h>

#include "superkl/comb_ops.hpp"

using namespace superkl;

namespace {
Weight S(const char* s) { return parse_weight(s, Flavor::super); }
Weight R(const char* s) { return parse_weight(s, Flavor::reductive); }
}  // namespace

TEST_CASE("super lowering on the worked example") {
  Weight f = S("0,-1,-3,-4|-2,-1,0,*");
  CHECK(super_lower(f, -4, 3).dominant() == S("-1,-3,-4,-6|-6,-2,-1,*"));
  CHECK(super_lower(f, -3, 2).dominant() == S("0,-3,-4,-5|-5,-2,0,*"));
  CHECK(super_lower_theta(f, {0, 0}) == f);
  CHECK(super_lower_theta(f, {1, 1}) == S("-3,-4,-5,-6|-6,-5,-2,*"));
}

TEST_CASE("super raising undoes lowering") {
  // Pairs are indexed on the weight being moved, largest value first, so a
  // lowered pair may change its index.
  Weight f = S("0,-1,-3,-4|-2,-1,0,*");
  CHECK(super_raise_theta(super_lower_theta(f, {1, 1}), {1, 1}) == f);
  CHECK(super_raise_prime_theta(super_lower_prime_theta(f, {1, 1}), {1, 1}) == f);
  CHECK(super_raise_theta(super_lower_theta(f, {0, 1}), {0, 1}) == f);
  // Pair 1 drops below pair 2.
  CHECK(super_lower_theta(f, {1, 0}) == S("-1,-3,-4,-6|-6,-2,-1,*"));
}

TEST_CASE("double raise on the dual example") {
  Weight g = S("-2,-4|-4,-2,*");
  CHECK(super_raise(super_raise(g, -1, 1), -1, 1).dominant() == S("0,-2|-2,0,*"));
  CHECK(red_raise_prime_theta(R("-2,-4|2,1,0,-1,-3,-5,*"), {0, 2}) == R("0,-2|2,1,-1,-3,*"));
}

TEST_CASE("reductive lowering and the Chevalley action") {
  Weight f = R("2,1,0|3,0,-2");
  auto raw = red_lower(f, -2);
  REQUIRE(raw);
  CHECK(*raw == Weight::finite(Flavor::reductive, {2, -2, 0}, {3, 0, 1}));
  CHECK(f_sigma(f, {{-2, 3}}) == R("2,0,-2|3,1,0"));
  Expansion x = chevalley_F(-2, R("2,1,-2|3,1,-2"));
  Expansion want;
  want.add(R("2,1,-1|3,1,-2"), LaurentPoly::one());
  want.add(R("2,1,-2|3,1,-1"), LaurentPoly::monomial(1));
  CHECK(x == want);
  CHECK(theta_norm({1, 0, 2}) == 3);
}
