#include <doctest.h>

#include <algorithm>

#include "superkl/errors.hpp"
#include "superkl/weights.hpp"

using namespace superkl;

TEST_CASE("text format round trip") {
  const std::pair<const char*, Flavor> cases[] = {{"0,-1,-3,-4|-2,-1,0,*", Flavor::super},
                                                 {"2,1,0|3,0,-2", Flavor::reductive},
                                                 {"3|*", Flavor::super},
                                                 {"-4,-5|*", Flavor::reductive}};
  for (const auto& [s, fl] : cases) {
    Weight f = parse_weight(s, fl);
    CHECK(parse_weight(f.to_string(), fl) == f);
  }
  CHECK_THROWS_AS(parse_weight("1,2|x", Flavor::super), ParseError);
  CHECK_THROWS_AS(parse_weight("1,2", Flavor::super), ParseError);
}

TEST_CASE("profinite tails are normalized away") {
  Weight a = Weight::profinite(Flavor::super, {0}, {-1, 2, 3});
  Weight b = Weight::profinite(Flavor::super, {0}, {-1});
  CHECK(a == b);
  CHECK(a.at(7) == 7);
  Weight r = Weight::profinite(Flavor::reductive, {0}, {2, -1});
  CHECK(r.n() == 1);
  CHECK(r.at(5) == -4);
}

TEST_CASE("window and tail") {
  Weight f = parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super);
  Weight w = f.window(5);
  CHECK(w.pos() == std::vector<int>{-2, -1, 0, 4, 5});
  CHECK(w.with_tail() == f);
}

TEST_CASE("dominant_rep counts inversions") {
  // Independent count: inversions needed to sort each block.
  Weight raw = Weight::finite(Flavor::reductive, {-1, 3, 0}, {1, 4, 2});
  auto d = dominant_rep(raw);
  REQUIRE(d);
  CHECK(d->weight == parse_weight("3,0,-1|4,2,1", Flavor::reductive));
  // neg (-1,3,0) -> desc needs 2 swaps; pos (1,4,2) -> desc needs 2 swaps
  CHECK(d->qpower == -4);
  CHECK(d->sign == 1);
  CHECK_FALSE(dominant_rep(Weight::finite(Flavor::reductive, {1, 1}, {0})));
}

TEST_CASE("highest weight conversion is a bijection") {
  for (const char* s : {"0,-1,-3,-4|-2,-1,0,*", "5,1|*", "2|-3,0,*"}) {
    Weight f = parse_weight(s, Flavor::super);
    CHECK(weight_to_f(f_to_weight(f)) == f);
  }
  for (const char* s : {"2,1,0|3,0,-2", "0,-1,-3,-4|3,2,1,*"}) {
    Weight f = parse_weight(s, Flavor::reductive);
    CHECK(weight_to_f(f_to_weight(f)) == f);
  }
}

TEST_CASE("eps weight ignores the arrangement") {
  Weight a = parse_weight("2,1,0|3,0,-2", Flavor::reductive);
  Weight b = parse_weight("2,0,-2|3,1,0", Flavor::reductive);
  CHECK(eps_weight(a) == eps_weight(b));
}

TEST_CASE("reductive Bruhat order on a small block") {
  // Brute force over two-element sets: {a,b}|{c,d} <= {a',b'}|{c',d'} when the
  // sorted negative block is componentwise smaller.
  Weight lo = parse_weight("3,2|5,0", Flavor::reductive);
  Weight hi = parse_weight("5,3|2,0", Flavor::reductive);
  Weight other = parse_weight("5,0|3,2", Flavor::reductive);
  CHECK(bruhat_leq(lo, hi));
  CHECK_FALSE(bruhat_leq(hi, lo));
  CHECK_FALSE(bruhat_leq(lo, other));
  CHECK_FALSE(bruhat_leq(other, lo));
  CHECK(bruhat_leq(other, hi));
}
