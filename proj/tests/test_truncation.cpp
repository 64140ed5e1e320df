#include <doctest.h>

#include "superkl/atypicality.hpp"
#include "superkl/bases.hpp"
#include "superkl/truncation.hpp"

using namespace superkl;

TEST_CASE("weight truncation follows the tail condition") {
  Weight f = parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super);
  auto t = truncate(f, 3);
  REQUIRE(t);
  CHECK(*t == parse_weight("0,-1,-3,-4|-2,-1,0", Flavor::super));
  CHECK_FALSE(truncate(f, 2));
  Weight g = parse_weight("1|-1,0,3,4", Flavor::super);
  CHECK(truncate(g, 2) == parse_weight("1|-1,0", Flavor::super));
  CHECK_FALSE(truncate(parse_weight("1|-1,0,4,5", Flavor::super), 2));
}

TEST_CASE("truncating the worked example to n = 3") {
  Weight f = parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super);
  CHECK(truncate(super_canonical(f), 3) == super_canonical_direct(f.window(3)));
  // and further to n = 2 kills everything
  CHECK(truncate(super_canonical(f), 2).empty());
}

TEST_CASE("shifts") {
  Weight f = parse_weight("3,1|0,5", Flavor::super);
  CHECK(shift_weight(f, 2) == parse_weight("1,-1|-2,3", Flavor::super));
  CHECK(minimal_shift(f) == 3);
  CHECK(shift_expansion(super_canonical_direct(f), 2) == super_canonical_direct(shift_weight(f, 2)));
  CHECK(super_canonical(f) == super_canonical_direct(f));
}

TEST_CASE("prefix and sufficient window") {
  Weight f = parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super);
  CHECK(prefix_length(f) == 3);
  int n = sufficient_n(f);
  CHECK(n >= prefix_length(f));
  CHECK(super_atypicality(f.window(n)) == super_atypicality(f));
}

TEST_CASE("sufficient window on known weights") {
  CHECK(sufficient_n(parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super)) == 3);
  CHECK(sufficient_n(parse_weight("0|*", Flavor::super)) == 0);
  CHECK(sufficient_n(parse_weight("0|*", Flavor::reductive)) == 0);
  Weight u = parse_weight("0,-1,-3,-4|3,2,1,-3,-4,-5,-6,*", Flavor::reductive);
  CHECK(prefix_length(u) == 3);  // entries 4..7 already follow the tail
  CHECK(sufficient_n(u) == 7);
}
