#include <doctest.h>

#include "superkl/atypicality.hpp"
#include "superkl/duality.hpp"
#include "superkl/suites.hpp"

using namespace superkl;

TEST_CASE("conjugation is an involution") {
  CHECK(conjugate({5, 3, 2, 2}) == Partition{4, 4, 2, 1, 1});
  for (const Partition& p : {Partition{}, Partition{1}, Partition{3, 1}, Partition{4, 4, 2, 1, 1}})
    CHECK(conjugate(conjugate(p)) == normalize_partition(p));
}

TEST_CASE("horizontal and vertical labels split the integers") {
  for (const Partition& p : {Partition{}, Partition{2}, Partition{5, 3, 2, 2}, Partition{1, 1, 1}}) {
    auto h = h_labels(p, -12, 12), v = v_labels(p, -12, 12);
    for (int k = -12; k <= 12; ++k) CHECK(h.count(k) + v.count(k) == 1);
  }
}

TEST_CASE("natural map on the worked examples") {
  CHECK(natural_map(parse_weight("0,-1,-3,-4|3,2,1,*", Flavor::reductive)) ==
        parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super));
  CHECK(natural_map(parse_weight("3|1,0,-2,*", Flavor::reductive)) == parse_weight("3|-1,2,3,*", Flavor::super));
}

TEST_CASE("natural map is invertible and matches atypicality on a sweep") {
  for (const auto& f : all_reductive_profinite(2, -3, 3, 3)) {
    CHECK(natural_inv(natural_map(f)) == f);
    CHECK(verify_atypicality_match(f));
  }
}

TEST_CASE("finite windows do not correspond") {
  // The natural partner of the worked example has four canonical terms at
  // infinity, but its n = 3 slice is J-typical.
  KlMatchReport r = verify_kl_match(parse_weight("0,-1,-3,-4|3,2,1,*", Flavor::reductive));
  CHECK(r.matched);
  CHECK(r.canonical_terms == 4);
  CHECK(j_atypicality(parse_weight("0,-1,-3,-4|3,2,1", Flavor::reductive)) == 0);
}
