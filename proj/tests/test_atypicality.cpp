#include <doctest.h>

#include <set>

#include "superkl/atypicality.hpp"
#include "superkl/suites.hpp"

using namespace superkl;

namespace {

// Common values of the two blocks, reading the tail far enough out.
int brute_common_values(const Weight& f) {
  std::set<int> neg(f.neg().begin(), f.neg().end()), pos;
  int reach = f.n() + 64;
  for (int j = 1; j <= (f.has_tail() ? reach : f.n()); ++j) pos.insert(f.at(j));
  int k = 0;
  for (int v : neg) k += static_cast<int>(pos.count(v));
  return k;
}

}  // namespace

TEST_CASE("super atypicality counts common values") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& f : all_finite(Flavor::super, m, 2, -3, 3)) CHECK(super_atypicality(f) == brute_common_values(f));
  CHECK(super_atypicality(parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super)) == 2);
  CHECK(super_atypicality(parse_weight("0,-2|-2,0,*", Flavor::super)) == 2);
  CHECK(super_atypicality(parse_weight("5,1|*", Flavor::super)) == 2);
}

TEST_CASE("positive pair set of the worked reductive example") {
  Weight f = parse_weight("2,1,0|3,0,-2", Flavor::reductive);
  CHECK(sigma_plus(f).pairs == std::vector<std::pair<int, int>>{{-2, 3}});
  CHECK(j_atypicality(f) == 1);
  CHECK(j_atypicality(parse_weight("0,-1,-3,-4|3,2,1", Flavor::reductive)) == 0);
  CHECK(j_atypicality(parse_weight("0,-1,-3,-4|3,2,1,*", Flavor::reductive)) == 2);
}

TEST_CASE("Jantzen criterion at small rank") {
  // gl(1|1) with lambda = 0: f = (1|0), the pair (-1|1) is atypical, so the
  // generalized Verma module is reducible.
  HighestWeight zero{Flavor::reductive, {0}, {0}, false};
  CHECK(weight_to_f(zero) == parse_weight("1|0", Flavor::reductive));
  CHECK_FALSE(jantzen_irreducible(zero, 1));
  CHECK(j_atypicality(parse_weight("1|0", Flavor::reductive)) == 1);
  // lambda = (5|0) is dominant for gl(2), so the module is reducible;
  // lambda = (0|5) gives f = (1|5) with no pair.
  HighestWeight up{Flavor::reductive, {5}, {0}, false};
  CHECK_FALSE(jantzen_irreducible(up, 1));
  HighestWeight down{Flavor::reductive, {0}, {5}, false};
  CHECK(weight_to_f(down) == parse_weight("1|5", Flavor::reductive));
  CHECK(jantzen_irreducible(down, 1));
}
