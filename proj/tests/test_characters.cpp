#include <doctest.h>

#include "superkl/characters.hpp"
#include "superkl/suites.hpp"

using namespace superkl;

namespace {
SymPoly::Exponents ex(std::initializer_list<int> e) { return SymPoly::Exponents(e); }
}  // namespace

TEST_CASE("Jacobi-Trudi agrees with semistandard tableaux") {
  // With no even letters the tableau count gives s_{lambda'}... in the odd
  // letters; compare against the conjugate Schur polynomial.
  for (const Partition& p : {Partition{1}, Partition{2, 1}, Partition{2, 2}, Partition{3, 1, 1}, Partition{2, 1, 1}}) {
    SymPoly tab = hook_schur_tableaux(p, 0, 3);
    SymPoly jt = schur_pos(conjugate(p), 0, 3, -1);
    CHECK(tab == jt);
  }
}

TEST_CASE("hook Schur with only even letters is an ordinary Schur polynomial") {
  for (const Partition& p : {Partition{1}, Partition{2, 1}, Partition{3}}) {
    SymPoly tab = hook_schur_tableaux(p, 3, 0);
    SymPoly jt = schur_neg({p.size() > 0 ? p[0] : 0, p.size() > 1 ? p[1] : 0, p.size() > 2 ? p[2] : 0}, 3, 0, -1);
    CHECK(tab == jt);
  }
}

TEST_CASE("omega_plus sends h_k to e_k") {
  for (int k = 0; k <= 3; ++k) CHECK(omega_plus(complete_pos(k, 1, 3, k)) == elementary_pos(k, 1, 3, k));
}

TEST_CASE("gl(1|1) character of a small atypical weight") {
  // f = (2|0,*) has highest weight (1|1): the hook Schur polynomial of
  // shape (1,1) in x_-1; x_1, i.e. x_-1 x_1 + x_1^2.
  SymPoly ch = char_super_irreducible(parse_weight("2|0,*", Flavor::super), 1, 2);
  SymPoly want(1, 1, 2);
  want.add(ex({1, 1}), 1);
  want.add(ex({0, 2}), 1);
  CHECK(ch == want);
}

TEST_CASE("involution identities for one partition") {
  const Partition lam{2, 1, 1, 1};
  HighestWeight h{Flavor::reductive, {2, 1}, {1, 1}, true};
  Weight red = weight_to_f(h);
  Weight sup = natural_map(red);
  const int D = 5;
  CHECK(char_super_irreducible(sup, 2, D) == specialize(omega_plus(formal_reductive_character(red, D)), 2, 2, D));
  CHECK(char_reductive_irreducible(red, 2, D) == specialize(omega_plus(formal_super_character(sup, D)), 2, 2, D));
  CHECK(char_super_irreducible(sup, 2, D) == hook_schur_tableaux(lam, 2, 2));
}

TEST_CASE("trivial weight has character 1") {
  HighestWeight h{Flavor::super, {0, 0}, {}, true};
  CHECK(char_super_irreducible(weight_to_f(h), 2, 3) == SymPoly::constant(2, 2, 3));
}
