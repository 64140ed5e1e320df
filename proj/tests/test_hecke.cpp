#include <doctest.h>

#include "superkl/hecke.hpp"

using namespace superkl;

namespace {

HeckeElement gen(int size, int i) { return {{Permutation::simple(size, i), LaurentPoly::one()}}; }
HeckeElement one(int size) { return {{Permutation::identity(size), LaurentPoly::one()}}; }

HeckeElement add(HeckeElement a, const HeckeElement& b, const LaurentPoly& s = LaurentPoly::one()) {
  for (const auto& [x, c] : b) {
    a[x] += c * s;
    if (a[x].is_zero()) a.erase(x);
  }
  return a;
}

}  // namespace

TEST_CASE("quadratic and braid relations") {
  const int N = 4;
  const LaurentPoly qinv_minus_q = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  for (int i = 0; i + 1 < N; ++i) {
    // H^2 = 1 + (q^-1 - q) H
    CHECK(hecke_mul(gen(N, i), gen(N, i)) == add(one(N), gen(N, i), qinv_minus_q));
  }
  HeckeElement a = hecke_mul(hecke_mul(gen(N, 0), gen(N, 1)), gen(N, 0));
  HeckeElement b = hecke_mul(hecke_mul(gen(N, 1), gen(N, 0)), gen(N, 1));
  CHECK(a == b);
  CHECK(hecke_mul(gen(N, 0), gen(N, 2)) == hecke_mul(gen(N, 2), gen(N, 0)));
}

TEST_CASE("bar is an involution inverting generators") {
  const int N = 3;
  for (int i = 0; i + 1 < N; ++i) CHECK(hecke_mul(gen(N, i), hecke_bar(gen(N, i))) == one(N));
  HeckeElement x = add(hecke_mul(gen(N, 0), gen(N, 1)), gen(N, 1), LaurentPoly::monomial(3, 2));
  CHECK(hecke_bar(hecke_bar(x)) == x);
}

TEST_CASE("two-letter tensor space by hand") {
  // bar(V_{ba}) = V_{ba} + (q - q^-1) V_{ab} for a < b, so the canonical
  // vector is V_{ba} + q V_{ab} and the dual one V_{ba} - q^-1 V_{ab}.
  TensorVector t = tensor_canonical({1, 0});
  CHECK(t == TensorVector{{{1, 0}, LaurentPoly::one()}, {{0, 1}, LaurentPoly::monomial(1)}});
  TensorVector l = tensor_dual_canonical({1, 0});
  CHECK(l == TensorVector{{{1, 0}, LaurentPoly::one()}, {{0, 1}, LaurentPoly::monomial(-1, -1)}});
  ParabolicModule mod({0, 1});
  CHECK(mod.bar(t) == t);
  CHECK(mod.bar(l) == l);
}

TEST_CASE("canonical vectors are bar invariant on a three-letter orbit") {
  ParabolicModule mod({-1, 0, 0, 2});
  for (std::size_t x = 0; x < mod.size(); ++x)
    for (bool tilde : {false, true}) {
      auto col = mod.kl_column(static_cast<int>(x), tilde);
      TensorVector v;
      for (std::size_t y = 0; y < col.size(); ++y)
        if (!col[y].is_zero()) v[mod.elements()[y]] = col[y];
      CHECK(mod.bar(v) == v);
    }
}

TEST_CASE("oracle on the worked example") {
  Weight f = parse_weight("2,1,0|3,0,-2", Flavor::reductive);
  LaurentPoly scalar;
  Expansion x = oracle_canonical(f, &scalar);
  CHECK(scalar == LaurentPoly::monomial(-6));
  CHECK(x.size() == 2);
  CHECK(x.coefficient(parse_weight("2,0,-2|3,1,0", Flavor::reductive)) == LaurentPoly::monomial(1));
  CHECK_THROWS_AS(oracle_canonical(parse_weight("4,3,2,1|0,-1,-2", Flavor::reductive)), std::length_error);
}
