#include <doctest.h>

#include <map>
#include <random>

#include "superkl/laurent.hpp"

using namespace superkl;

namespace {

using Dense = std::map<int, long long>;

// Schoolbook reference on plain maps.
Dense dense(const LaurentPoly& p) {
  Dense d;
  for (const auto& [e, c] : p.terms()) d[e] = static_cast<long long>(c);
  return d;
}

Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (auto [e, c] : a)
    for (auto [f, d] : b) out[e + f] += c * d;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-5, 5), c(-4, 4), n(0, 5);
  LaurentPoly p;
  for (int k = n(rng); k > 0; --k) p += LaurentPoly::monomial(e(rng), c(rng));
  return p;
}

}  // namespace

TEST_CASE("multiplication agrees with the schoolbook product") {
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(dense(a * b) == mul(dense(a), dense(b)));
  }
}

TEST_CASE("zero coefficients never survive") {
  LaurentPoly p = LaurentPoly::monomial(2) + LaurentPoly::monomial(3);
  p -= LaurentPoly::monomial(2);
  CHECK(p == LaurentPoly::monomial(3));
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
}

TEST_CASE("bar and the substitution q -> -q^-1") {
  LaurentPoly p = LaurentPoly::monomial(-2) + LaurentPoly::monomial(-4);  // q^-2 + q^-4
  CHECK(p.bar() == LaurentPoly::monomial(2) + LaurentPoly::monomial(4));
  CHECK(p.at_neg_q_inverse() == LaurentPoly::monomial(2) + LaurentPoly::monomial(4));
  LaurentPoly odd = LaurentPoly::monomial(1, 3);
  CHECK(odd.at_neg_q_inverse() == LaurentPoly::monomial(-1, -3));
  CHECK(LaurentPoly::neg_q_power(3) == LaurentPoly::monomial(3, -1));
}

TEST_CASE("positive and negative parts") {
  LaurentPoly p = LaurentPoly::monomial(-2, 5) + LaurentPoly(7) + LaurentPoly::monomial(3, -1);
  CHECK(p.positive_part() == LaurentPoly::monomial(3, -1));
  CHECK(p.negative_part() == LaurentPoly::monomial(-2, 5));
  CHECK(p.positive_part().in_positive_part());
  CHECK(p.negative_part().in_negative_part());
  CHECK_FALSE(LaurentPoly::one().in_positive_part());
}

TEST_CASE("coefficients grow past 64 bits") {
  LaurentPoly p = LaurentPoly(Integer(1) << 40) + LaurentPoly::monomial(1);
  LaurentPoly sq = p * p;
  CHECK(sq.coefficient(0) == (Integer(1) << 80));
  CHECK(eval_one(p * p) == eval_one(p) * eval_one(p));
}

TEST_CASE("display order is ascending in the exponent") {
  LaurentPoly p = LaurentPoly::monomial(4) + LaurentPoly::monomial(2);
  CHECK(p.terms().front().first == 2);
  CHECK(p.min_exponent() == 2);
  CHECK(p.max_exponent() == 4);
}
