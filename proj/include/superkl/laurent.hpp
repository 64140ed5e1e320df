#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace superkl {

using Integer = boost::multiprecision::cpp_int;

// Element of Z[q, q^-1]. Terms are kept sorted by exponent with no zero
// coefficients, so structural equality is ring equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);

  static LaurentPoly monomial(int exponent, Integer coefficient = 1);
  static LaurentPoly one() { return monomial(0); }
  // (-q)^k
  static LaurentPoly neg_q_power(int k);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Integer coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly bar() const;
  Integer eval_one() const;
  // p(-q^-1)
  LaurentPoly at_neg_q_inverse() const;

  bool in_positive_part() const;  // qZ[q]
  bool in_negative_part() const;  // q^-1 Z[q^-1]
  bool is_monomial() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Parts with exponent > 0 and < 0.
  LaurentPoly positive_part() const;
  LaurentPoly negative_part() const;

  // "q^-1 + 2 - q^3" style, ascending exponents.
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& other, int sign);
  std::vector<Term> terms_;
};

LaurentPoly bar(const LaurentPoly& p);
Integer eval_one(const LaurentPoly& p);

}  // namespace superkl
