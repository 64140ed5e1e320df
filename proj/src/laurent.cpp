#include "superkl/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superkl {

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace_back(exponent, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::neg_q_power(int k) {
  return monomial(k, (k % 2 == 0) ? 1 : -1);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

Integer LaurentPoly::eval_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::at_neg_q_inverse() const {
  LaurentPoly r = bar();
  for (auto& [e, c] : r.terms_)
    if (e % 2 != 0) c = -c;
  return r;
}

bool LaurentPoly::in_positive_part() const {
  return terms_.empty() || terms_.front().first > 0;
}

bool LaurentPoly::in_negative_part() const {
  return terms_.empty() || terms_.back().first < 0;
}

bool LaurentPoly::is_monomial() const {
  return terms_.size() == 1 && terms_[0].second == 1;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->second + b->second) : Integer(a->second - b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].second == 1) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) t.first += b.terms_[0].first;
    return r;
  }
  std::map<int, Integer> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentPoly r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly r;
  for (const auto& t : terms_)
    if (t.first > 0) r.terms_.push_back(t);
  return r;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly r;
  for (const auto& t : terms_)
    if (t.first < 0) r.terms_.push_back(t);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }
Integer eval_one(const LaurentPoly& p) { return p.eval_one(); }

}  // namespace superkl
