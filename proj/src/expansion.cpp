#include "superkl/expansion.hpp"

namespace superkl {

Expansion Expansion::single(const Weight& w, LaurentPoly c) {
  Expansion e;
  e.add(w, c);
  return e;
}

void Expansion::add(const Weight& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Expansion::add(const Expansion& other, const LaurentPoly& scale) {
  for (const auto& [w, c] : other.terms_) add(w, c * scale);
}

LaurentPoly Expansion::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

std::string Expansion::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")[" + w.to_string() + "]";
  }
  return s;
}

}  // namespace superkl
