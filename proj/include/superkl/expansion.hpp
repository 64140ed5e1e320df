#pragma once

#include <map>
#include <string>

#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

namespace superkl {

// Finite formal sum of basis vectors indexed by weights.
class Expansion {
 public:
  using Map = std::map<Weight, LaurentPoly>;

  Expansion() = default;
  static Expansion single(const Weight& w, LaurentPoly c = LaurentPoly::one());

  void add(const Weight& w, const LaurentPoly& c);
  void add(const Expansion& other, const LaurentPoly& scale = LaurentPoly::one());
  LaurentPoly coefficient(const Weight& w) const;

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::string to_string() const;
  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  Map terms_;
};

}  // namespace superkl
