#pragma once

#include <map>
#include <string>
#include <vector>

#include "superkl/duality.hpp"
#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

namespace superkl {

// Laurent polynomial in x_{-m},...,x_{-1} (any exponents) and
// x_1,...,x_n (nonnegative exponents). Terms whose total degree in the
// positive variables exceeds `bound` are discarded; bound < 0 keeps all.
class SymPoly {
 public:
  using Exponents = std::vector<int>;  // x_{-m}..x_{-1}, x_1..x_n

  SymPoly() = default;
  SymPoly(int m, int n, int bound = -1) : m_(m), n_(n), bound_(bound) {}
  static SymPoly constant(int m, int n, int bound, Integer c = 1);
  static SymPoly monomial(int m, int n, int bound, Exponents e, Integer c = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  int bound() const { return bound_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents& e, const Integer& c);
  SymPoly& operator+=(const SymPoly& other);
  SymPoly operator*(const SymPoly& other) const;
  SymPoly scaled(const Integer& c) const;
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  bool has_nonnegative_coefficients() const;
  std::string to_string() const;

 private:
  int pos_degree(const Exponents& e) const;
  int m_ = 0, n_ = 0, bound_ = -1;
  std::map<Exponents, Integer> terms_;
};

// s_nu in the given block of variables. For the negative block nu may be a
// generalized partition (length m, any integers, weakly decreasing); for the
// positive block nu is a partition.
SymPoly schur_neg(const std::vector<int>& nu, int m, int n, int bound);
SymPoly schur_pos(const Partition& nu, int m, int n, int bound);
SymPoly complete_pos(int k, int m, int n, int bound);
SymPoly elementary_pos(int k, int m, int n, int bound);

// omega_+ on an explicit polynomial: decomposes each x_- coefficient into
// Schur polynomials of x_+ and conjugates. Requires symmetry in x_+ and a
// degree bound <= n, where the finite-variable Schur polynomials still form
// a basis.
SymPoly omega_plus(const SymPoly& p);

// Formal characters: sums of s_nu(x_-) s_pi(x_+) prod_{i<0<j} P(x_i^-1 x_j)
// with P = (1 + t) (odd kind) or 1/(1 - t) (even kind).
struct KacTerm {
  std::vector<int> neg;
  Partition pos;
  bool odd = true;
  friend auto operator<=>(const KacTerm&, const KacTerm&) = default;
};
using KacCharacter = std::map<KacTerm, Integer>;

KacCharacter omega_plus(const KacCharacter& ch);
// Evaluate in x_{-m..-1}, x_{1..n} (remaining positive variables set to 0),
// keeping positive degree <= bound.
SymPoly specialize(const KacCharacter& ch, int m, int n, int bound);

// Irreducible characters from the dual canonical coefficients at q = 1,
// restricted to the terms that can reach positive degree <= bound.
KacCharacter formal_super_character(const Weight& f, int bound);
KacCharacter formal_reductive_character(const Weight& f, int bound);

SymPoly char_super_irreducible(const Weight& f, int n, int bound);
SymPoly char_reductive_irreducible(const Weight& f, int n, int bound);

}  // namespace superkl
