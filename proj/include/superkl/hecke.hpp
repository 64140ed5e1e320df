#pragma once

#include <map>
#include <vector>

#include "superkl/expansion.hpp"
#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

namespace superkl {

// One-line notation over positions 0..N-1; generator i swaps i and i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);
  static Permutation simple(int size, int i);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int k) const { return w_[k]; }
  const std::vector<int>& images() const { return w_; }

  int length() const;
  Permutation inverse() const;
  // (x * y)(k) = x(y(k))
  Permutation operator*(const Permutation& y) const;
  // Right multiplication by the generator i.
  Permutation times_simple(int i) const;
  bool has_right_descent(int i) const { return w_[i] > w_[i + 1]; }
  std::vector<int> reduced_word() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

using HeckeElement = std::map<Permutation, LaurentPoly>;

// h * H_i with (H_i - q^-1)(H_i + q) = 0.
HeckeElement hecke_mul_gen(const HeckeElement& h, int i);
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
// Anti-linear, bar(H_x) = H_{x^-1}^{-1}.
HeckeElement hecke_bar(const HeckeElement& h);

// Tensor space vectors: sequence g in Z^{m+n} -> coefficient.
using TensorVector = std::map<std::vector<int>, LaurentPoly>;
// v * H_i on the tensor space.
TensorVector tensor_mul_gen(const TensorVector& v, int i);

// Canonical bases of the orbit {base . x} of an anti-dominant sequence,
// which is the Hecke module induced from the stabilizer of base.
class ParabolicModule {
 public:
  explicit ParabolicModule(std::vector<int> base);

  const std::vector<int>& base() const { return base_; }
  const std::vector<std::vector<int>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int index_of(const std::vector<int>& g) const;
  int length(int idx) const { return lengths_[idx]; }

  // bar(V_x) expanded over the orbit (index -> coefficient).
  const std::vector<LaurentPoly>& bar_column(int x) const { return bar_[x]; }
  TensorVector bar(const TensorVector& v) const;

  // m_{y,x} (in qZ[q]) or the tilde family (in q^-1 Z[q^-1]) for all y.
  std::vector<LaurentPoly> kl_column(int x, bool tilde) const;

 private:
  std::vector<int> base_;
  std::vector<std::vector<int>> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> lengths_;
  std::vector<std::vector<LaurentPoly>> bar_;
};

int sequence_length(const std::vector<int>& g);

// T_g / L_g of the tensor space for an arbitrary sequence g.
TensorVector tensor_canonical(const std::vector<int>& g);
TensorVector tensor_dual_canonical(const std::vector<int>& g);

// V_g -> (-q^-1)^{inversions} K_{g+}, zero on a repeated block entry.
Expansion project_H0(const TensorVector& t, int m);

constexpr int kOracleRankBudget = 6;

// Canonical vector of a finite reductive weight through the tensor space.
// `scalar`, when given, receives the factor divided out to make the leading
// coefficient 1.
Expansion oracle_canonical(const Weight& f, LaurentPoly* scalar = nullptr);

}  // namespace superkl
