#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superkl {

enum class Flavor { super, reductive };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

// A function on the index set {-m..-1} u {1..n}. The negative block is
// stored left to right as f(-m),...,f(-1). The positive block is either a
// full finite block f(1..n) or, for n = infinity, a prefix followed by the
// standard tail (f(j) = j for super, f(j) = 1-j for reductive).
//
// Nothing here forces dominance: the combinatorial operators work on
// unsorted intermediates and only sort at the end.
class Weight {
 public:
  Weight() = default;
  static Weight finite(Flavor flavor, std::vector<int> neg, std::vector<int> pos);
  static Weight profinite(Flavor flavor, std::vector<int> neg, std::vector<int> prefix);

  Flavor flavor() const { return flavor_; }
  int m() const { return static_cast<int>(neg_.size()); }
  bool has_tail() const { return tail_; }
  const std::vector<int>& neg() const { return neg_; }
  const std::vector<int>& pos() const { return pos_; }
  // Block size for finite weights, prefix length for profinite ones.
  int n() const { return static_cast<int>(pos_.size()); }

  static int tail_value(Flavor flavor, int j) { return flavor == Flavor::super ? j : 1 - j; }
  int tail_value(int j) const { return tail_value(flavor_, j); }

  int at(int i) const;
  void set(int i, int value);

  // f^{(n)}: the finite weight formed by positions 1..n.
  Weight window(int n) const;
  // Reads a finite weight as the prefix of a profinite one.
  Weight with_tail() const;

  bool is_conjugate_dominant() const;
  bool is_dominant() const;
  // Blockwise sort; requires no repeated entries in a block.
  Weight dominant() const;
  Weight shifted(int delta) const;

  std::vector<int> pos_values_window(int n) const;
  int min_entry() const;
  int max_entry() const;

  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  void normalize_tail();

  Flavor flavor_ = Flavor::reductive;
  std::vector<int> neg_;
  std::vector<int> pos_;
  bool tail_ = false;
};

// "a,b,...|c,d,..." with an optional trailing ",*" (or a lone "*") for the
// standard tail.
Weight parse_weight(const std::string& text, Flavor flavor);

// Straightening of a raw wedge: blockwise sort, each adjacent swap costs -q^-1.
struct Straightened {
  Weight weight;
  int sign = 1;
  int qpower = 0;
};
std::optional<Straightened> dominant_rep(const Weight& raw);

// Value -> multiplicity, relative to the tail for profinite weights.
using EpsWeight = std::map<int, int>;
EpsWeight eps_weight(const Weight& f);

// lambda indexed by {-m..-1} u {1..}; for profinite weights pos holds the
// finitely many leading entries (trailing zeros stripped).
struct HighestWeight {
  Flavor flavor = Flavor::reductive;
  std::vector<int> neg;
  std::vector<int> pos;
  bool profinite = true;

  bool is_dominant() const;
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

Weight weight_to_f(const HighestWeight& lambda);
HighestWeight f_to_weight(const Weight& f);

struct SearchLimits {
  std::size_t max_states = 500000;
};

// f <= g in the Bruhat order of the flavor (f, g dominant, same m).
bool bruhat_leq(const Weight& f, const Weight& g, const SearchLimits& limits = {});

}  // namespace superkl
