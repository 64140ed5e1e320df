#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superkl/weights.hpp"

namespace superkl {

// Pairs (i|j) with i < 0 < j, sorted by i. First and second components are
// pairwise distinct.
struct PairSet {
  enum class Kind { positive, negative };
  Kind kind = Kind::positive;
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  // Partner j of i, if any.
  std::optional<int> partner(int i) const;
  friend bool operator==(const PairSet&, const PairSet&) = default;
};

// Number of values shared by the two blocks (tail included).
int super_atypicality(const Weight& f);

// Matched positions (i|j), f(i) = f(j), ordered by i ascending. On a
// dominant weight this is the order i_1 < ... < i_k, j_1 > ... > j_k.
std::vector<std::pair<int, int>> atypical_pairs(const Weight& f);

// Distance-ordered disjoint pair sets for reductive weights. Profinite
// weights are evaluated on a window large enough for the answer to settle.
PairSet sigma_plus(const Weight& f);
PairSet sigma_minus(const Weight& f);
int j_atypicality(const Weight& f);

// Window at which the pair sets of a profinite reductive weight, and of
// weights reached from it by a bounded number of swaps, are exact.
int reductive_work_window(const Weight& f, int extra_swaps = 0);

// Irreducibility of the generalized Verma module with highest weight lambda,
// n = nullopt for the infinite rank case.
bool jantzen_irreducible(const HighestWeight& lambda, std::optional<int> n = std::nullopt);

}  // namespace superkl
