#pragma once

#include <set>
#include <string>
#include <vector>

#include "superkl/weights.hpp"

namespace superkl {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition conjugate(const Partition& lambda);
Partition normalize_partition(Partition lambda);

// Labels of the boundary path of the Young diagram, restricted to [lo, hi]:
// horizontal steps carry i - lambda'_i, vertical steps lambda_i - i + 1.
std::set<int> h_labels(const Partition& lambda, int lo, int hi);
std::set<int> v_labels(const Partition& lambda, int lo, int hi);

// Reductive profinite <-> super profinite: keep the negative block of the
// highest weight, conjugate its positive part.
Weight natural_map(const Weight& f);
Weight natural_inv(const Weight& g);

bool verify_atypicality_match(const Weight& f);
// reductive g <= f  iff  super g' <= f' for the images.
bool verify_bruhat_match(const Weight& f, const Weight& g, const SearchLimits& limits = {});

struct KlMatchReport {
  bool matched = true;
  std::vector<std::string> mismatches;
  int canonical_terms = 0;
  int dual_terms = 0;
};
// Canonical vectors are compared termwise through the map; dual canonical
// coefficients are compared per term of the reductive vector computed on
// positions 1..max(dual_window, prefix).
KlMatchReport verify_kl_match(const Weight& f, int dual_window = 0);

}  // namespace superkl
