#include "superkl/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "superkl/atypicality.hpp"
#include "superkl/bases.hpp"

namespace superkl {

Partition normalize_partition(Partition lambda) {
  for (std::size_t k = 1; k < lambda.size(); ++k)
    if (lambda[k - 1] < lambda[k]) throw std::invalid_argument("partition must be weakly decreasing");
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (!lambda.empty() && lambda.back() < 0) throw std::invalid_argument("partition has negative parts");
  return lambda;
}

Partition conjugate(const Partition& lambda) {
  Partition p = normalize_partition(lambda);
  Partition out;
  if (p.empty()) return out;
  for (int c = 1; c <= p.front(); ++c) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[len] >= c) ++len;
    out.push_back(len);
  }
  return out;
}

namespace {

int part(const Partition& p, int i) { return i <= static_cast<int>(p.size()) ? p[i - 1] : 0; }

}  // namespace

std::set<int> h_labels(const Partition& lambda, int lo, int hi) {
  const Partition c = conjugate(lambda);
  std::set<int> out;
  // i - lambda'_i is strictly increasing and >= i - |lambda|.
  for (int i = 1; i - part(c, i) <= hi; ++i) {
    int v = i - part(c, i);
    if (v >= lo) out.insert(v);
  }
  return out;
}

std::set<int> v_labels(const Partition& lambda, int lo, int hi) {
  const Partition p = normalize_partition(lambda);
  std::set<int> out;
  for (int i = 1; part(p, i) - i + 1 >= lo; ++i) {
    int v = part(p, i) - i + 1;
    if (v <= hi) out.insert(v);
  }
  return out;
}

Weight natural_map(const Weight& f) {
  if (f.flavor() != Flavor::reductive || !f.has_tail() || !f.is_dominant())
    throw std::invalid_argument("natural_map needs a dominant profinite reductive weight");
  HighestWeight h = f_to_weight(f);
  h.flavor = Flavor::super;
  h.pos = conjugate(h.pos);
  return weight_to_f(h);
}

Weight natural_inv(const Weight& g) {
  if (g.flavor() != Flavor::super || !g.has_tail() || !g.is_dominant())
    throw std::invalid_argument("natural_inv needs a dominant profinite super weight");
  HighestWeight h = f_to_weight(g);
  h.flavor = Flavor::reductive;
  h.pos = conjugate(h.pos);
  return weight_to_f(h);
}

bool verify_atypicality_match(const Weight& f) { return j_atypicality(f) == super_atypicality(natural_map(f)); }

bool verify_bruhat_match(const Weight& f, const Weight& g, const SearchLimits& limits) {
  return bruhat_leq(g, f, limits) == bruhat_leq(natural_map(g), natural_map(f), limits);
}

KlMatchReport verify_kl_match(const Weight& f, int dual_window) {
  KlMatchReport r;
  const Weight fs = natural_map(f);
  const Expansion red = red_canonical(f);
  const Expansion sup = super_canonical(fs);
  r.canonical_terms = static_cast<int>(red.size());
  Expansion mapped;
  for (const auto& [g, c] : red.terms()) mapped.add(natural_map(g), c);
  if (!(mapped == sup)) {
    r.matched = false;
    r.mismatches.push_back("canonical: " + mapped.to_string() + " vs " + sup.to_string());
  }
  const Expansion dual = red_dual_canonical(f, dual_window);
  r.dual_terms = static_cast<int>(dual.size());
  for (const auto& [g, c] : dual.terms()) {
    LaurentPoly s = kl_l(natural_map(g), fs);
    if (!(s == c)) {
      r.matched = false;
      r.mismatches.push_back("dual at " + g.to_string() + ": " + c.to_string() + " vs " + s.to_string());
    }
  }
  return r;
}

}  // namespace superkl
