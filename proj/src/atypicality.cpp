#include "superkl/atypicality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace superkl {

std::optional<int> PairSet::partner(int i) const {
  for (const auto& [a, b] : pairs)
    if (a == i) return b;
  return std::nullopt;
}

namespace {

bool in_pos_block(const Weight& f, int v) {
  if (std::find(f.pos().begin(), f.pos().end(), v) != f.pos().end()) return true;
  if (!f.has_tail()) return false;
  return f.flavor() == Flavor::super ? v > f.n() : v < 1 - f.n();
}

}  // namespace

int super_atypicality(const Weight& f) {
  int c = 0;
  for (int v : f.neg())
    if (in_pos_block(f, v)) ++c;
  return c;
}

std::vector<std::pair<int, int>> atypical_pairs(const Weight& f) {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < f.m(); ++k) {
    int v = f.neg()[k];
    auto it = std::find(f.pos().begin(), f.pos().end(), v);
    if (it != f.pos().end()) {
      out.emplace_back(k - f.m(), static_cast<int>(it - f.pos().begin()) + 1);
    } else if (f.has_tail() && in_pos_block(f, v)) {
      // Super tail value v sits at position v.
      out.emplace_back(k - f.m(), v);
    }
  }
  return out;
}

int reductive_work_window(const Weight& f, int extra_swaps) {
  int lo = f.min_entry();
  return std::max({f.n(), 2 * f.m() + 3 - lo + 2 * f.m() * extra_swaps, 1});
}

namespace {

PairSet sigma_finite(const Weight& f, PairSet::Kind kind) {
  std::set<int> neg_values(f.neg().begin(), f.neg().end());
  std::set<int> pos_values(f.pos().begin(), f.pos().end());
  std::map<int, std::vector<std::pair<int, int>>> by_distance;
  for (int a = 0; a < f.m(); ++a) {
    int fi = f.neg()[a];
    if (pos_values.count(fi)) continue;
    for (int b = 0; b < f.n(); ++b) {
      int fj = f.pos()[b];
      if (neg_values.count(fj)) continue;
      int d = kind == PairSet::Kind::positive ? fi - fj : fj - fi;
      if (d > 0) by_distance[d].emplace_back(a - f.m(), b + 1);
    }
  }
  PairSet out;
  out.kind = kind;
  std::set<int> used_i, used_j;
  for (const auto& [d, cands] : by_distance) {
    std::vector<std::pair<int, int>> added;
    for (const auto& p : cands)
      if (!used_i.count(p.first) && !used_j.count(p.second)) added.push_back(p);
    for (const auto& p : added) {
      used_i.insert(p.first);
      used_j.insert(p.second);
      out.pairs.push_back(p);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

PairSet sigma(const Weight& f, PairSet::Kind kind) {
  if (f.flavor() != Flavor::reductive) throw std::invalid_argument("pair sets are defined for reductive weights");
  if (!f.has_tail()) return sigma_finite(f, kind);
  return sigma_finite(f.window(reductive_work_window(f)), kind);
}

}  // namespace

PairSet sigma_plus(const Weight& f) { return sigma(f, PairSet::Kind::positive); }
PairSet sigma_minus(const Weight& f) { return sigma(f, PairSet::Kind::negative); }
int j_atypicality(const Weight& f) { return static_cast<int>(sigma_plus(f).size()); }

bool jantzen_irreducible(const HighestWeight& lambda, std::optional<int> n) {
  if (lambda.flavor != Flavor::reductive) throw std::invalid_argument("criterion is stated for reductive weights");
  Weight f = weight_to_f(lambda);
  if (!n) {
    if (!f.has_tail()) throw std::invalid_argument("infinite-rank criterion needs a profinite weight");
    for (int v : f.neg())
      if (!in_pos_block(f, v)) return false;
    return true;
  }
  Weight w = f.window(*n);
  std::set<int> neg_values(w.neg().begin(), w.neg().end());
  std::set<int> pos_values(w.pos().begin(), w.pos().end());
  for (int fi : w.neg())
    for (int fj : w.pos())
      if (fi > fj && !pos_values.count(fi) && !neg_values.count(fj)) return false;
  return true;
}

}  // namespace superkl
