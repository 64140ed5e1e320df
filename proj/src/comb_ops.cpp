#include "superkl/comb_ops.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "superkl/errors.hpp"

namespace superkl {

int theta_norm(const Theta& theta) { return std::accumulate(theta.begin(), theta.end(), 0); }

namespace {

Weight shift_pair(Weight w, int i, int j, int delta) {
  w.set(i, w.at(i) + delta);
  w.set(j, w.at(j) + delta);
  return w;
}

// dir = -1 lowers, +1 raises. Nested pairs are the inner ones when
// lowering (i < k < 0 < l < j) and the outer ones when raising
// (k < i < 0 < j < l).
Weight super_move(const Weight& f, int i, int j, int dir) {
  if (f.has_tail()) throw std::invalid_argument("super move expects a finite window");
  if (i >= 0 || j <= 0 || f.at(i) != f.at(j)) throw std::invalid_argument("super move needs a matched pair (i|j)");
  std::vector<Weight> nested;
  for (int k = -f.m(); k < 0; ++k) {
    for (int l = 1; l <= f.n(); ++l) {
      bool in_range = dir < 0 ? (i < k && l < j) : (k < i && j < l);
      if (in_range && f.at(k) == f.at(l)) nested.push_back(super_move(f, k, l, dir));
    }
  }
  int lo = f.min_entry(), hi = f.max_entry();
  for (const auto& h : nested) {
    lo = std::min(lo, h.min_entry());
    hi = std::max(hi, h.max_entry());
  }
  const int bound = hi - lo + 2 * f.m() + 4;
  for (int a = 1; a <= bound; ++a) {
    Weight g = shift_pair(f, i, j, dir * a);
    if (!g.is_conjugate_dominant()) continue;
    bool ok = std::all_of(nested.begin(), nested.end(),
                          [&](const Weight& h) { return shift_pair(h, i, j, dir * a).is_conjugate_dominant(); });
    if (ok) return g;
  }
  throw WindowExhausted("no admissible shift for pair (" + std::to_string(i) + "|" + std::to_string(j) + ") of " +
                        f.to_string());
}

}  // namespace

int super_work_window(const Weight& f) {
  int hi = f.neg().empty() ? 0 : *std::max_element(f.neg().begin(), f.neg().end());
  return std::max({f.n(), hi, 0});
}

Weight super_lower(const Weight& f, int i, int j) {
  if (!f.has_tail()) return super_move(f, i, j, -1);
  return super_move(f.window(super_work_window(f)), i, j, -1).with_tail();
}

Weight super_raise(const Weight& f, int i, int j) {
  if (!f.has_tail()) return super_move(f, i, j, +1);
  int n = std::max(super_work_window(f), f.max_entry() + 2 * f.m() + 2);
  Weight r = super_move(f.window(n), i, j, +1);
  for (int v : r.pos())
    if (v > n) throw WindowExhausted("raised entry leaves the window");
  return r.with_tail();
}

namespace {

// Applies the matched pairs of f in the given order; returns the unsorted
// finite result on positions 1..n.
Weight super_apply(const Weight& f, const Theta& theta, int n, bool pair_one_first, int dir) {
  if (!f.is_dominant()) throw std::invalid_argument("theta composites start from a dominant weight");
  auto pairs = atypical_pairs(f);
  if (theta.size() != pairs.size()) throw std::invalid_argument("theta length must equal the atypicality");
  Weight w = f.has_tail() ? f.window(n) : f;
  const int k = static_cast<int>(pairs.size());
  for (int s = 0; s < k; ++s) {
    int l = pair_one_first ? s : k - 1 - s;
    for (int t = 0; t < theta[l]; ++t) w = super_move(w, pairs[l].first, pairs[l].second, dir);
  }
  return w;
}

std::optional<Weight> finish_raise(const Weight& f, const Weight& w, int n) {
  Weight d = w.dominant();
  if (!f.has_tail()) return d;
  for (int v : d.pos())
    if (v > n) return std::nullopt;
  return d.with_tail();
}

int raise_window(const Weight& f, int window) { return std::max(window, super_work_window(f)); }

}  // namespace

Weight super_lower_theta(const Weight& f, const Theta& theta) {
  int n = f.has_tail() ? super_work_window(f) : f.n();
  Weight d = super_apply(f, theta, n, true, -1).dominant();
  return f.has_tail() ? d.with_tail() : d;
}

Weight super_lower_prime_theta(const Weight& f, const Theta& theta) {
  int n = f.has_tail() ? super_work_window(f) : f.n();
  Weight d = super_apply(f, theta, n, false, -1).dominant();
  return f.has_tail() ? d.with_tail() : d;
}

std::optional<Weight> super_raise_theta(const Weight& f, const Theta& theta, int window) {
  int n = f.has_tail() ? raise_window(f, window) : f.n();
  return finish_raise(f, super_apply(f, theta, n, false, +1), n);
}

std::optional<Weight> super_raise_prime_theta(const Weight& f, const Theta& theta, int window) {
  int n = f.has_tail() ? raise_window(f, window) : f.n();
  return finish_raise(f, super_apply(f, theta, n, true, +1), n);
}

// ---- reductive ----------------------------------------------------------

namespace {

std::optional<Weight> red_step(const Weight& w, int i, PairSet::Kind kind) {
  PairSet s = kind == PairSet::Kind::positive ? sigma_plus(w) : sigma_minus(w);
  auto j = s.partner(i);
  if (!j) return std::nullopt;
  Weight r = w;
  int a = w.at(i), b = w.at(*j);
  r.set(i, b);
  r.set(*j, a);
  return r;
}

std::optional<Weight> red_apply(const Weight& f, const Theta& theta, PairSet::Kind kind, bool minus_m_first) {
  if (static_cast<int>(theta.size()) != f.m()) throw std::invalid_argument("theta length must equal m");
  Weight w = f.has_tail() ? f.window(reductive_work_window(f, theta_norm(theta))) : f;
  const int m = f.m();
  for (int s = 0; s < m; ++s) {
    int idx = minus_m_first ? s : m - 1 - s;
    for (int t = 0; t < theta[idx]; ++t) {
      auto next = red_step(w, idx - m, kind);
      if (!next) return std::nullopt;
      w = *next;
    }
  }
  Weight d = w.dominant();
  return f.has_tail() ? d.with_tail() : d;
}

std::optional<Weight> red_single(const Weight& f, int i, PairSet::Kind kind) {
  if (!f.has_tail()) return red_step(f, i, kind);
  auto r = red_step(f.window(reductive_work_window(f, 1)), i, kind);
  if (!r) return std::nullopt;
  return r->with_tail();
}

}  // namespace

std::optional<Weight> red_lower(const Weight& f, int i) { return red_single(f, i, PairSet::Kind::positive); }
std::optional<Weight> red_raise(const Weight& f, int i) { return red_single(f, i, PairSet::Kind::negative); }

std::optional<Weight> red_lower_theta(const Weight& f, const Theta& theta) {
  return red_apply(f, theta, PairSet::Kind::positive, true);
}
std::optional<Weight> red_lower_prime_theta(const Weight& f, const Theta& theta) {
  return red_apply(f, theta, PairSet::Kind::positive, false);
}
std::optional<Weight> red_raise_theta(const Weight& f, const Theta& theta) {
  return red_apply(f, theta, PairSet::Kind::negative, false);
}
std::optional<Weight> red_raise_prime_theta(const Weight& f, const Theta& theta) {
  return red_apply(f, theta, PairSet::Kind::negative, true);
}

Weight f_sigma(const Weight& f, const std::vector<std::pair<int, int>>& pairs) {
  std::set<int> is, js;
  for (const auto& [i, j] : pairs) {
    if (i >= 0 || j <= 0 || !is.insert(i).second || !js.insert(j).second)
      throw std::invalid_argument("f_sigma needs pairs (i|j) with distinct components");
  }
  Weight w = f.has_tail() ? f.window(reductive_work_window(f)) : f;
  for (const auto& [i, j] : pairs) {
    int a = w.at(i), b = w.at(j);
    w.set(i, b);
    w.set(j, a);
  }
  Weight d = w.dominant();
  return f.has_tail() ? d.with_tail() : d;
}

// ---- Chevalley generators ----------------------------------------------

namespace {

// Replace value `from` by `to` in a block when `from` is present and `to`
// is not.
std::optional<std::vector<int>> substitute(const std::vector<int>& block, int from, int to) {
  auto it = std::find(block.begin(), block.end(), from);
  if (it == block.end()) return std::nullopt;
  if (std::find(block.begin(), block.end(), to) != block.end()) return std::nullopt;
  std::vector<int> out = block;
  out[it - block.begin()] = to;
  return out;
}

int count(const std::vector<int>& block, int v) { return static_cast<int>(std::count(block.begin(), block.end(), v)); }

// raise_value: F_a moves a -> a+1; E_a moves a+1 -> a.
Expansion chevalley(int a, const Weight& f, bool is_E) {
  if (f.flavor() != Flavor::reductive) throw std::invalid_argument("Chevalley action is on reductive monomials");
  Weight w = f.has_tail() ? f.window(std::max({f.n(), 1 - a, 1}) + 1) : f;
  auto rebuild = [&](std::vector<int> neg, std::vector<int> pos) {
    Weight r = Weight::finite(Flavor::reductive, std::move(neg), std::move(pos));
    return f.has_tail() ? r.with_tail() : r;
  };
  Expansion out;
  const int from = is_E ? a + 1 : a;
  const int to = is_E ? a : a + 1;
  if (is_E) {
    if (auto p = substitute(w.pos(), from, to)) out.add(rebuild(w.neg(), *p), LaurentPoly::one());
    if (auto nb = substitute(w.neg(), from, to)) {
      int e = -count(w.pos(), a) + count(w.pos(), a + 1);
      out.add(rebuild(*nb, w.pos()), LaurentPoly::monomial(e));
    }
  } else {
    if (auto nb = substitute(w.neg(), from, to)) out.add(rebuild(*nb, w.pos()), LaurentPoly::one());
    if (auto p = substitute(w.pos(), from, to)) {
      int e = count(w.neg(), a) - count(w.neg(), a + 1);
      out.add(rebuild(w.neg(), *p), LaurentPoly::monomial(e));
    }
  }
  return out;
}

Expansion chevalley_linear(int a, const Expansion& x, bool is_E) {
  Expansion out;
  for (const auto& [w, c] : x.terms()) out.add(chevalley(a, w, is_E), c);
  return out;
}

}  // namespace

Expansion chevalley_E(int a, const Weight& f) { return chevalley(a, f, true); }
Expansion chevalley_F(int a, const Weight& f) { return chevalley(a, f, false); }
Expansion chevalley_E(int a, const Expansion& x) { return chevalley_linear(a, x, true); }
Expansion chevalley_F(int a, const Expansion& x) { return chevalley_linear(a, x, false); }

}  // namespace superkl
