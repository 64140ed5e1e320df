#include "superkl/bases.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "superkl/atypicality.hpp"
#include "superkl/errors.hpp"
#include "superkl/truncation.hpp"

namespace superkl {

namespace {

void require(const Weight& f, Flavor flavor) {
  if (f.flavor() != flavor) throw std::invalid_argument("expected a " + flavor_name(flavor) + " weight");
  if (!f.is_dominant()) throw std::invalid_argument("expected a dominant weight, got " + f.to_string());
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

bool componentwise_geq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

std::vector<int> all_entries_sorted(const Weight& w) {
  std::vector<int> v = w.neg();
  v.insert(v.end(), w.pos().begin(), w.pos().end());
  std::sort(v.begin(), v.end());
  return v;
}

Weight retail_if(const Weight& w, bool tail) { return tail ? w.with_tail() : w; }

std::vector<Theta> binary_thetas(int k) {
  std::vector<Theta> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Theta t(k);
    for (int b = 0; b < k; ++b) t[b] = (mask >> b) & 1u;
    out.push_back(t);
  }
  return out;
}

constexpr int kStepLimit = 10000;

// Depth-first walk over theta in N^m for the reductive operators. `order`
// lists theta slots (0 = index -m) in application order; `keep` rejects
// states from which the target is unreachable.
void red_theta_walk(const Weight& w, const std::vector<int>& order, std::size_t step, int norm, PairSet::Kind kind,
                    const std::function<bool(const Weight&)>& keep,
                    const std::function<void(const Weight&, int)>& visit) {
  if (step == order.size()) {
    visit(w, norm);
    return;
  }
  const int idx = order[step] - w.m();
  Weight cur = w;
  for (int t = 0;; ++t) {
    red_theta_walk(cur, order, step + 1, norm + t, kind, keep, visit);
    PairSet s = kind == PairSet::Kind::positive ? sigma_plus(cur) : sigma_minus(cur);
    auto j = s.partner(idx);
    if (!j) break;
    int a = cur.at(idx), b = cur.at(*j);
    cur.set(idx, b);
    cur.set(*j, a);
    if (!keep(cur)) break;
    if (t > kStepLimit) throw WindowExhausted("theta walk did not terminate");
  }
}

std::vector<int> order_minus_m_first(int m) {
  std::vector<int> o(m);
  for (int k = 0; k < m; ++k) o[k] = k;
  return o;
}

std::vector<int> order_minus_one_first(int m) {
  std::vector<int> o(m);
  for (int k = 0; k < m; ++k) o[k] = m - 1 - k;
  return o;
}

// Finite weights: sum of (-q)^{-|theta|} over theta with R'_theta(g) = f.
LaurentPoly red_l_coeff(const Weight& g, const Weight& f) {
  if (all_entries_sorted(g) != all_entries_sorted(f)) return {};
  const std::vector<int> ceiling = sorted_desc(f.neg());
  if (!componentwise_geq(ceiling, sorted_desc(g.neg()))) return {};
  LaurentPoly c;
  red_theta_walk(
      g, order_minus_m_first(g.m()), 0, 0, PairSet::Kind::negative,
      [&](const Weight& w) { return componentwise_geq(ceiling, sorted_desc(w.neg())); },
      [&](const Weight& w, int norm) {
        auto d = dominant_rep(w);
        if (d && d->weight == f) c += LaurentPoly::neg_q_power(-norm);
      });
  return c;
}

}  // namespace

// ---- reductive ----------------------------------------------------------

Expansion red_canonical(const Weight& f) {
  require(f, Flavor::reductive);
  Weight F = f.has_tail() ? f.window(reductive_work_window(f)) : f;
  PairSet s = sigma_plus(F);
  const int k = static_cast<int>(s.size());
  Expansion out;
  for (const auto& theta : binary_thetas(k)) {
    std::vector<std::pair<int, int>> subset;
    for (int b = 0; b < k; ++b)
      if (theta[b]) subset.push_back(s.pairs[b]);
    out.add(retail_if(f_sigma(F, subset), f.has_tail()), LaurentPoly::monomial(theta_norm(theta)));
  }
  return out;
}

Expansion red_canonical_by_theta(const Weight& f) {
  require(f, Flavor::reductive);
  Expansion out;
  for (const auto& theta : binary_thetas(f.m()))
    if (auto g = red_lower_theta(f, theta)) out.add(*g, LaurentPoly::monomial(theta_norm(theta)));
  return out;
}

Expansion red_canonical_procedure(const Weight& f, std::vector<ChevalleyLetter>* word, Weight* start) {
  require(f, Flavor::reductive);
  Weight h = f.has_tail() ? f.window(reductive_work_window(f, f.m())) : f;
  std::vector<ChevalleyLetter> letters;
  for (int step = 0;; ++step) {
    if (step > kStepLimit) throw std::logic_error("procedure did not reach a J-typical weight");
    PairSet s = sigma_plus(h);
    if (s.empty()) break;
    int i = s.pairs.back().first;  // pairs are sorted by i
    int fi = h.at(i);
    if (i == -1 || fi - 1 != h.at(i + 1)) {
      letters.push_back({false, fi - 1});
      h.set(i, fi - 1);
    } else {
      int target = h.at(i + 1);
      int found = 0;
      for (int j = 1; j <= h.n(); ++j)
        if (h.at(j) == target) found = j;
      if (found == 0) throw std::logic_error("procedure: no matching positive entry");
      letters.push_back({true, fi - 1});
      h.set(found, target + 1);
    }
    if (!h.is_dominant()) throw std::logic_error("procedure left the dominant cone at " + h.to_string());
  }
  Expansion x = Expansion::single(h);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    x = it->is_E ? chevalley_E(it->a, x) : chevalley_F(it->a, x);
  if (word) *word = letters;
  if (start) *start = retail_if(h, f.has_tail());
  if (!f.has_tail()) return x;
  Expansion out;
  for (const auto& [w, c] : x.terms()) out.add(w.with_tail(), c);
  return out;
}

LaurentPoly red_K_in_U(const Weight& f, const Weight& target) {
  require(f, Flavor::reductive);
  require(target, Flavor::reductive);
  if (f.has_tail() != target.has_tail() || f.m() != target.m()) throw std::invalid_argument("incompatible weights");
  Weight F = f, T = target;
  if (f.has_tail()) {
    int lo = std::min(f.min_entry(), target.min_entry());
    int n = std::max({f.n(), target.n(), 4 * f.m() + 3 - lo, 1});
    F = f.window(n);
    T = target.window(n);
  } else if (f.n() != target.n()) {
    throw std::invalid_argument("different finite ranks");
  }
  if (all_entries_sorted(F) != all_entries_sorted(T)) return {};
  const std::vector<int> floor = sorted_desc(T.neg());
  if (!componentwise_geq(sorted_desc(F.neg()), floor)) return {};
  LaurentPoly c;
  red_theta_walk(
      F, order_minus_one_first(F.m()), 0, 0, PairSet::Kind::positive,
      [&](const Weight& w) { return componentwise_geq(sorted_desc(w.neg()), floor); },
      [&](const Weight& w, int norm) {
        auto d = dominant_rep(w);
        if (d && d->weight == T) c += LaurentPoly::neg_q_power(norm);
      });
  return c;
}

std::vector<Weight> reductive_block(const Weight& f) {
  if (f.has_tail()) throw std::invalid_argument("reductive_block needs a finite weight");
  std::vector<int> values = all_entries_sorted(f);
  const int m = f.m();
  const int total = static_cast<int>(values.size());
  std::set<Weight> out;
  std::vector<int> pick(total, 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> neg, pos;
    for (int k = 0; k < total; ++k) (pick[k] ? neg : pos).push_back(values[k]);
    Weight raw = Weight::finite(Flavor::reductive, neg, pos);
    if (auto d = dominant_rep(raw)) out.insert(d->weight);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return {out.begin(), out.end()};
}

Expansion red_dual_canonical(const Weight& f, int window) {
  require(f, Flavor::reductive);
  Weight F = f.has_tail() ? f.window(std::max(window, f.n())) : f;
  Expansion out;
  for (const auto& g : reductive_block(F)) out.add(retail_if(g, f.has_tail()), red_l_coeff(g, F));
  return out;
}

Expansion red_K_in_L(const Weight& f, int window) {
  require(f, Flavor::reductive);
  Weight F = f.has_tail() ? f.window(std::max(window, f.n())) : f;
  Expansion out;
  for (const auto& g : reductive_block(F)) {
    for (const auto& theta : binary_thetas(F.m())) {
      auto r = red_raise_theta(g, theta);
      if (r && *r == F) out.add(retail_if(g, f.has_tail()), LaurentPoly::monomial(-theta_norm(theta)));
    }
  }
  return out;
}

// ---- super --------------------------------------------------------------

namespace {

std::vector<int> matched_values(const Weight& w) {
  std::set<int> pos_values(w.pos().begin(), w.pos().end());
  std::vector<int> out;
  for (int v : w.neg())
    if (pos_values.count(v)) out.push_back(v);
  return sorted_desc(out);
}

// Brings a finite super weight into the cone f(n) <= n and attaches the tail.
Weight embed(const Weight& f, int p) { return shift_weight(f, p).with_tail(); }

Expansion back_from_infinity(const Expansion& x, int n, int p) { return shift_expansion(truncate(x, n), -p); }

// Dominant weights with the same unmatched entries as F (a finite window)
// and matched values drawn from [lowest, max matched value of F].
std::vector<Weight> super_candidates(const Weight& F, int lowest) {
  const std::vector<int> matched = matched_values(F);
  const int k = static_cast<int>(matched.size());
  if (k == 0) return {F};
  std::set<int> matched_set(matched.begin(), matched.end());
  std::vector<int> typ_neg, typ_pos;
  for (int v : F.neg())
    if (!matched_set.count(v)) typ_neg.push_back(v);
  for (int v : F.pos())
    if (!matched_set.count(v)) typ_pos.push_back(v);
  std::set<int> blocked(typ_neg.begin(), typ_neg.end());
  blocked.insert(typ_pos.begin(), typ_pos.end());
  std::vector<int> allowed;
  for (int v = std::min(lowest, matched.back()); v <= matched.front(); ++v)
    if (!blocked.count(v) && v >= lowest) allowed.push_back(v);
  std::vector<Weight> out;
  const int a = static_cast<int>(allowed.size());
  if (a < k) return out;
  std::vector<int> pick(a, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> neg = typ_neg, pos = typ_pos;
    for (int t = 0; t < a; ++t)
      if (pick[t]) {
        neg.push_back(allowed[t]);
        pos.push_back(allowed[t]);
      }
    std::sort(neg.begin(), neg.end(), std::greater<>());
    std::sort(pos.begin(), pos.end());
    out.push_back(Weight::finite(Flavor::super, neg, pos));
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Finite weights G, F of the same rank: sum of (-q)^{-|theta|} over theta
// with R'_theta(G) = F. Each raise lifts one matched value, so the sorted
// matched values only grow.
LaurentPoly super_l_coeff(const Weight& G, const Weight& F) {
  if (eps_weight(G) != eps_weight(F)) return {};
  const std::vector<int> ceiling = matched_values(F);
  if (!componentwise_geq(ceiling, matched_values(G))) return {};
  const auto pairs = atypical_pairs(G);
  const int k = static_cast<int>(pairs.size());
  LaurentPoly c;
  std::function<void(const Weight&, int, int)> walk = [&](const Weight& w, int l, int norm) {
    if (l == k) {
      auto d = dominant_rep(w);
      if (d && d->weight == F) c += LaurentPoly::neg_q_power(-norm);
      return;
    }
    Weight cur = w;
    for (int t = 0;; ++t) {
      walk(cur, l + 1, norm + t);
      cur = super_raise(cur, pairs[l].first, pairs[l].second);
      if (!componentwise_geq(ceiling, matched_values(cur))) break;
      if (t > kStepLimit) throw WindowExhausted("raise walk did not terminate");
    }
  };
  walk(G, 0, 0);
  return c;
}

}  // namespace

Expansion super_canonical(const Weight& f) {
  require(f, Flavor::super);
  if (!f.has_tail()) {
    int p = minimal_shift(f);
    return back_from_infinity(super_canonical(embed(f, p)), f.n(), p);
  }
  Expansion out;
  for (const auto& theta : binary_thetas(super_atypicality(f)))
    out.add(super_lower_theta(f, theta), LaurentPoly::monomial(theta_norm(theta)));
  return out;
}

Expansion super_canonical_direct(const Weight& f) {
  require(f, Flavor::super);
  if (f.has_tail()) throw std::invalid_argument("direct evaluation is for finite weights");
  Expansion out;
  for (const auto& theta : binary_thetas(super_atypicality(f)))
    out.add(super_lower_theta(f, theta), LaurentPoly::monomial(theta_norm(theta)));
  return out;
}

LaurentPoly super_K_in_U(const Weight& f, const Weight& target) {
  require(f, Flavor::super);
  require(target, Flavor::super);
  if (f.has_tail() != target.has_tail() || f.m() != target.m()) throw std::invalid_argument("incompatible weights");
  if (!f.has_tail()) {
    if (f.n() != target.n()) throw std::invalid_argument("different finite ranks");
    int p = std::max(minimal_shift(f), minimal_shift(target));
    return super_K_in_U(embed(f, p), embed(target, p));
  }
  if (eps_weight(f) != eps_weight(target)) return {};
  const int n = std::max(super_work_window(f), super_work_window(target));
  const Weight F = f.window(n), T = target.window(n);
  const std::vector<int> floor = matched_values(T);
  if (!componentwise_geq(matched_values(F), floor)) return {};
  const auto pairs = atypical_pairs(F);
  const int k = static_cast<int>(pairs.size());
  LaurentPoly c;
  // Lowering with the last pair first.
  std::function<void(const Weight&, int, int)> walk = [&](const Weight& w, int s, int norm) {
    if (s == k) {
      auto d = dominant_rep(w);
      if (d && d->weight == T) c += LaurentPoly::neg_q_power(norm);
      return;
    }
    const auto& [i, j] = pairs[k - 1 - s];
    Weight cur = w;
    for (int t = 0;; ++t) {
      walk(cur, s + 1, norm + t);
      cur = super_lower(cur, i, j);
      if (!componentwise_geq(matched_values(cur), floor)) break;
      if (t > kStepLimit) throw WindowExhausted("lowering walk did not terminate");
    }
  };
  walk(F, 0, 0);
  return c;
}

Expansion super_dual_canonical(const Weight& f, int lowest) {
  require(f, Flavor::super);
  if (!f.has_tail()) {
    int p = minimal_shift(f);
    return back_from_infinity(super_dual_canonical(embed(f, p), lowest - p), f.n(), p);
  }
  const int n = super_work_window(f);
  const Weight F = f.window(n);
  Expansion out;
  for (const auto& G : super_candidates(F, lowest)) out.add(G.with_tail(), super_l_coeff(G, F));
  return out;
}

Expansion super_dual_canonical_direct(const Weight& f, int lowest) {
  require(f, Flavor::super);
  if (f.has_tail()) throw std::invalid_argument("direct evaluation is for finite weights");
  Expansion out;
  for (const auto& G : super_candidates(f, lowest)) out.add(G, super_l_coeff(G, f));
  return out;
}

Expansion super_K_in_L(const Weight& f) {
  require(f, Flavor::super);
  if (!f.has_tail()) {
    int p = minimal_shift(f);
    return back_from_infinity(super_K_in_L(embed(f, p)), f.n(), p);
  }
  const int n = super_work_window(f);
  const Weight F = f.window(n);
  const int k = super_atypicality(f);
  Expansion out;
  for (const auto& G : super_candidates(F, F.min_entry() - k - 1)) {
    int hits = 0;
    for (const auto& theta : binary_thetas(k)) {
      auto r = super_raise_theta(G, theta);
      if (r && *r == F) {
        ++hits;
        out.add(G.with_tail(), LaurentPoly::monomial(-theta_norm(theta)));
      }
    }
    if (hits > 1) throw std::logic_error("several theta reach " + f.to_string() + " from " + G.to_string());
  }
  return out;
}

std::vector<Weight> super_block_candidates(const Weight& f, int lowest) {
  require(f, Flavor::super);
  if (!f.has_tail()) throw std::invalid_argument("super_block_candidates needs a profinite weight");
  std::vector<Weight> out;
  for (const auto& G : super_candidates(f.window(super_work_window(f)), lowest)) out.push_back(G.with_tail());
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly kl_u(const Weight& g, const Weight& f) {
  if (f.flavor() == Flavor::reductive) return red_canonical(f).coefficient(g);
  return super_canonical(f).coefficient(g);
}

LaurentPoly kl_l(const Weight& g, const Weight& f) {
  if (g.flavor() != f.flavor() || g.m() != f.m() || g.has_tail() != f.has_tail())
    throw std::invalid_argument("incompatible weights");
  require(g, f.flavor());
  require(f, f.flavor());
  if (f.flavor() == Flavor::reductive) {
    if (!f.has_tail()) return red_l_coeff(g, f);
    int n = std::max(g.n(), f.n());
    return red_l_coeff(g.window(n), f.window(n));
  }
  if (!f.has_tail()) {
    if (f.n() != g.n()) throw std::invalid_argument("different finite ranks");
    int p = std::max(minimal_shift(f), minimal_shift(g));
    return kl_l(embed(g, p), embed(f, p));
  }
  int n = std::max(super_work_window(f), super_work_window(g));
  return super_l_coeff(g.window(n), f.window(n));
}

}  // namespace superkl
