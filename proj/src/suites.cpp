#include "superkl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "superkl/atypicality.hpp"
#include "superkl/bases.hpp"
#include "superkl/duality.hpp"
#include "superkl/errors.hpp"
#include "superkl/hecke.hpp"
#include "superkl/truncation.hpp"

namespace superkl {

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

constexpr std::size_t kKeptFailures = 10;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void for_each_decreasing(int lo, int hi, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == k) {
      visit(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int v = top; v - need + 1 >= lo; --v) {
      cur.push_back(v);
      rec(v - 1);
      cur.pop_back();
    }
  };
  rec(hi);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_distinct(Rng& rng, int lo, int hi, int k) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  if (k > static_cast<int>(pool.size())) throw std::invalid_argument("not enough values to sample");
  for (int t = 0; t < k; ++t) std::swap(pool[t], pool[uniform(rng, t, static_cast<int>(pool.size()) - 1)]);
  pool.resize(k);
  return pool;
}

std::vector<int> desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<int> asc(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Weight random_reductive_profinite(Rng& rng, int m, int lo, int hi, int max_prefix) {
  for (;;) {
    int len = uniform(rng, 0, max_prefix);
    std::vector<int> neg = desc(random_distinct(rng, lo, hi, m));
    if (hi - lo + 1 < len) continue;
    std::vector<int> pos = desc(random_distinct(rng, lo, hi, len));
    if (!pos.empty() && pos.back() <= -len) continue;
    return Weight::profinite(Flavor::reductive, neg, pos);
  }
}

Weight random_super_profinite(Rng& rng, int m, int lo, int hi, int max_prefix) {
  int len = uniform(rng, 0, max_prefix);
  std::vector<int> neg = desc(random_distinct(rng, lo, hi, m));
  std::vector<int> pos = asc(random_distinct(rng, std::min(lo, len), len, len));
  return Weight::profinite(Flavor::super, neg, pos);
}

Weight random_finite(Rng& rng, Flavor flavor, int m, int n, int lo, int hi) {
  std::vector<int> neg = desc(random_distinct(rng, lo, hi, m));
  std::vector<int> pos = random_distinct(rng, lo, hi, n);
  pos = flavor == Flavor::super ? asc(pos) : desc(pos);
  return Weight::finite(flavor, neg, pos);
}

LaurentPoly random_poly(Rng& rng) {
  LaurentPoly p;
  int terms = uniform(rng, 0, 4);
  for (int t = 0; t < terms; ++t) p += LaurentPoly::monomial(uniform(rng, -4, 4), uniform(rng, -3, 3));
  return p;
}

struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool eps_constant(const Expansion& x, const Weight& f) {
  const EpsWeight e = eps_weight(f);
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return eps_weight(t.first) == e; });
}

bool off_leading(const Expansion& x, const Weight& f, bool positive) {
  for (const auto& [g, c] : x.terms()) {
    if (g == f) {
      if (!c.is_one()) return false;
    } else if (positive ? !c.in_positive_part() : !c.in_negative_part()) {
      return false;
    }
  }
  return true;
}

bool nonnegative(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
}

Weight R(const std::string& s) { return parse_weight(s, Flavor::reductive); }
Weight S(const std::string& s) { return parse_weight(s, Flavor::super); }
LaurentPoly q(int e) { return LaurentPoly::monomial(e); }

Expansion expansion(std::initializer_list<std::pair<Weight, LaurentPoly>> terms) {
  Expansion x;
  for (const auto& [w, c] : terms) x.add(w, c);
  return x;
}

SuiteReport from_checks(const std::string& name, const Checks& c, long cases, Clock::time_point t0) {
  SuiteReport r;
  r.name = name;
  r.cases = cases;
  r.failed = static_cast<long>(c.failures.size());
  r.failures = c.failures;
  r.seconds = since(t0);
  return r;
}

}  // namespace

// ---- enumeration --------------------------------------------------------

std::vector<Weight> all_reductive_profinite(int m, int lo, int hi, int max_prefix) {
  std::set<Weight> out;
  for_each_decreasing(lo, hi, m, [&](const std::vector<int>& neg) {
    for (int len = 0; len <= max_prefix; ++len)
      for_each_decreasing(lo, hi, len, [&](const std::vector<int>& pos) {
        if (!pos.empty() && pos.back() <= -len) return;
        out.insert(Weight::profinite(Flavor::reductive, neg, pos));
      });
  });
  return {out.begin(), out.end()};
}

std::vector<Weight> all_finite(Flavor flavor, int m, int n, int lo, int hi) {
  std::vector<Weight> out;
  for_each_decreasing(lo, hi, m, [&](const std::vector<int>& neg) {
    for_each_decreasing(lo, hi, n, [&](const std::vector<int>& pos) {
      out.push_back(Weight::finite(flavor, neg, flavor == Flavor::super ? asc(pos) : pos));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

SuiteReport run_cases(const std::string& name, std::size_t count, int jobs,
                      const std::function<std::vector<std::string>(std::size_t)>& check) {
  const auto t0 = Clock::now();
  std::vector<std::vector<std::string>> results(count);
  std::vector<std::string> exhausted(count);
  const long total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 1 ? jobs : 1) if (jobs > 1)
  for (long k = 0; k < total; ++k) {
    try {
      results[k] = check(static_cast<std::size_t>(k));
    } catch (const WindowExhausted& e) {
      exhausted[k] = e.what();
    } catch (const std::exception& e) {
      results[k] = {std::string("case ") + std::to_string(k) + ": exception: " + e.what()};
    }
  }
  for (long k = 0; k < total; ++k)
    if (!exhausted[k].empty()) throw WindowExhausted(name + " case " + std::to_string(k) + ": " + exhausted[k]);
  SuiteReport r;
  r.name = name;
  r.cases = total;
  for (auto& msgs : results) {
    if (msgs.empty()) continue;
    ++r.failed;
    for (auto& msg : msgs)
      if (r.failures.size() < kKeptFailures) r.failures.push_back(std::move(msg));
  }
  r.seconds = since(t0);
  return r;
}

// ---- hook Schur by tableaux ---------------------------------------------

SymPoly hook_schur_tableaux(const Partition& lambda_in, int m, int n) {
  const Partition lambda = normalize_partition(lambda_in);
  SymPoly out(m, n, -1);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  // Letters 0..m-1 stand for x_{-m..-1}, m..m+n-1 for x_{1..n}; a letter is
  // odd when it is >= m.
  std::map<std::pair<int, int>, int> filling;
  SymPoly::Exponents e(m + n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.add(e, 1);
      return;
    }
    auto [r, c] = cells[k];
    for (int a = 0; a < m + n; ++a) {
      bool odd = a >= m;
      if (c > 0) {
        int left = filling.at({r, c - 1});
        if (left > a || (left == a && odd)) continue;
      }
      if (r > 0) {
        int up = filling.at({r - 1, c});
        if (up > a || (up == a && !odd)) continue;
      }
      filling[{r, c}] = a;
      ++e[a];
      rec(k + 1);
      --e[a];
      filling.erase({r, c});
    }
  };
  rec(0);
  return out;
}

// ---- golden examples ----------------------------------------------------

SuiteReport suite_golden_super() {
  const auto t0 = Clock::now();
  Checks c;
  const Weight f = S("0,-1,-3,-4|-2,-1,0,*");
  const Expansion expect = expansion({{f, q(0)},
                                      {S("-1,-3,-4,-6|-6,-2,-1,*"), q(1)},
                                      {S("0,-3,-4,-5|-5,-2,0,*"), q(1)},
                                      {S("-3,-4,-5,-6|-6,-5,-2,*"), q(2)}});
  c.expect(super_atypicality(f) == 2, "atypicality of the profinite weight");
  c.expect(super_canonical(f) == expect, "profinite canonical vector");
  const Weight f3 = S("0,-1,-3,-4|-2,-1,0");
  const Expansion expect3 = expansion({{f3, q(0)},
                                       {S("-1,-3,-4,-6|-6,-2,-1"), q(1)},
                                       {S("0,-3,-4,-5|-5,-2,0"), q(1)},
                                       {S("-3,-4,-5,-6|-6,-5,-2"), q(2)}});
  c.expect(super_canonical(f3) == expect3, "n = 3 canonical vector");
  c.expect(super_canonical_direct(f3) == expect3, "n = 3 canonical vector, direct formula");
  c.expect(truncate(super_canonical(f), 3) == expect3, "truncation of the profinite vector to n = 3");
  const Weight l43 = super_lower(f, -4, 3);
  c.expect(l43.dominant() == S("-1,-3,-4,-6|-6,-2,-1,*"), "single lowering at (-4|3)");
  c.expect(super_lower(f, -3, 2).dominant() == S("0,-3,-4,-5|-5,-2,0,*"), "single lowering at (-3|2)");
  c.expect(super_lower(l43, -3, 2).dominant() == S("-3,-4,-5,-6|-6,-5,-2,*"), "composite lowering");
  c.expect(super_lower_theta(f, {1, 1}) == S("-3,-4,-5,-6|-6,-5,-2,*"), "lowering composite theta = (1,1)");
  SuiteReport r = from_checks("golden-super", c, 8, t0);
  if (r.seconds >= 1.0) {
    ++r.failed;
    r.failures.push_back("runtime " + std::to_string(r.seconds) + " s exceeds 1 s");
  }
  return r;
}

SuiteReport suite_golden_reductive() {
  const auto t0 = Clock::now();
  Checks c;
  const Weight f = R("2,1,0|3,0,-2");
  const Expansion expect = expansion({{f, q(0)}, {R("2,0,-2|3,1,0"), q(1)}});
  c.expect(j_atypicality(f) == 1, "J-atypicality");
  PairSet s = sigma_plus(f);
  c.expect(s.pairs == std::vector<std::pair<int, int>>{{-2, 3}}, "positive pair set");
  c.expect(red_canonical(f) == expect, "closed formula");
  std::vector<ChevalleyLetter> word;
  Weight start;
  c.expect(red_canonical_procedure(f, &word, &start) == expect, "procedure");
  c.expect(word == std::vector<ChevalleyLetter>{{true, 0}, {false, -1}, {false, -2}}, "Chevalley word E0 F-1 F-2");
  c.expect(start == R("2,1,-2|3,1,-2"), "J-typical start of the procedure");
  LaurentPoly scalar;
  c.expect(oracle_canonical(f, &scalar) == expect, "tensor space oracle");
  c.expect(scalar == LaurentPoly::monomial(-6), "oracle normalization (-q^-1)^6");
  c.expect(chevalley_F(-2, R("2,1,-2|3,1,-2")) == expansion({{R("2,1,-1|3,1,-2"), q(0)}, {R("2,1,-2|3,1,-1"), q(1)}}),
           "F_-2 action");
  auto raw = red_lower(f, -2);
  c.expect(raw && *raw == Weight::finite(Flavor::reductive, {2, -2, 0}, {3, 0, 1}), "single reductive lowering");
  c.expect(f_sigma(f, {{-2, 3}}) == R("2,0,-2|3,1,0"), "f_Sigma");
  c.expect(red_lower_theta(f, {0, 1, 0}) == R("2,0,-2|3,1,0"), "lowering composite theta = e_-2");
  SuiteReport r = from_checks("golden-reductive", c, 12, t0);
  if (r.seconds >= 10.0) {
    ++r.failed;
    r.failures.push_back("runtime " + std::to_string(r.seconds) + " s exceeds 10 s");
  }
  return r;
}

SuiteReport suite_golden_dual() {
  const auto t0 = Clock::now();
  Checks c;
  const Weight f = S("0,-2|-2,0,*"), g = S("-2,-4|-4,-2,*");
  const Weight fn = R("0,-2|2,1,-1,-3,*"), gn = R("-2,-4|2,1,0,-1,-3,-5,*");
  const LaurentPoly expect = q(2) + q(4);
  const LaurentPoly ls = kl_l(g, f), lr = kl_l(gn, fn);
  c.expect(ls.at_neg_q_inverse() == expect, "super l_{g,f}(-q^-1) = " + ls.at_neg_q_inverse().to_string());
  c.expect(lr.at_neg_q_inverse() == expect, "reductive l(-q^-1) = " + lr.at_neg_q_inverse().to_string());
  c.expect(ls == lr, "super and reductive coefficients agree");
  c.expect(natural_map(fn) == f && natural_map(gn) == g, "natural map on the pair");
  c.expect(super_atypicality(f) == 2, "atypicality");
  const Weight r1 = super_raise(super_raise(g, -1, 1), -1, 1);
  c.expect(r1.dominant() == f, "double raise at (-1|1)");
  const Weight r2 = super_raise(super_raise(super_raise(super_raise(g, -2, 2), -2, 2), -1, 1), -1, 1);
  c.expect(r2.dominant() == f, "double raises at (-2|2) then (-1|1)");
  c.expect(red_raise_prime_theta(gn, {0, 2}) == fn, "reductive double raise at -1");
  SuiteReport r = from_checks("golden-dual", c, 8, t0);
  if (r.seconds >= 1.0) {
    ++r.failed;
    r.failures.push_back("runtime " + std::to_string(r.seconds) + " s exceeds 1 s");
  }
  return r;
}

SuiteReport suite_golden() {
  const auto t0 = Clock::now();
  SuiteReport out;
  out.name = "golden";
  for (const auto& part : {suite_golden_super(), suite_golden_reductive(), suite_golden_dual()}) {
    out.cases += part.cases;
    out.failed += part.failed;
    for (const auto& f : part.failures) out.failures.push_back(part.name + ": " + f);
  }
  Checks c;
  const Weight u = R("0,-1,-3,-4|3,2,1,*");
  c.expect(j_atypicality(R("0,-1,-3,-4|3,2,1")) == 0, "finite n = 3 weight is J-typical");
  c.expect(red_canonical(u) == expansion({{u, q(0)},
                                          {R("-1,-3,-4,-6|3,2,1,0,-3,-4,-5,*"), q(1)},
                                          {R("0,-3,-4,-5|3,2,1,-1,-3,-4,*"), q(1)},
                                          {R("-3,-4,-5,-6|3,2,1,0,-1,-3,-4,*"), q(2)}}),
           "reductive canonical vector of the natural partner");
  c.expect(natural_map(u) == S("0,-1,-3,-4|-2,-1,0,*"), "natural map of the worked example");
  c.expect(verify_kl_match(u).matched, "termwise match of the worked example");
  c.expect(natural_map(R("3|1,0,-2,*")) == S("3|-1,2,3,*"), "natural map (3|1,0,-2)");
  c.expect(super_atypicality(S("0,-2|-2,0,*")) == 2, "atypicality of the dual example");
  const std::set<int> hl = h_labels({5, 3, 2, 2}, -6, 7), vl = v_labels({5, 3, 2, 2}, -6, 7);
  c.expect(hl == std::set<int>{-3, -2, 1, 3, 4, 6, 7}, "horizontal labels of (5,3,2,2)");
  c.expect(vl == std::set<int>{5, 2, 0, -1, -4, -5, -6}, "vertical labels of (5,3,2,2)");
  // Negative pairs of f are the positive pairs of -f w0.
  const Weight f = R("2,1,0|3,0,-2");
  const Weight fw = Weight::finite(Flavor::reductive, {0, -1, -2}, {2, 0, -3});
  PairSet plus = sigma_plus(f), minus = sigma_minus(fw);
  std::vector<std::pair<int, int>> mapped;
  for (auto [i, j] : plus.pairs) mapped.emplace_back(-3 - i - 1, 3 - j + 1);
  std::sort(mapped.begin(), mapped.end());
  c.expect(minus.pairs == mapped, "negative pairs of -f w0");
  for (const auto& msg : c.failures) out.failures.push_back("golden: " + msg);
  out.cases += 9;
  out.failed += static_cast<long>(c.failures.size());
  out.seconds = since(t0);
  return out;
}

// ---- sweeps -------------------------------------------------------------

SuiteReport suite_duality(const SuiteOptions& o) {
  const auto weights = all_reductive_profinite(o.m, -o.range, o.range, o.max_prefix);
  std::vector<int> atyp(weights.size(), 0);
  SuiteReport r = run_cases("duality", weights.size(), o.jobs, [&](std::size_t k) {
    Checks c;
    const Weight& f = weights[k];
    atyp[k] = j_atypicality(f);
    const Weight fs = natural_map(f);
    c.expect(natural_inv(fs) == f, f.to_string() + ": natural map does not invert");
    c.expect(j_atypicality(f) == super_atypicality(fs), f.to_string() + ": atypicality mismatch");
    Expansion mapped;
    const Expansion red = red_canonical(f);
    for (const auto& [g, p] : red.terms()) mapped.add(natural_map(g), p);
    const Expansion sup = super_canonical(fs);
    c.expect(mapped == sup, f.to_string() + ": " + mapped.to_string() + " vs " + sup.to_string());
    const KlMatchReport dual = verify_kl_match(f);
    for (const auto& msg : dual.mismatches) c.expect(false, f.to_string() + ": " + msg);
    return c.failures;
  });
  std::map<int, int> hist;
  for (int a : atyp) ++hist[a];
  std::string note = "weights by J-atypicality:";
  for (auto [a, count] : hist) note += " " + std::to_string(a) + ":" + std::to_string(count);
  r.notes.push_back(note);
  return r;
}

SuiteReport suite_oracle(const SuiteOptions& o) {
  std::vector<Weight> weights;
  for (int m = 0; m <= o.max_rank; ++m)
    for (int n = m == 0 ? 1 : 0; m + n <= o.max_rank; ++n) {
      auto part = all_finite(Flavor::reductive, m, n, -o.oracle_range, o.oracle_range);
      weights.insert(weights.end(), part.begin(), part.end());
    }
  return run_cases("oracle", weights.size(), o.jobs, [&](std::size_t k) {
    Checks c;
    const Weight& f = weights[k];
    const Expansion a = red_canonical(f);
    const Expansion b = red_canonical_procedure(f);
    const Expansion h = oracle_canonical(f);
    c.expect(a == b, f.to_string() + ": closed formula " + a.to_string() + " vs procedure " + b.to_string());
    c.expect(a == h, f.to_string() + ": closed formula " + a.to_string() + " vs oracle " + h.to_string());
    return c.failures;
  });
}

namespace {

Weight negate_w0(const Weight& f) {
  std::vector<int> neg, pos;
  for (auto it = f.neg().rbegin(); it != f.neg().rend(); ++it) neg.push_back(-*it);
  for (auto it = f.pos().rbegin(); it != f.pos().rend(); ++it) pos.push_back(-*it);
  return Weight::finite(Flavor::reductive, neg, pos);
}

std::string sequence_text(const std::vector<int>& g) {
  std::ostringstream os;
  for (std::size_t k = 0; k < g.size(); ++k) os << (k ? "," : "") << g[k];
  return os.str();
}

// Tensor space, both duality formulas on one orbit:
//   V_f = sum_g t_{-f,-g}(q^-1) L_g  and  V_f = sum_g l_{-f,-g}(q^-1) T_g.
std::vector<std::string> tensor_inversion(const std::vector<int>& base) {
  std::vector<std::string> out;
  std::vector<int> nb;
  for (int v : base) nb.push_back(-v);
  std::sort(nb.begin(), nb.end());
  ParabolicModule plus(base), minus(nb);
  const int N = static_cast<int>(plus.size());
  // col[x][y] is the coefficient of V_y in the basis vector indexed by x.
  std::vector<std::vector<LaurentPoly>> t(N), l(N), tm(N), lm(N);
  for (int x = 0; x < N; ++x) {
    t[x] = plus.kl_column(x, false);
    l[x] = plus.kl_column(x, true);
    tm[x] = minus.kl_column(x, false);
    lm[x] = minus.kl_column(x, true);
  }
  std::vector<int> ni(N);
  for (int x = 0; x < N; ++x) {
    std::vector<int> g = plus.elements()[x];
    for (int& v : g) v = -v;
    ni[x] = minus.index_of(g);
  }
  for (int f = 0; f < N; ++f)
    for (int h = 0; h < N; ++h) {
      LaurentPoly s1, s2;
      for (int g = 0; g < N; ++g) {
        const LaurentPoly& a = tm[ni[g]][ni[f]];  // t_{-f,-g}
        if (!a.is_zero() && !l[g][h].is_zero()) s1 += l[g][h] * a.bar();
        const LaurentPoly& b = lm[ni[g]][ni[f]];  // l_{-f,-g}
        if (!b.is_zero() && !t[g][h].is_zero()) s2 += t[g][h] * b.bar();
      }
      for (const auto* s : {&s1, &s2}) {
        bool ok = f == h ? s->is_one() : s->is_zero();
        if (!ok && out.size() < 3)
          out.push_back("tensor orbit " + sequence_text(base) + ": entry (" + sequence_text(plus.elements()[h]) + ", " +
                        sequence_text(plus.elements()[f]) + ") = " + s->to_string());
      }
    }
  return out;
}

// Finite reductive block: dual pairing with the canonical basis of the
// negated block, and the compositions K -> U -> K and K -> L -> K.
std::vector<std::string> block_inversion(const Weight& seed, bool with_k_in_u) {
  std::vector<std::string> out;
  const std::vector<Weight> B = reductive_block(seed);
  const int N = static_cast<int>(B.size());
  std::map<Weight, int> pos;
  for (int k = 0; k < N; ++k) pos[B[k]] = k;
  std::vector<Expansion> U(N), Ldual(N), Uneg(N);
  for (int k = 0; k < N; ++k) {
    U[k] = red_canonical(B[k]);
    Ldual[k] = red_dual_canonical(B[k]);
    Uneg[k] = red_canonical(negate_w0(B[k]));
  }
  auto fail = [&](const std::string& what) {
    if (out.size() < 3) out.push_back("block of " + seed.to_string() + ": " + what);
  };
  // K_f = sum_g u_{-f w0,-g w0}(q^-1) L_g = sum_g l_{-f w0,-g w0}(q^-1) U_g.
  std::vector<Weight> negw(N);
  for (int k = 0; k < N; ++k) negw[k] = negate_w0(B[k]);
  std::vector<Expansion> Lneg(N);
  for (int k = 0; k < N; ++k) Lneg[k] = red_dual_canonical(negw[k]);
  for (int f = 0; f < N; ++f) {
    Expansion via_l, via_u;
    for (int g = 0; g < N; ++g) {
      LaurentPoly u = Uneg[g].coefficient(negw[f]);
      if (!u.is_zero()) via_l.add(Ldual[g], u.bar());
      LaurentPoly l = Lneg[g].coefficient(negw[f]);
      if (!l.is_zero()) via_u.add(U[g], l.bar());
    }
    if (!(via_l == Expansion::single(B[f]))) fail("K through L at " + B[f].to_string() + ": " + via_l.to_string());
    if (!(via_u == Expansion::single(B[f]))) fail("K through U at " + B[f].to_string() + ": " + via_u.to_string());
  }
  for (int f = 0; f < N; ++f) {
    // K_f = sum_g c_g L_g, expanded back through L_g = sum_h l_{h,g} K_h.
    Expansion back;
    const Expansion k_in_l = red_K_in_L(B[f]);
    for (const auto& [g, c] : k_in_l.terms()) back.add(Ldual[pos.at(g)], c);
    if (!(back == Expansion::single(B[f]))) fail("K in L composition at " + B[f].to_string());
    if (!with_k_in_u) continue;
    Expansion back_u;
    for (int g = 0; g < N; ++g) {
      LaurentPoly c = red_K_in_U(B[f], B[g]);
      if (!c.is_zero()) back_u.add(U[g], c);
    }
    if (!(back_u == Expansion::single(B[f]))) fail("K in U composition at " + B[f].to_string());
  }
  return out;
}

std::vector<int> matched_sorted(const Weight& f) {
  std::set<int> pos;
  for (int j = 1; j <= super_work_window(f); ++j) pos.insert(f.at(j));
  std::vector<int> out;
  for (int v : f.neg())
    if (pos.count(v)) out.push_back(v);
  return asc(out);
}

// Super side, per target: K in U composed with U in K, and K in L composed
// with L in K, return Kronecker deltas.
std::vector<std::string> super_inversion(const Weight& f) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& what) {
    if (out.size() < 3) out.push_back(f.to_string() + ": " + what);
  };
  const auto matched = matched_sorted(f);
  if (matched.empty()) return out;
  const int lowest = matched.front() - 2;
  const auto cands = super_block_candidates(f, lowest);
  std::vector<LaurentPoly> c(cands.size());
  std::vector<Expansion> U(cands.size());
  for (std::size_t g = 0; g < cands.size(); ++g) {
    c[g] = super_K_in_U(f, cands[g]);
    if (!c[g].is_zero()) U[g] = super_canonical(cands[g]);
  }
  for (const auto& h : cands) {
    LaurentPoly s;
    for (std::size_t g = 0; g < cands.size(); ++g)
      if (!c[g].is_zero()) s += c[g] * U[g].coefficient(h);
    if (!(h == f ? s.is_one() : s.is_zero())) fail("K in U composition at " + h.to_string() + " = " + s.to_string());
  }
  const Expansion kl = super_K_in_L(f);
  int low2 = f.min_entry() - super_atypicality(f) - 3;
  for (const auto& h : super_block_candidates(f, low2)) {
    LaurentPoly s;
    for (const auto& [g, p] : kl.terms()) s += p * kl_l(h, g);
    if (!(h == f ? s.is_one() : s.is_zero())) fail("K in L composition at " + h.to_string() + " = " + s.to_string());
  }
  return out;
}

}  // namespace

SuiteReport suite_inversion(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  // Tensor orbits of the oracle sweep.
  std::vector<std::vector<int>> bases;
  for (int size = 2; size <= o.max_rank; ++size) {
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int from) {
      if (static_cast<int>(cur.size()) == size) {
        bases.push_back(cur);
        return;
      }
      for (int v = from; v <= o.oracle_range; ++v) {
        cur.push_back(v);
        rec(cur, v);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(cur, -o.oracle_range);
  }
  // Finite blocks of both sweeps, one seed per (m, n, values).
  std::map<std::tuple<int, int, std::vector<int>>, std::pair<Weight, bool>> blocks;
  auto add_block = [&](const Weight& w, bool small) {
    std::vector<int> vals = w.neg();
    vals.insert(vals.end(), w.pos().begin(), w.pos().end());
    std::sort(vals.begin(), vals.end());
    auto key = std::make_tuple(w.m(), w.n(), vals);
    auto it = blocks.find(key);
    if (it == blocks.end()) blocks.emplace(key, std::make_pair(w, small));
    else it->second.second = it->second.second || small;
  };
  for (int m = 0; m <= o.max_rank; ++m)
    for (int n = m == 0 ? 1 : 0; m + n <= o.max_rank; ++n)
      for (const auto& w : all_finite(Flavor::reductive, m, n, -o.oracle_range, o.oracle_range)) add_block(w, true);
  const auto sweep = all_reductive_profinite(o.m, -o.range, o.range, o.max_prefix);
  for (const auto& f : sweep) add_block(f.window(std::max(f.n(), 1)), false);
  std::vector<std::pair<Weight, bool>> seeds;
  for (const auto& [key, v] : blocks) seeds.push_back(v);
  // Super weights: natural partners of a seeded sample of the duality sweep.
  Rng rng(o.seed);
  std::vector<Weight> supers;
  for (int t = 0; t < 100 && !sweep.empty(); ++t) {
    const Weight& f = sweep[uniform(rng, 0, static_cast<int>(sweep.size()) - 1)];
    supers.push_back(natural_map(f));
  }
  const std::size_t A = bases.size(), B = seeds.size(), C = supers.size();
  SuiteReport r = run_cases("inversion", A + B + C, o.jobs, [&](std::size_t k) {
    if (k < A) return tensor_inversion(bases[k]);
    if (k < A + B) return block_inversion(seeds[k - A].first, seeds[k - A].second);
    return super_inversion(supers[k - A - B]);
  });
  r.notes.push_back(std::to_string(A) + " tensor orbits, " + std::to_string(B) + " finite blocks, " +
                    std::to_string(C) + " super weights");
  r.seconds = since(t0);
  return r;
}

SuiteReport suite_truncation(const SuiteOptions& o) {
  Rng rng(o.seed + 1);
  struct Sample {
    Weight f;
    int n;
    Weight finite;  // an arbitrary finite super weight for the shift law
    int p;
  };
  std::vector<Sample> samples;
  for (int t = 0; t < o.samples; ++t) {
    int m = uniform(rng, 1, 3);
    Weight f = random_super_profinite(rng, m, -4, 5, 4);
    int n = f.n() + uniform(rng, 0, 2);
    int fn = uniform(rng, 1, 3);
    samples.push_back({f, n, random_finite(rng, Flavor::super, m, fn, -3, 6), uniform(rng, -2, 3)});
  }
  for (int t = 0; t < o.samples; ++t) {
    int m = uniform(rng, 1, 3);
    Weight f = random_reductive_profinite(rng, m, -5, 5, 4);
    samples.push_back({f, f.n() + uniform(rng, 0, 2), Weight(), 0});
  }
  return run_cases("truncation", samples.size(), o.jobs, [&](std::size_t k) {
    Checks c;
    const auto& [f, n, fin, p] = samples[k];
    const std::string tag = f.to_string() + " at n = " + std::to_string(n) + ": ";
    const Weight fn = f.window(n);
    if (f.flavor() == Flavor::super) {
      const Expansion U = super_canonical(f);
      c.expect(truncate(U, n) == super_canonical_direct(fn), tag + "truncated canonical vector");
      const int lo = f.min_entry() - 2;
      const Expansion L = super_dual_canonical(f, lo);
      const Expansion Ln = super_dual_canonical_direct(fn, lo);
      c.expect(truncate(L, n) == Ln, tag + "truncated dual canonical vector");
      for (const auto& [g, u] : U.terms())
        if (auto gn = truncate(g, n)) c.expect(kl_u(*gn, fn) == u, tag + "u stability at " + g.to_string());
      for (const auto& [g, l] : L.terms())
        if (auto gn = truncate(g, n)) c.expect(Ln.coefficient(*gn) == kl_l(g, f), tag + "l stability at " + g.to_string());
      c.expect(truncate(truncate(U, n + 1), n) == truncate(U, n), tag + "composition from infinity");
      c.expect(truncate(super_canonical_direct(f.window(n + 2)), n) == super_canonical_direct(fn),
               tag + "finite truncation n + 2 -> n");
      c.expect(truncate(truncate(super_canonical_direct(f.window(n + 2)), n + 1), n) ==
                   truncate(super_canonical_direct(f.window(n + 2)), n),
               tag + "composition of finite truncations");
      // Shift invariance and the shift route for an arbitrary finite weight.
      const Expansion direct = super_canonical_direct(fin);
      c.expect(super_canonical(fin) == direct, fin.to_string() + ": shift route vs direct formula");
      c.expect(shift_expansion(direct, p) == super_canonical_direct(shift_weight(fin, p)),
               fin.to_string() + ": shift by " + std::to_string(p));
    } else {
      const Expansion U = red_canonical(f);
      c.expect(truncate(U, n) == red_canonical(fn), tag + "truncated canonical vector");
      for (const auto& [g, u] : U.terms())
        if (auto gn = truncate(g, n)) c.expect(kl_u(*gn, fn) == u, tag + "u stability at " + g.to_string());
      const Expansion L = red_dual_canonical(f, n + 2);
      const Expansion Ln = red_dual_canonical(fn);
      c.expect(truncate(L, n) == Ln, tag + "truncated dual canonical vector");
      c.expect(truncate(truncate(U, n + 1), n) == truncate(U, n), tag + "composition from infinity");
      c.expect(truncate(red_canonical(f.window(n + 2)), n) == red_canonical(fn), tag + "finite truncation n + 2 -> n");
    }
    return c.failures;
  });
}

SuiteReport suite_bruhat(const SuiteOptions& o) {
  // Incomparable pairs are rare among random block members, so the sample is
  // stratified: half comparable, half incomparable on the reductive side.
  Rng rng(o.seed + 2);
  const int want_incomparable = o.bruhat_pairs / 2, want_comparable = o.bruhat_pairs - want_incomparable;
  std::vector<std::pair<Weight, Weight>> pairs;
  int comparable = 0, incomparable = 0;
  for (long tries = 0; comparable < want_comparable || incomparable < want_incomparable; ++tries) {
    if (tries > 1000L * o.bruhat_pairs) throw WindowExhausted("could not fill the Bruhat sample");
    int m = uniform(rng, 1, 3);
    Weight f = random_reductive_profinite(rng, m, -6, 6, 4);
    int n = f.n() + 1 + uniform(rng, 0, 1);
    std::vector<Weight> ok;
    for (const auto& g : reductive_block(f.window(n))) {
      Weight gt = g.with_tail();
      if (gt.is_dominant()) ok.push_back(gt);
    }
    if (ok.size() < 2) continue;
    const int top = static_cast<int>(ok.size()) - 1;
    Weight a = uniform(rng, 0, 1) ? ok[uniform(rng, 0, top)] : f;
    Weight b = ok[uniform(rng, 0, top)];
    if (a == b) continue;
    const SearchLimits limits{o.max_states};
    bool comp = bruhat_leq(a, b, limits) || bruhat_leq(b, a, limits);
    int& have = comp ? comparable : incomparable;
    if (have >= (comp ? want_comparable : want_incomparable)) continue;
    ++have;
    pairs.emplace_back(a, b);
  }
  SuiteReport r = run_cases("bruhat", pairs.size(), o.jobs, [&](std::size_t k) {
    Checks c;
    const auto& [f, g] = pairs[k];
    const SearchLimits limits{o.max_states};
    c.expect(verify_bruhat_match(f, g, limits), g.to_string() + " <= " + f.to_string() + " disagrees across the map");
    c.expect(verify_bruhat_match(g, f, limits), f.to_string() + " <= " + g.to_string() + " disagrees across the map");
    return c.failures;
  });
  r.notes.push_back(std::to_string(comparable) + " comparable, " + std::to_string(incomparable) + " incomparable");
  return r;
}

SuiteReport suite_typicality(const SuiteOptions& o) {
  std::vector<Weight> weights;
  for (int m = 0; m <= o.jantzen_rank; ++m)
    for (int n = m == 0 ? 1 : 0; m + n <= o.jantzen_rank; ++n) {
      auto part = all_finite(Flavor::reductive, m, n, -o.jantzen_range, o.jantzen_range);
      weights.insert(weights.end(), part.begin(), part.end());
    }
  for (int m = 1; m <= 3; ++m) {
    auto part = all_reductive_profinite(m, -o.jantzen_range, o.jantzen_range, 3);
    weights.insert(weights.end(), part.begin(), part.end());
  }
  return run_cases("typicality", weights.size(), o.jobs, [&](std::size_t k) {
    const Weight& f = weights[k];
    HighestWeight lambda = f_to_weight(f);
    std::optional<int> n;
    if (!f.has_tail()) n = f.n();
    bool irreducible = jantzen_irreducible(lambda, n);
    bool typical = j_atypicality(f) == 0;
    std::vector<std::string> out;
    if (irreducible != typical)
      out.push_back(f.to_string() + ": Jantzen says " + (irreducible ? "irreducible" : "reducible") +
                    ", J-atypicality " + std::to_string(j_atypicality(f)));
    return out;
  });
}

SuiteReport suite_characters(const SuiteOptions& o) {
  const auto t0 = Clock::now();
  std::vector<Partition> parts;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = 0; d <= c; ++d) parts.push_back(normalize_partition({a, b, c, d}));
  SuiteReport r = run_cases("characters", parts.size(), o.jobs, [&](std::size_t k) {
    Checks c;
    const Partition lam = parts[k];
    Partition full = lam;
    full.resize(4, 0);
    const int D = full[0] + full[1] + full[2] + full[3];
    HighestWeight h{Flavor::reductive, {full[0], full[1]}, normalize_partition({full[2], full[3]}), true};
    const Weight red = weight_to_f(h);
    const Weight sup = natural_map(red);
    std::string tag = "lambda = (";
    for (std::size_t t = 0; t < lam.size(); ++t) tag += (t ? "," : "") + std::to_string(lam[t]);
    tag += "): ";
    const SymPoly superchar = char_super_irreducible(sup, 2, D);
    const SymPoly hook = hook_schur_tableaux(lam, 2, 2);
    c.expect(superchar == hook, tag + "super character " + superchar.to_string() + " vs hook Schur " + hook.to_string());
    c.expect(superchar.has_nonnegative_coefficients(), tag + "negative coefficient in the super character");
    const SymPoly via_red = specialize(omega_plus(formal_reductive_character(red, D)), 2, 2, D);
    c.expect(superchar == via_red, tag + "super character vs omega of the reductive character");
    const SymPoly redchar = char_reductive_irreducible(red, 2, D);
    const SymPoly via_super = specialize(omega_plus(formal_super_character(sup, D)), 2, 2, D);
    c.expect(redchar == via_super, tag + "reductive character vs omega of the super character");
    SymPoly schur4(2, 2, D);
    const SymPoly s4 = schur_pos(lam, 0, 4, -1);
    for (const auto& [e, v] : s4.terms()) schur4.add(e, v);
    c.expect(redchar == schur4, tag + "reductive character vs Schur polynomial in four variables");
    return c.failures;
  });
  r.seconds = since(t0);
  if (r.seconds >= 30.0) {
    ++r.failed;
    r.failures.push_back("runtime " + std::to_string(r.seconds) + " s exceeds 30 s");
  }
  return r;
}

SuiteReport suite_structure(const SuiteOptions& o) {
  const int total = std::max(o.structure_cases, 1);
  Rng rng(o.seed + 3);
  std::vector<std::uint64_t> seeds(total);
  for (auto& s : seeds) s = rng();
  return run_cases("structure", seeds.size(), o.jobs, [&](std::size_t k) {
    Checks c;
    Rng local(seeds[k]);
    const int kind = static_cast<int>(k % 20);
    if (kind < 8) {
      LaurentPoly a = random_poly(local), b = random_poly(local), d = random_poly(local);
      c.expect((a * b) * d == a * (b * d), "associativity");
      c.expect(a * (b + d) == a * b + a * d, "distributivity");
      c.expect(a + b == b + a && a * b == b * a, "commutativity");
      c.expect(a.bar().bar() == a, "bar is an involution");
      c.expect((a * b).bar() == a.bar() * b.bar() && (a + b).bar() == a.bar() + b.bar(), "bar is a ring map");
      c.expect(eval_one(a * b) == eval_one(a) * eval_one(b), "evaluation at 1");
      c.expect((a - a).is_zero(), "additive inverse");
    } else if (kind < 13) {
      const int m = uniform(local, 1, 3);
      Weight f = kind % 2 ? random_reductive_profinite(local, m, -4, 4, 4)
                          : random_finite(local, Flavor::reductive, m, uniform(local, 1, 4), -4, 4);
      const Expansion U = red_canonical(f);
      const int k_at = j_atypicality(f);
      c.expect(static_cast<int>(U.size()) == (1 << k_at), f.to_string() + ": term count is not 2^J-atypicality");
      for (const auto& [g, p] : U.terms())
        c.expect(p.is_monomial() && p.terms().front().second == 1 && p.min_exponent() <= k_at,
                 f.to_string() + ": coefficient " + p.to_string() + " is not a power of q");
      c.expect(off_leading(U, f, true), f.to_string() + ": canonical normalization");
      c.expect(eps_constant(U, f), f.to_string() + ": eps-weight varies");
      c.expect(red_canonical_by_theta(f) == U, f.to_string() + ": lowering operators disagree with the pair formula");
    } else if (kind < 17) {
      const int m = uniform(local, 1, 3);
      Weight f = random_super_profinite(local, m, -4, 5, 4);
      const Expansion U = super_canonical(f);
      c.expect(static_cast<int>(U.size()) <= (1 << super_atypicality(f)), f.to_string() + ": too many terms");
      c.expect(off_leading(U, f, true), f.to_string() + ": canonical normalization");
      c.expect(eps_constant(U, f), f.to_string() + ": eps-weight varies");
      const Expansion K = super_K_in_L(f);
      c.expect(off_leading(K, f, false), f.to_string() + ": K in L normalization");
    } else if (kind < 19) {
      const int m = uniform(local, 1, 2);
      Weight f = random_finite(local, Flavor::reductive, m, uniform(local, 1, 3), -3, 3);
      const Expansion L = red_dual_canonical(f);
      c.expect(off_leading(L, f, false), f.to_string() + ": dual canonical normalization");
      c.expect(eps_constant(L, f), f.to_string() + ": eps-weight varies");
      for (const auto& [g, p] : L.terms())
        c.expect(nonnegative(p.at_neg_q_inverse()), f.to_string() + ": l(-q^-1) not positive at " + g.to_string());
      Weight raw = Weight::finite(Flavor::reductive, random_distinct(local, -4, 4, m),
                                  random_distinct(local, -4, 4, f.n()));
      if (auto d = dominant_rep(raw))
        c.expect(d->qpower <= 0 && d->sign == (-d->qpower % 2 ? -1 : 1), raw.to_string() + ": straightening scalar");
    } else {
      Weight f = random_super_profinite(local, uniform(local, 1, 2), -3, 4, 3);
      const Expansion L = super_dual_canonical(f, f.min_entry() - 3);
      c.expect(off_leading(L, f, false), f.to_string() + ": dual canonical normalization");
      c.expect(eps_constant(L, f), f.to_string() + ": eps-weight varies");
      for (const auto& [g, p] : L.terms())
        c.expect(nonnegative(p.at_neg_q_inverse()), f.to_string() + ": l(-q^-1) not positive at " + g.to_string());
    }
    return c.failures;
  });
}

std::vector<std::string> suite_names() {
  return {"golden", "duality", "oracle", "inversion", "truncation", "bruhat", "typicality", "characters", "structure"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "golden") return suite_golden();
  if (name == "duality") return suite_duality(o);
  if (name == "oracle") return suite_oracle(o);
  if (name == "inversion") return suite_inversion(o);
  if (name == "truncation") return suite_truncation(o);
  if (name == "bruhat") return suite_bruhat(o);
  if (name == "typicality") return suite_typicality(o);
  if (name == "characters") return suite_characters(o);
  if (name == "structure") return suite_structure(o);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace superkl
