#include "superkl/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "superkl/bases.hpp"

namespace superkl {

// ---- SymPoly ------------------------------------------------------------

SymPoly SymPoly::constant(int m, int n, int bound, Integer c) {
  return monomial(m, n, bound, Exponents(m + n, 0), std::move(c));
}

SymPoly SymPoly::monomial(int m, int n, int bound, Exponents e, Integer c) {
  SymPoly p(m, n, bound);
  p.add(e, c);
  return p;
}

int SymPoly::pos_degree(const Exponents& e) const { return std::accumulate(e.begin() + m_, e.end(), 0); }

void SymPoly::add(const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != m_ + n_) throw std::invalid_argument("exponent vector has the wrong length");
  for (int k = m_; k < m_ + n_; ++k)
    if (e[k] < 0) throw std::invalid_argument("negative exponent on a positive variable");
  if (c == 0 || (bound_ >= 0 && pos_degree(e) > bound_)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (other.m_ != m_ || other.n_ != n_) throw std::invalid_argument("variable sets differ");
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

SymPoly SymPoly::operator*(const SymPoly& other) const {
  if (other.m_ != m_ || other.n_ != n_) throw std::invalid_argument("variable sets differ");
  int b = bound_ < 0 ? other.bound_ : (other.bound_ < 0 ? bound_ : std::min(bound_, other.bound_));
  SymPoly out(m_, n_, b);
  Exponents e(m_ + n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [d, cd] : other.terms_) {
      for (int k = 0; k < m_ + n_; ++k) e[k] = a[k] + d[k];
      out.add(e, ca * cd);
    }
  return out;
}

SymPoly SymPoly::scaled(const Integer& c) const {
  SymPoly out(m_, n_, bound_);
  for (const auto& [e, v] : terms_) out.add(e, v * c);
  return out;
}

bool SymPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < m_ + n_; ++k) {
      if (e[k] == 0) continue;
      int idx = k < m_ ? k - m_ : k - m_ + 1;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(idx);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    Integer a = c < 0 ? Integer(-c) : c;
    std::string coef = a.str();
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (mono.empty()) s += coef;
    else s += (a == 1 ? "" : coef + "*") + mono;
  }
  return s;
}

// ---- Schur polynomials --------------------------------------------------

namespace {

// h_k in the variables at positions [offset, offset+size).
SymPoly complete_block(int k, int offset, int size, int m, int n, int bound) {
  SymPoly out(m, n, bound);
  if (k < 0) return out;
  SymPoly::Exponents e(m + n, 0);
  std::function<void(int, int)> fill = [&](int var, int left) {
    if (var == size - 1) {
      e[offset + var] = left;
      out.add(e, 1);
      e[offset + var] = 0;
      return;
    }
    for (int t = 0; t <= left; ++t) {
      e[offset + var] = t;
      fill(var + 1, left - t);
    }
    e[offset + var] = 0;
  };
  if (size == 0) {
    if (k == 0) out.add(e, 1);
    return out;
  }
  fill(0, k);
  return out;
}

// Jacobi-Trudi determinant det(h_{nu_i - i + j}) by expansion over
// permutations.
SymPoly schur_block(const Partition& nu_in, int offset, int size, int m, int n, int bound) {
  Partition nu = normalize_partition(nu_in);
  const int l = static_cast<int>(nu.size());
  if (l > size) return SymPoly(m, n, bound);
  if (l == 0) return SymPoly::constant(m, n, bound);
  int top = nu.front() + l;
  std::vector<SymPoly> h;
  for (int k = 0; k <= top; ++k) h.push_back(complete_block(k, offset, size, m, n, bound));
  auto hk = [&](int k) -> const SymPoly* { return k < 0 ? nullptr : &h[k]; };
  SymPoly out(m, n, bound);
  std::vector<int> sigma(l);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    SymPoly term = SymPoly::constant(m, n, bound);
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      const SymPoly* f = hk(nu[i] - i + sigma[i]);
      if (!f || f->is_zero()) zero = true;
      else term = term * *f;
    }
    if (zero) continue;
    int inversions = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b)
        if (sigma[a] > sigma[b]) ++inversions;
    out += inversions % 2 ? term.scaled(-1) : term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

SymPoly complete_pos(int k, int m, int n, int bound) { return complete_block(k, m, n, m, n, bound); }

SymPoly elementary_pos(int k, int m, int n, int bound) { return schur_pos(Partition(k, 1), m, n, bound); }

SymPoly schur_pos(const Partition& nu, int m, int n, int bound) {
  Partition p = normalize_partition(nu);
  if (bound >= 0 && std::accumulate(p.begin(), p.end(), 0) > bound) return SymPoly(m, n, bound);
  return schur_block(p, m, n, m, n, bound);
}

SymPoly schur_neg(const std::vector<int>& nu, int m, int n, int bound) {
  if (static_cast<int>(nu.size()) != m) throw std::invalid_argument("generalized partition must have length m");
  for (int k = 1; k < m; ++k)
    if (nu[k - 1] < nu[k]) throw std::invalid_argument("generalized partition must be weakly decreasing");
  if (m == 0) return SymPoly::constant(m, n, bound);
  const int c = nu.back();
  Partition shifted;
  for (int v : nu) shifted.push_back(v - c);
  SymPoly base = schur_block(shifted, 0, m, m, n, bound);
  SymPoly::Exponents e(m + n, 0);
  std::fill(e.begin(), e.begin() + m, c);
  return base * SymPoly::monomial(m, n, bound, e);
}

SymPoly omega_plus(const SymPoly& p) {
  const int m = p.m(), n = p.n();
  if (p.bound() < 0 || p.bound() > n) throw std::invalid_argument("omega_plus needs a degree bound <= n");
  std::map<std::vector<int>, std::map<std::vector<int>, Integer>> groups;
  for (const auto& [e, c] : p.terms())
    groups[{e.begin(), e.begin() + m}][{e.begin() + m, e.end()}] = c;
  SymPoly out(m, n, p.bound());
  for (auto& [neg, rest] : groups) {
    while (!rest.empty()) {
      const auto lead = rest.rbegin()->first;
      const Integer c = rest.rbegin()->second;
      if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
        throw std::invalid_argument("omega_plus: input is not symmetric in the positive variables");
      Partition lambda = normalize_partition(lead);
      SymPoly s = schur_pos(lambda, 0, n, -1);
      for (const auto& [e, v] : s.terms()) {
        auto it = rest.find(e);
        Integer left = (it == rest.end() ? Integer(0) : it->second) - c * v;
        if (left == 0) {
          if (it != rest.end()) rest.erase(it);
        } else {
          rest[e] = left;
        }
      }
      SymPoly t = schur_pos(conjugate(lambda), m, n, p.bound());
      SymPoly::Exponents shift(m + n, 0);
      std::copy(neg.begin(), neg.end(), shift.begin());
      out += (t * SymPoly::monomial(m, n, p.bound(), shift)).scaled(c);
    }
  }
  return out;
}

// ---- formal characters --------------------------------------------------

KacCharacter omega_plus(const KacCharacter& ch) {
  KacCharacter out;
  for (const auto& [t, c] : ch) {
    KacTerm u{t.neg, conjugate(t.pos), !t.odd};
    out[u] += c;
    if (out[u] == 0) out.erase(u);
  }
  return out;
}

namespace {

SymPoly pair_product(int m, int n, int bound, bool odd) {
  SymPoly out = SymPoly::constant(m, n, bound);
  for (int i = 0; i < m; ++i)
    for (int j = m; j < m + n; ++j) {
      SymPoly factor = SymPoly::constant(m, n, bound);
      int top = odd ? 1 : (bound < 0 ? throw std::invalid_argument("the geometric series needs a degree bound") : bound);
      for (int k = 1; k <= top; ++k) {
        SymPoly::Exponents e(m + n, 0);
        e[i] = -k;
        e[j] = k;
        factor.add(e, 1);
      }
      out = out * factor;
    }
  return out;
}

}  // namespace

SymPoly specialize(const KacCharacter& ch, int m, int n, int bound) {
  SymPoly out(m, n, bound);
  std::map<bool, SymPoly> products;
  for (const auto& [t, c] : ch) {
    if (static_cast<int>(t.neg.size()) != m) throw std::invalid_argument("Kac term has the wrong rank");
    SymPoly pos = schur_pos(t.pos, m, n, bound);
    if (pos.is_zero()) continue;
    auto it = products.find(t.odd);
    if (it == products.end()) it = products.emplace(t.odd, pair_product(m, n, bound, t.odd)).first;
    out += (schur_neg(t.neg, m, n, bound) * pos * it->second).scaled(c);
  }
  return out;
}

namespace {

KacCharacter formal_from(const Expansion& x, int bound, bool odd) {
  KacCharacter out;
  for (const auto& [g, c] : x.terms()) {
    Integer v = c.eval_one();
    if (v == 0) continue;
    if (!g.is_dominant()) throw std::logic_error("character term outside the dominant cone: " + g.to_string());
    HighestWeight h = f_to_weight(g);
    if (std::accumulate(h.pos.begin(), h.pos.end(), 0) > bound) continue;
    out[KacTerm{h.neg, normalize_partition(h.pos), odd}] += v;
  }
  return out;
}

}  // namespace

KacCharacter formal_super_character(const Weight& f, int bound) {
  if (f.flavor() != Flavor::super || !f.has_tail()) throw std::invalid_argument("expected a profinite super weight");
  if (bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  // A matched value at position j is j - lambda_j >= 1 - bound.
  return formal_from(super_dual_canonical(f, 1 - bound), bound, true);
}

KacCharacter formal_reductive_character(const Weight& f, int bound) {
  if (f.flavor() != Flavor::reductive || !f.has_tail())
    throw std::invalid_argument("expected a profinite reductive weight");
  if (bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  // Terms of positive degree <= bound have prefix length <= bound.
  return formal_from(red_dual_canonical(f, std::max(bound, f.n())), bound, false);
}

SymPoly char_super_irreducible(const Weight& f, int n, int bound) {
  return specialize(formal_super_character(f, bound), f.m(), n, bound);
}

SymPoly char_reductive_irreducible(const Weight& f, int n, int bound) {
  return specialize(formal_reductive_character(f, bound), f.m(), n, bound);
}

}  // namespace superkl
