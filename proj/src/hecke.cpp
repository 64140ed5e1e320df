#include "superkl/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superkl {

namespace {

const LaurentPoly& q_minus_qinv() {
  static const LaurentPoly p = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  return p;
}

void accumulate(std::map<std::vector<int>, LaurentPoly>& out, const std::vector<int>& key, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

// ---- permutations -------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : w_(std::move(images)) {
  std::vector<int> check = w_;
  std::sort(check.begin(), check.end());
  for (int k = 0; k < static_cast<int>(check.size()); ++k)
    if (check[k] != k) throw std::invalid_argument("not a permutation of 0..N-1");
}

Permutation Permutation::identity(int size) {
  std::vector<int> w(size);
  std::iota(w.begin(), w.end(), 0);
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int size, int i) { return identity(size).times_simple(i); }

int Permutation::length() const { return sequence_length(w_); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int k = 0; k < size(); ++k) inv[w_[k]] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& y) const {
  if (y.size() != size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(w_.size());
  for (int k = 0; k < size(); ++k) out[k] = w_[y(k)];
  return Permutation(std::move(out));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 0 || i + 1 >= size()) throw std::out_of_range("generator index");
  Permutation r = *this;
  std::swap(r.w_[i], r.w_[i + 1]);
  return r;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation x = *this;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i + 1 < size(); ++i) {
      if (x.has_right_descent(i)) {
        word.push_back(i);
        x = x.times_simple(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int sequence_length(const std::vector<int>& g) {
  int inv = 0;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (g[a] > g[b]) ++inv;
  return inv;
}

// ---- Hecke algebra ------------------------------------------------------

HeckeElement hecke_mul_gen(const HeckeElement& h, int i) {
  HeckeElement out;
  auto add = [&](const Permutation& x, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [x, c] : h) {
    add(x.times_simple(i), c);
    if (x.has_right_descent(i)) add(x, c * (-q_minus_qinv()));
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [y, c] : b) {
    HeckeElement part = a;
    for (int i : y.reduced_word()) part = hecke_mul_gen(part, i);
    for (const auto& [x, d] : part) {
      LaurentPoly v = d * c;
      auto [it, inserted] = out.try_emplace(x, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

HeckeElement hecke_bar(const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [x, c] : h) {
    HeckeElement part{{Permutation::identity(x.size()), bar(c)}};
    for (int i : x.reduced_word()) {
      HeckeElement moved = hecke_mul_gen(part, i);
      for (const auto& [y, d] : part) {
        LaurentPoly v = d * q_minus_qinv();
        auto [it, inserted] = moved.try_emplace(y, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) moved.erase(it);
        }
      }
      part = std::move(moved);
    }
    for (const auto& [y, d] : part) {
      auto [it, inserted] = out.try_emplace(y, d);
      if (!inserted) {
        it->second += d;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

// ---- tensor space -------------------------------------------------------

TensorVector tensor_mul_gen(const TensorVector& v, int i) {
  TensorVector out;
  for (const auto& [g, c] : v) {
    if (i < 0 || i + 1 >= static_cast<int>(g.size())) throw std::out_of_range("generator index");
    std::vector<int> swapped = g;
    std::swap(swapped[i], swapped[i + 1]);
    if (g[i] < g[i + 1]) {
      accumulate(out, swapped, c);
    } else if (g[i] == g[i + 1]) {
      accumulate(out, g, c * LaurentPoly::monomial(-1));
    } else {
      accumulate(out, swapped, c);
      accumulate(out, g, c * (-q_minus_qinv()));
    }
  }
  return out;
}

ParabolicModule::ParabolicModule(std::vector<int> base) : base_(std::move(base)) {
  if (!std::is_sorted(base_.begin(), base_.end())) throw std::invalid_argument("base point must be anti-dominant");
  std::vector<int> g = base_;
  do {
    elements_.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const auto& a, const auto& b) { return sequence_length(a) < sequence_length(b); });
  const int N = static_cast<int>(elements_.size());
  for (int k = 0; k < N; ++k) {
    index_[elements_[k]] = k;
    lengths_.push_back(sequence_length(elements_[k]));
  }
  // bar(V_{g' s_i}) = bar(V_{g'}) (H_i + q - q^-1) whenever g'(i) < g'(i+1).
  bar_.assign(N, std::vector<LaurentPoly>(N));
  bar_[0][0] = LaurentPoly::one();
  for (int x = 1; x < N; ++x) {
    const auto& gx = elements_[x];
    int i = 0;
    while (gx[i] <= gx[i + 1]) ++i;
    std::vector<int> shorter = gx;
    std::swap(shorter[i], shorter[i + 1]);
    TensorVector prev;
    for (int y = 0; y < N; ++y)
      if (!bar_[index_.at(shorter)][y].is_zero()) prev[elements_[y]] = bar_[index_.at(shorter)][y];
    TensorVector next = tensor_mul_gen(prev, i);
    for (const auto& [g, c] : prev) accumulate(next, g, c * q_minus_qinv());
    for (const auto& [g, c] : next) bar_[x][index_.at(g)] = c;
  }
}

int ParabolicModule::index_of(const std::vector<int>& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::invalid_argument("sequence is not in the orbit");
  return it->second;
}

TensorVector ParabolicModule::bar(const TensorVector& v) const {
  TensorVector out;
  for (const auto& [g, c] : v) {
    const auto& col = bar_[index_of(g)];
    LaurentPoly cb = superkl::bar(c);
    for (std::size_t y = 0; y < col.size(); ++y)
      if (!col[y].is_zero()) accumulate(out, elements_[y], cb * col[y]);
  }
  return out;
}

std::vector<LaurentPoly> ParabolicModule::kl_column(int x, bool tilde) const {
  const int N = static_cast<int>(elements_.size());
  std::vector<LaurentPoly> m(N);
  m[x] = LaurentPoly::one();
  std::vector<int> done{x};
  for (int y = N - 1; y >= 0; --y) {
    if (lengths_[y] >= lengths_[x]) continue;
    LaurentPoly p;
    for (int z : done)
      if (!bar_[z][y].is_zero()) p += bar_[z][y] * superkl::bar(m[z]);
    m[y] = tilde ? p.negative_part() : p.positive_part();
    if (!m[y].is_zero()) done.push_back(y);
  }
  return m;
}

namespace {

TensorVector tensor_basis(const std::vector<int>& g, bool tilde) {
  std::vector<int> base = g;
  std::sort(base.begin(), base.end());
  ParabolicModule mod(base);
  auto col = mod.kl_column(mod.index_of(g), tilde);
  TensorVector out;
  for (std::size_t y = 0; y < col.size(); ++y)
    if (!col[y].is_zero()) out[mod.elements()[y]] = col[y];
  return out;
}

}  // namespace

TensorVector tensor_canonical(const std::vector<int>& g) { return tensor_basis(g, false); }
TensorVector tensor_dual_canonical(const std::vector<int>& g) { return tensor_basis(g, true); }

Expansion project_H0(const TensorVector& t, int m) {
  Expansion out;
  for (const auto& [g, c] : t) {
    if (m < 0 || m > static_cast<int>(g.size())) throw std::invalid_argument("bad block split");
    Weight raw = Weight::finite(Flavor::reductive, {g.begin(), g.begin() + m}, {g.begin() + m, g.end()});
    if (auto d = dominant_rep(raw)) out.add(d->weight, c * LaurentPoly::monomial(d->qpower, d->sign));
  }
  return out;
}

Expansion oracle_canonical(const Weight& f, LaurentPoly* scalar) {
  if (f.flavor() != Flavor::reductive || f.has_tail() || !f.is_dominant())
    throw std::invalid_argument("oracle needs a finite dominant reductive weight");
  if (f.m() + f.n() > kOracleRankBudget)
    throw std::length_error("oracle budget is m+n <= " + std::to_string(kOracleRankBudget));
  std::vector<int> g(f.neg().rbegin(), f.neg().rend());
  g.insert(g.end(), f.pos().rbegin(), f.pos().rend());
  Expansion raw = project_H0(tensor_canonical(g), f.m());
  LaurentPoly lead = raw.coefficient(f);
  if (lead.terms().size() != 1 || abs(lead.terms().front().second) != 1) throw std::logic_error("oracle leading coefficient is not a unit: " + lead.to_string());
  const auto& [e, c] = lead.terms().front();
  LaurentPoly inv = LaurentPoly::monomial(-e, c);  // c = +-1
  if (scalar) *scalar = lead;
  Expansion out;
  for (const auto& [w, v] : raw.terms()) out.add(w, v * inv);
  return out;
}

}  // namespace superkl
