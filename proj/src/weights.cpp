#include "superkl/weights.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "superkl/errors.hpp"

namespace superkl {

std::string flavor_name(Flavor f) { return f == Flavor::super ? "super" : "reductive"; }

Flavor parse_flavor(const std::string& s) {
  if (s == "super") return Flavor::super;
  if (s == "reductive") return Flavor::reductive;
  throw ParseError("unknown flavor '" + s + "'");
}

Weight Weight::finite(Flavor flavor, std::vector<int> neg, std::vector<int> pos) {
  Weight w;
  w.flavor_ = flavor;
  w.neg_ = std::move(neg);
  w.pos_ = std::move(pos);
  w.tail_ = false;
  return w;
}

Weight Weight::profinite(Flavor flavor, std::vector<int> neg, std::vector<int> prefix) {
  Weight w;
  w.flavor_ = flavor;
  w.neg_ = std::move(neg);
  w.pos_ = std::move(prefix);
  w.tail_ = true;
  w.normalize_tail();
  return w;
}

void Weight::normalize_tail() {
  while (!pos_.empty() && pos_.back() == tail_value(n())) pos_.pop_back();
}

int Weight::at(int i) const {
  if (i < 0) {
    if (-i > m()) throw std::out_of_range("negative index outside the block");
    return neg_[m() + i];
  }
  if (i == 0) throw std::out_of_range("index 0 is not in I(m|n)");
  if (i <= n()) return pos_[i - 1];
  if (tail_) return tail_value(i);
  throw std::out_of_range("positive index outside the block");
}

void Weight::set(int i, int value) {
  if (i < 0) {
    neg_.at(m() + i) = value;
  } else {
    if (i > n()) throw std::out_of_range("set outside the stored block");
    pos_[i - 1] = value;
  }
}

Weight Weight::window(int n) const {
  if (n < 0) throw std::invalid_argument("negative window");
  std::vector<int> pos;
  pos.reserve(n);
  for (int j = 1; j <= n; ++j) {
    if (j > this->n() && !tail_) throw std::out_of_range("window larger than the finite block");
    pos.push_back(at(j));
  }
  return finite(flavor_, neg_, std::move(pos));
}

Weight Weight::with_tail() const { return profinite(flavor_, neg_, pos_); }

bool Weight::is_conjugate_dominant() const {
  std::vector<int> a = neg_;
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
  std::vector<int> b = pos_;
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  if (tail_) {
    // Prefix values must avoid the tail region.
    for (int v : pos_) {
      if (flavor_ == Flavor::super && v > n()) return false;
      if (flavor_ == Flavor::reductive && v < 1 - n()) return false;
    }
  }
  return true;
}

bool Weight::is_dominant() const {
  for (std::size_t k = 1; k < neg_.size(); ++k)
    if (!(neg_[k - 1] > neg_[k])) return false;
  for (std::size_t k = 1; k < pos_.size(); ++k) {
    if (flavor_ == Flavor::super ? !(pos_[k - 1] < pos_[k]) : !(pos_[k - 1] > pos_[k])) return false;
  }
  if (tail_ && !pos_.empty()) {
    int next = tail_value(n() + 1);
    if (flavor_ == Flavor::super ? !(pos_.back() < next) : !(pos_.back() > next)) return false;
  }
  return true;
}

Weight Weight::dominant() const {
  auto r = dominant_rep(*this);
  if (!r) throw std::invalid_argument("weight " + to_string() + " has a repeated block entry");
  return r->weight;
}

Weight Weight::shifted(int delta) const {
  if (tail_) throw std::invalid_argument("shift applies to finite weights");
  Weight w = *this;
  for (int& v : w.neg_) v += delta;
  for (int& v : w.pos_) v += delta;
  return w;
}

std::vector<int> Weight::pos_values_window(int n) const {
  std::vector<int> v;
  for (int j = 1; j <= n; ++j) v.push_back(at(j));
  return v;
}

int Weight::min_entry() const {
  int r = neg_.empty() ? 0 : *std::min_element(neg_.begin(), neg_.end());
  for (int v : pos_) r = std::min(r, v);
  return r;
}

int Weight::max_entry() const {
  int r = neg_.empty() ? 0 : *std::max_element(neg_.begin(), neg_.end());
  for (int v : pos_) r = std::max(r, v);
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < neg_.size(); ++k) os << (k ? "," : "") << neg_[k];
  os << "|";
  for (std::size_t k = 0; k < pos_.size(); ++k) os << (k ? "," : "") << pos_[k];
  if (tail_) os << (pos_.empty() ? "*" : ",*");
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& tok, const std::string& text) {
  std::string t = trim(tok);
  if (t.empty()) throw ParseError("empty entry in weight '" + text + "'");
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw ParseError("bad entry '" + t + "' in weight '" + text + "'");
  }
  if (used != t.size()) throw ParseError("bad entry '" + t + "' in weight '" + text + "'");
  return v;
}

}  // namespace

Weight parse_weight(const std::string& text, Flavor flavor) {
  auto halves = split(text, '|');
  if (halves.size() != 2) throw ParseError("weight '" + text + "' needs exactly one '|'");
  std::vector<int> neg;
  for (const auto& tok : split(halves[0], ',')) neg.push_back(parse_int(tok, text));
  std::vector<int> pos;
  bool tail = false;
  std::string right = trim(halves[1]);
  if (!right.empty()) {
    auto toks = split(right, ',');
    for (std::size_t k = 0; k < toks.size(); ++k) {
      if (trim(toks[k]) == "*") {
        if (k + 1 != toks.size()) throw ParseError("'*' must come last in '" + text + "'");
        tail = true;
      } else {
        pos.push_back(parse_int(toks[k], text));
      }
    }
  }
  Weight w = tail ? Weight::profinite(flavor, neg, pos) : Weight::finite(flavor, neg, pos);
  if (!w.is_dominant()) throw ParseError("weight '" + text + "' is not dominant for " + flavor_name(flavor));
  return w;
}

namespace {

// Sort to the requested direction by adjacent swaps; returns the number of
// swaps, or -1 on a repeated entry.
int sort_block(std::vector<int>& v, bool decreasing) {
  int inv = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return -1;
      if (decreasing ? v[a] < v[b] : v[a] > v[b]) ++inv;
    }
  if (decreasing)
    std::sort(v.begin(), v.end(), std::greater<>());
  else
    std::sort(v.begin(), v.end());
  return inv;
}

}  // namespace

std::optional<Straightened> dominant_rep(const Weight& raw) {
  std::vector<int> neg = raw.neg();
  std::vector<int> pos = raw.pos();
  int a = sort_block(neg, true);
  int b = sort_block(pos, raw.flavor() == Flavor::reductive);
  if (a < 0 || b < 0) return std::nullopt;
  Straightened s;
  s.weight = raw.has_tail() ? Weight::profinite(raw.flavor(), neg, pos) : Weight::finite(raw.flavor(), neg, pos);
  s.sign = ((a + b) % 2 == 0) ? 1 : -1;
  s.qpower = -(a + b);
  return s;
}

EpsWeight eps_weight(const Weight& f) {
  EpsWeight e;
  bool super = f.flavor() == Flavor::super;
  for (int v : f.neg()) e[v] += 1;
  for (int j = 1; j <= f.n(); ++j) {
    e[f.pos()[j - 1]] += super ? -1 : 1;
    if (f.has_tail()) e[f.tail_value(j)] += super ? 1 : -1;
  }
  for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
  return e;
}

bool HighestWeight::is_dominant() const {
  for (std::size_t k = 1; k < neg.size(); ++k)
    if (neg[k - 1] < neg[k]) return false;
  for (std::size_t k = 1; k < pos.size(); ++k)
    if (pos[k - 1] < pos[k]) return false;
  if (profinite && !pos.empty() && pos.back() < 0) return false;
  return true;
}

Weight weight_to_f(const HighestWeight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight is not dominant");
  const int m = static_cast<int>(lambda.neg.size());
  std::vector<int> neg(m), pos;
  for (int k = 0; k < m; ++k) {
    int i = k - m;
    neg[k] = lambda.neg[k] - i;
  }
  for (std::size_t k = 0; k < lambda.pos.size(); ++k) {
    int j = static_cast<int>(k) + 1;
    pos.push_back(lambda.flavor == Flavor::super ? j - lambda.pos[k] : lambda.pos[k] + 1 - j);
  }
  return lambda.profinite ? Weight::profinite(lambda.flavor, neg, pos) : Weight::finite(lambda.flavor, neg, pos);
}

HighestWeight f_to_weight(const Weight& f) {
  HighestWeight h;
  h.flavor = f.flavor();
  h.profinite = f.has_tail();
  const int m = f.m();
  for (int k = 0; k < m; ++k) h.neg.push_back(f.neg()[k] + (k - m));
  for (int j = 1; j <= f.n(); ++j) {
    int v = f.at(j);
    h.pos.push_back(f.flavor() == Flavor::super ? j - v : v - 1 + j);
  }
  if (h.profinite)
    while (!h.pos.empty() && h.pos.back() == 0) h.pos.pop_back();
  return h;
}

namespace {

bool componentwise_geq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Simple moves: a negative-block value not present on the positive side
// trades places with a smaller positive-block value. Every move lowers one
// negative-block value, so the sorted negative block decreases
// componentwise, which bounds the search.
bool reductive_leq(const Weight& f, const Weight& g, const SearchLimits& limits) {
  int n = f.n();
  if (f.has_tail()) {
    int lo = std::min(*std::min_element(f.neg().begin(), f.neg().end()),
                      *std::min_element(g.neg().begin(), g.neg().end()));
    n = std::max({f.n(), g.n(), 2 - lo, 0});
  } else if (g.n() != n) {
    throw std::invalid_argument("bruhat_leq on different finite blocks");
  }
  Weight F = f.window(n), G = g.window(n);
  std::vector<int> all_f = F.neg(), all_g = G.neg();
  all_f.insert(all_f.end(), F.pos().begin(), F.pos().end());
  all_g.insert(all_g.end(), G.pos().begin(), G.pos().end());
  std::sort(all_f.begin(), all_f.end());
  std::sort(all_g.begin(), all_g.end());
  if (all_f != all_g) return false;
  const std::vector<int> target = sorted_desc(F.neg());
  if (!componentwise_geq(sorted_desc(G.neg()), target)) return false;

  std::set<Weight> seen{G};
  std::deque<Weight> queue{G};
  while (!queue.empty()) {
    Weight h = queue.front();
    queue.pop_front();
    if (h == F) return true;
    std::set<int> pos_values(h.pos().begin(), h.pos().end());
    for (int a = 0; a < h.m(); ++a) {
      int v = h.neg()[a];
      if (pos_values.count(v)) continue;
      for (int b = 0; b < n; ++b) {
        int w = h.pos()[b];
        if (w >= v) continue;
        Weight next = h;
        next.set(a - h.m(), w);
        next.set(b + 1, v);
        auto sorted = dominant_rep(next);  // a repeated entry is not a weight
        if (!sorted) continue;
        next = sorted->weight;
        if (!componentwise_geq(next.neg(), target)) continue;
        if (seen.insert(next).second) {
          if (seen.size() > limits.max_states) throw WindowExhausted("reductive Bruhat search exceeded its state limit");
          queue.push_back(next);
        }
      }
    }
  }
  return false;
}

std::vector<int> atypical_values_desc(const Weight& h) {
  std::set<int> pos_values(h.pos().begin(), h.pos().end());
  std::vector<int> out;
  for (int v : h.neg())
    if (pos_values.count(v)) out.push_back(v);
  return sorted_desc(out);
}

// Super moves: a matched pair (same value on both sides) is lowered by r > 0
// provided the result has no repeated block entries.
bool super_leq(const Weight& f, const Weight& g, const SearchLimits& limits) {
  if (eps_weight(f) != eps_weight(g)) return false;
  int n = f.n();
  if (f.has_tail()) {
    int hi = std::max(*std::max_element(f.neg().begin(), f.neg().end()),
                      *std::max_element(g.neg().begin(), g.neg().end()));
    n = std::max({f.n(), g.n(), hi, 0});
  } else if (g.n() != n) {
    throw std::invalid_argument("bruhat_leq on different finite blocks");
  }
  Weight F = f.window(n), G = g.window(n);
  const std::vector<int> target = atypical_values_desc(F);
  if (atypical_values_desc(G).size() != target.size()) return false;
  if (!componentwise_geq(atypical_values_desc(G), target)) return false;
  const int floor = target.empty() ? 0 : target.back();

  std::set<Weight> seen{G};
  std::deque<Weight> queue{G};
  while (!queue.empty()) {
    Weight h = queue.front();
    queue.pop_front();
    if (h == F) return true;
    for (int a = 0; a < h.m(); ++a) {
      int v = h.neg()[a];
      auto it = std::find(h.pos().begin(), h.pos().end(), v);
      if (it == h.pos().end()) continue;
      int b = static_cast<int>(it - h.pos().begin());
      for (int r = 1; v - r >= floor; ++r) {
        Weight next = h;
        next.set(a - h.m(), v - r);
        next.set(b + 1, v - r);
        auto rep = dominant_rep(next);
        if (!rep) continue;
        if (!componentwise_geq(atypical_values_desc(rep->weight), target)) continue;
        if (seen.insert(rep->weight).second) {
          if (seen.size() > limits.max_states) throw WindowExhausted("super Bruhat search exceeded its state limit");
          queue.push_back(rep->weight);
        }
      }
    }
  }
  return false;
}

}  // namespace

bool bruhat_leq(const Weight& f, const Weight& g, const SearchLimits& limits) {
  if (f.flavor() != g.flavor() || f.m() != g.m() || f.has_tail() != g.has_tail())
    throw std::invalid_argument("bruhat_leq on incompatible weights");
  if (f == g) return true;
  return f.flavor() == Flavor::super ? super_leq(f, g, limits) : reductive_leq(f, g, limits);
}

}  // namespace superkl
