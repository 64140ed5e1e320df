#include "superkl/truncation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "superkl/atypicality.hpp"

namespace superkl {

int prefix_length(const Weight& f) {
  if (!f.has_tail()) throw std::invalid_argument("prefix_length needs a profinite weight");
  return f.n();
}

int sufficient_n(const Weight& f) {
  if (!f.has_tail()) throw std::invalid_argument("sufficient_n needs a profinite weight");
  const int N = f.n();
  if (f.flavor() == Flavor::super) {
    int n = N;
    for (int v : f.neg())
      if (v > N) n = std::max(n, v);
    return n;
  }
  // At infinite rank every free negative-block value is paired.
  std::set<int> pos_values(f.pos().begin(), f.pos().end());
  int target = 0;
  for (int v : f.neg())
    if (!pos_values.count(v) && v >= 1 - N) ++target;
  const int limit = reductive_work_window(f);
  for (int n = N; n <= limit; ++n)
    if (j_atypicality(f.window(n)) == target) return n;
  throw std::logic_error("J-atypicality did not settle on " + f.to_string());
}

std::optional<Weight> truncate(const Weight& f, int n) {
  if (n < 0) throw std::invalid_argument("negative truncation window");
  if (f.has_tail()) {
    if (f.n() > n) {
      for (int j = n + 1; j <= f.n(); ++j)
        if (f.at(j) != f.tail_value(j)) return std::nullopt;
    }
    return f.window(n);
  }
  if (f.n() < n) throw std::invalid_argument("cannot truncate to a larger window");
  for (int j = n + 1; j <= f.n(); ++j)
    if (f.at(j) != f.tail_value(j)) return std::nullopt;
  return f.window(n);
}

Expansion truncate(const Expansion& x, int n) {
  Expansion out;
  for (const auto& [w, c] : x.terms())
    if (auto t = truncate(w, n)) out.add(*t, c);
  return out;
}

Weight shift_weight(const Weight& f, int p) { return f.shifted(-p); }

Expansion shift_expansion(const Expansion& x, int p) {
  Expansion out;
  for (const auto& [w, c] : x.terms()) out.add(shift_weight(w, p), c);
  return out;
}

int minimal_shift(const Weight& f) {
  if (f.has_tail()) throw std::invalid_argument("minimal_shift applies to finite weights");
  if (f.n() == 0) return 0;
  return std::max(0, f.pos().back() - f.n());
}

}  // namespace superkl
