#pragma once

#include <optional>

#include "superkl/expansion.hpp"
#include "superkl/weights.hpp"

namespace superkl {

// Index of the last non-tail entry of a profinite weight.
int prefix_length(const Weight& f);

// Least n with the tail condition beyond n and the (J-)atypicality of the
// window equal to that of f.
int sufficient_n(const Weight& f);

// f^{(n)} when every position past n carries its standard tail value
// (f(j) = j super, 1 - j reductive), otherwise nullopt. Accepts profinite
// weights and finite weights with at least n positive entries.
std::optional<Weight> truncate(const Weight& f, int n);
// Termwise; terms failing the tail condition are dropped.
Expansion truncate(const Expansion& x, int n);

// f - p(1,...,1|1,...,1) on a finite weight.
Weight shift_weight(const Weight& f, int p);
Expansion shift_expansion(const Expansion& x, int p);
// Least p >= 0 with (f - p1)(n) <= n.
int minimal_shift(const Weight& f);

}  // namespace superkl
