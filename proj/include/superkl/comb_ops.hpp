#pragma once

#include <optional>
#include <vector>

#include "superkl/atypicality.hpp"
#include "superkl/expansion.hpp"
#include "superkl/weights.hpp"

namespace superkl {

using Theta = std::vector<int>;
int theta_norm(const Theta& theta);

// ---- super side -------------------------------------------------------
//
// super_lower / super_raise move the matched entries f(i) = f(j) down / up
// by the least amount keeping f, and every nested move shifted along with
// it, free of repeated block entries. Inputs are finite weights (windows);
// profinite inputs are evaluated on their work window.

Weight super_lower(const Weight& f, int i, int j);
Weight super_raise(const Weight& f, int i, int j);

// Window holding every matched pair of a profinite super weight.
int super_work_window(const Weight& f);

// Composites indexed by the matched pairs of the dominant weight f, pair 1
// carrying the largest value. All return dominant weights.
//   lower_theta:       pair 1 moved first
//   lower_prime_theta: pair k moved first
//   raise_theta:       pair k moved first
//   raise_prime_theta: pair 1 moved first
Weight super_lower_theta(const Weight& f, const Theta& theta);
Weight super_lower_prime_theta(const Weight& f, const Theta& theta);
// Profinite raises are computed on positions 1..window and read back with
// the tail; nullopt when the result does not fit under the tail there.
std::optional<Weight> super_raise_theta(const Weight& f, const Theta& theta, int window = 0);
std::optional<Weight> super_raise_prime_theta(const Weight& f, const Theta& theta, int window = 0);

// ---- reductive side ---------------------------------------------------
//
// Swaps f(i) with f(j) for the pair (i|j) in the positive (lower) or
// negative (raise) pair set of the current, possibly unsorted, weight.

std::optional<Weight> red_lower(const Weight& f, int i);
std::optional<Weight> red_raise(const Weight& f, int i);

// theta[0] belongs to index -m, theta[m-1] to index -1.
//   lower_theta:       index -m first      lower_prime_theta: index -1 first
//   raise_theta:       index -1 first      raise_prime_theta: index -m first
std::optional<Weight> red_lower_theta(const Weight& f, const Theta& theta);
std::optional<Weight> red_lower_prime_theta(const Weight& f, const Theta& theta);
std::optional<Weight> red_raise_theta(const Weight& f, const Theta& theta);
std::optional<Weight> red_raise_prime_theta(const Weight& f, const Theta& theta);

// Swap values across every pair of a subset of the positive pair set, then sort.
Weight f_sigma(const Weight& f, const std::vector<std::pair<int, int>>& pairs);

// Chevalley generators on monomial vectors of reductive weights.
Expansion chevalley_E(int a, const Weight& f);
Expansion chevalley_F(int a, const Weight& f);
Expansion chevalley_E(int a, const Expansion& x);
Expansion chevalley_F(int a, const Expansion& x);

}  // namespace superkl
