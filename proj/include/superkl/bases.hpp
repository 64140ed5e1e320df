#pragma once

#include <vector>

#include "superkl/comb_ops.hpp"
#include "superkl/expansion.hpp"
#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

namespace superkl {

// ---- reductive ----------------------------------------------------------

// Canonical basis vector in the monomial basis: sum over subsets of the
// positive pair set.
Expansion red_canonical(const Weight& f);
// Same vector via the lowering operators, theta in {0,1}^m.
Expansion red_canonical_by_theta(const Weight& f);

struct ChevalleyLetter {
  bool is_E = false;
  int a = 0;
  friend bool operator==(const ChevalleyLetter&, const ChevalleyLetter&) = default;
};
// Builds the vector from a J-typical monomial by a word of Chevalley
// generators. `word`, when given, receives the letters left to right and
// `start` the J-typical weight.
Expansion red_canonical_procedure(const Weight& f, std::vector<ChevalleyLetter>* word = nullptr,
                                  Weight* start = nullptr);

// Coefficient of the canonical vector at `target` in the monomial vector of f.
LaurentPoly red_K_in_U(const Weight& f, const Weight& target);

// All dominant weights whose combined entries equal those of f (finite n).
std::vector<Weight> reductive_block(const Weight& f);

// Dual canonical vector in the monomial basis, and the monomial vector in
// the dual canonical basis. Exact at finite n; a profinite f is evaluated at
// positions 1..max(window, prefix) and terms with longer prefixes are out of
// reach.
Expansion red_dual_canonical(const Weight& f, int window = 0);
Expansion red_K_in_L(const Weight& f, int window = 0);

// ---- super --------------------------------------------------------------

// Canonical vector. Profinite f directly; finite f by shifting into the
// cone f(n) <= n, attaching the tail, computing and truncating back.
Expansion super_canonical(const Weight& f);
// Finite weights only: the lowering formula evaluated at the finite rank.
Expansion super_canonical_direct(const Weight& f);

LaurentPoly super_K_in_U(const Weight& f, const Weight& target);

// Dual canonical vector restricted to terms whose matched values are all
// >= lowest (the full vector lives in a completion).
Expansion super_dual_canonical(const Weight& f, int lowest);
// Finite weights: finite-rank raising operators, same restriction.
Expansion super_dual_canonical_direct(const Weight& f, int lowest);
// Monomial vector in the dual canonical basis (finite sum).
Expansion super_K_in_L(const Weight& f);
// Profinite weights sharing the unmatched entries of f whose matched values
// lie in [lowest, largest matched value of f].
std::vector<Weight> super_block_candidates(const Weight& f, int lowest);

// ---- Kazhdan-Lusztig polynomials ----------------------------------------

// Coefficient of the monomial vector g in the canonical / dual canonical
// vector of f.
LaurentPoly kl_u(const Weight& g, const Weight& f);
LaurentPoly kl_l(const Weight& g, const Weight& f);

}  // namespace superkl
