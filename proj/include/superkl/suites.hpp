#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "superkl/characters.hpp"
#include "superkl/weights.hpp"

namespace superkl {

struct SuiteOptions {
  int jobs = 1;  // 1 runs the serial reference path
  std::uint64_t seed = 0;
  int m = 2;           // duality sweep rank
  int range = 5;       // duality sweep entries in [-range, range]
  int max_prefix = 6;  // duality sweep prefix bound
  int max_rank = 4;    // oracle sweep: m + n <= max_rank
  int oracle_range = 3;
  int jantzen_rank = 5;
  int jantzen_range = 3;
  int samples = 200;         // truncation samples per flavor
  int bruhat_pairs = 500;
  int structure_cases = 10000;
  std::size_t max_states = SearchLimits{}.max_states;  // Bruhat search bound
};

struct SuiteReport {
  std::string name;
  long cases = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few counterexamples
  std::vector<std::string> notes;
  double seconds = 0;
  bool ok() const { return failed == 0 && cases > 0; }
};

// ---- enumeration --------------------------------------------------------

// Dominant profinite reductive weights with non-tail entries in [lo, hi] and
// prefix length <= max_prefix.
std::vector<Weight> all_reductive_profinite(int m, int lo, int hi, int max_prefix);
// Dominant finite weights with all entries in [lo, hi].
std::vector<Weight> all_finite(Flavor flavor, int m, int n, int lo, int hi);

// Runs check(k) for k in [0, count), in parallel when jobs > 1. Failure
// messages come back in index order, so output does not depend on jobs.
// WindowExhausted is not a failed check: the first one by index is rethrown.
SuiteReport run_cases(const std::string& name, std::size_t count, int jobs,
                      const std::function<std::vector<std::string>(std::size_t)>& check);

// ---- independent references ---------------------------------------------

// Hook Schur polynomial HS_lambda(x_{-m..-1}; x_{1..n}) by enumerating
// (m|n)-semistandard tableaux.
SymPoly hook_schur_tableaux(const Partition& lambda, int m, int n);

// ---- suites -------------------------------------------------------------

SuiteReport suite_golden_super();
SuiteReport suite_golden_reductive();
SuiteReport suite_golden_dual();
SuiteReport suite_golden();  // all worked examples
SuiteReport suite_duality(const SuiteOptions& o);
SuiteReport suite_oracle(const SuiteOptions& o);
SuiteReport suite_inversion(const SuiteOptions& o);
SuiteReport suite_truncation(const SuiteOptions& o);
SuiteReport suite_bruhat(const SuiteOptions& o);
SuiteReport suite_typicality(const SuiteOptions& o);
SuiteReport suite_characters(const SuiteOptions& o);
SuiteReport suite_structure(const SuiteOptions& o);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace superkl
