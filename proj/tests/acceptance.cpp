// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
//   acceptance [--jobs N]

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "superkl/suites.hpp"

using namespace superkl;

namespace {

struct Line {
  int id;
  const char* what;
  double limit;  // seconds, 0 for none
};

bool report(const Line& line, const SuiteReport& r) {
  bool ok = r.ok() && (line.limit <= 0 || r.seconds < line.limit);
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << r.seconds << " s";
  std::cout << (ok ? "PASS" : "FAIL") << " " << line.id << " " << line.what << ": " << r.cases << " cases, " << r.failed
            << " failed, " << t.str();
  if (line.limit > 0) std::cout << " (limit " << line.limit << " s)";
  std::cout << "\n";
  for (const auto& n : r.notes) std::cout << "    " << n << "\n";
  for (const auto& f : r.failures) std::cout << "    " << f << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions o;
  for (int k = 1; k + 1 < argc; ++k)
    if (std::strcmp(argv[k], "--jobs") == 0) o.jobs = std::atoi(argv[k + 1]);
  bool all = true;
  all &= report({1, "super worked example", 1}, suite_golden_super());
  all &= report({2, "reductive worked example, three routes", 10}, suite_golden_reductive());
  all &= report({3, "dual worked example", 1}, suite_golden_dual());
  all &= report({4, "duality sweep m=2, entries [-5,5], prefix <= 6", 60}, suite_duality(o));
  all &= report({5, "oracle sweep m+n <= 4, entries [-3,3]", 60}, suite_oracle(o));
  all &= report({6, "inversion identities", 0}, suite_inversion(o));
  all &= report({7, "truncation laws, 200 samples per flavor", 0}, suite_truncation(o));
  all &= report({8, "Bruhat correspondence, 500 pairs", 0}, suite_bruhat(o));
  all &= report({9, "Jantzen criterion vs J-typicality, m+n <= 5", 0}, suite_typicality(o));
  all &= report({10, "characters m=n=2", 30}, suite_characters(o));
  all &= report({11, "structural invariants, 10^4 cases", 0}, suite_structure(o));
  return all ? 0 : 1;
}
