#pragma once

#include <string>

#include <json.hpp>

#include "superkl/atypicality.hpp"
#include "superkl/characters.hpp"
#include "superkl/duality.hpp"
#include "superkl/expansion.hpp"
#include "superkl/suites.hpp"

namespace superkl {

using Json = nlohmann::json;  // std::map backed, so keys come out sorted

// [[exponent, coefficient], ...] by ascending exponent. Coefficients that do
// not fit in 64 bits are written as decimal strings.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json to_json(const Weight& f);
Weight weight_from_json(const Json& j);

// {"index", "basis": "U"|"L"|"K", "terms": [{"weight", "poly"}], "window"}
Json to_json(const Weight& index, const std::string& basis, const Expansion& x, int window);

Json to_json(const PairSet& s);
Json to_json(const SymPoly& p);
Json to_json(const KlMatchReport& r, const Weight& f);
// Timing is left out so the bytes do not depend on the machine or --jobs.
Json to_json(const SuiteReport& r);

// Plain text tables.
std::string to_text(const Weight& index, const std::string& basis, const Expansion& x);
std::string to_text(const SymPoly& p);
std::string to_text(const SuiteReport& r);

}  // namespace superkl
