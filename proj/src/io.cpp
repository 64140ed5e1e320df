#include "superkl/io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "superkl/errors.hpp"

namespace superkl {

namespace {

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("coefficient must be an integer or a decimal string");
}

std::vector<int> int_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<int> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw ParseError(std::string("non-integer entry in '") + key + "'");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, integer_json(c)}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) throw ParseError("bad polynomial term");
    p += LaurentPoly::monomial(t[0].get<int>(), integer_from_json(t[1]));
  }
  return p;
}

Json to_json(const Weight& f) {
  return Json{{"m", f.m()}, {"flavor", flavor_name(f.flavor())}, {"neg", f.neg()}, {"pos", f.pos()}, {"tail", f.has_tail()}};
}

Weight weight_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("weight must be an object");
  try {
    Flavor fl = parse_flavor(j.at("flavor").get<std::string>());
    auto neg = int_list(j, "neg"), pos = int_list(j, "pos");
    if (j.contains("m") && j.at("m").get<int>() != static_cast<int>(neg.size()))
      throw ParseError("'m' does not match the negative block");
    bool tail = j.value("tail", false);
    return tail ? Weight::profinite(fl, neg, pos) : Weight::finite(fl, neg, pos);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Weight& index, const std::string& basis, const Expansion& x, int window) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back(Json{{"weight", to_json(g)}, {"poly", to_json(c)}});
  return Json{{"index", to_json(index)}, {"basis", basis}, {"terms", terms}, {"window", window}};
}

Json to_json(const PairSet& s) {
  Json out = Json::array();
  auto pairs = s.pairs;
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) out.push_back(Json::array({i, j}));
  return out;
}

Json to_json(const SymPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coefficient", integer_json(c)}});
  return Json{{"m", p.m()}, {"n", p.n()}, {"degree_bound", p.bound()}, {"terms", terms}};
}

Json to_json(const KlMatchReport& r, const Weight& f) {
  return Json{{"weight", to_json(f)}, {"matched", r.matched}, {"mismatches", r.mismatches}};
}

Json to_json(const SuiteReport& r) {
  return Json{{"suite", r.name}, {"cases", r.cases}, {"failed", r.failed}, {"ok", r.ok()},
              {"failures", r.failures}, {"notes", r.notes}};
}

std::string to_text(const Weight& index, const std::string& basis, const Expansion& x) {
  std::ostringstream os;
  os << basis << "_" << index.to_string() << " =\n";
  std::size_t width = 0;
  for (const auto& [g, c] : x.terms()) width = std::max(width, c.to_string().size());
  for (const auto& [g, c] : x.terms())
    os << "  " << std::setw(static_cast<int>(width)) << c.to_string() << "  " << g.to_string() << "\n";
  return os.str();
}

std::string to_text(const SymPoly& p) {
  std::ostringstream os;
  std::vector<std::string> heads;
  for (int k = -p.m(); k <= p.n(); ++k)
    if (k != 0) heads.push_back("x" + std::to_string(k));
  std::vector<std::string> coefs;
  for (const auto& [e, c] : p.terms()) coefs.push_back(c.str());
  std::size_t cw = 5;
  for (const auto& c : coefs) cw = std::max(cw, c.size());
  os << std::setw(static_cast<int>(cw)) << "coeff";
  for (const auto& h : heads) os << " " << std::setw(4) << h;
  os << "\n";
  std::size_t row = 0;
  for (const auto& [e, c] : p.terms()) {
    os << std::setw(static_cast<int>(cw)) << coefs[row++];
    for (int v : e) os << " " << std::setw(4) << v;
    os << "\n";
  }
  return os.str();
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << r.name << ": " << (r.ok() ? "ok" : "FAILED") << ", " << r.cases << " cases, " << r.failed << " failed\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  for (const auto& f : r.failures) os << "  " << f << "\n";
  return os.str();
}

}  // namespace superkl
