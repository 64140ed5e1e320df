#include <doctest.h>

#include "superkl/bases.hpp"
#include "superkl/errors.hpp"
#include "superkl/io.hpp"

using namespace superkl;

TEST_CASE("polynomials encode as sorted pairs") {
  LaurentPoly p = LaurentPoly::monomial(4) + LaurentPoly::monomial(2);
  CHECK(to_json(p).dump() == "[[2,1],[4,1]]");
  CHECK(poly_from_json(to_json(p)) == p);
  LaurentPoly big(Integer(1) << 70);
  CHECK(poly_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(poly_from_json(Json::parse("[[1]]")), ParseError);
}

TEST_CASE("weights round trip through JSON") {
  Weight f = parse_weight("0,-1,-3,-4|-2,-1,0,*", Flavor::super);
  Json j = to_json(f);
  CHECK(j.dump() == R"({"flavor":"super","m":4,"neg":[0,-1,-3,-4],"pos":[-2,-1,0],"tail":true})");
  CHECK(weight_from_json(j) == f);
  CHECK_THROWS_AS(weight_from_json(Json::parse(R"({"flavor":"odd","neg":[],"pos":[]})")), std::exception);
}

TEST_CASE("expansion JSON carries index, basis and terms") {
  Weight f = parse_weight("2,1,0|3,0,-2", Flavor::reductive);
  Json j = to_json(f, "U", red_canonical(f), 0);
  CHECK(j.at("basis") == "U");
  CHECK(j.at("terms").size() == 2);
  CHECK(j.at("terms")[1].at("poly").dump() == "[[0,1]]");
  CHECK(weight_from_json(j.at("index")) == f);
}
