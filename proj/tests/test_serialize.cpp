#include <doctest.h>

#include "chromsym/errors.hpp"
#include "chromsym/hikita.hpp"
#include "chromsym/modlaw.hpp"
#include "chromsym/serialize.hpp"

using namespace chromsym;

TEST_CASE("polynomials and rational functions") {
  const QPoly p = q_int(3) - q_pow(4).scaled(Rational(2, 3));
  CHECK(to_json(p) == Json::array({"1/1", "1/1", "1/1", "0/1", "-2/3"}));
  CHECK(qpoly_from_json(to_json(p)) == p);
  CHECK(qpoly_from_json(Json::array()) == QPoly());
  const QRat r(q_pow(1), q_int(3));
  CHECK(qrat_from_json(to_json(r)) == r);
  CHECK(to_json(r).contains("num"));
  CHECK(to_json(r).contains("den"));
}

TEST_CASE("symmetric functions") {
  const SymFun f = e_total(HessFn({2, 3, 5, 5, 5}));
  const Json j = to_json(f);
  CHECK(j["degree"] == 5);
  CHECK(j["basis"] == "e");
  CHECK(j["coeffs"].is_array());
  CHECK(symfun_from_json(j) == f);
  const SymFun s = SymFun::s({2, 1});
  CHECK(symfun_from_json(to_json(s)) == s);
  CHECK(symfun_from_json(Json::parse(to_json(f).dump())) == f);
}

TEST_CASE("certificates") {
  const PathCombination c = reduce(HessFn({3, 4, 4, 5, 5}));
  const Json j = to_json(c);
  CHECK(j["n"] == 5);
  CHECK(j["terms"].size() == c.terms().size());
  CHECK(j["terms"][0].contains("paths"));
  CHECK(j["terms"][0].contains("coeff"));
  CHECK(paths_from_json(j) == c);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(qpoly_from_json(Json("1/2")), ParseError);
  CHECK_THROWS_AS(qpoly_from_json(Json::array({"x/2"})), ParseError);
  CHECK_THROWS_AS(qpoly_from_json(Json::array({"1/0"})), ParseError);
  CHECK_THROWS_AS(qrat_from_json(Json::object({{"num", Json::array()}})), ParseError);
  CHECK_THROWS_AS(qrat_from_json(Json::object({{"num", Json::array({"1/1"})}, {"den", Json::array()}})), ParseError);
  CHECK_THROWS_AS(symfun_from_json(Json::object({{"degree", 2}, {"basis", "z"}, {"coeffs", Json::array()}})), ParseError);
  Json wrong = to_json(SymFun::e({2}));
  wrong["coeffs"][0]["partition"] = Json::array({3});
  CHECK_THROWS_AS(symfun_from_json(wrong), ParseError);
  CHECK_THROWS_AS(paths_from_json(Json::object({{"n", 3}})), ParseError);
}
