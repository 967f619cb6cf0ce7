#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rsdh/json_io.hpp"

using namespace rsdh;
using nlohmann::json;

TEST_CASE("field round-trips and modulus policy") {
  auto f5 = Field::prime_field(5);
  const json j5 = jsonio::field_to_json(*f5);
  CHECK(j5.at("p") == 5);
  CHECK(j5.at("m") == 1);
  CHECK_FALSE(j5.contains("modulus"));
  CHECK(jsonio::field_from_json(j5)->same_as(*f5));

  auto f8 = Field::make(2, 3, {1, 1, 0, 1});
  const json j8 = jsonio::field_to_json(*f8);
  CHECK(j8.at("modulus") == json::array({1, 1, 0, 1}));
  CHECK(jsonio::field_from_json(j8)->same_as(*f8));

  // "m" defaults to 1 when absent.
  CHECK(jsonio::field_from_json(json{{"p", 7}})->q() == 7);
  CHECK_THROWS_AS(jsonio::field_from_json(json{{"m", 2}}), std::exception);
  CHECK_THROWS_AS(jsonio::field_from_json(json{{"p", 6}}), std::invalid_argument);
  // Extension fields must spell out their modulus.
  CHECK_THROWS_AS(jsonio::field_from_json(json{{"p", 3}, {"m", 2}}), std::invalid_argument);
  CHECK(jsonio::field_from_json(json{{"p", 3}, {"m", 2}, {"modulus", {1, 0, 1}}})->q() == 9);
}

TEST_CASE("upoly round-trips ascending coefficients") {
  auto f5 = Field::prime_field(5);
  const UPoly u = parse_upoly(f5, "x^3 + 2x + 1");
  const json j = jsonio::upoly_to_json(u);
  CHECK(j.at("coeffs") == json::array({1, 2, 0, 1}));
  CHECK(jsonio::upoly_from_json(j) == u);
  CHECK(jsonio::upoly_from_json(jsonio::upoly_to_json(UPoly::zero(f5))).is_zero());
  CHECK_THROWS_AS(jsonio::upoly_from_json(json{{"field", json{{"p", 5}}}, {"coeffs", {7}}}),
                  std::invalid_argument);
}

TEST_CASE("mpoly round-trips terms in graded-lex order") {
  auto f7 = Field::prime_field(7);
  const MPoly p = MPoly::monomial(f7, 3, {2, 0, 1}, 4) + MPoly::variable(f7, 3, 2) +
                  MPoly::constant(f7, 3, 6);
  const json j = jsonio::mpoly_to_json(p);
  CHECK(j.at("vars") == 3);
  REQUIRE(j.at("terms").size() == 3);
  // Ascending graded-lex: constant, then x2, then x1^2 x3.
  CHECK(j.at("terms")[0].at("exp") == json::array({0, 0, 0}));
  CHECK(j.at("terms")[1].at("exp") == json::array({0, 1, 0}));
  CHECK(j.at("terms")[2].at("exp") == json::array({2, 0, 1}));
  CHECK(jsonio::mpoly_from_json(j) == p);

  CHECK_THROWS_AS(
      jsonio::mpoly_from_json(json{{"field", json{{"p", 7}}},
                                   {"vars", 2},
                                   {"terms", json::array({json{{"exp", {1}}, {"coeff", 1}}})}}),
      std::invalid_argument);
}

TEST_CASE("code round-trips all three evaluation-set forms") {
  auto f5 = Field::prime_field(5);
  const json jstar = jsonio::code_to_json(*RSCode::standard(f5, 2));
  CHECK(jstar.at("eval_set") == "star");
  CHECK(jsonio::code_from_json(jstar)->flavor() == CodeFlavor::standard);

  const json jfull = jsonio::code_to_json(*RSCode::extended(f5, 2));
  CHECK(jfull.at("eval_set") == "full");
  CHECK(jsonio::code_from_json(jfull)->flavor() == CodeFlavor::extended);

  auto gen = RSCode::make(f5, {4, 1, 2}, 1);
  const json jgen = jsonio::code_to_json(*gen);
  CHECK(jgen.at("eval_set") == json::array({4, 1, 2}));
  auto back = jsonio::code_from_json(jgen);
  CHECK(back->same_as(*gen));
  CHECK(back->eval_set() == gen->eval_set());
}

TEST_CASE("tail and subset instances round-trip") {
  auto f7 = Field::prime_field(7);
  const MonicTail t{2, 3, {1, 0, 5}};
  const json jt = jsonio::tail_to_json(t, *f7);
  const auto [t2, f2] = jsonio::tail_from_json(jt);
  CHECK(t2.k == 2);
  CHECK(t2.d == 3);
  CHECK(t2.lows == t.lows);
  CHECK(f2->same_as(*f7));
  // The tail serializes the full monic polynomial's data.
  CHECK(jt.at("coeffs") == json::array({1, 0, 5}));

  const SubsetSumInstance inst{f7, {1, 2, 4}, 3, 2};
  const SubsetSumInstance inst2 =
      jsonio::subset_instance_from_json(jsonio::subset_instance_to_json(inst));
  CHECK(inst2.set == inst.set);
  CHECK(inst2.target == 3);
  CHECK(inst2.size == 2);
  CHECK(inst2.field->same_as(*f7));
}

TEST_CASE("big integers fall back to decimal strings") {
  CHECK(jsonio::bigint_to_json(BigInt(42)) == json(42));
  CHECK(jsonio::bigint_to_json(BigInt(-7)) == json(-7));
  const BigInt huge = BigInt("123456789012345678901234567890");
  const json j = jsonio::bigint_to_json(huge);
  REQUIRE(j.is_string());
  CHECK(j.get<std::string>() == "123456789012345678901234567890");
  CHECK(jsonio::bigint_to_json(BigInt(INT64_MAX)) == json(INT64_MAX));
}

TEST_CASE("reports serialize their decision fields") {
  const BoundReport r = theorem_margin(401, 2, 1, MarginVariant::published);
  const json j = jsonio::bound_report_to_json(r);
  CHECK(j.at("margin") == 4812);
  CHECK(j.at("applies") == true);
  CHECK(j.at("variant") == "published");
  CHECK(j.at("terms").at("main") == 160801);
  CHECK(j.at("terms").at("weil") == 0);
  CHECK(j.at("terms").at("d_13_3") == 2005);
  CHECK(j.at("terms").at("common_zero") == 153984);

  auto f5 = Field::prime_field(5);
  auto code = RSCode::standard(f5, 2);
  const auto v = code->distance_to_code(code->word_from_poly(parse_upoly(f5, "x^2")),
                                        DistanceOracle::codeword_enumeration);
  const json jv = jsonio::verdict_to_json(v);
  CHECK(jv.at("deep_hole") == true);
  CHECK(jv.at("distance") == 2);
  CHECK(jv.at("max_agreement") == 2);
  CHECK(jv.at("witness") == json::array({1}));
}
