#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operalg/json_io.hpp"

using namespace operalg;

TEST_CASE("laurent series round trip") {
  // Finite window.
  LaurentSeries w = LaurentSeries::from_window(
      -2, 3, {Rat(1, 3), Rat(0), Rat(-7), Rat(2), Rat(5, 2)});
  LaurentSeries back = laurent_from_json(laurent_to_json(w));
  CHECK(back.identical(w));

  // Exact polynomial: null precision in the payload.
  LaurentSeries p = LaurentSeries::polynomial(-1, {Rat(2), Rat(0), Rat(1)});
  Json jp = laurent_to_json(p);
  CHECK(jp["precision"].is_null());
  CHECK(laurent_from_json(jp).identical(p));

  // Exact zero.
  LaurentSeries z;
  CHECK(laurent_from_json(laurent_to_json(z)).identical(z));

  // Rationals travel as strings, immune to overflow.
  LaurentSeries big = LaurentSeries::monomial(
      parse_rational("123456789012345678901234567890/7"), 4);
  CHECK(laurent_from_json(laurent_to_json(big)).identical(big));
}

TEST_CASE("laurent series input validation") {
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"coeffs": []})")),
                  InputError);
  CHECK_THROWS_AS(
      laurent_from_json(Json::parse(
          R"({"valuation": 0, "precision": 1, "coeffs": ["1", "2"]})")),
      InputError);
  CHECK_THROWS_AS(
      laurent_from_json(Json::parse(
          R"({"valuation": 0, "precision": null, "coeffs": ["x"]})")),
      InputError);
}

TEST_CASE("q-series round trip with big coefficients") {
  QSeries s(5);
  s[0] = 1;
  s[3] = Int("99999999999999999999999999999999");
  s[4] = -12;
  QSeries back = qseries_from_json(qseries_to_json(s));
  CHECK(back == s);
}

TEST_CASE("canonical oper round trip") {
  CanonicalOper c;
  c.type = "A2";
  c.coords = {LaurentSeries::monomial(Rat(2), -2),
              LaurentSeries::from_window(-3, 2, {Rat(1), Rat(0), Rat(0), Rat(4), Rat(1, 2)})};
  CanonicalOper back = canonical_from_json(canonical_to_json(c));
  CHECK(back.type == c.type);
  REQUIRE(back.coords.size() == 2);
  CHECK(back.coords[0].identical(c.coords[0]));
  CHECK(back.coords[1].identical(c.coords[1]));

  // Wrong coordinate count for the type.
  Json bad = canonical_to_json(c);
  bad["coords"].erase(1);
  CHECK_THROWS_AS(canonical_from_json(bad), InputError);
}

TEST_CASE("connection round trip") {
  const LieBasis& lb = LieBasis::get("A2");
  LoopElement v;
  v.lb = &lb;
  v.add_term(lb.e_index(1), LaurentSeries::monomial(Rat(3), -1));
  v.add_term(lb.h_index(0), LaurentSeries::polynomial(0, {Rat(1), Rat(1)}));
  OperConnection op = make_oper(lb, v);
  OperConnection back = connection_from_json(connection_to_json(op));
  CHECK(back.lb == op.lb);
  CHECK((back.v - op.v).is_zero());

  // Lowering components are rejected on input.
  Json j = connection_to_json(op);
  j["v"]["f[1,0]"] = laurent_to_json(LaurentSeries::constant(Rat(1)));
  CHECK_THROWS_AS(connection_from_json(j), InputError);
}

TEST_CASE("cartan connection round trip") {
  CartanConnection c = make_cartan_connection(
      "A2", {LaurentSeries::monomial(Rat(-1), -1),
             LaurentSeries::from_window(0, 4, {Rat(1), Rat(2), Rat(3), Rat(4)})});
  CartanConnection back =
      cartan_connection_from_json(cartan_connection_to_json(c));
  CHECK(back.type == "A2");
  REQUIRE(back.u.size() == 2);
  CHECK(back.u[0].identical(c.u[0]));
  CHECK(back.u[1].identical(c.u[1]));
}

TEST_CASE("coweight round trip and validation") {
  Coweight w{{2, 0}};
  CHECK(coweight_from_json(coweight_to_json(w)) == w);
  CHECK_THROWS_AS(coweight_from_json(Json::parse(R"({"lambda": "x"})")),
                  InputError);
}

TEST_CASE("membership form serialization shape") {
  const LieBasis& lb = LieBasis::get("A1");
  LoopElement v;
  v.lb = &lb;
  v.add_term(lb.e_index(0), LaurentSeries::monomial(Rat(5), -1));
  auto r = to_lambda_nilpotent(make_oper(lb, v), Coweight{{0}});
  REQUIRE(r.member());
  Json j = form_to_json(*r.form);
  CHECK(j["type"] == "A1");
  CHECK(j["lambda"] == Json::array({0}));
  CHECK(j["residue"].size() == 1);
}

TEST_CASE("oper input dispatch") {
  // "coords" payloads embed the canonical representative.
  CanonicalOper c;
  c.type = "A1";
  c.coords = {LaurentSeries::monomial(Rat(2), -2)};
  OperConnection op1 = oper_input_from_json(canonical_to_json(c));
  CHECK(agrees(reduce_to_canonical(op1).coords[0], c.coords[0]));

  // "v" payloads parse as connections.
  const LieBasis& lb = LieBasis::get("A1");
  LoopElement v;
  v.lb = &lb;
  v.add_term(lb.h_index(0), LaurentSeries::monomial(Rat(1), -1, 9));
  OperConnection op2 = oper_input_from_json(connection_to_json(make_oper(lb, v)));
  CHECK(op2.v.find(lb.h_index(0)) != nullptr);

  CHECK_THROWS_AS(oper_input_from_json(Json::parse(R"({"type": "A1"})")),
                  InputError);
}
