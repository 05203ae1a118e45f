#include <doctest.h>

#include "../fixtures.hpp"
#include "nrack/error.hpp"
#include "nrack/json_io.hpp"

using namespace nrack;
using namespace nrack::testing;
using nrack::json::Json;

TEST_SUITE("json") {

TEST_CASE("tables round-trip") {
  for (const auto& r : {z4_3rack(), conj_s3(), one_element(2)}) {
    const auto j = json::to_json(r);
    CHECK(json::nrack_from_json(j) == r);
    CHECK(json::nrack_from_json(Json::parse(json::dump(j))) == r);
  }
  const auto j = json::to_json(conj_s3());
  CHECK(j.at("basepoint") == 0);
  CHECK(json::to_json(z4_3rack()).at("basepoint").is_null());
  CHECK(json::dump(json::to_json(one_element(2))) ==
        "{\n  \"arity\": 2,\n  \"size\": 1,\n  \"basepoint\": null,\n  \"table\": [\n    0\n  ]\n}\n");
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(json::nrack_from_json(Json::parse(R"({"arity": 2, "size": 2})")), InvalidArgument);
  CHECK_THROWS_AS(json::nrack_from_json(Json::parse(R"({"arity": 2, "size": 2, "table": [0, 1, 1]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(json::nrack_from_json(Json::parse(R"({"arity": 2, "size": 2, "table": [0, 1, 1, -1]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(json::nrack_from_json(Json::parse(R"({"arity": "2", "size": 2, "table": [0, 1, 1, 0]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(json::nrack_from_json(Json::parse("[]")), InvalidArgument);
  CHECK_THROWS_AS(json::read_file("/nonexistent/file.json"), InvalidArgument);
}

TEST_CASE("groups and presentations round-trip") {
  const auto g = symmetric_group(3);
  CHECK(json::group_from_json(json::to_json(g)) == g);
  const GroupPresentation p{2, {{1, 2, -1}, {2, 2}}};
  CHECK(json::presentation_from_json(json::to_json(p)) == p);
  CHECK_THROWS_AS(json::presentation_from_json(Json::parse(R"({"generators": 1, "relators": [[2]]})")),
                  InvalidArgument);
}

TEST_CASE("abelian groups and homology reports") {
  const auto g = AbelianGroupInvariants::from_cyclic_orders(1, {2, 4});
  CHECK(json::to_json(g).dump() == R"({"free_rank":1,"torsion":[2,4]})");
  HomologyResult h{Variant::Quandle, 3, Coefficients::cyclic(3), AbelianGroupInvariants{0, {3}}};
  CHECK(json::to_json(h).dump() ==
        R"({"variant":"Q","degree":3,"coefficients":"Z/3","free_rank":0,"torsion":[3]})");
  AbelianGroupInvariants big{0, {Integer("100000000000000000000")}};
  CHECK(json::to_json(big).dump() == R"({"free_rank":0,"torsion":["100000000000000000000"]})");
}

TEST_CASE("tensors round-trip") {
  const auto l = nambu_bracket_4d();
  const auto j = json::to_json(l);
  CHECK(j.at("constants").size() == 24);
  CHECK(json::algebra_from_json(j) == l);
  const auto k = Json::parse(R"({"dimension": 2, "arity": 2,
      "constants": [{"args": [0, 0], "out": 1, "value": "-3/6"}, {"args": [1, 0], "out": 0, "value": 2}]})");
  const auto a = json::algebra_from_json(k);
  CHECK(a.constant(Index{0, 0}, 1) == Rational(-1, 2));
  CHECK(a.constant(Index{1, 0}, 0) == 2);
  CHECK_THROWS_AS(json::algebra_from_json(Json::parse(
                      R"({"dimension": 2, "arity": 2, "constants": [{"args": [0, 2], "out": 1, "value": "1"}]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(json::algebra_from_json(Json::parse(
                      R"({"dimension": 2, "arity": 2, "constants": [{"args": [0, 0], "out": 1, "value": "0.5"}]})")),
                  InvalidArgument);
}

TEST_CASE("rationals") {
  CHECK(json::parse_rational("4/6") == Rational(2, 3));
  CHECK(json::parse_rational("-7") == -7);
  CHECK(json::parse_rational("+1/2") == Rational(1, 2));
  CHECK_THROWS_AS(json::parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(json::parse_rational("1/2/3"), InvalidArgument);
  CHECK_THROWS_AS(json::parse_rational(""), InvalidArgument);
  CHECK_THROWS_AS(json::parse_rational("1e3"), InvalidArgument);
}

TEST_CASE("operators round-trip") {
  LinearOperator op(2);
  op(0, 1) = Rational(1, 3);
  op(1, 0) = -2;
  CHECK(json::operator_from_json(json::to_json(op)) == op);
  CHECK_THROWS_AS(json::operator_from_json(Json::parse(R"({"dimension": 2, "matrix": [["1", "0"]]})")),
                  InvalidArgument);
}

TEST_CASE("module-group data") {
  const auto j = Json::parse(R"({"arity": 2,
      "h": {"size": 2, "cayley": [0, 1, 1, 0], "identity": 0},
      "bracket": [0, 0, 0, 0],
      "v": {"size": 3, "cayley": [0, 1, 2, 1, 2, 0, 2, 0, 1], "identity": 0},
      "action": [0, 1, 2, 0, 2, 1]})");
  const auto d = json::module_group_from_json(j);
  CHECK(d.h == cyclic_group(2));
  CHECK(d.v == cyclic_group(3));
  const auto res = build_module_group_nrack(d);
  CHECK(res.rack.size() == 6);
}

}  // TEST_SUITE
