#include <doctest.h>

#include "drgdesc/errors.hpp"
#include "drgdesc/serialize.hpp"

using namespace drg;

TEST_CASE("rationals") {
  CHECK(to_json(Rational::parse("-6/4")) == "-3/2");
  CHECK(to_json(Rational(5)) == "5/1");
  CHECK(rational_from_json(Json("7/21")) == Rational::parse("1/3"));
  CHECK(rational_from_json(Json(4)) == 4);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InvalidArgument);
}

TEST_CASE("parameter and expanded arrays round-trip") {
  const auto pa = ParameterArray::from_scalars(
      LeonardCase::II, 3,
      {{"h", 1}, {"h*", Rational::parse("1/2")}, {"r1", 7}, {"r2", Rational::parse("-5/3")}, {"s", 1},
       {"s*", Rational::parse("1/3")}, {"theta0", 0},
       {"theta0*", 4}});
  const Json j = to_json(pa);
  CHECK(j["case"] == "II");
  CHECK(j["scalars"]["h*"] == "1/2");
  CHECK(parameter_array_from_json(j) == pa);
  const auto ea = expand(pa);
  CHECK(expanded_array_from_json(Json::parse(to_json(ea).dump())) == ea);
  CHECK_THROWS_AS(parameter_array_from_json(Json{{"case", "II"}}), InvalidArgument);
}

TEST_CASE("graph exchange format") {
  const auto g = johnson(5, 2);
  const Json j = graph_to_json(g);
  CHECK(j["schema"] == kSchema);
  CHECK(j["n"] == 10);
  CHECK(j["intersection_array"]["text"] == "{6,2;1,4}");
  const Graph back = graph_from_json(Json::parse(j.dump()));
  CHECK(back.adj == g.graph().adj);
  CHECK(back.labels == g.graph().labels);

  const Graph bare = graph_from_json(Json{{"n", 3}, {"edges", {{0, 1}, {1, 2}, {0, 2}}}});
  CHECK(bare.edge_count() == 3);
  CHECK_THROWS_AS(graph_from_json(Json{{"edges", Json::array()}}), InvalidArgument);
  CHECK_THROWS_AS(graph_from_json(Json{{"n", 2}, {"edges", {{0, 1, 2}}}}), InvalidArgument);
  CHECK_THROWS_AS(graph_from_json(Json{{"n", 3}, {"labels", {"a"}}, {"edges", Json::array()}}), InvalidArgument);
}

TEST_CASE("verification report") {
  const auto rep = verify_all(hamming(3, 2));
  CHECK(rep.ok());
  const Json j = to_json(rep, false);
  CHECK(j["schema"] == kSchema);
  CHECK(j["enumeration"]["count"] == 27);
  CHECK(j["classical_parameters"]["alpha"] == "0/1");
  for (const auto& c : j["checks"]) {
    CHECK_FALSE(c.contains("seconds"));
    CHECK(c["status"] == "pass");
    CHECK_FALSE(c["anchor"].get<std::string>().empty());
  }
  CHECK(to_json(rep, true)["checks"][0].contains("seconds"));
  CHECK(j.dump() == to_json(verify_all(hamming(3, 2)), false).dump());
  const std::string text = report_text(rep, false);
  CHECK(text.find("OK") != std::string::npos);
}
