#include <doctest.h>

#include "netcheap/json_io.hpp"
#include "test_util.hpp"

using namespace netcheap;

TEST_CASE("graph round trip") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {1, 3}});
  Json j = graph_to_json(g);
  CHECK(j.at("n") == 4);
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(Json::parse(R"({"n": 3, "edges": [[2, 1], [0, 1]]})")) ==
        build_graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("graph validation errors") {
  CHECK_ERROR_CODE(graph_from_json(Json::parse(R"({"edges": []})")), "invalid_json");
  CHECK_ERROR_CODE(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0]]})")), "invalid_json");
  CHECK_ERROR_CODE(graph_from_json(Json::parse(R"({"n": 3, "edges": [["a", 1]]})")), "invalid_json");
  CHECK_ERROR_CODE(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 3]]})")), "out_of_range");
  CHECK_ERROR_CODE(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 1]]})")), "self_loop");
}

TEST_CASE("conference round trip") {
  ConferenceStructure h({NodeSet{0, 1}, NodeSet{1, 2, 3}});
  CHECK(conference_from_json(conference_to_json(h)) == h);
  CHECK_ERROR_CODE(conference_from_json(Json::parse(R"({"hyperedges": [[1]]})")),
                   "invalid_conference");
}

TEST_CASE("polynomial serialization") {
  DeltaPoly p{{1, q(1)}, {2, q(2, 3)}};
  Json j = poly_to_json(p, q(1, 5));
  CHECK(j.at("coeffs").at("2") == "2/3");
  CHECK(j.at("value") == "17/75");
  CHECK(j.at("decimal") == "0.226666666667");
  CHECK(j.at("text") == "d + 2/3*d^2");
  CHECK(poly_from_json(j) == p);
  CHECK_FALSE(poly_to_json(p).contains("value"));
}

TEST_CASE("allocation serialization is keyed by node id") {
  Allocation a;
  a.payoffs[0] = DeltaPoly{{1, q(2)}};
  a.payoffs[3] = DeltaPoly{};
  Json j = allocation_to_json(a);
  CHECK(j.contains("0"));
  CHECK(j.at("3").at("coeffs").empty());
}

TEST_CASE("serialization is deterministic") {
  Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(graph_to_json(g).dump(2) == graph_to_json(g).dump(2));
}
