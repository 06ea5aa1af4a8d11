#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "iwtower/io.hpp"

using namespace iwtower;

namespace {

SpecErrorCode error_of(const std::string& text) {
  try {
    parse_graph_spec(text);
  } catch (const SpecError& e) {
    return e.code();
  }
  FAIL("spec parsed without error: " << text);
  return SpecErrorCode::malformed_json;
}

}  // namespace

TEST_CASE("parse a one-loop spec") {
  const GraphSpec s = parse_graph_spec(R"({"p": 2, "d": 1, "vertices": ["a"], "edges": [{"src": "a", "dst": "a", "voltage": [1]}]})");
  CHECK(s.p == 2);
  CHECK(s.d == 1);
  CHECK_FALSE(s.undirected);
  CHECK(s.graph.vertex_count() == 1);
  CHECK(s.graph.edge_count() == 1);
  CHECK(s.voltage.values[0] == ExponentVector{1});
  CHECK(adjacency_matrix(s.graph) == IntMatrix(1, 1, std::vector<Integer>{1}));
}

TEST_CASE("error codes") {
  CHECK(error_of("{not json") == SpecErrorCode::malformed_json);
  CHECK(error_of(R"({"p": 2, "d": 1, "vertices": ["a"], "edges": [{"src": "a", "dst": "z", "voltage": [0]}]})") ==
        SpecErrorCode::unknown_vertex);
  CHECK(error_of(R"({"p": 2, "d": 2, "vertices": ["a"], "edges": [{"src": "a", "dst": "a", "voltage": [0]}]})") ==
        SpecErrorCode::voltage_arity);
  CHECK(error_of(R"({"p": 4, "d": 1, "vertices": ["a"], "edges": []})") == SpecErrorCode::invalid_field);
  CHECK(parse_graph_spec(R"({"p": 2, "d": 1, "vertices": [], "edges": []})").graph.vertex_count() == 0);
  CHECK(error_of(R"({"p": 2, "d": 1, "vertices": ["a", "a"], "edges": []})") == SpecErrorCode::invalid_field);
  const SpecError e(SpecErrorCode::voltage_arity, "x");
  CHECK(std::string(e.code_name()) == "voltage_arity");
  CHECK(static_cast<int>(e.code()) == 13);
}

TEST_CASE("undirected specs double each edge with negated voltage") {
  const GraphSpec s = fixture("triangle_undirected");
  CHECK(s.undirected);
  REQUIRE(s.graph.edge_count() == 6);
  for (std::size_t k = 0; k < 3; ++k) {
    const Edge& fwd = s.graph.edge(2 * k);
    const Edge& back = s.graph.edge(2 * k + 1);
    CHECK(fwd.src == back.dst);
    CHECK(fwd.dst == back.src);
    CHECK(s.voltage.values[2 * k + 1][0] == -s.voltage.values[2 * k][0]);
  }
  const IntMatrix a = adjacency_matrix(s.graph);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a(i, j) == a(j, i));
}

TEST_CASE("serialization is canonical and round-trips") {
  for (const auto& entry : std::filesystem::directory_iterator(IWTOWER_FIXTURE_DIR)) {
    const std::string name = entry.path().stem().string();
    CAPTURE(name);
    const GraphSpec s = fixture(name);
    const std::string once = serialize_graph_spec(s);
    const GraphSpec back = parse_graph_spec(once);
    CHECK(serialize_graph_spec(back) == once);
    CHECK(back.p == s.p);
    CHECK(back.d == s.d);
    CHECK(back.undirected == s.undirected);
    CHECK(adjacency_matrix(back.graph) == adjacency_matrix(s.graph));
    CHECK(back.voltage.values == s.voltage.values);
  }
}

TEST_CASE("JSON of groups and polynomials") {
  const GraphSpec ub = fixture("unbounded_bf");
  const Json g = to_json(picard_group(ub.graph));
  CHECK(g["rank"] == 1);
  const Json f = to_json(p_adic_zeta(ub.graph, ub.voltage));
  CHECK(laurent_from_json(f, 1) == p_adic_zeta(ub.graph, ub.voltage));
  const Json m = to_json(adjacency_matrix(ub.graph));
  // Entries are decimal strings so that large integers survive.
  CHECK(m.dump() == R"([["2","2","0"],["1","1","1"],["1","2","1"]])");
}
