#include "circuitlab/error.hpp"
#include "circuitlab/families.hpp"
#include "circuitlab/io.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace circuitlab;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("rational strings") {
  CHECK(Rational::parse("3/6").to_string() == "1/2");
  CHECK(Rational::parse("-4/2").to_string() == "-2");
  CHECK(Rational::parse("0").is_zero());
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::Parse);
  CHECK(code_of([] { Rational::parse("x"); }) == ErrorCode::Parse);
}

TEST_CASE("polytope JSON round trip") {
  for (const HPolytope &p : {build_matching_polytope(4), build_perfect_matching_polytope(6),
                             build_tsp_polytope(6, true)}) {
    const std::string text = polytope_to_json(p);
    const HPolytope q = polytope_from_json(text);
    CHECK(q.ambient_dim() == p.ambient_dim());
    CHECK(q.labels() == p.labels());
    CHECK(q.equalities().rows == p.equalities().rows);
    CHECK(q.inequalities().rows == p.inequalities().rows);
    CHECK(q.inequality_rhs() == p.inequality_rhs());
    CHECK(q.description_complete() == p.description_complete());
    REQUIRE(q.family());
    CHECK(q.family()->name == p.family()->name);
    CHECK(polytope_to_json(q) == text);
  }
}

TEST_CASE("hand-written H-rep") {
  const HPolytope p = polytope_from_json(R"({
    "ambient_dim": 2,
    "inequalities": [
      {"coeffs": ["-1", 0], "rhs": 0},
      {"coeffs": [0, -1], "rhs": 0},
      {"coeffs": ["1/2", "1/2"], "rhs": "1"}
    ]
  })");
  CHECK(p.inequality_count() == 3);
  CHECK_FALSE(p.description_complete());
  CHECK(p.inequality_label(2) == "ineq 2");
  CHECK(contains(p, from_integers({2, 0})));
  CHECK_FALSE(contains(p, from_integers({2, 1})));
  CHECK(code_of([] { polytope_from_json("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { polytope_from_json(R"({"inequalities": []})"); }) == ErrorCode::Parse);
  CHECK(code_of([] {
          polytope_from_json(R"({"ambient_dim": 2, "inequalities": [{"coeffs": [1], "rhs": 0}]})");
        }) != ErrorCode::InvariantViolated);
}

TEST_CASE("graph parsing") {
  const Graph a = graph_from_text("# triangle\n0 1\n1 2\n\n2 0\n");
  CHECK(a.node_count() == 3);
  CHECK(a.edge_count() == 3);
  CHECK(a.has_edge(2, 0));
  const Graph b = graph_from_text(R"({"n": 4, "edges": [[0,1],[1,2],[2,3]]})");
  CHECK(b.node_count() == 4);
  CHECK(b.has_edge(3, 2));
  const Graph c = graph_from_text(graph_to_json(b));
  CHECK(c.edges() == b.edges());
  CHECK(code_of([] { graph_from_text("0 1\n2\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { graph_from_text(R"({"n": 2})"); }) == ErrorCode::Parse);
}

TEST_CASE("walk, vertex and circuit JSON") {
  const EdgeIndex idx(4);
  const HPolytope p = build_matching_polytope(4);
  const Walk w = matching_component_walk(p, idx, {}, make_edge_set({{0, 1}, {2, 3}}));
  const auto j = nlohmann::json::parse(walk_to_json(w));
  CHECK(j["length"] == 2);
  CHECK(j["points"].size() == 3);
  CHECK(j["steps"][0]["alpha"] == "1");

  const auto v = vertex_vectors(idx, enumerate_matchings(4));
  CHECK(vertices_from_json(vertices_to_json(v)) == v);

  const auto cs = enumerate_circuits(p);
  const auto c = nlohmann::json::parse(circuits_to_json(p, cs));
  CHECK(c["count"] == cs.size());
  CHECK(c["circuits"].size() == cs.size());
}
