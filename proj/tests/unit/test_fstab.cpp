#include "circuitlab/error.hpp"
#include "circuitlab/fstab.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <random>
#include <set>

using namespace circuitlab;

namespace {

const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
const Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
const Graph edge(2, {{0, 1}});

// Vertices by brute force: every point of {0,1/2,1}^V passing the rank test.
std::set<RationalVector> vertices_by_grid(const Graph &g) {
  const HPolytope p = build_fstab_polytope(g);
  const std::size_t n = g.node_count();
  std::set<RationalVector> out;
  std::vector<int> c(n, 0);
  for (;;) {
    RationalVector x;
    for (int e : c)
      x.emplace_back(e, 2);
    if (contains(p, x) && oracle::vertex(p, x))
      out.insert(x);
    std::size_t k = 0;
    while (k < n && c[k] == 2)
      c[k++] = 0;
    if (k == n)
      break;
    ++c[k];
  }
  return out;
}

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

// BFS circuit distance over vertices using the enumerated circuits.
std::size_t bfs_distance(const Graph &g, const RationalVector &s, const RationalVector &t) {
  const HPolytope p = build_fstab_polytope(g);
  const auto cs = enumerate_circuits(p);
  const auto d = circuit_distance(p, cs, s, t, 16);
  REQUIRE(d.distance);
  return *d.distance;
}

} // namespace

TEST_CASE("fstab polytope rows") {
  const HPolytope p = build_fstab_polytope(k3);
  CHECK(p.ambient_dim() == 3);
  CHECK(p.equality_count() == 0);
  CHECK(p.inequality_count() == 3 + 3);
  CHECK(p.description_complete());
  CHECK_THROWS_AS(build_fstab_polytope(Graph(3, {{0, 1}})), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
}

TEST_CASE("fstab vertices match the grid oracle") {
  for (const Graph &g : {edge, k3, k4, p5, c5}) {
    const auto v = enumerate_fstab_vertices(g);
    CHECK(std::set<RationalVector>(v.begin(), v.end()) == vertices_by_grid(g));
    CHECK(std::set<RationalVector>(v.begin(), v.end()).size() == v.size());
  }
  const auto kv = enumerate_fstab_vertices(k3);
  CHECK(kv.size() == 5);
  CHECK(std::find(kv.begin(), kv.end(), RationalVector(3, Rational(1, 2))) != kv.end());
  // Bipartite graphs have integral vertices only.
  for (const auto &x : enumerate_fstab_vertices(p5))
    for (const auto &e : x)
      CHECK(e.is_integer());
}

TEST_CASE("is_fstab_circuit examples") {
  CHECK_FALSE(is_fstab_circuit(k3, vec({1, 1, 1})));
  CHECK(is_fstab_circuit(k3, vec({1, 1, -1})));
  CHECK(is_fstab_circuit(k3, vec({1, 0, 0})));
  CHECK(is_fstab_circuit(edge, vec({1, -1})));
  CHECK_FALSE(is_fstab_circuit(edge, vec({1, 1})));
  CHECK_FALSE(is_fstab_circuit(k3, vec({1, 2, 0})));
  CHECK_FALSE(is_fstab_circuit(p5, vec({1, 0, 1, 0, 0})));
  CHECK(is_fstab_circuit(p5, vec({1, -1, 1, 0, 0})));
  CHECK_FALSE(is_fstab_circuit(c5, vec({1, 1, 1, 1, 1})));
  CHECK(is_fstab_circuit(c5, vec({1, -1, 1, -1, 0})));
  for (const RationalVector &v : {vec({1, 1, 1}), vec({1, -1, 0}), vec({0, 1, 1})})
    CHECK(is_fstab_circuit(k3, v) ==
          is_circuit(build_fstab_polytope(k3), v).is_circuit());
}

TEST_CASE("ball decomposition") {
  const auto a = ball_decomposition(k3, 0);
  CHECK(a.eccentricity == 1);
  REQUIRE(a.odd_ball_radius);
  CHECK(*a.odd_ball_radius == 1);
  const auto b = ball_decomposition(p5, 2);
  CHECK(b.eccentricity == 2);
  CHECK_FALSE(b.odd_ball_radius);
  CHECK(b.layers[1] == std::vector<std::size_t>{1, 3});
  const auto c = ball_decomposition(c5, 0);
  CHECK(c.eccentricity == 2);
  REQUIRE(c.odd_ball_radius);
  CHECK(*c.odd_ball_radius == 2);
  CHECK(graph_diameter(k3) == 1);
  CHECK(graph_diameter(p5) == 4);
  CHECK(graph_diameter(c5) == 2);
  CHECK(eccentricity(p5, 0) == 4);
  CHECK(graph_center(p5) == 2);
}

TEST_CASE("fstab walks") {
  const RationalVector half(3, Rational(1, 2));
  const auto same = fstab_walk(k3, half, half, 0);
  CHECK(same.walk.length() == 0);

  const auto w = fstab_walk(k3, zero_vector(3), half, 0);
  CHECK(w.walk.points.back() == half);
  CHECK(validate_walk(build_fstab_polytope(k3), w.walk).ok);
  CHECK(w.walk.length() <= w.bound());

  const auto we = fstab_walk(edge, vec({1, 0}), vec({0, 1}), 0);
  CHECK(we.walk.length() >= bfs_distance(edge, vec({1, 0}), vec({0, 1})));
  CHECK(validate_walk(build_fstab_polytope(edge), we.walk).ok);

  CHECK_THROWS_AS(fstab_walk(k3, vec({1, 1, 0}), half, 0), Error);
  CHECK_THROWS_AS(fstab_walk(k3, vec({Rational(1, 2), 0, 0}), half, 0), Error);
  CHECK_THROWS_AS(fstab_walk(k3, half, half, 3), Error);
}

TEST_CASE("fstab walks on every vertex pair of small graphs") {
  for (const Graph &g : {k4, p5, c5}) {
    const HPolytope p = build_fstab_polytope(g);
    const auto v = enumerate_fstab_vertices(g);
    const std::size_t root = graph_center(g);
    const auto cs = enumerate_circuits(p);
    for (const auto &s : v)
      for (const auto &t : v) {
        const auto w = fstab_walk(g, s, t, root);
        CHECK(w.walk.points.front() == s);
        CHECK(w.walk.points.back() == t);
        CHECK(w.walk.length() <= w.bound());
        CHECK(validate_walk(p, w.walk).ok);
        const auto d = circuit_distance(p, cs, s, t, 16);
        REQUIRE(d.distance);
        CHECK(w.walk.length() >= *d.distance);
      }
  }
}

TEST_CASE("bipartite walks stay integral") {
  const HPolytope p = build_fstab_polytope(p5);
  const auto w = fstab_walk(p5, zero_vector(5), vec({1, 0, 1, 0, 1}), 2);
  for (const auto &x : w.walk.points)
    for (const auto &e : x)
      CHECK(e.is_integer());
  CHECK(validate_walk(p, w.walk).ok);
}

TEST_CASE("graph generators") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    const Graph g = random_connected_graph(6, 0.3, rng);
    CHECK(g.node_count() == 6);
    CHECK(g.is_connected());
  }
  CHECK(connected_graphs_up_to_isomorphism(3).size() == 2);
  CHECK(connected_graphs_up_to_isomorphism(4).size() == 6);
  for (const auto &g : connected_graphs_up_to_isomorphism(4))
    CHECK(g.is_connected());
}
