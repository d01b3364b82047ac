#include "circuitlab/error.hpp"
#include "circuitlab/families.hpp"
#include "circuitlab/walk.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <deque>

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

// Graph distances in the 1-skeleton, from the rank test on common tight rows.
std::vector<std::vector<std::size_t>>
skeleton_distances(const HPolytope &p, const std::vector<RationalVector> &v) {
  const std::size_t n = v.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (oracle::adjacent(p, v[i], v[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, n));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    dist[s][s] = 0;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t w : adj[u])
        if (dist[s][w] == n) {
          dist[s][w] = dist[s][u] + 1;
          q.push_back(w);
        }
    }
  }
  return dist;
}

} // namespace

TEST_CASE("circuit_step") {
  const EdgeIndex idx(4);
  const HPolytope p = build_matching_polytope(4);
  const auto s = circuit_step(p, zero_vector(6), unit_vector(6, 0));
  CHECK(s.alpha == Rational(1));
  CHECK(s.to == characteristic(idx, make_edge_set({{0, 1}})));
  CHECK(code_of([&] { circuit_step(p, s.to, unit_vector(6, 0)); }) ==
        ErrorCode::NoStep);
  CHECK(code_of([&] { circuit_step(p, zero_vector(6), from_integers({1, 0, 0, 0, 0, 1})); }) ==
        ErrorCode::NotACircuit);
  CHECK(code_of([&] { circuit_step(p, from_integers({1, 1, 0, 0, 0, 0}), unit_vector(6, 0)); }) ==
        ErrorCode::NotInPolytope);
  // Scaling the direction does not change where the step lands.
  CHECK(circuit_step(p, zero_vector(6), scale(unit_vector(6, 0), Rational(5, 3))).to ==
        s.to);
}

TEST_CASE("validate_walk rejects broken walks") {
  const EdgeIndex idx(4);
  const HPolytope p = build_matching_polytope(4);
  const EdgeSet m2 = make_edge_set({{0, 1}, {2, 3}});
  const Walk good = matching_component_walk(p, idx, {}, m2);
  CHECK(good.length() == 2);
  CHECK(validate_walk(p, good).ok);

  Walk short_step = good;
  short_step.steps[0].alpha = Rational(1, 2);
  CHECK_FALSE(validate_walk(p, short_step).ok);

  Walk not_circuit = Walk::at(zero_vector(6));
  not_circuit.append({zero_vector(6), characteristic(idx, m2), Rational(1),
                      characteristic(idx, m2)});
  const auto chk = validate_walk(p, not_circuit);
  CHECK_FALSE(chk.ok);
  CHECK(chk.index == 0);

  Walk wrong_point = good;
  wrong_point.points[1] = zero_vector(6);
  CHECK_FALSE(validate_walk(p, wrong_point).ok);

  // A custom certifier is honoured.
  CHECK_FALSE(validate_walk(p, good, [](const RationalVector &) { return false; }).ok);
}

TEST_CASE("one_step and circuit distance agree") {
  const HPolytope p = build_matching_polytope(4);
  const auto v = vertex_vectors(EdgeIndex(4), enumerate_matchings(4));
  const auto cs = enumerate_circuits(p);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j)
        continue;
      const auto d = circuit_distance(p, cs, v[i], v[j]);
      REQUIRE(d.distance);
      CHECK((*d.distance == 1) == one_step(p, v[i], v[j]));
      if (!is_circuit(p, subtract(v[j], v[i])).is_circuit())
        CHECK(*d.distance >= 2);
      REQUIRE(d.witness);
      CHECK(d.witness->length() == *d.distance);
      CHECK(d.witness->points.front() == v[i]);
      CHECK(d.witness->points.back() == v[j]);
      CHECK(validate_walk(p, *d.witness).ok);
    }
  CHECK(*circuit_distance(p, cs, v[0], v[0]).distance == 0);
}

TEST_CASE("circuit distance is at most the skeleton distance") {
  for (const HPolytope &p : {build_matching_polytope(4), build_tsp_polytope(5, false)}) {
    std::vector<RationalVector> v;
    if (p.family()->name == "matching") {
      v = vertex_vectors(EdgeIndex(4), enumerate_matchings(4));
    } else {
      std::vector<EdgeSet> sets;
      for (const auto &t : enumerate_tours(5))
        sets.push_back(tour_edges(t));
      v = vertex_vectors(EdgeIndex(5), sets);
    }
    const auto cs = enumerate_circuits(p);
    const auto skel = skeleton_distances(p, v);
    const auto d = circuit_diameter(p, v, cs);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        CHECK(d.distance[i][j] <= skel[i][j]);
    const auto row = distances_from(p, cs, v[1], v);
    for (std::size_t j = 0; j < v.size(); ++j) {
      REQUIRE(row[j]);
      CHECK(*row[j] == d.distance[1][j]);
    }
  }
}

TEST_CASE("diameter depth limit and incomplete descriptions") {
  const HPolytope p = build_matching_polytope(4);
  const auto v = vertex_vectors(EdgeIndex(4), enumerate_matchings(4));
  const auto cs = enumerate_circuits(p);
  CHECK(circuit_diameter(p, v, cs).diameter == 2);
  CHECK(code_of([&] { circuit_diameter(p, v, cs, 1); }) == ErrorCode::DepthLimit);
  CHECK_FALSE(circuit_distance(p, cs, v.front(), v.back(), 1).distance);

  const HPolytope t = build_tsp_polytope(6, true);
  CHECK(code_of([&] { circuit_distance(t, cs, zero_vector(15), zero_vector(15)); }) ==
        ErrorCode::IncompleteDescription);
}

TEST_CASE("successors are maximal steps inside P") {
  const HPolytope p = build_tsp_polytope(5, false);
  const auto cs = enumerate_circuits(p);
  const auto x = characteristic(EdgeIndex(5), tour_edges({0, 1, 2, 3, 4}));
  const auto next = successors(p, cs, x);
  CHECK_FALSE(next.empty());
  for (const auto &s : next) {
    CHECK(contains(p, s.to));
    CHECK(s.alpha.sign() > 0);
    CHECK(s.to == axpy(x, s.alpha, s.direction));
    CHECK_FALSE(max_step(p, s.to, s.direction).has_value());
  }
}

TEST_CASE("two-step search") {
  const EdgeIndex i8(8);
  const HPolytope p8 = build_perfect_matching_polytope(8);
  const auto all = vertex_vectors(i8, enumerate_perfect_matchings(8));
  const auto x = characteristic(i8, make_edge_set({{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  const auto y = characteristic(i8, make_edge_set({{0, 3}, {2, 1}, {4, 7}, {6, 5}}));
  const auto w = two_step_search(p8, x, y, all);
  REQUIRE(w);
  CHECK(w->length() == 2);
  CHECK(validate_walk(p8, *w).ok);

  // Matching of K_7 contained in the target: pass through M1 plus a joining edge.
  const EdgeIndex i7(7);
  const HPolytope p7 = build_matching_polytope(7);
  const EdgeSet m2 = make_edge_set({{0, 1}, {2, 3}, {4, 5}});
  const auto mid = characteristic(i7, make_edge_set({{0, 2}}));
  const auto w7 = two_step_search(p7, zero_vector(21), characteristic(i7, m2), {mid});
  REQUIRE(w7);
  CHECK(w7->points[1] == mid);
}
