#include "circuitlab/circuits.hpp"
#include "circuitlab/error.hpp"
#include "circuitlab/families.hpp"
#include "circuitlab/fstab.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace circuitlab;

namespace {

std::set<std::string> keys(const CircuitSet &cs) {
  std::set<std::string> out;
  for (const auto &c : cs)
    out.insert(circuit_key(c.direction));
  return out;
}

// Circuits straight from the definition: kernel vectors of A on a small
// integer grid whose B-image support is minimal among all grid vectors.
std::set<std::string> support_minimal_on_grid(const HPolytope &p, int radius) {
  const std::size_t n = p.ambient_dim();
  std::vector<RationalVector> kernel;
  std::vector<std::uint64_t> supports;
  std::vector<int> c(n, -radius);
  for (;;) {
    RationalVector v(c.begin(), c.end());
    if (!is_zero(v) && is_zero(multiply(p.equalities(), v))) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < p.inequality_count(); ++i)
        if (!dot(p.inequalities().rows[i], v).is_zero())
          s |= std::uint64_t{1} << i;
      kernel.push_back(std::move(v));
      supports.push_back(s);
    }
    std::size_t k = 0;
    while (k < n && c[k] == radius)
      c[k++] = -radius;
    if (k == n)
      break;
    ++c[k];
  }
  std::set<std::string> out;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < kernel.size() && minimal; ++j)
      minimal = !((supports[j] & supports[i]) == supports[j] &&
                  supports[j] != supports[i]);
    if (minimal)
      out.insert(circuit_key(kernel[i]));
  }
  return out;
}

} // namespace

TEST_CASE("canonicalize") {
  CHECK(canonicalize(parse_vector("1/2,-1/2,0")).direction ==
        from_integers({1, -1, 0}));
  CHECK(canonicalize(from_integers({-2, 4})).direction == from_integers({1, -2}));
  CHECK(canonicalize(from_integers({3, 0, 6})).direction ==
        from_integers({1, 0, 2}));
  CHECK_THROWS_AS(canonicalize(zero_vector(3)), Error);
  CHECK(circuit_key(from_integers({-2, 4})) == circuit_key(from_integers({1, -2})));
}

TEST_CASE("is_circuit on matching and perfect matching polytopes") {
  const EdgeIndex i4(4);
  const HPolytope m4 = build_matching_polytope(4);
  CHECK_FALSE(is_circuit(m4, characteristic(i4, make_edge_set({{0, 1}, {2, 3}})))
                  .is_circuit());
  const auto v = is_circuit(m4, subtract(characteristic(i4, make_edge_set({{0, 2}})),
                                         characteristic(i4, make_edge_set({{0, 1}}))));
  CHECK(v.is_circuit());
  CHECK_THROWS_AS(is_circuit(m4, zero_vector(6)), Error);

  const EdgeIndex i8(8);
  const HPolytope p8 = build_perfect_matching_polytope(8);
  const auto m1 = characteristic(i8, make_edge_set({{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  const auto m2 = characteristic(i8, make_edge_set({{0, 3}, {2, 1}, {4, 7}, {6, 5}}));
  CHECK_FALSE(is_circuit(p8, subtract(m2, m1)).is_circuit());
}

TEST_CASE("distinct perfect matchings of K_10 differ by a circuit (sample)") {
  const HPolytope p = build_perfect_matching_polytope(10);
  const auto v = vertex_vectors(EdgeIndex(10), enumerate_perfect_matchings(10));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 150; ++k) {
    const auto &x = v[rng() % v.size()];
    const auto &y = v[rng() % v.size()];
    if (x != y)
      CHECK(is_circuit(p, subtract(y, x)).is_circuit());
  }
}

TEST_CASE("edge-disjoint tours of K_5 do not differ by a circuit") {
  const EdgeIndex idx(5);
  const HPolytope p = build_tsp_polytope(5, false);
  const auto t1 = characteristic(idx, tour_edges({0, 1, 2, 3, 4}));
  const auto t2 = characteristic(idx, tour_edges({0, 2, 4, 1, 3}));
  CHECK_FALSE(is_circuit(p, subtract(t2, t1)).is_circuit());
}

TEST_CASE("incomplete descriptions only certify") {
  const HPolytope p = build_tsp_polytope(7, true);
  const auto v = vertex_vectors(EdgeIndex(7), {tour_edges({0, 1, 2, 3, 4, 5, 6}),
                                               tour_edges({0, 2, 4, 6, 1, 3, 5})});
  CHECK(is_circuit(p, subtract(v[1], v[0])).status == CircuitStatus::Circuit);
  CHECK(is_circuit(p, unit_vector(21, 0)).status == CircuitStatus::NotCircuit);
  CHECK_THROWS_AS(enumerate_circuits(p), Error);

  // Without comb rows this tour difference of K_6 is not certified.
  const auto d = parse_vector("-1,1,1,0,-1,-1,0,1,1,-1,1,0,-1,1,-1");
  CHECK(is_circuit(build_tsp_polytope(6, false), d).status ==
        CircuitStatus::NotCertified);
  CHECK(is_circuit(build_tsp_polytope(6, true), d).status ==
        CircuitStatus::Circuit);
}

TEST_CASE("integer and rational circuit tests agree") {
  const HPolytope p = build_matching_polytope(5);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    std::vector<std::int64_t> g(10);
    for (auto &e : g)
      e = static_cast<std::int64_t>(rng() % 3) - 1;
    if (std::all_of(g.begin(), g.end(), [](auto e) { return e == 0; }))
      continue;
    CHECK(is_circuit(p, g).status == is_circuit(p, from_integers(g)).status);
  }
}

TEST_CASE("enumeration matches support-minimality on a grid") {
  for (const HPolytope &p : {build_matching_polytope(3), build_matching_polytope(4),
                             build_perfect_matching_polytope(4)}) {
    const auto cs = enumerate_circuits(p);
    CHECK(keys(cs) == support_minimal_on_grid(p, 2));
  }
}

TEST_CASE("enumeration matches the support-graph test on small graphs") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto &g : connected_graphs_up_to_isomorphism(n)) {
      const auto cs = enumerate_circuits(build_fstab_polytope(g));
      // Circuits of P_fstab(G) are +-1 vectors up to scaling.
      std::set<std::string> expected;
      std::vector<int> c(n, -1);
      for (;;) {
        RationalVector v(c.begin(), c.end());
        if (!is_zero(v) && is_fstab_circuit(g, v))
          expected.insert(circuit_key(v));
        std::size_t k = 0;
        while (k < n && c[k] == 1)
          c[k++] = -1;
        if (k == n)
          break;
        ++c[k];
      }
      CHECK(keys(cs) == expected);
    }
}

TEST_CASE("circuit certificates and set invariants") {
  const HPolytope p = build_tsp_polytope(5, false);
  const auto cs = enumerate_circuits(p);
  std::set<std::string> seen;
  for (const auto &c : cs) {
    CHECK(c.sign_canonical);
    CHECK(canonicalize(c.direction).direction == c.direction);
    CHECK(is_zero(multiply(p.equalities(), c.direction)));
    std::vector<oracle::Row> rows;
    for (const auto &r : p.equalities().rows)
      rows.push_back(oracle::to_row(r));
    for (std::size_t i : c.certificate) {
      CHECK(dot(p.inequalities().rows[i], c.direction).is_zero());
      rows.push_back(oracle::to_row(p.inequalities().rows[i]));
    }
    CHECK(oracle::rank(rows) + 1 == p.ambient_dim());
    CHECK(seen.insert(circuit_key(c.direction)).second);
    CHECK(cs.contains(scale(c.direction, Rational(-3, 2))));
  }
}

TEST_CASE("enumeration budget") {
  try {
    enumerate_circuits(build_matching_polytope(5), 50);
    FAIL("expected BudgetExceeded");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("nonnegative circuit enumeration") {
  const HPolytope p = build_matching_polytope(4);
  CHECK(is_sign_structured(p));
  RationalMatrix mixed(2);
  for (const auto &r : {from_integers({1, -1}), from_integers({-1, 0}),
                        from_integers({0, -1}), from_integers({1, 1})})
    mixed.push_back(r);
  CHECK_FALSE(is_sign_structured(HPolytope(
      RationalMatrix(2), {}, mixed,
      {Rational(1), Rational(0), Rational(0), Rational(2)},
      {"a", "b", "c", "d"}, true)));
  std::set<std::string> expected;
  for (const auto &c : enumerate_circuits(p)) {
    const bool nonneg = std::all_of(c.direction.begin(), c.direction.end(),
                                    [](const Rational &x) { return x.sign() >= 0; });
    if (nonneg) {
      expected.insert(circuit_key(c.direction));
      CHECK(support(c.direction).size() == 1);
    }
  }
  CHECK(keys(enumerate_nonnegative_circuits(p)) == expected);
  CHECK(expected.size() == 6);
}

TEST_CASE("pairwise report agrees with single tests") {
  const HPolytope p = build_tsp_polytope(5, false);
  std::vector<EdgeSet> sets;
  for (const auto &t : enumerate_tours(5))
    sets.push_back(tour_edges(t));
  const auto v = vertex_vectors(EdgeIndex(5), sets);
  const auto report = pairwise_circuit_report(p, v);
  CHECK(report.size() == v.size() * (v.size() - 1) / 2);
  for (const auto &r : report)
    CHECK(r.status == is_circuit(p, subtract(v[r.j], v[r.i])).status);
}
