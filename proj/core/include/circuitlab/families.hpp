#pragma once

#include "circuitlab/walk.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace circuitlab {

using Edge = std::pair<std::size_t, std::size_t>;
// Edges of K_n with first < second, kept sorted.
using EdgeSet = std::vector<Edge>;
// Hamiltonian cycle as a node sequence starting at node 0.
using Tour = std::vector<std::size_t>;

// Lexicographic numbering of the edges {i, j}, i < j, of K_n.
class EdgeIndex {
public:
  explicit EdgeIndex(std::size_t n);

  std::size_t nodes() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  std::size_t index(std::size_t i, std::size_t j) const;
  const Edge &edge(std::size_t k) const { return edges_[k]; }

private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_;
};

EdgeSet make_edge_set(std::vector<Edge> edges);
RationalVector characteristic(const EdgeIndex &idx, const EdgeSet &edges);
// Edges whose coordinate is nonzero.
EdgeSet edges_of(const EdgeIndex &idx, const RationalVector &x);
EdgeSet tour_edges(const Tour &tour);

HPolytope build_matching_polytope(std::size_t n);
HPolytope build_perfect_matching_polytope(std::size_t n);
// Complete (and flagged so) exactly when n <= 5.
HPolytope build_tsp_polytope(std::size_t n, bool include_combs);

std::vector<EdgeSet> enumerate_matchings(std::size_t n);
std::vector<EdgeSet> enumerate_perfect_matchings(std::size_t n);
// One tour per cycle: starts at 0 and second node < last node, which is the
// lexicographically least rotation/reflection.
std::vector<Tour> enumerate_tours(std::size_t n);

std::vector<RationalVector> vertex_vectors(const EdgeIndex &idx,
                                           const std::vector<EdgeSet> &sets);

struct Component {
  enum class Kind { Trivial, Path, Cycle };
  Kind kind = Kind::Trivial;
  std::vector<std::size_t> nodes;
  EdgeSet edges;
};

const char *to_string(Component::Kind k);

// Components of (V, M1 xor M2), trivial ones included.
std::vector<Component> symmetric_difference_components(std::size_t n,
                                                       const EdgeSet &m1,
                                                       const EdgeSet &m2);
std::size_t nontrivial_component_count(const std::vector<Component> &cs);

// Walk M1 -> M2 that switches one nontrivial component per step.
Walk matching_component_walk(const HPolytope &p, const EdgeIndex &idx,
                             const EdgeSet &m1, const EdgeSet &m2);

// Walk of length <= 2 between two matchings of K_n, n >= 7, by the
// direct-circuit / common-neighbour case analysis. Throws ConstructionFailed.
Walk matching_two_step_recipe(const HPolytope &p, const EdgeIndex &idx,
                              const EdgeSet &m1, const EdgeSet &m2);

struct DistanceBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  Walk witness; // a walk of length upper
};

// Bounds on cdist(chi(m1), chi(m2)) without enumerating all circuits. The
// upper bound is a constructed walk; the lower bound uses the circuit test on
// the difference and, from the empty matching, the nonnegative first steps.
DistanceBounds matching_distance_bounds(const HPolytope &p, const EdgeIndex &idx,
                                        const EdgeSet &m1, const EdgeSet &m2);

} // namespace circuitlab
