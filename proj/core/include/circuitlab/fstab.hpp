#pragma once

#include "circuitlab/walk.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace circuitlab {

// Simple undirected graph on nodes 0..n-1.
class Graph {
public:
  Graph() = default;
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted, first < second.
  const std::vector<std::pair<std::size_t, std::size_t>> &edges() const {
    return edges_;
  }
  const std::vector<std::size_t> &neighbors(std::size_t u) const {
    return adj_[u];
  }
  bool has_edge(std::size_t u, std::size_t v) const;
  bool is_connected() const;
  // BFS distances from u.
  std::vector<std::size_t> distances(std::size_t u) const;

private:
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

struct BallDecomposition {
  std::size_t root = 0;
  std::vector<std::vector<std::size_t>> layers; // N(v, 0..eccentricity)
  std::vector<std::size_t> layer_of;
  std::size_t eccentricity = 0;
  // Smallest k with B(v, k) inducing a non-bipartite graph; absent when G is
  // bipartite.
  std::optional<std::size_t> odd_ball_radius;
};

BallDecomposition ball_decomposition(const Graph &g, std::size_t root);
std::size_t eccentricity(const Graph &g, std::size_t v);
std::size_t graph_diameter(const Graph &g);
// A node of minimum eccentricity (smallest index on ties).
std::size_t graph_center(const Graph &g);

HPolytope build_fstab_polytope(const Graph &g);
// All vertices, found by scanning {0, 1/2, 1}^V (n <= 14).
std::vector<RationalVector> enumerate_fstab_vertices(const Graph &g);

// Support graph test: nodes supp(c), edges uv of G with c_u + c_v = 0.
bool is_fstab_circuit(const Graph &g, const RationalVector &c);

inline constexpr std::size_t kWalkConstant = 16;

struct FstabWalk {
  Walk walk;
  std::size_t root = 0;
  std::size_t eccentricity = 0;
  std::optional<std::size_t> odd_ball_radius;
  std::size_t phase1_steps = 0;
  std::size_t phase2_steps = 0;
  // 4 * eccentricity + kWalkConstant.
  std::size_t bound() const { return 4 * eccentricity + kWalkConstant; }
  // length - 4 * eccentricity (may be negative).
  long overhead() const {
    return static_cast<long>(walk.length()) - 4 * static_cast<long>(eccentricity);
  }
};

// Circuit walk from start to end (half-integral points of P_fstab(G)) that
// first makes the layers around root alternate outward, then installs the
// target inward. Throws InvariantViolated if a stage cannot be completed
// within its step allowance.
FstabWalk fstab_walk(const Graph &g, const RationalVector &start,
                     const RationalVector &end, std::size_t root);

// Connected graphs on n nodes, one per isomorphism class (n <= 6).
std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n);
// Random spanning tree plus each other edge with probability p.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64 &rng);

} // namespace circuitlab
