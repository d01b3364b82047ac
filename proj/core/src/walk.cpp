#include "circuitlab/walk.hpp"

#include "circuitlab/error.hpp"
#include "circuitlab/parallel.hpp"

#include <unordered_map>

namespace circuitlab {

Walk Walk::at(RationalVector start) {
  Walk w;
  w.points.push_back(std::move(start));
  return w;
}

void Walk::append(WalkStep step) {
  points.push_back(step.to);
  steps.push_back(std::move(step));
}

WalkStep certified_step(const HPolytope &p, const RationalVector &x,
                        const RationalVector &g) {
  if (is_zero(g))
    throw Error(ErrorCode::ZeroVector, "a step needs a nonzero direction");
  RationalVector dir = to_rational(primitive_integer(g));
  auto alpha = max_step(p, x, dir);
  if (!alpha)
    throw Error(ErrorCode::NoStep,
                "no positive step from " + to_string(x) + " along " +
                    to_string(dir));
  WalkStep s;
  s.from = x;
  s.to = axpy(x, *alpha, dir);
  s.direction = std::move(dir);
  s.alpha = std::move(*alpha);
  return s;
}

WalkStep circuit_step(const HPolytope &p, const RationalVector &x,
                      const RationalVector &g) {
  if (!contains(p, x))
    throw Error(ErrorCode::NotInPolytope, "start point is not in P");
  const auto verdict = is_circuit(p, g);
  if (!verdict.is_circuit())
    throw Error(ErrorCode::NotACircuit,
                to_string(g) + " is not a certified circuit (" +
                    to_string(verdict.status) + ")");
  return certified_step(p, x, g);
}

WalkCheck validate_walk(const HPolytope &p, const Walk &w,
                        const CircuitCertifier &certify) {
  auto fail = [](std::size_t i, std::string why) {
    return WalkCheck{false, i, std::move(why)};
  };
  if (w.points.size() != w.steps.size() + 1)
    return fail(0, "walk must have exactly one more point than steps");
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    if (w.points[i].size() != p.ambient_dim())
      return fail(i, "point has wrong dimension");
    if (!contains(p, w.points[i]))
      return fail(i, "point " + std::to_string(i) + " is not in P");
  }
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const WalkStep &s = w.steps[i];
    if (s.from != w.points[i] || s.to != w.points[i + 1])
      return fail(i, "step endpoints do not match the point sequence");
    if (s.direction.size() != p.ambient_dim() || is_zero(s.direction))
      return fail(i, "direction is zero or has wrong dimension");
    const bool ok = certify ? certify(s.direction)
                            : is_circuit(p, s.direction).is_circuit();
    if (!ok)
      return fail(i, "direction is not a certified circuit");
    if (s.alpha.sign() <= 0)
      return fail(i, "step length is not positive");
    if (axpy(s.from, s.alpha, s.direction) != s.to)
      return fail(i, "to != from + alpha * direction");
    const auto best = max_step(p, s.from, s.direction);
    if (!best || *best != s.alpha)
      return fail(i, "step is not maximal");
  }
  return {};
}

bool one_step(const HPolytope &p, const RationalVector &x,
              const RationalVector &y) {
  if (!contains(p, x) || !contains(p, y))
    throw Error(ErrorCode::NotInPolytope, "one_step needs both points in P");
  const RationalVector d = subtract(y, x);
  if (is_zero(d))
    return false;
  if (!is_circuit(p, d).is_circuit())
    return false;
  const auto alpha = max_step(p, x, d);
  return alpha && *alpha == Rational(1);
}

std::vector<WalkStep> successors(const HPolytope &p, const CircuitSet &circuits,
                                 const RationalVector &x) {
  std::vector<WalkStep> out;
  for (const auto &c : circuits) {
    for (int s : {1, -1}) {
      const RationalVector g = s > 0 ? c.direction : scale(c.direction, -1);
      if (auto alpha = max_step(p, x, g))
        out.push_back({x, g, *alpha, axpy(x, *alpha, g)});
    }
  }
  return out;
}

namespace {

struct Node {
  RationalVector point;
  std::size_t parent;
  RationalVector direction;
  Rational alpha;
};

// Single-step reachability of y from z within the enumerated circuit set.
bool reaches(const HPolytope &p, const CircuitSet &circuits,
             const RationalVector &z, const RationalVector &y) {
  const RationalVector d = subtract(y, z);
  if (is_zero(d) || !circuits.contains(d))
    return false;
  const auto alpha = max_step(p, z, d);
  return alpha && *alpha == Rational(1);
}

struct Search {
  std::vector<Node> nodes;
  std::vector<std::optional<std::size_t>> distance;
  std::vector<std::size_t> last_node; // node from which target was reached
};

Search bfs(const HPolytope &p, const CircuitSet &circuits,
           const RationalVector &x, const std::vector<RationalVector> &targets,
           std::size_t depth_limit) {
  if (!p.description_complete())
    throw Error(ErrorCode::IncompleteDescription,
                "BFS distance needs a complete facet description");
  if (!contains(p, x))
    throw Error(ErrorCode::NotInPolytope, "BFS start is not in P");
  for (const auto &y : targets)
    if (!contains(p, y))
      throw Error(ErrorCode::NotInPolytope, "BFS target is not in P");

  Search s;
  s.distance.assign(targets.size(), std::nullopt);
  s.last_node.assign(targets.size(), 0);
  std::size_t unresolved = targets.size();
  for (std::size_t t = 0; t < targets.size(); ++t)
    if (targets[t] == x) {
      s.distance[t] = 0;
      --unresolved;
    }

  std::unordered_map<std::string, std::size_t> seen;
  s.nodes.push_back({x, 0, {}, Rational(0)});
  seen.emplace(key(x), 0);
  std::vector<std::size_t> frontier{0};

  for (std::size_t level = 0; level < depth_limit && unresolved > 0; ++level) {
    for (std::size_t z : frontier)
      for (std::size_t t = 0; t < targets.size(); ++t)
        if (!s.distance[t] &&
            reaches(p, circuits, s.nodes[z].point, targets[t])) {
          s.distance[t] = level + 1;
          s.last_node[t] = z;
          --unresolved;
        }
    if (unresolved == 0 || level + 1 == depth_limit)
      break;
    std::vector<std::size_t> next;
    for (std::size_t z : frontier) {
      const RationalVector from = s.nodes[z].point;
      for (auto &step : successors(p, circuits, from)) {
        auto [it, fresh] = seen.emplace(key(step.to), s.nodes.size());
        if (!fresh)
          continue;
        next.push_back(s.nodes.size());
        s.nodes.push_back({std::move(step.to), z, std::move(step.direction),
                           std::move(step.alpha)});
      }
    }
    frontier = std::move(next);
  }
  return s;
}

Walk rebuild(const HPolytope &p, const Search &s, std::size_t target_index,
             const RationalVector &y) {
  std::vector<std::size_t> chain;
  for (std::size_t z = s.last_node[target_index];; z = s.nodes[z].parent) {
    chain.push_back(z);
    if (z == 0)
      break;
  }
  Walk w = Walk::at(s.nodes[0].point);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    if (*it != 0) {
      const Node &n = s.nodes[*it];
      w.append({w.points.back(), n.direction, n.alpha, n.point});
    }
  w.append(certified_step(p, w.points.back(), subtract(y, w.points.back())));
  return w;
}

} // namespace

DistanceResult circuit_distance(const HPolytope &p, const CircuitSet &circuits,
                                const RationalVector &x,
                                const RationalVector &y,
                                std::size_t depth_limit) {
  Search s = bfs(p, circuits, x, {y}, depth_limit);
  DistanceResult r;
  r.distance = s.distance[0];
  r.states = s.nodes.size();
  if (r.distance)
    r.witness = *r.distance == 0 ? Walk::at(x) : rebuild(p, s, 0, y);
  return r;
}

std::vector<std::optional<std::size_t>>
distances_from(const HPolytope &p, const CircuitSet &circuits,
               const RationalVector &x,
               const std::vector<RationalVector> &targets,
               std::size_t depth_limit) {
  return bfs(p, circuits, x, targets, depth_limit).distance;
}

DiameterResult circuit_diameter(const HPolytope &p,
                                const std::vector<RationalVector> &vertices,
                                const CircuitSet &circuits,
                                std::size_t depth_limit) {
  std::vector<std::vector<std::optional<std::size_t>>> rows(vertices.size());
  parallel_for(vertices.size(), [&](std::size_t i) {
    rows[i] = distances_from(p, circuits, vertices[i], vertices, depth_limit);
  });
  DiameterResult r;
  r.distance.assign(vertices.size(), std::vector<std::size_t>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (!rows[i][j])
        throw Error(ErrorCode::DepthLimit,
                    "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") unresolved within depth " +
                        std::to_string(depth_limit));
      r.distance[i][j] = *rows[i][j];
      if (*rows[i][j] > r.diameter) {
        r.diameter = *rows[i][j];
        r.from = i;
        r.to = j;
      }
    }
  return r;
}

std::optional<Walk>
two_step_search(const HPolytope &p, const RationalVector &x,
                const RationalVector &y,
                const std::vector<RationalVector> &intermediates) {
  for (const auto &z : intermediates) {
    if (z == x || z == y)
      continue;
    if (!one_step(p, x, z) || !one_step(p, z, y))
      continue;
    Walk w = Walk::at(x);
    w.append(certified_step(p, x, subtract(z, x)));
    w.append(certified_step(p, z, subtract(y, z)));
    if (validate_walk(p, w).ok)
      return w;
  }
  return std::nullopt;
}

} // namespace circuitlab
