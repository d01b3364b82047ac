#pragma once

#include "circuitlab/circuits.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace circuitlab {

struct WalkStep {
  RationalVector from;
  RationalVector direction; // primitive integer, sign as travelled
  Rational alpha;
  RationalVector to;
};

struct Walk {
  std::vector<RationalVector> points;
  std::vector<WalkStep> steps;

  std::size_t length() const { return steps.size(); }
  static Walk at(RationalVector start);
  void append(WalkStep step);
};

// Maximal step from x along g. Throws NotACircuit unless g is a certified
// circuit, and NoStep when no positive step exists.
WalkStep circuit_step(const HPolytope &p, const RationalVector &x,
                      const RationalVector &g);
// Same, with the circuit test skipped (caller certified g).
WalkStep certified_step(const HPolytope &p, const RationalVector &x,
                        const RationalVector &g);

using CircuitCertifier = std::function<bool(const RationalVector &)>;

struct WalkCheck {
  bool ok = true;
  std::size_t index = 0; // first offending step (or point) index
  std::string reason;
};

// Every point in P and every transition a maximal positive step along a
// certified circuit. The default certifier is is_circuit on p.
WalkCheck validate_walk(const HPolytope &p, const Walk &w,
                        const CircuitCertifier &certify = {});

// y - x is a circuit and the maximal step from x along it is exactly 1.
bool one_step(const HPolytope &p, const RationalVector &x,
              const RationalVector &y);

// All points reachable from x in one step along +-c for c in the set.
std::vector<WalkStep> successors(const HPolytope &p, const CircuitSet &circuits,
                                 const RationalVector &x);

inline constexpr std::size_t kDefaultDepthLimit = 4;

struct DistanceResult {
  std::optional<std::size_t> distance;
  std::optional<Walk> witness;
  std::uint64_t states = 0; // BFS points generated
};

DistanceResult circuit_distance(const HPolytope &p, const CircuitSet &circuits,
                                const RationalVector &x,
                                const RationalVector &y,
                                std::size_t depth_limit = kDefaultDepthLimit);

// Distances from x to every target (absent beyond depth_limit), one BFS.
std::vector<std::optional<std::size_t>>
distances_from(const HPolytope &p, const CircuitSet &circuits,
               const RationalVector &x,
               const std::vector<RationalVector> &targets,
               std::size_t depth_limit = kDefaultDepthLimit);

struct DiameterResult {
  std::size_t diameter = 0;
  std::size_t from = 0; // a pair attaining it
  std::size_t to = 0;
  // distance[i][j] for the ordered pair (i, j).
  std::vector<std::vector<std::size_t>> distance;
};

// Throws DepthLimit if some ordered pair is not resolved within depth_limit.
DiameterResult circuit_diameter(const HPolytope &p,
                                const std::vector<RationalVector> &vertices,
                                const CircuitSet &circuits,
                                std::size_t depth_limit = kDefaultDepthLimit);

// A validated walk x -> z -> y with z among the intermediates.
std::optional<Walk>
two_step_search(const HPolytope &p, const RationalVector &x,
                const RationalVector &y,
                const std::vector<RationalVector> &intermediates);

} // namespace circuitlab
