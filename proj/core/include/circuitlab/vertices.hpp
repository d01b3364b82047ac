#pragma once

#include "circuitlab/polytope.hpp"

#include <cstdint>
#include <vector>

namespace circuitlab {

// Vertices of P. Family polytopes are enumerated combinatorially; anything
// else by trying every basis of inequality rows (BudgetExceeded past budget).
std::vector<RationalVector> enumerate_vertices(const HPolytope &p,
                                               std::uint64_t budget = 10'000'000);

// Vertices by the basis scan only.
std::vector<RationalVector> enumerate_vertices_by_bases(const HPolytope &p,
                                                        std::uint64_t budget);

} // namespace circuitlab
