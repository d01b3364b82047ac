#pragma once

#include "circuitlab/circuits.hpp"
#include "circuitlab/fstab.hpp"
#include "circuitlab/walk.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace circuitlab {

// All JSON writers emit rationals as "p/q" strings (or "p" when q = 1) and
// use a fixed key order, so output is byte-stable across runs.

std::string polytope_to_json(const HPolytope &p);
HPolytope polytope_from_json(std::string_view text);

std::string circuits_to_json(const HPolytope &p, const CircuitSet &circuits);
std::string walk_to_json(const Walk &w);
std::string vertices_to_json(const std::vector<RationalVector> &vertices);
std::vector<RationalVector> vertices_from_json(std::string_view text);

// JSON {"n": k, "edges": [[i, j], ...]} or one "i j" pair per line.
Graph graph_from_text(std::string_view text);
std::string graph_to_json(const Graph &g);

std::string read_file(const std::string &path);

} // namespace circuitlab
