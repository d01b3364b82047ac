#pragma once

// Test-side reference computations, written independently of the library
// algorithms they check.

#include "circuitlab/polytope.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Row = std::vector<mpq_class>;

inline Row to_row(const circuitlab::RationalVector &v) {
  Row r;
  for (const auto &x : v)
    r.push_back(x.raw());
  return r;
}

// Plain Gauss-Jordan over mpq.
inline std::size_t rank(std::vector<Row> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0)
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const circuitlab::RationalMatrix &m) {
  std::vector<Row> rows;
  for (const auto &r : m.rows)
    rows.push_back(to_row(r));
  if (rows.empty())
    return 0;
  return rank(rows);
}

// Rows of A plus inequality rows tight at x.
inline std::vector<Row> active_rows(const circuitlab::HPolytope &p,
                                    const circuitlab::RationalVector &x) {
  std::vector<Row> rows;
  for (const auto &r : p.equalities().rows)
    rows.push_back(to_row(r));
  const auto &b = p.inequalities().rows;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (circuitlab::dot(b[i], x) == p.inequality_rhs()[i])
      rows.push_back(to_row(b[i]));
  return rows;
}

inline bool vertex(const circuitlab::HPolytope &p,
                   const circuitlab::RationalVector &x) {
  const auto rows = active_rows(p, x);
  return !rows.empty() && rank(rows) == p.ambient_dim();
}

// Two vertices span an edge of P iff their common active rows have rank n-1.
inline bool adjacent(const circuitlab::HPolytope &p,
                     const circuitlab::RationalVector &x,
                     const circuitlab::RationalVector &y) {
  std::vector<Row> rows;
  for (const auto &r : p.equalities().rows)
    rows.push_back(to_row(r));
  const auto &b = p.inequalities().rows;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (circuitlab::dot(b[i], x) == p.inequality_rhs()[i] &&
        circuitlab::dot(b[i], y) == p.inequality_rhs()[i])
      rows.push_back(to_row(b[i]));
  return rank(rows) + 1 == p.ambient_dim();
}

// Edge subsets of K_n (bitmask over lexicographic pairs) with a degree
// condition: max degree <= cap and, when exact, every degree == cap.
inline std::vector<std::uint64_t> edge_subsets(std::size_t n, int cap,
                                               bool exact) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(i, j);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << edges.size()); ++m) {
    std::vector<int> deg(n, 0);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e)
      if (m >> e & 1)
        ok = ++deg[edges[e].first] <= cap && ++deg[edges[e].second] <= cap;
    if (ok && exact)
      ok = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == cap; });
    if (ok)
      out.push_back(m);
  }
  return out;
}

// Hamiltonian cycles of K_n counted as distinct edge sets, via permutations.
inline std::size_t tour_count(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::set<std::pair<std::size_t, std::size_t>>> tours;
  do {
    std::set<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = perm[i];
      const std::size_t b = perm[(i + 1) % n];
      es.insert({std::min(a, b), std::max(a, b)});
    }
    tours.insert(es);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return tours.size();
}

} // namespace oracle
