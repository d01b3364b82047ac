#include "circuitlab/vertices.hpp"

#include "circuitlab/error.hpp"
#include "circuitlab/families.hpp"
#include "circuitlab/fstab.hpp"

#include <algorithm>
#include <set>

namespace circuitlab {

namespace {

struct BasisScan {
  const HPolytope &p;
  std::uint64_t budget;
  std::uint64_t visits = 0;
  std::size_t need = 0;
  std::vector<std::size_t> chosen = {};
  std::set<RationalVector> found = {};

  void run(std::size_t start, std::size_t rank_so_far) {
    if (++visits > budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "vertex enumeration exceeded " + std::to_string(budget) +
                      " basis visits");
    if (chosen.size() == need) {
      solve();
      return;
    }
    for (std::size_t i = start; i < p.inequality_count(); ++i) {
      if (chosen.size() + (p.inequality_count() - i) < need)
        break;
      chosen.push_back(i);
      const std::size_t r = rank(system(false));
      if (r > rank_so_far)
        run(i + 1, r);
      chosen.pop_back();
    }
  }

  RationalMatrix system(bool augmented) const {
    const std::size_t n = p.ambient_dim();
    RationalMatrix m(augmented ? n + 1 : n);
    auto add = [&](const RationalVector &row, const Rational &rhs) {
      RationalVector r = row;
      if (augmented)
        r.push_back(-rhs);
      m.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < p.equality_count(); ++i)
      add(p.equalities().rows[i], p.equality_rhs()[i]);
    for (std::size_t i : chosen)
      add(p.inequalities().rows[i], p.inequality_rhs()[i]);
    return m;
  }

  void solve() {
    auto sol = unique_nullspace_solution(system(true));
    if (!sol || sol->back().is_zero())
      return;
    const Rational last = sol->back();
    sol->pop_back();
    RationalVector x = scale(*sol, Rational(1) / last);
    if (contains(p, x))
      found.insert(std::move(x));
  }
};

} // namespace

std::vector<RationalVector> enumerate_vertices_by_bases(const HPolytope &p,
                                                        std::uint64_t budget) {
  BasisScan scan{p, budget};
  const std::size_t r = p.equality_rank();
  scan.need = p.ambient_dim() - r;
  scan.run(0, r);
  return {scan.found.begin(), scan.found.end()};
}

std::vector<RationalVector> enumerate_vertices(const HPolytope &p,
                                               std::uint64_t budget) {
  if (const auto &f = p.family()) {
    if (f->name == "matching" || f->name == "permatch" || f->name == "tsp") {
      const EdgeIndex idx(f->n);
      std::vector<EdgeSet> sets;
      if (f->name == "matching")
        sets = enumerate_matchings(f->n);
      else if (f->name == "permatch")
        sets = enumerate_perfect_matchings(f->n);
      else
        for (const auto &t : enumerate_tours(f->n))
          sets.push_back(tour_edges(t));
      if (idx.size() == p.ambient_dim())
        return vertex_vectors(idx, sets);
    } else if (f->name == "fstab" && f->n == p.ambient_dim()) {
      return enumerate_fstab_vertices(Graph(f->n, f->edges));
    }
  }
  return enumerate_vertices_by_bases(p, budget);
}

} // namespace circuitlab
