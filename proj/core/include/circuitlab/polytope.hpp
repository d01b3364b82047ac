#pragma once

#include "circuitlab/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace circuitlab {

// Where a polytope came from, when it was produced by one of the family
// builders. Carried through JSON so `vertices` can enumerate combinatorially.
struct FamilyInfo {
  std::string name; // matching | permatch | tsp | fstab
  std::size_t n = 0;
  bool combs = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges; // fstab only
};

// {x : A x = b, B x <= d}. Row labels cover A's rows followed by B's rows.
class HPolytope {
public:
  HPolytope(RationalMatrix eq, RationalVector eq_rhs, RationalMatrix ineq,
            RationalVector ineq_rhs, std::vector<std::string> labels,
            bool description_complete);

  std::size_t ambient_dim() const { return dim_; }
  const RationalMatrix &equalities() const { return eq_; }
  const RationalVector &equality_rhs() const { return eq_rhs_; }
  const RationalMatrix &inequalities() const { return ineq_; }
  const RationalVector &inequality_rhs() const { return ineq_rhs_; }
  std::size_t equality_count() const { return eq_.rows.size(); }
  std::size_t inequality_count() const { return ineq_.rows.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &equality_label(std::size_t i) const { return labels_[i]; }
  const std::string &inequality_label(std::size_t i) const {
    return labels_[eq_.rows.size() + i];
  }
  bool description_complete() const { return complete_; }
  std::size_t equality_rank() const { return eq_rank_; }

  const std::optional<FamilyInfo> &family() const { return family_; }
  void set_family(FamilyInfo info) { family_ = std::move(info); }

  // Integer-scaled copies of the rows (positive row scaling, rhs included),
  // present when every scaled entry fits in int64.
  bool has_integer_rows() const { return int_ok_; }
  const std::vector<std::vector<std::int64_t>> &int_equalities() const {
    return int_eq_;
  }
  const std::vector<std::int64_t> &int_equality_rhs() const {
    return int_eq_rhs_;
  }
  const std::vector<std::vector<std::int64_t>> &int_inequalities() const {
    return int_ineq_;
  }
  const std::vector<std::int64_t> &int_inequality_rhs() const {
    return int_ineq_rhs_;
  }

private:
  std::size_t dim_;
  RationalMatrix eq_;
  RationalVector eq_rhs_;
  RationalMatrix ineq_;
  RationalVector ineq_rhs_;
  std::vector<std::string> labels_;
  bool complete_;
  std::size_t eq_rank_ = 0;
  std::optional<FamilyInfo> family_;

  bool int_ok_ = false;
  std::vector<std::vector<std::int64_t>> int_eq_;
  std::vector<std::int64_t> int_eq_rhs_;
  std::vector<std::vector<std::int64_t>> int_ineq_;
  std::vector<std::int64_t> int_ineq_rhs_;
};

struct TightSet {
  std::vector<std::size_t> equality_rows;
  std::vector<std::size_t> inequality_rows;
};

bool contains(const HPolytope &p, const RationalVector &x);
TightSet tight_rows(const HPolytope &p, const RationalVector &x);
bool is_vertex(const HPolytope &p, const RationalVector &x);

// Largest alpha with x + alpha g in P. Absent when no positive step exists;
// throws Unbounded when no row limits the motion.
std::optional<Rational> max_step(const HPolytope &p, const RationalVector &x,
                                 const RationalVector &g);

// Inequality row slacks d_i - B_i x.
RationalVector slacks(const HPolytope &p, const RationalVector &x);

} // namespace circuitlab
