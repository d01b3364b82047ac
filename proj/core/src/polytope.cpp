#include "circuitlab/polytope.hpp"

#include "circuitlab/error.hpp"
#include "scaled.hpp"

namespace circuitlab {

namespace {

void require_dim(const HPolytope &p, const RationalVector &x) {
  if (x.size() != p.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "point has length " + std::to_string(x.size()) +
                    ", polytope dimension is " +
                    std::to_string(p.ambient_dim()));
}

void require_member(const HPolytope &p, const RationalVector &x) {
  if (!contains(p, x))
    throw Error(ErrorCode::NotInPolytope, "point " + to_string(x) + " is not in P");
}

// Row i scaled to integers together with its right-hand side.
bool scale_row(const RationalVector &row, const Rational &rhs,
               std::vector<std::int64_t> &out_row, std::int64_t &out_rhs) {
  RationalVector full(row);
  full.push_back(rhs);
  auto ints = fit_int64(clear_denominators(full));
  if (!ints)
    return false;
  out_rhs = ints->back();
  ints->pop_back();
  out_row = std::move(*ints);
  return true;
}

std::optional<bool> contains_fast(const HPolytope &p, const RationalVector &x) {
  if (!p.has_integer_rows())
    return std::nullopt;
  auto sx = detail::scale_to_int64(x);
  if (!sx)
    return std::nullopt;
  try {
    for (std::size_t i = 0; i < p.equality_count(); ++i)
      if (detail::dot(p.int_equalities()[i], sx->num) !=
          detail::mul(p.int_equality_rhs()[i], sx->den))
        return false;
    for (std::size_t i = 0; i < p.inequality_count(); ++i)
      if (detail::dot(p.int_inequalities()[i], sx->num) >
          detail::mul(p.int_inequality_rhs()[i], sx->den))
        return false;
    return true;
  } catch (const detail::Overflow &) {
    return std::nullopt;
  }
}

struct Ratio {
  std::int64_t num;
  std::int64_t den; // > 0
};

enum class StepKind { Blocked, Finite, Unbounded };

std::optional<std::pair<StepKind, Rational>>
max_step_fast(const HPolytope &p, const RationalVector &x,
              const RationalVector &g) {
  if (!p.has_integer_rows())
    return std::nullopt;
  auto sx = detail::scale_to_int64(x);
  auto sg = detail::scale_to_int64(g);
  if (!sx || !sg)
    return std::nullopt;
  try {
    std::optional<Ratio> best;
    for (std::size_t i = 0; i < p.inequality_count(); ++i) {
      const auto &row = p.int_inequalities()[i];
      const std::int64_t bg = detail::dot(row, sg->num);
      if (bg <= 0)
        continue;
      const std::int64_t slack = detail::sub(
          detail::mul(p.int_inequality_rhs()[i], sx->den), detail::dot(row, sx->num));
      if (slack == 0)
        return std::make_pair(StepKind::Blocked, Rational(0));
      // alpha_i = (slack / den_x) / (bg / den_g)
      const Ratio r{detail::mul(slack, sg->den), detail::mul(bg, sx->den)};
      if (!best || static_cast<__int128>(r.num) * best->den <
                       static_cast<__int128>(best->num) * r.den)
        best = r;
    }
    if (!best)
      return std::make_pair(StepKind::Unbounded, Rational(0));
    return std::make_pair(StepKind::Finite,
                          Rational(BigInt(static_cast<long>(best->num)),
                                   BigInt(static_cast<long>(best->den))));
  } catch (const detail::Overflow &) {
    return std::nullopt;
  }
}

} // namespace

HPolytope::HPolytope(RationalMatrix eq, RationalVector eq_rhs,
                     RationalMatrix ineq, RationalVector ineq_rhs,
                     std::vector<std::string> labels, bool description_complete)
    : dim_(std::max(eq.cols, ineq.cols)), eq_(std::move(eq)),
      eq_rhs_(std::move(eq_rhs)), ineq_(std::move(ineq)),
      ineq_rhs_(std::move(ineq_rhs)), labels_(std::move(labels)),
      complete_(description_complete) {
  if (eq_.rows.empty())
    eq_.cols = dim_;
  if (ineq_.rows.empty())
    ineq_.cols = dim_;
  if (eq_.cols != dim_ || ineq_.cols != dim_)
    throw Error(ErrorCode::DimensionMismatch,
                "equality and inequality blocks have different widths");
  if (eq_rhs_.size() != eq_.rows.size() || ineq_rhs_.size() != ineq_.rows.size())
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side length does not match row count");
  const std::size_t total = eq_.rows.size() + ineq_.rows.size();
  if (labels_.empty()) {
    for (std::size_t i = 0; i < eq_.rows.size(); ++i)
      labels_.push_back("eq" + std::to_string(i));
    for (std::size_t i = 0; i < ineq_.rows.size(); ++i)
      labels_.push_back("ineq" + std::to_string(i));
  }
  if (labels_.size() != total)
    throw Error(ErrorCode::DimensionMismatch,
                "expected one label per row (" + std::to_string(total) + ")");

  int_ok_ = true;
  int_eq_.resize(eq_.rows.size());
  int_eq_rhs_.resize(eq_.rows.size());
  for (std::size_t i = 0; i < eq_.rows.size() && int_ok_; ++i)
    int_ok_ = scale_row(eq_.rows[i], eq_rhs_[i], int_eq_[i], int_eq_rhs_[i]);
  int_ineq_.resize(ineq_.rows.size());
  int_ineq_rhs_.resize(ineq_.rows.size());
  for (std::size_t i = 0; i < ineq_.rows.size() && int_ok_; ++i)
    int_ok_ = scale_row(ineq_.rows[i], ineq_rhs_[i], int_ineq_[i],
                        int_ineq_rhs_[i]);

  eq_rank_ = rank(eq_);
  RationalMatrix stacked(dim_);
  stacked.rows = eq_.rows;
  stacked.rows.insert(stacked.rows.end(), ineq_.rows.begin(), ineq_.rows.end());
  if (dim_ > 0 && rank(stacked) != dim_)
    throw Error(ErrorCode::InvalidArgument,
                "[A; B] must have full column rank for a polytope");
}

bool contains(const HPolytope &p, const RationalVector &x) {
  require_dim(p, x);
  if (auto fast = contains_fast(p, x))
    return *fast;
  for (std::size_t i = 0; i < p.equality_count(); ++i)
    if (dot(p.equalities().rows[i], x) != p.equality_rhs()[i])
      return false;
  for (std::size_t i = 0; i < p.inequality_count(); ++i)
    if (dot(p.inequalities().rows[i], x) > p.inequality_rhs()[i])
      return false;
  return true;
}

RationalVector slacks(const HPolytope &p, const RationalVector &x) {
  require_dim(p, x);
  RationalVector s;
  s.reserve(p.inequality_count());
  for (std::size_t i = 0; i < p.inequality_count(); ++i)
    s.push_back(p.inequality_rhs()[i] - dot(p.inequalities().rows[i], x));
  return s;
}

TightSet tight_rows(const HPolytope &p, const RationalVector &x) {
  require_member(p, x);
  TightSet t;
  for (std::size_t i = 0; i < p.equality_count(); ++i)
    t.equality_rows.push_back(i);
  const RationalVector s = slacks(p, x);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].is_zero())
      t.inequality_rows.push_back(i);
  return t;
}

bool is_vertex(const HPolytope &p, const RationalVector &x) {
  const TightSet t = tight_rows(p, x);
  RationalMatrix m(p.ambient_dim());
  m.rows = p.equalities().rows;
  for (std::size_t i : t.inequality_rows)
    m.rows.push_back(p.inequalities().rows[i]);
  return rank(m) == p.ambient_dim();
}

std::optional<Rational> max_step(const HPolytope &p, const RationalVector &x,
                                 const RationalVector &g) {
  require_dim(p, g);
  require_member(p, x);
  if (!is_zero(multiply(p.equalities(), g)))
    throw Error(ErrorCode::InvalidArgument, "direction is not in Ker(A)");

  StepKind kind = StepKind::Unbounded;
  Rational best;
  if (auto fast = max_step_fast(p, x, g)) {
    kind = fast->first;
    best = fast->second;
  } else {
    bool found = false;
    for (std::size_t i = 0; i < p.inequality_count(); ++i) {
      const Rational bg = dot(p.inequalities().rows[i], g);
      if (bg.sign() <= 0)
        continue;
      const Rational alpha =
          (p.inequality_rhs()[i] - dot(p.inequalities().rows[i], x)) / bg;
      if (!found || alpha < best) {
        best = alpha;
        found = true;
      }
    }
    kind = !found ? StepKind::Unbounded
                  : (best.is_zero() ? StepKind::Blocked : StepKind::Finite);
  }
  if (kind == StepKind::Unbounded)
    throw Error(ErrorCode::Unbounded,
                "no inequality limits the direction " + to_string(g));
  if (kind == StepKind::Blocked)
    return std::nullopt;
  return best;
}

} // namespace circuitlab
