#include "circuitlab/circuits.hpp"

#include "circuitlab/echelon.hpp"
#include "circuitlab/error.hpp"
#include "circuitlab/parallel.hpp"
#include "scaled.hpp"

namespace circuitlab {

namespace {

template <class Int>
std::vector<Int> to_int(const std::vector<std::int64_t> &row) {
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    return row;
  } else {
    std::vector<Int> out;
    out.reserve(row.size());
    for (auto x : row)
      out.emplace_back(static_cast<long>(x));
    return out;
  }
}

// Rank of [A; B_R] reaches dim - 1 (g is in the kernel, so it cannot exceed it).
template <class Int>
bool reaches_corank_one(const HPolytope &p,
                        const std::vector<std::size_t> &tight) {
  const std::size_t n = p.ambient_dim();
  if (n == 0)
    return false;
  Echelon<Int> ech(n);
  auto done = [&] { return ech.rank() + 1 == n; };
  if (done())
    return true;
  for (const auto &row : p.int_equalities()) {
    ech.insert(to_int<Int>(row));
    if (done())
      return true;
  }
  for (std::size_t i : tight) {
    ech.insert(to_int<Int>(p.int_inequalities()[i]));
    if (done())
      return true;
  }
  return false;
}

CircuitVerdict finish(const HPolytope &p, bool circuit,
                      std::vector<std::size_t> tight) {
  CircuitVerdict v;
  v.status = circuit ? CircuitStatus::Circuit
                     : (p.description_complete() ? CircuitStatus::NotCircuit
                                                 : CircuitStatus::NotCertified);
  v.certificate = std::move(tight);
  return v;
}

// Ag != 0 rules g out for every description sharing the equalities.
CircuitVerdict off_kernel() {
  CircuitVerdict v;
  v.status = CircuitStatus::NotCircuit;
  return v;
}

CircuitVerdict is_circuit_integer(const HPolytope &p,
                                  std::span<const std::int64_t> g) {
  std::vector<std::size_t> tight;
  try {
    for (const auto &row : p.int_equalities())
      if (detail::dot(row, g) != 0)
        return off_kernel();
    for (std::size_t i = 0; i < p.inequality_count(); ++i)
      if (detail::dot(p.int_inequalities()[i], g) == 0)
        tight.push_back(i);
  } catch (const detail::Overflow &) {
    RationalVector rg(g.begin(), g.end());
    return is_circuit(p, rg);
  }
  bool circuit;
  try {
    circuit = reaches_corank_one<std::int64_t>(p, tight);
  } catch (const detail::Overflow &) {
    circuit = reaches_corank_one<BigInt>(p, tight);
  }
  return finish(p, circuit, std::move(tight));
}

void require_nonzero(const HPolytope &p, std::size_t size, bool zero) {
  if (size != p.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "direction length does not match polytope dimension");
  if (zero)
    throw Error(ErrorCode::ZeroVector, "the zero vector is never a circuit");
}

} // namespace

const char *to_string(CircuitStatus s) {
  switch (s) {
  case CircuitStatus::Circuit: return "true";
  case CircuitStatus::NotCircuit: return "false";
  case CircuitStatus::NotCertified: return "not-certified";
  }
  return "?";
}

Circuit canonicalize(const RationalVector &g) {
  if (is_zero(g))
    throw Error(ErrorCode::ZeroVector, "cannot canonicalize the zero vector");
  auto ints = primitive_integer(g);
  for (const auto &x : ints) {
    if (sgn(x) == 0)
      continue;
    if (sgn(x) < 0)
      for (auto &y : ints)
        y = -y;
    break;
  }
  Circuit c;
  c.direction = to_rational(ints);
  return c;
}

std::string circuit_key(const RationalVector &g) {
  return key(canonicalize(g).direction);
}

bool CircuitSet::insert(Circuit c) {
  std::string k = key(c.direction);
  if (index_.count(k))
    return false;
  index_.emplace(std::move(k), circuits_.size());
  circuits_.push_back(std::move(c));
  return true;
}

bool CircuitSet::contains(const RationalVector &direction) const {
  if (is_zero(direction))
    return false;
  return index_.count(circuit_key(direction)) > 0;
}

CircuitVerdict is_circuit(const HPolytope &p, std::span<const std::int64_t> g) {
  bool zero = true;
  for (auto x : g)
    zero = zero && x == 0;
  require_nonzero(p, g.size(), zero);
  if (p.has_integer_rows())
    return is_circuit_integer(p, g);
  return is_circuit(p, RationalVector(g.begin(), g.end()));
}

CircuitVerdict is_circuit(const HPolytope &p, const RationalVector &g) {
  require_nonzero(p, g.size(), is_zero(g));
  const auto ints = primitive_integer(g);
  if (p.has_integer_rows())
    if (auto small = fit_int64(ints))
      return is_circuit_integer(p, *small);

  const RationalVector prim = to_rational(ints);
  if (!is_zero(multiply(p.equalities(), prim)))
    return off_kernel();
  std::vector<std::size_t> tight;
  RationalMatrix m(p.ambient_dim());
  m.rows = p.equalities().rows;
  for (std::size_t i = 0; i < p.inequality_count(); ++i)
    if (dot(p.inequalities().rows[i], prim).is_zero()) {
      tight.push_back(i);
      m.rows.push_back(p.inequalities().rows[i]);
    }
  return finish(p, rank(m) + 1 == p.ambient_dim(), std::move(tight));
}

namespace {

struct Enumerator {
  std::size_t need;
  std::uint64_t budget;
  std::uint64_t visits = 0;
  CircuitSet found;

  template <class Int>
  void run(const Echelon<Int> &ech, std::size_t start, std::size_t chosen,
           const std::vector<std::vector<Int>> &int_rows) {
    if (++visits > budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "circuit enumeration exceeded " + std::to_string(budget) +
                      " subset visits");
    if (chosen == need) {
      auto v = ech.kernel_vector();
      RationalVector r;
      r.reserve(v->size());
      for (const auto &x : *v)
        r.emplace_back(x);
      found.insert(canonicalize(r));
      return;
    }
    for (std::size_t i = start; i < int_rows.size(); ++i) {
      if (chosen + (int_rows.size() - i) < need)
        break;
      Echelon<Int> next = ech;
      if (next.insert(int_rows[i]))
        run(next, i + 1, chosen + 1, int_rows);
    }
  }
};

} // namespace

CircuitSet enumerate_circuits(const HPolytope &p, std::uint64_t budget) {
  if (!p.description_complete())
    throw Error(ErrorCode::IncompleteDescription,
                "circuit enumeration needs a complete facet description");
  const std::size_t n = p.ambient_dim();
  CircuitSet set;
  if (p.equality_rank() >= n)
    return set;
  const std::size_t need = n - p.equality_rank() - 1;

  std::vector<std::vector<BigInt>> big_rows;
  for (const auto &r : p.inequalities().rows)
    big_rows.push_back(clear_denominators(r));
  std::vector<std::vector<BigInt>> big_eq;
  for (const auto &r : p.equalities().rows)
    big_eq.push_back(clear_denominators(r));

  Enumerator e{need, budget, 0, {}};
  bool done = false;
  if (p.has_integer_rows()) {
    try {
      Echelon<std::int64_t> base(n);
      for (const auto &r : p.int_equalities())
        base.insert(r);
      e.run(base, 0, 0, p.int_inequalities());
      done = true;
    } catch (const detail::Overflow &) {
      e.visits = 0;
      e.found = CircuitSet{};
    }
  }
  if (!done) {
    Echelon<BigInt> base(n);
    for (const auto &r : big_eq)
      base.insert(r);
    e.run(base, 0, 0, big_rows);
  }

  for (const auto &found : e.found) {
    Circuit c = found;
    c.certificate = is_circuit(p, c.direction).certificate;
    set.insert(std::move(c));
  }
  return set;
}

bool is_sign_structured(const HPolytope &p) {
  auto single_sign = [](const RationalVector &row) {
    bool pos = false;
    bool neg = false;
    for (const auto &x : row) {
      pos = pos || x.sign() > 0;
      neg = neg || x.sign() < 0;
    }
    return !(pos && neg);
  };
  for (const auto &r : p.equalities().rows)
    if (!single_sign(r))
      return false;
  for (const auto &r : p.inequalities().rows)
    if (!single_sign(r))
      return false;
  return true;
}

namespace {

// Kernel vector of the rows vanishing on the support mask, when the kernel is
// one-dimensional. Rows are single-signed, so for c >= 0 supported on the mask
// a row vanishes on c exactly when it is zero on every column of the mask.
template <class Int>
std::optional<std::vector<Int>>
support_kernel(const std::vector<std::vector<Int>> &eq,
               const std::vector<std::vector<Int>> &ineq, std::size_t n,
               std::uint64_t mask) {
  auto vanishes = [&](const std::vector<Int> &row) {
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j & 1) && !detail::is_zero(row[j]))
        return false;
    return true;
  };
  Echelon<Int> ech(n);
  for (const auto &r : eq) {
    if (!vanishes(r))
      return std::nullopt;
    ech.insert(r);
  }
  for (const auto &r : ineq)
    if (vanishes(r) && ech.insert(r) && ech.rank() + 1 == n)
      break;
  return ech.kernel_vector();
}

} // namespace

CircuitSet enumerate_nonnegative_circuits(const HPolytope &p) {
  if (!is_sign_structured(p))
    throw Error(ErrorCode::InvalidArgument,
                "support enumeration needs single-signed rows");
  const std::size_t n = p.ambient_dim();
  if (n > 24)
    throw Error(ErrorCode::BudgetExceeded,
                "too many coordinates for support enumeration");
  std::vector<std::vector<BigInt>> big_eq;
  std::vector<std::vector<BigInt>> big_ineq;
  for (const auto &r : p.equalities().rows)
    big_eq.push_back(clear_denominators(r));
  for (const auto &r : p.inequalities().rows)
    big_ineq.push_back(clear_denominators(r));

  CircuitSet set;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    RationalVector c;
    try {
      if (!p.has_integer_rows())
        throw detail::Overflow{};
      auto v = support_kernel(p.int_equalities(), p.int_inequalities(), n, mask);
      if (!v)
        continue;
      c.assign(v->begin(), v->end());
    } catch (const detail::Overflow &) {
      auto v = support_kernel(big_eq, big_ineq, n, mask);
      if (!v)
        continue;
      for (const auto &x : *v)
        c.emplace_back(x);
    }
    bool matches = true;
    int sign = 0;
    for (std::size_t j = 0; j < n && matches; ++j) {
      const bool in_s = mask >> j & 1;
      if (in_s == c[j].is_zero())
        matches = false;
      else if (in_s) {
        if (sign == 0)
          sign = c[j].sign();
        matches = c[j].sign() == sign;
      }
    }
    if (!matches)
      continue;
    Circuit circuit = canonicalize(c);
    circuit.certificate = is_circuit(p, circuit.direction).certificate;
    set.insert(std::move(circuit));
  }
  return set;
}

std::vector<PairVerdict>
pairwise_circuit_report(const HPolytope &p,
                        const std::vector<RationalVector> &points) {
  for (const auto &x : points)
    if (!contains(p, x))
      throw Error(ErrorCode::NotInPolytope, "point " + to_string(x) + " is not in P");
  std::vector<PairVerdict> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      out.push_back({i, j, CircuitStatus::NotCircuit});
  parallel_for(out.size(), [&](std::size_t k) {
    out[k].status =
        is_circuit(p, subtract(points[out[k].j], points[out[k].i])).status;
  });
  return out;
}

} // namespace circuitlab
