#include "circuitlab/linalg.hpp"

#include "circuitlab/echelon.hpp"
#include "circuitlab/error.hpp"

#include <sstream>

namespace circuitlab {

namespace {

void require_same_length(const RationalVector &a, const RationalVector &b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths differ: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
}

template <class Int>
Echelon<Int> eliminate(const std::vector<std::vector<Int>> &rows,
                       std::size_t cols) {
  Echelon<Int> ech(cols);
  for (const auto &r : rows) {
    if (ech.rank() == cols)
      break;
    ech.insert(r);
  }
  return ech;
}

std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix &m) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(m.rows.size());
  for (const auto &r : m.rows)
    rows.push_back(clear_denominators(r));
  return rows;
}

// Kernel basis of an integer-scaled matrix, int64 first and BigInt on
// overflow.
std::vector<std::vector<BigInt>> kernel(const RationalMatrix &m) {
  const auto big = integer_rows(m);
  std::vector<std::vector<std::int64_t>> small;
  bool fits = true;
  for (const auto &r : big) {
    auto f = fit_int64(r);
    if (!f) {
      fits = false;
      break;
    }
    small.push_back(std::move(*f));
  }
  if (fits) {
    try {
      std::vector<std::vector<BigInt>> out;
      for (const auto &v : eliminate(small, m.cols).kernel_basis()) {
        std::vector<BigInt> b;
        b.reserve(v.size());
        for (auto x : v)
          b.emplace_back(static_cast<long>(x));
        out.push_back(std::move(b));
      }
      return out;
    } catch (const detail::Overflow &) {
    }
  }
  return eliminate(big, m.cols).kernel_basis();
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t c, std::vector<RationalVector> r)
    : cols(c), rows(std::move(r)) {
  for (const auto &row : rows)
    if (row.size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "matrix row of wrong length");
}

void RationalMatrix::push_back(RationalVector row) {
  if (row.size() != cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix row of wrong length");
  rows.push_back(std::move(row));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m.rows.push_back(unit_vector(n, i));
  return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) {
  RationalMatrix m(cols);
  m.rows.assign(rows, zero_vector(cols));
  return m;
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v.at(i) = 1;
  return v;
}

RationalVector from_integers(const std::vector<std::int64_t> &values) {
  return RationalVector(values.begin(), values.end());
}

Rational dot(const RationalVector &a, const RationalVector &b) {
  require_same_length(a, b);
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero())
      acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

RationalVector add(const RationalVector &a, const RationalVector &b) {
  require_same_length(a, b);
  RationalVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

RationalVector subtract(const RationalVector &a, const RationalVector &b) {
  require_same_length(a, b);
  RationalVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

RationalVector scale(const RationalVector &v, const Rational &s) {
  RationalVector r(v);
  for (auto &x : r)
    x *= s;
  return r;
}

RationalVector axpy(const RationalVector &a, const Rational &s,
                    const RationalVector &b) {
  require_same_length(a, b);
  RationalVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero())
      r[i] += s * b[i];
  return r;
}

RationalVector multiply(const RationalMatrix &m, const RationalVector &v) {
  if (v.size() != m.cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  RationalVector r;
  r.reserve(m.rows.size());
  for (const auto &row : m.rows)
    r.push_back(dot(row, v));
  return r;
}

bool is_zero(const RationalVector &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

std::vector<std::size_t> support(const RationalVector &v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      s.push_back(i);
  return s;
}

std::vector<BigInt> clear_denominators(const RationalVector &v) {
  BigInt l = 1;
  for (const auto &x : v)
    if (!x.is_integer())
      l = detail::lcm(l, x.denominator());
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.push_back(x.numerator() * (l / x.denominator()));
  return out;
}

std::vector<BigInt> primitive_integer(const RationalVector &v) {
  auto out = clear_denominators(v);
  detail::normalize(out);
  return out;
}

RationalVector to_rational(const std::vector<BigInt> &v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto &x : v)
    r.emplace_back(x);
  return r;
}

std::optional<std::vector<std::int64_t>>
fit_int64(const std::vector<BigInt> &v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto &x : v) {
    if (!x.fits_slong_p())
      return std::nullopt;
    out.push_back(x.get_si());
  }
  return out;
}

std::string key(const RationalVector &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ',';
    s += v[i].to_string();
  }
  return s;
}

std::string to_string(const RationalVector &v) { return "(" + key(v) + ")"; }

RationalVector parse_vector(const std::string &text) {
  RationalVector v;
  std::string body = text;
  if (!body.empty() && (body.front() == '(' || body.front() == '['))
    body.erase(0, 1);
  if (!body.empty() && (body.back() == ')' || body.back() == ']'))
    body.pop_back();
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ','))
    v.push_back(Rational::parse(item));
  return v;
}

std::size_t rank(const RationalMatrix &m) {
  return m.cols - kernel(m).size();
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix &m) {
  std::vector<RationalVector> out;
  for (const auto &v : kernel(m))
    out.push_back(to_rational(v));
  return out;
}

std::optional<RationalVector>
unique_nullspace_solution(const RationalMatrix &m) {
  auto basis = nullspace_basis(m);
  if (basis.size() != 1)
    return std::nullopt;
  return std::move(basis.front());
}

bool is_scaling_of(const RationalVector &u, const RationalVector &v) {
  require_same_length(u, v);
  if (is_zero(u))
    return true;
  if (is_zero(v))
    return false;
  // u = lambda v with lambda = u_i / v_i at the first nonzero of v.
  std::size_t i = 0;
  while (v[i].is_zero())
    ++i;
  const Rational lambda = u[i] / v[i];
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j] != lambda * v[j])
      return false;
  return true;
}

std::size_t integer_rank(const std::vector<std::vector<std::int64_t>> &rows,
                         std::size_t cols) {
  try {
    return eliminate(rows, cols).rank();
  } catch (const detail::Overflow &) {
    std::vector<std::vector<BigInt>> big;
    for (const auto &r : rows) {
      std::vector<BigInt> b;
      for (auto x : r)
        b.emplace_back(static_cast<long>(x));
      big.push_back(std::move(b));
    }
    return eliminate(big, cols).rank();
  }
}

} // namespace circuitlab
