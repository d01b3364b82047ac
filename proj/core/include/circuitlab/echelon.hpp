#pragma once

// Incremental, fully reduced, fraction-free row echelon form over the
// integers. Rows are kept gcd-normalised with a positive pivot, and every
// pivot column is zero in all other rows, so kernel vectors can be read off
// directly. With Int = std::int64_t every operation is overflow-checked and
// throws detail::Overflow; callers retry with Int = BigInt.

#include "circuitlab/rational.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace circuitlab {

namespace detail {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Overflow{};
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Overflow{};
  return r;
}
inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() ||
      b == std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return std::gcd(a, b);
}
inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
  return mul(a / gcd(a, b), b);
}
inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return -a;
}
inline bool is_zero(std::int64_t a) { return a == 0; }
inline int sign(std::int64_t a) { return (a > 0) - (a < 0); }

inline BigInt mul(const BigInt &a, const BigInt &b) { return a * b; }
inline BigInt sub(const BigInt &a, const BigInt &b) { return a - b; }
inline BigInt add(const BigInt &a, const BigInt &b) { return a + b; }
inline BigInt gcd(const BigInt &a, const BigInt &b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline BigInt lcm(const BigInt &a, const BigInt &b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline BigInt neg(const BigInt &a) { return -a; }
inline bool is_zero(const BigInt &a) { return sgn(a) == 0; }
inline int sign(const BigInt &a) { return sgn(a); }

// Divides the row by the gcd of its entries; returns false for a zero row.
template <class Int> bool normalize(std::vector<Int> &row) {
  Int g = 0;
  for (const Int &x : row)
    if (!is_zero(x))
      g = gcd(g, x);
  if (is_zero(g))
    return false;
  if (g != 1)
    for (Int &x : row)
      x /= g;
  return true;
}

} // namespace detail

template <class Int> class Echelon {
public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  // Adds a row; returns true iff it was independent of the rows so far.
  bool insert(std::span<const Int> input) {
    std::vector<Int> r(input.begin(), input.end());
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      const std::size_t p = pivots_[j];
      if (detail::is_zero(r[p]))
        continue;
      const Int a = rows_[j][p];
      const Int f = r[p];
      const Int g = detail::gcd(a, f);
      const Int ra = a / g;
      const Int rf = f / g;
      for (std::size_t c = 0; c < cols_; ++c)
        r[c] = detail::sub(detail::mul(ra, r[c]), detail::mul(rf, rows_[j][c]));
    }
    if (!detail::normalize(r))
      return false;
    std::size_t p = 0;
    while (detail::is_zero(r[p]))
      ++p;
    if (detail::sign(r[p]) < 0)
      for (Int &x : r)
        x = detail::neg(x);
    for (auto &row : rows_) {
      if (detail::is_zero(row[p]))
        continue;
      const Int g = detail::gcd(r[p], row[p]);
      const Int a = r[p] / g;
      const Int f = row[p] / g;
      for (std::size_t c = 0; c < cols_; ++c)
        row[c] = detail::sub(detail::mul(a, row[c]), detail::mul(f, r[c]));
      detail::normalize(row);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  // Basis of the kernel, one primitive integer vector per free column.
  std::vector<std::vector<Int>> kernel_basis() const {
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots_)
      is_pivot[p] = true;
    Int l = 1;
    for (std::size_t j = 0; j < rows_.size(); ++j)
      l = detail::lcm(l, rows_[j][pivots_[j]]);
    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f])
        continue;
      std::vector<Int> v(cols_, Int(0));
      v[f] = l;
      for (std::size_t j = 0; j < rows_.size(); ++j) {
        const Int &piv = rows_[j][pivots_[j]];
        v[pivots_[j]] = detail::neg(detail::mul(rows_[j][f], l / piv));
      }
      detail::normalize(v);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<std::vector<Int>> kernel_vector() const {
    if (rows_.size() + 1 != cols_)
      return std::nullopt;
    return kernel_basis().front();
  }

private:
  std::size_t cols_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace circuitlab
