#pragma once

#include "circuitlab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circuitlab {

using RationalVector = std::vector<Rational>;

struct RationalMatrix {
  std::size_t cols = 0;
  std::vector<RationalVector> rows;

  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t c) : cols(c) {}
  RationalMatrix(std::size_t c, std::vector<RationalVector> r);

  std::size_t row_count() const { return rows.size(); }
  void push_back(RationalVector row);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols);
};

RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);
RationalVector from_integers(const std::vector<std::int64_t> &values);

Rational dot(const RationalVector &a, const RationalVector &b);
RationalVector add(const RationalVector &a, const RationalVector &b);
RationalVector subtract(const RationalVector &a, const RationalVector &b);
RationalVector scale(const RationalVector &v, const Rational &s);
// a + s * b
RationalVector axpy(const RationalVector &a, const Rational &s,
                    const RationalVector &b);
RationalVector multiply(const RationalMatrix &m, const RationalVector &v);

bool is_zero(const RationalVector &v);
std::vector<std::size_t> support(const RationalVector &v);

// Smallest positive multiple of v with coprime integer entries (sign kept).
std::vector<BigInt> primitive_integer(const RationalVector &v);
RationalVector to_rational(const std::vector<BigInt> &v);
// Row scaled by the lcm of its denominators (so all entries are integers).
std::vector<BigInt> clear_denominators(const RationalVector &v);

// Narrows to int64 if every entry fits.
std::optional<std::vector<std::int64_t>>
fit_int64(const std::vector<BigInt> &v);

// Exact serialisation "a,b,c" with rationals as p/q; used as a hash key.
std::string key(const RationalVector &v);
std::string to_string(const RationalVector &v);
RationalVector parse_vector(const std::string &text);

std::size_t rank(const RationalMatrix &m);
// Basis of Ker(m); every vector is a primitive integer vector.
std::vector<RationalVector> nullspace_basis(const RationalMatrix &m);
// The spanning vector of Ker(m) when the kernel is one-dimensional.
std::optional<RationalVector> unique_nullspace_solution(const RationalMatrix &m);
// True iff u = lambda * v for some lambda (lambda = 0 only when u = 0).
bool is_scaling_of(const RationalVector &u, const RationalVector &v);

// Rank of an integer matrix given as rows; overflow falls back to BigInt.
std::size_t integer_rank(const std::vector<std::vector<std::int64_t>> &rows,
                         std::size_t cols);

} // namespace circuitlab
