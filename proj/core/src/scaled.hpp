#pragma once

// Integer views of rational vectors used by the hot paths of the polytope
// and circuit code. Everything here is exact; callers fall back to Rational
// arithmetic when a value does not fit.

#include "circuitlab/echelon.hpp"
#include "circuitlab/linalg.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace circuitlab::detail {

// v = num / den with den > 0.
struct ScaledVector {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
};

inline std::optional<ScaledVector> scale_to_int64(const RationalVector &v) {
  BigInt l = 1;
  for (const auto &x : v)
    if (!x.is_integer())
      l = detail::lcm(l, x.denominator());
  if (!l.fits_slong_p())
    return std::nullopt;
  ScaledVector out;
  out.den = l.get_si();
  out.num.reserve(v.size());
  for (const auto &x : v) {
    const BigInt n = x.numerator() * (l / x.denominator());
    if (!n.fits_slong_p())
      return std::nullopt;
    out.num.push_back(n.get_si());
  }
  return out;
}

// Checked dot product; throws Overflow.
inline std::int64_t dot(std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      acc = add(acc, mul(a[i], b[i]));
  return acc;
}

} // namespace circuitlab::detail
