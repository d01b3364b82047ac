#pragma once

#include "circuitlab/polytope.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace circuitlab {

// NotCertified is returned instead of NotCircuit when the polytope's
// description is known to be partial: the test is then only sufficient.
enum class CircuitStatus { Circuit, NotCircuit, NotCertified };

const char *to_string(CircuitStatus s);

struct CircuitVerdict {
  CircuitStatus status = CircuitStatus::NotCircuit;
  // Inequality rows i with B_i g = 0 (the maximal tight submatrix B').
  std::vector<std::size_t> certificate;

  bool is_circuit() const { return status == CircuitStatus::Circuit; }
};

struct Circuit {
  RationalVector direction; // primitive integer, first nonzero positive
  bool sign_canonical = true;
  std::vector<std::size_t> certificate;
};

// Deduplicated, sign-canonical circuits of one polytope.
class CircuitSet {
public:
  // Returns false if an equal (up to scaling and sign) circuit was present.
  bool insert(Circuit c);
  bool contains(const RationalVector &direction) const;
  std::size_t size() const { return circuits_.size(); }
  const std::vector<Circuit> &circuits() const { return circuits_; }
  auto begin() const { return circuits_.begin(); }
  auto end() const { return circuits_.end(); }

private:
  std::vector<Circuit> circuits_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Scales to a primitive integer vector whose first nonzero entry is positive.
Circuit canonicalize(const RationalVector &g);
// The canonical key used for deduplication.
std::string circuit_key(const RationalVector &g);

CircuitVerdict is_circuit(const HPolytope &p, const RationalVector &g);
CircuitVerdict is_circuit(const HPolytope &p, std::span<const std::int64_t> g);

inline constexpr std::uint64_t kDefaultCircuitBudget = 10'000'000;

// Every circuit of a completely described polytope, found by iterating
// independent row subsets of size dim - rank(A) - 1.
CircuitSet enumerate_circuits(const HPolytope &p,
                              std::uint64_t budget = kDefaultCircuitBudget);

// Circuits c >= 0 of a polytope whose rows each have entries of a single
// sign, found by enumerating supports. Needs dim <= 24.
CircuitSet enumerate_nonnegative_circuits(const HPolytope &p);
bool is_sign_structured(const HPolytope &p);

struct PairVerdict {
  std::size_t i = 0;
  std::size_t j = 0;
  CircuitStatus status = CircuitStatus::NotCircuit;
};

// is_circuit(points[j] - points[i]) for every i < j, in (i, j) order.
std::vector<PairVerdict>
pairwise_circuit_report(const HPolytope &p,
                        const std::vector<RationalVector> &points);

} // namespace circuitlab
