#pragma once

#include <optional>
#include <vector>

#include "f2coh/poly.hpp"

namespace f2coh {

// Formal symbols Q0..Q_{n-1}; Q_r has V-degree 2^n - 2^r.
Ring q_ring(int n);

// Q_r -> closed-form Dickson class in V, inside F2[V]/<V_i^q> (q = 0: no truncation).
Polynomial expand_Q(const Polynomial& p, std::uint32_t q);
bool in_truncation_ideal(const Polynomial& p, std::uint32_t q);

// Q-monomials of the given V-degree, exponent tuples in ascending lex order.
std::vector<Monomial> q_monomials_of_degree(int n, std::uint64_t degree);

// Basis in reduced echelon form of the degree slice of the kernel of expand_Q.
std::vector<Polynomial> ideal_kernel_in_degree(int n, std::uint32_t q, std::uint64_t degree);

struct GenerationReport {
  bool holds = true;
  std::optional<Polynomial> counterexample;
  std::optional<std::uint64_t> failing_degree;
};

// Is every kernel element up to max_degree spanned by kernel monomials?
GenerationReport monomial_generation_check(int n, std::uint32_t q, std::uint64_t max_degree);

inline constexpr std::uint64_t kDefaultIdealDegreeCap = 64;

}  // namespace f2coh
