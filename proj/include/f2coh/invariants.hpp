#pragma once

#include "f2coh/poly.hpp"

namespace f2coh {

// Ambient variables x_1..x_m, all of degree 1.
Ring x_ring(int m);
// Upper-triangular invariants k_1..k_m with deg k_j = 2^{j-1}.
Ring k_ring(int m);
// Restriction variables y_1..y_m, degree 1.
Ring y_ring(int m);
// V_1..V_m with deg V_r = 2^{r-1}, truncated at V_r^cap (cap 0: none).
Ring v_ring(int m, std::uint32_t cap);

// Product of (x_{m-i+1} + v) over v in span{x_m, ..., x_{m-i+2}}.
Polynomial mui_h(int m, int i);
// Coefficient of T^{2^r} in the product of (T + v) over all v in span{x_1..x_m}.
Polynomial dickson_bruteforce(int m, int r);
// d_{m,i} = d_{m-1,i} k_m + d_{m-1,i-1}^2 with d_{j,j} = 1.
Polynomial dickson_recurrence(int m, int r);
// Sum over index tuples j_1 < ... < j_r of the block-power monomials.
Polynomial dickson_upper_formula(int m, int r);
// Product over lambda of (lambda_m y_m + ... + lambda_{m-r+2} y_{m-r+2} + y_{m-r+1}).
Polynomial restriction_v(int m, int r);

// Variable reversal x_i -> x_{m+1-i}.
Polynomial reverse_variables(const Polynomial& p);
// k_j written in the ambient variables.
Polynomial k_in_x(int m, int j);
// Rewrite a k-basis polynomial in x via k_j -> reversal of mui_h(m, j).
Polynomial k_to_x(const Polynomial& p);

}  // namespace f2coh
