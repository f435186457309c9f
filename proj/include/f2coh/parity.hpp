#pragma once

#include <cstdint>
#include <vector>

#include "f2coh/errors.hpp"

namespace f2coh {

struct DyadicInvariants {
  int alpha;    // popcount
  int epsilon;  // k mod 2
  int gamma;    // bit length
};

DyadicInvariants dyadic_invariants(std::int64_t k);
int alpha(std::int64_t k);
int epsilon(std::int64_t k);
int gamma(std::int64_t k);
bool is_power_of_two(std::int64_t k);

// Parity of binom(a, b) read off (1+T)^a in F2[[T]]; a may be negative.
int binom_parity(std::int64_t a, std::int64_t b);

struct KeyQuery {
  int d = 2;
  int m = 1;
  std::int64_t ell = 0;
  std::vector<std::int64_t> r;  // r_1..r_m
};

// Upper argument of the binomial in the key condition.
std::int64_t key_upper(const KeyQuery& q);
int key_condition(const KeyQuery& q);
// Coefficient of f^{d-1} in (1+f)^{r1-ell} inside F2[f]/<f^d>.
int base_case_oracle(int d, std::int64_t ell, std::int64_t r1);

struct FamilyCase {
  int family;  // 1, 2 or 3
  int m;
  std::int64_t ell;
  std::vector<std::int64_t> r;
  std::int64_t k;  // multiplier for family 3, else 0
  int value;
};

// d = 2^t + e. Family 1: ell = 1, r = (0, 2e, ..., 2e). Family 2: ell = d+1,
// r = (2e, ..., 2e). Family 3: ell = -(d-1+k 2^{t+1}), r = 0, k in {0,1,2}.
std::vector<FamilyCase> key_families(int d, int max_m = 6);

}  // namespace f2coh
