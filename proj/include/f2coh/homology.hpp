#pragma once

#include <cstdint>
#include <vector>

#include "f2coh/errors.hpp"

namespace f2coh {

// Nondecreasing operation indices i_1 <= ... <= i_s in 1..d-1, possibly empty.
struct AdmissibleWord {
  std::vector<int> indices;

  std::uint64_t weight() const { return std::uint64_t{1} << indices.size(); }
  // i_1 + 2 i_2 + 4 i_3 + ...
  std::uint64_t degree() const;
};

struct HomologyLimits {
  int max_d = 9;
  int max_k = 256;
};

// All words of weight <= max_weight.
std::vector<AdmissibleWord> admissible_words(int d, std::uint64_t max_weight);

// Multisets of words with total weight k, counted by total degree 0..(d-1)(k-1).
std::vector<std::uint64_t> poincare_config(int d, int k, const HomologyLimits& lim = {});
std::uint64_t dim_config_homology(int d, int k, std::uint64_t i, const HomologyLimits& lim = {});

// Multisets of exactly n-k powers of 2 summing to n.
std::uint64_t fuks_dim(int n, int k);
// fuks_dim(n, k) for k = 0..n.
std::vector<std::uint64_t> fuks_series(int n);

}  // namespace f2coh
