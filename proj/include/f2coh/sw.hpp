#pragma once

#include <optional>

#include "f2coh/poly.hpp"

namespace f2coh {

enum class SwKind { total, dual };

// Image of a Stiefel-Whitney class (or of a Whitney power of the bundle)
// in F2[V_1..V_m]/<V_i^d>.
struct SwImage {
  int d = 0;
  int m = 0;
  std::uint64_t power = 1;
  SwKind kind = SwKind::total;
  Polynomial poly;
};

// Least power of 2 that is >= d; w raised to it is 1.
std::uint64_t sw_height(int d);

SwImage total_class_image(int d, int m);
// pow(w, p) for the Whitney power p.
SwImage total_power_image(int d, int m, std::uint64_t p);
// Dual of w^p, i.e. w^{H - (p mod H)} with H the height. p >= 1.
SwImage dual_image(int d, int m, std::uint64_t p);

std::optional<std::uint64_t> top_nonzero_degree(const SwImage& img);
bool witness_coefficient(const SwImage& img, const Monomial& witness);

}  // namespace f2coh
