#include "f2coh/sw.hpp"

#include <string>

#include "f2coh/invariants.hpp"

namespace f2coh {

namespace {

void check(int d, int m) {
  if (d < 2) throw ParameterError("d must be at least 2");
  if (d > 0xFFFF) throw ParameterError("d exceeds exponent width");
  if (m < 1 || m > 6) throw ParameterError("m must lie in 1..6");
}

}  // namespace

std::uint64_t sw_height(int d) {
  if (d < 1) throw ParameterError("d must be positive");
  std::uint64_t h = 1;
  while (h < static_cast<std::uint64_t>(d)) h <<= 1;
  return h;
}

SwImage total_class_image(int d, int m) {
  check(d, m);
  auto ring = v_ring(m, static_cast<std::uint32_t>(d));
  Polynomial w = Polynomial::one(ring);
  for (int r = 0; r < m; ++r) w = w + change_ring(dickson_upper_formula(m, r), ring);
  return SwImage{d, m, 1, SwKind::total, std::move(w)};
}

SwImage total_power_image(int d, int m, std::uint64_t p) {
  SwImage w = total_class_image(d, m);
  w.power = p;
  w.poly = pow(w.poly, p % sw_height(d));
  return w;
}

SwImage dual_image(int d, int m, std::uint64_t p) {
  if (p < 1) throw ParameterError("Whitney power must be at least 1");
  SwImage w = total_class_image(d, m);
  const std::uint64_t h = sw_height(d);
  w.power = p;
  w.kind = SwKind::dual;
  w.poly = pow(w.poly, (h - p % h) % h);
  return w;
}

std::optional<std::uint64_t> top_nonzero_degree(const SwImage& img) {
  auto t = top_degree(img.poly);
  if (!t || *t == 0) return std::nullopt;
  return t;
}

bool witness_coefficient(const SwImage& img, const Monomial& witness) {
  return monomial_coefficient(img.poly, witness);
}

}  // namespace f2coh
