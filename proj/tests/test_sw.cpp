#include <bit>

#include "doctest.h"
#include "f2coh/invariants.hpp"
#include "f2coh/sw.hpp"

using namespace f2coh;

namespace {

Polynomial V(int m, int d, const char* t) { return parse_polynomial(t, v_ring(m, static_cast<std::uint32_t>(d))); }

bool pow2(int d) { return std::has_single_bit(static_cast<unsigned>(d)); }

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  int i = 0;
  for (int x : e) m[i++] = static_cast<Exponent>(x);
  return m;
}

}  // namespace

TEST_CASE("total class images") {
  CHECK(total_class_image(3, 2).poly == V(2, 3, "1 + V1^2 + V2 + V1*V2"));
  CHECK(total_class_image(6, 2).poly == V(2, 6, "1 + V1^2 + V2 + V1*V2"));
  for (int d = 2; d <= 6; ++d) CHECK(total_class_image(d, 1).poly == V(1, d, "1 + V1"));
  CHECK_THROWS_AS(total_class_image(1, 2), ParameterError);
  CHECK_THROWS_AS(total_class_image(3, 7), ParameterError);
}

TEST_CASE("height") {
  CHECK(sw_height(2) == 2);
  CHECK(sw_height(3) == 4);
  CHECK(sw_height(4) == 4);
  CHECK(sw_height(5) == 8);
  CHECK(sw_height(32) == 32);
}

TEST_CASE("dual image for d = 3, m = 2") {
  auto img = dual_image(3, 2, 1);
  CHECK(to_string(img.poly) == "1 + V1^2 + V2 + V1*V2 + V2^2");
  CHECK(top_nonzero_degree(img) == 4u);
  CHECK(to_string(homogeneous_component(img.poly, 4)) == "V2^2");
  CHECK_FALSE(witness_coefficient(img, mono({2, 3})));
  CHECK((img.poly * total_class_image(3, 2).poly).is_one());
}

TEST_CASE("dual image for d = 6, m = 2") {
  auto img = dual_image(6, 2, 1);
  CHECK(to_string(homogeneous_component(img.poly, 10)) == "V1^2*V2^4 + V2^5");
  CHECK(to_string(homogeneous_component(img.poly, 11)) == "V1*V2^5");
  CHECK(top_nonzero_degree(img) == 11u);
  CHECK(witness_coefficient(img, mono({1, 5})));
}

TEST_CASE("power-of-two witnesses") {
  auto img = dual_image(4, 2, 1);
  CHECK(top_nonzero_degree(img) == 9u);
  CHECK(witness_coefficient(img, mono({3, 3})));
  for (int d : {2, 4, 8})
    for (int m = 1; m <= 3; ++m) {
      auto w = total_class_image(d, m);
      Monomial all;
      for (int i = 0; i < m; ++i) all[i] = static_cast<Exponent>(d - 1);
      CHECK(witness_coefficient(dual_image(d, m, 1), all));
      CHECK(geometric_inverse(w.poly) == pow(w.poly, static_cast<std::uint64_t>(d - 1)));
    }
}

TEST_CASE("dual of the height power and of p > height") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(dual_image(3, m, 4).poly.is_one());
    CHECK_FALSE(top_nonzero_degree(dual_image(3, m, 4)).has_value());
    CHECK(dual_image(3, m, 5).poly == dual_image(3, m, 1).poly);
  }
  CHECK_THROWS_AS(dual_image(3, 2, 0), ParameterError);
}

TEST_CASE("height law and inverse agreement on a small grid") {
  for (int d = 2; d <= 12; ++d)
    for (int m = 1; m <= 3; ++m) {
      auto w = total_class_image(d, m).poly;
      CHECK(pow(w, sw_height(d)).is_one());
      for (std::uint64_t p = 1; p <= sw_height(d); ++p)
        CHECK(dual_image(d, m, p).poly == geometric_inverse(pow(w, p)));
    }
}

TEST_CASE("lower-degree nonvanishing for d not a power of 2") {
  for (int d = 3; d <= 12; ++d) {
    if (pow2(d)) continue;
    for (int m = 1; m <= 3; ++m) {
      auto img = dual_image(d, m, 1);
      const std::uint64_t deg = static_cast<std::uint64_t>(d - 1) << (m - 1);
      CHECK_FALSE(homogeneous_component(img.poly, deg).is_zero());
      if (d % 2 == 0) {
        Monomial wit;
        for (int i = 0; i + 1 < m; ++i) wit[i] = 1;
        wit[m - 1] = static_cast<Exponent>(d - 1);
        CHECK(witness_coefficient(img, wit));
      }
    }
  }
}

TEST_CASE("Whitney power d + 1") {
  for (int d : {2, 4, 8})
    for (int m = 1; m <= 3; ++m) CHECK(dual_image(d, m, d + 1).poly == dual_image(d, m, 1).poly);
  for (int d : {3, 7, 15})
    for (int m = 1; m <= 3; ++m) CHECK(dual_image(d, m, d + 1).poly.is_one());
  for (int d = 5; d <= 14; ++d) {
    if (pow2(d) || pow2(d + 1)) continue;
    const int g = static_cast<int>(sw_height(d));
    const int gap = g - d - 1;
    const int a1 = std::countr_zero(static_cast<unsigned>(gap));
    for (int m = 1; m <= 3; ++m) {
      auto img = dual_image(d, m, static_cast<std::uint64_t>(d + 1));
      CHECK_FALSE(homogeneous_component(img.poly, static_cast<std::uint64_t>(gap) << (m - 1)).is_zero());
      Monomial wit;
      for (int i = 0; i + 1 < m; ++i) wit[i] = static_cast<Exponent>(1 << a1);
      wit[m - 1] = static_cast<Exponent>(gap);
      CHECK(witness_coefficient(img, wit));
    }
  }
}
