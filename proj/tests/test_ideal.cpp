#include <random>

#include "doctest.h"
#include "f2coh/ideal.hpp"
#include "f2coh/invariants.hpp"

using namespace f2coh;

namespace {
Polynomial Q(const char* t, int n = 2) { return parse_polynomial(t, q_ring(n)); }
Polynomial V(const char* t, std::uint32_t q = 0) { return parse_polynomial(t, v_ring(2, q)); }
}  // namespace

TEST_CASE("expansions without truncation") {
  CHECK(expand_Q(Q("Q0"), 0) == V("V1*V2"));
  CHECK(expand_Q(Q("Q1"), 0) == V("V2 + V1^2"));
  CHECK(expand_Q(Q("Q0^3"), 0) == V("V1^3*V2^3"));
  CHECK(expand_Q(Q("Q0*Q1^3"), 0) == V("V1*V2^4 + V1^3*V2^3 + V1^5*V2^2 + V1^7*V2"));
  CHECK(expand_Q(Q("Q1^4"), 0) == V("V1^8 + V2^4"));
  CHECK(expand_Q(Q("Q0^2 + Q1^3"), 0) == V("V2^3 + V2*V1^4 + V1^6"));
  CHECK_THROWS_AS(expand_Q(parse_polynomial("V1", v_ring(2, 0)), 3), ContextError);
}

TEST_CASE("membership for q = 3") {
  for (const char* t : {"Q0^3", "Q0^2*Q1", "Q0*Q1^2", "Q0^2 + Q1^3", "0"}) CHECK(in_truncation_ideal(Q(t), 3));
  CHECK_FALSE(in_truncation_ideal(Q("Q1^3"), 3));
}

TEST_CASE("membership for q = 4") {
  for (const char* t : {"Q0^4", "Q0^3*Q1", "Q0^2*Q1^2", "Q1^4"}) CHECK(in_truncation_ideal(Q(t), 4));
  CHECK_FALSE(in_truncation_ideal(Q("Q0*Q1^3"), 4));
  CHECK(expand_Q(Q("Q0*Q1^3"), 4) == V("V1^3*V2^3", 4));
}

TEST_CASE("monomial enumeration per degree") {
  auto ms = q_monomials_of_degree(2, 6);
  REQUIRE(ms.size() == 2);
  CHECK(monomial_to_string(*q_ring(2), ms[0]) == "Q1^3");
  CHECK(monomial_to_string(*q_ring(2), ms[1]) == "Q0^2");
  CHECK(q_monomials_of_degree(2, 1).empty());
  CHECK(q_monomials_of_degree(3, 0).size() == 1);
}

TEST_CASE("kernel slices") {
  auto k6 = ideal_kernel_in_degree(2, 3, 6);
  REQUIRE(k6.size() == 1);
  CHECK(to_string(k6[0]) == "Q0^2 + Q1^3");
  CHECK(ideal_kernel_in_degree(2, 3, 3).empty());
  for (std::uint32_t q = 1; q <= 5; ++q)
    for (std::uint64_t j = 0; j <= 10; ++j) {
      auto k = ideal_kernel_in_degree(1, q, j);
      if (j >= q) {
        REQUIRE(k.size() == 1);
        CHECK(k[0] == parse_polynomial(("Q0^" + std::to_string(j)).c_str(), q_ring(1)));
      } else {
        CHECK(k.empty());
      }
    }
  CHECK_THROWS_AS(ideal_kernel_in_degree(2, 3, 65), ResourceError);
}

TEST_CASE("kernel elements vanish and the slice dimension matches a brute-force count") {
  for (std::uint32_t q = 2; q <= 5; ++q)
    for (std::uint64_t deg = 0; deg <= 18; ++deg) {
      auto monos = q_monomials_of_degree(2, deg);
      if (monos.size() > 12) continue;
      std::size_t count = 0;
      for (std::uint32_t mask = 0; mask < (1u << monos.size()); ++mask) {
        std::vector<Monomial> t;
        for (std::size_t j = 0; j < monos.size(); ++j)
          if (mask >> j & 1) t.push_back(monos[j]);
        count += in_truncation_ideal(Polynomial::from_terms(q_ring(2), t), q);
      }
      auto k = ideal_kernel_in_degree(2, q, deg);
      CHECK(count == (std::size_t{1} << k.size()));
      for (const auto& v : k) CHECK(in_truncation_ideal(v, q));
    }
}

TEST_CASE("monomial generation fails for n = 2") {
  auto r3 = monomial_generation_check(2, 3, 8);
  CHECK_FALSE(r3.holds);
  REQUIRE(r3.counterexample);
  CHECK(to_string(*r3.counterexample) == "Q0^2 + Q1^3");
  CHECK(r3.failing_degree == 6u);
  auto r4 = monomial_generation_check(2, 4, 10);
  CHECK_FALSE(r4.holds);
  CHECK(r4.failing_degree == 9u);
  CHECK(to_string(*r4.counterexample) == "Q0^3 + Q0*Q1^3");
  for (std::uint32_t q = 1; q <= 6; ++q) CHECK(monomial_generation_check(1, q, 20).holds);
}

TEST_CASE("linearity and multiplicativity") {
  std::mt19937 rng(5);
  auto qr = q_ring(2);
  for (int round = 0; round < 30; ++round) {
    const std::uint32_t q = 2 + static_cast<std::uint32_t>(round % 4);
    const std::uint64_t deg = 6 + static_cast<std::uint64_t>(round % 7);
    auto k = ideal_kernel_in_degree(2, q, deg);
    if (k.size() >= 2) {
      auto a = k[rng() % k.size()], b = k[rng() % k.size()];
      CHECK(in_truncation_ideal(a + b, q));
    }
    std::vector<Monomial> ta, tb;
    for (int t = 0; t < 3; ++t) {
      Monomial x, y;
      x[0] = static_cast<Exponent>(rng() % 3);
      x[1] = static_cast<Exponent>(rng() % 3);
      y[0] = static_cast<Exponent>(rng() % 3);
      y[1] = static_cast<Exponent>(rng() % 3);
      ta.push_back(x);
      tb.push_back(y);
    }
    auto a = Polynomial::from_terms(qr, ta), b = Polynomial::from_terms(qr, tb);
    auto full = expand_Q(a, 0) * expand_Q(b, 0);
    CHECK(expand_Q(a * b, q) == change_ring(full, v_ring(2, q)));
  }
}
