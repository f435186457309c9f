#include <random>

#include "doctest.h"
#include "f2coh/invariants.hpp"

using namespace f2coh;

namespace {
Polynomial X(int m, const char* t) { return parse_polynomial(t, x_ring(m)); }
Polynomial K(int m, const char* t) { return parse_polynomial(t, k_ring(m)); }
}  // namespace

TEST_CASE("mui invariants for m = 3") {
  CHECK(mui_h(3, 1) == X(3, "x3"));
  CHECK(mui_h(3, 2) == X(3, "x2^2 + x2*x3"));
  auto h3 = X(3, "x1") * X(3, "x1 + x2") * X(3, "x1 + x3") * X(3, "x1 + x2 + x3");
  CHECK(mui_h(3, 3) == h3);
  CHECK_THROWS_AS(mui_h(3, 4), ParameterError);
  CHECK_THROWS_AS(mui_h(9, 1), ParameterError);
}

TEST_CASE("brute-force Dickson invariants") {
  CHECK(dickson_bruteforce(2, 0) == X(2, "x1^2*x2 + x1*x2^2"));
  CHECK(dickson_bruteforce(2, 1) == X(2, "x1*x2 + x1^2 + x2^2"));
  CHECK(dickson_bruteforce(1, 0) == X(1, "x1"));
  CHECK_THROWS_AS(dickson_bruteforce(6, 0), ParameterError);
  CHECK_THROWS_AS(dickson_bruteforce(2, 2), ParameterError);
}

TEST_CASE("recurrence and closed form") {
  CHECK(dickson_recurrence(2, 0) == K(2, "k1*k2"));
  CHECK(dickson_recurrence(2, 1) == K(2, "k2 + k1^2"));
  CHECK(dickson_upper_formula(2, 1) == K(2, "k2 + k1^2"));
  CHECK(dickson_upper_formula(3, 1) == K(3, "k2*k3 + k1^2*k3 + k1^2*k2^2"));
  for (int m = 1; m <= 16; ++m) {
    std::vector<Monomial> top;
    Monomial all;
    for (int j = 0; j < m; ++j) {
      all[j] = 1;
      Monomial t;
      t[j] = static_cast<Exponent>(1u << (m - 1 - j));
      top.push_back(t);
    }
    CHECK(dickson_recurrence(m, 0) == Polynomial::monomial(k_ring(m), all));
    CHECK(dickson_upper_formula(m, m - 1) == Polynomial::from_terms(k_ring(m), top));
  }
  for (int m = 1; m <= 12; ++m)
    for (int r = 0; r < m; ++r) CHECK(dickson_recurrence(m, r) == dickson_upper_formula(m, r));
}

TEST_CASE("three constructions agree in the ambient variables") {
  for (int m = 1; m <= 5; ++m)
    for (int r = 0; r < m; ++r) {
      auto brute = dickson_bruteforce(m, r);
      CHECK(k_to_x(dickson_upper_formula(m, r)) == brute);
      CHECK(top_degree(brute) == (1u << m) - (1u << r));
      CHECK(degrees_present(brute).size() == 1);
    }
}

TEST_CASE("degree laws") {
  for (int m = 1; m <= 6; ++m)
    for (int i = 1; i <= m; ++i) {
      CHECK(degrees_present(mui_h(m, i)) == std::vector<std::uint64_t>{1u << (i - 1)});
      CHECK(degrees_present(restriction_v(m, i)) == std::vector<std::uint64_t>{1u << (i - 1)});
    }
  for (int m = 1; m <= 10; ++m)
    for (int r = 0; r < m; ++r)
      CHECK(degrees_present(dickson_upper_formula(m, r)) ==
            std::vector<std::uint64_t>{(1u << m) - (1u << r)});
}

TEST_CASE("restriction images") {
  for (int m = 1; m <= 5; ++m) CHECK(to_string(restriction_v(m, 1)) == "y" + std::to_string(m));
  CHECK(restriction_v(2, 2) == parse_polynomial("y1^2 + y1*y2", y_ring(2)));
  for (int m = 1; m <= 6; ++m)
    for (int r = 1; r <= m; ++r) {
      auto v = restriction_v(m, r);
      CHECK(change_ring(v, x_ring(m)) == mui_h(m, r));
      for (const auto& t : v.terms()) CHECK(t[m - r] >= 1);
    }
}

TEST_CASE("Dickson invariants are fixed by invertible substitutions") {
  std::mt19937 rng(2024);
  for (int m = 1; m <= 3; ++m) {
    int tested = 0;
    while (tested < 8) {
      BitMatrix g(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
      for (auto& row : g)
        for (auto& v : row) v = static_cast<int>(rng() & 1);
      if (!rank_full(g)) continue;
      ++tested;
      for (int r = 0; r < m; ++r) {
        auto d = dickson_bruteforce(m, r);
        CHECK(linear_substitute(d, g) == d);
      }
    }
  }
}
