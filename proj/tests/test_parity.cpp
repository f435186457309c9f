#include "doctest.h"
#include "f2coh/parity.hpp"

using namespace f2coh;

namespace {

// Pascal triangle mod 2; negative tops via binom(-n, b) = +-binom(n+b-1, b).
int pascal_parity(std::int64_t a, std::int64_t b) {
  static std::vector<std::vector<int>> tri = [] {
    std::vector<std::vector<int>> t(600);
    for (std::size_t n = 0; n < t.size(); ++n) {
      t[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] ^ t[n - 1][k];
    }
    return t;
  }();
  if (b < 0) return 0;
  if (a < 0) a = -a + b - 1;
  if (b > a) return 0;
  return tri[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

}  // namespace

TEST_CASE("dyadic invariants") {
  auto i4 = dyadic_invariants(4);
  CHECK(i4.alpha == 1);
  CHECK(i4.epsilon == 0);
  CHECK(i4.gamma == 3);
  auto i1 = dyadic_invariants(1);
  CHECK((i1.alpha == 1 && i1.epsilon == 1 && i1.gamma == 1));
  auto i7 = dyadic_invariants(7);
  CHECK((i7.alpha == 3 && i7.epsilon == 1 && i7.gamma == 3));
  CHECK_THROWS_AS(dyadic_invariants(0), ParameterError);
}

TEST_CASE("binomial parity examples") {
  CHECK(binom_parity(-1, 5) == 1);
  CHECK(binom_parity(6, 2) == 1);
  CHECK(binom_parity(-2, 2) == 1);
  CHECK(binom_parity(0, 1) == 0);
  CHECK(binom_parity(3, 5) == 0);
  for (int d = 2; d <= 20; ++d)
    for (int mt = 1; mt <= 8; ++mt)
      if (d - 1 < (1 << mt)) CHECK(binom_parity(d - 1 - (1 << mt), d - 1) == 1);
}

TEST_CASE("binomial parity against Pascal's triangle") {
  for (std::int64_t a = -256; a <= 256; ++a)
    for (std::int64_t b = 0; b <= 64; ++b) CHECK(binom_parity(a, b) == pascal_parity(a, b));
}

TEST_CASE("shift invariance and Pascal recursion") {
  for (std::int64_t a = -256; a <= 256; ++a)
    for (std::int64_t b = 0; b <= 64; ++b) {
      for (int n = 0; n <= 9; ++n)
        if ((std::int64_t{1} << n) > b) CHECK(binom_parity(a, b) == binom_parity(a + (std::int64_t{1} << n), b));
      if (b >= 1) CHECK(binom_parity(a, b) == (binom_parity(a - 1, b) ^ binom_parity(a - 1, b - 1)));
    }
}

TEST_CASE("key condition examples") {
  CHECK(key_condition({3, 2, 1, {0, 2}}) == 1);
  CHECK(key_upper({3, 2, 1, {0, 2}}) == -2);
  CHECK(key_condition({2, 1, 0, {1}}) == 1);
  CHECK(key_condition({4, 1, 2, {1}}) == 1);
  CHECK(key_upper({4, 1, 2, {1}}) == -1);
  CHECK_THROWS_AS(key_condition({3, 2, 1, {0}}), ParameterError);
}

TEST_CASE("base-case oracle") {
  CHECK(base_case_oracle(3, 0, 3) == 1);
  CHECK(base_case_oracle(2, 1, 1) == 0);
  CHECK(base_case_oracle(4, 1, 0) == 1);
  for (int d = 2; d <= 16; ++d)
    for (std::int64_t ell = -8; ell <= 8; ++ell)
      for (std::int64_t r1 = 0; r1 <= 16; ++r1)
        CHECK(key_condition({d, 1, ell, {r1}}) == base_case_oracle(d, ell, r1));
}

TEST_CASE("parameter families") {
  CHECK(key_condition({6, 3, 7, {4, 4, 4}}) == 1);
  CHECK(key_condition({5, 2, -12, {0, 0}}) == 1);
  CHECK(key_condition({4, 2, 1, {0, 0}}) == 1);
  for (int d = 2; d <= 64; ++d) {
    auto cases = key_families(d);
    CHECK(cases.size() == 30);
    for (const auto& c : cases) CHECK(c.value == 1);
  }
}
