#include <algorithm>

#include "doctest.h"
#include "f2coh/bounds.hpp"

using namespace f2coh;

namespace {

std::optional<std::int64_t> pick(const std::vector<BoundResult>& rs, const std::string& source,
                                 const std::string& label) {
  for (const auto& r : rs)
    if (r.source == source && r.case_label == label) return r.value;
  return std::nullopt;
}

bool has(const std::vector<BoundResult>& rs, const std::string& label) {
  return std::any_of(rs.begin(), rs.end(), [&](const auto& r) { return r.case_label == label; });
}

// Largest value over the dual-class cases, and the key-parity value.
std::pair<std::optional<std::int64_t>, std::int64_t> split_values(const std::vector<BoundResult>& rs) {
  std::optional<std::int64_t> dual;
  std::int64_t key = -1;
  for (const auto& r : rs) {
    if (!r.value) continue;
    if (r.source == kKeyParity) key = *r.value;
    else dual = std::max(dual.value_or(*r.value), *r.value);
  }
  return {dual, key};
}

}  // namespace

TEST_CASE("k-regular examples") {
  CHECK(pick(bound_k_regular(4, 3), kDualClass, "d-power-of-2") == 5);
  auto r64 = bound_k_regular(6, 4);
  CHECK(pick(r64, kDualClass, "d-even-not-power-of-2") == 14);
  CHECK(pick(r64, kKeyParity, "dyadic") == 14);
  CHECK(pick(bound_k_regular(3, 2), kDualClass, "d-not-power-of-2") == 3);
  CHECK_THROWS_AS(bound_k_regular(0, 2), ParameterError);
  CHECK_THROWS_AS(bound_k_regular(2, 0), ParameterError);
}

TEST_CASE("l-skew examples") {
  auto r = bound_l_skew(2, 4);
  CHECK(pick(r, kDualClass, "d-equals-2") == 13);
  CHECK(pick(r, kKeyParity, "dyadic") == 13);
  auto r35 = bound_l_skew(3, 5);
  REQUIRE(has(r35, "d-plus-1-power-of-2"));
  CHECK_FALSE(pick(r35, kDualClass, "d-plus-1-power-of-2").has_value());
  CHECK(pick(bound_l_skew(5, 2), kDualClass, "l-equals-2") == 12);
}

TEST_CASE("combined examples") {
  CHECK(pick(bound_combined(2, 2, 2), kDualClass, "d-equals-2") == 8);
  CHECK(pick(bound_combined(4, 2, 2), kDualClass, "d-power-of-2-l-equals-2") == 16);
  CHECK(pick(bound_combined(6, 2, 2), kKeyParity, "dyadic") == 20);
}

TEST_CASE("complex examples") {
  CHECK(pick(bound_complex_k_regular(4, 3), kDualClass, "d-power-of-2") == 2);
  // d = 2*4-1 = 7 for the real domain paired with complex dimension 4.
  CHECK(pick(bound_complex_k_regular(7, 3), kKeyParity, "dyadic") == 5);
  CHECK(pick(bound_complex_l_skew(2, 2), kKeyParity, "dyadic") == 5);
}

TEST_CASE("best bound") {
  auto b = best_bound({BoundKind::k_regular, 6, 4, 1});
  CHECK(b.value == 14);
  CHECK(b.case_label == "d-even-not-power-of-2");
  auto z = best_bound({BoundKind::k_regular, 2, 1, 1});
  CHECK(z.value == 0);
  CHECK(pick(bound_k_regular(2, 1), kKeyParity, "dyadic") == 0);
  // Only the key-parity family speaks here, and it just restates the dimension count.
  auto s = best_bound({BoundKind::l_skew, 3, 1, 5});
  CHECK(s.value == 18);
  CHECK_FALSE(s.nontrivial);
}

TEST_CASE("key-parity family dominates: k-regular") {
  for (std::int64_t d = 2; d <= 64; ++d)
    for (std::int64_t k = 1; k <= 64; ++k) {
      auto [dual, key] = split_values(bound_k_regular(d, k));
      REQUIRE(dual);
      CHECK(key >= *dual);
    }
}

TEST_CASE("key-parity family dominates: l-skew") {
  for (std::int64_t d = 2; d <= 64; ++d)
    for (std::int64_t ell = 1; ell <= 64; ++ell) {
      auto [dual, key] = split_values(bound_l_skew(d, ell));
      if (dual) CHECK(key >= *dual);
      CHECK(key >= trivial_baseline({BoundKind::l_skew, d, 1, ell}));
    }
}

TEST_CASE("key-parity family dominates: combined") {
  for (std::int64_t d = 2; d <= 32; ++d)
    for (std::int64_t k = 1; k <= 16; ++k)
      for (std::int64_t ell = 1; ell <= 16; ++ell) {
        auto [dual, key] = split_values(bound_combined(d, k, ell));
        if (dual) CHECK(key >= *dual);
      }
}

TEST_CASE("key-parity family dominates: complex") {
  for (std::int64_t d = 3; d <= 129; d += 2)
    for (std::int64_t k = 1; k <= 64; ++k) {
      auto [dual, key] = split_values(bound_complex_k_regular(d, k));
      REQUIRE(dual);
      CHECK(key >= *dual);
    }
  for (std::int64_t dc = 2; dc <= 64; ++dc)
    for (std::int64_t ell = 1; ell <= 64; ++ell) {
      auto [dual, key] = split_values(bound_complex_l_skew(dc, ell));
      if (dual) CHECK(key >= *dual);
    }
}

TEST_CASE("bounds grow with the multiplicity inside a case") {
  for (std::int64_t d = 2; d <= 32; ++d)
    for (std::int64_t k = 2; k < 40; ++k) {
      auto a = bound_k_regular(d, k), b = bound_k_regular(d, k + 1);
      for (const auto& r : a) {
        auto next = pick(b, r.source, r.case_label);
        if (r.value && next) CHECK(*next >= *r.value);
      }
      auto x = bound_l_skew(d, k), y = bound_l_skew(d, k + 1);
      for (const auto& r : x) {
        auto next = pick(y, r.source, r.case_label);
        if (r.value && next) CHECK(*next >= *r.value);
      }
    }
}
