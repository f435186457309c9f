#include "f2coh/parity.hpp"

#include <bit>
#include <string>

#include "f2coh/errors.hpp"
#include "f2coh/poly.hpp"

namespace f2coh {

DyadicInvariants dyadic_invariants(std::int64_t k) {
  if (k < 1) throw ParameterError("dyadic invariants need k >= 1");
  const auto u = static_cast<std::uint64_t>(k);
  return {std::popcount(u), static_cast<int>(u & 1), static_cast<int>(std::bit_width(u))};
}

int alpha(std::int64_t k) { return dyadic_invariants(k).alpha; }
int epsilon(std::int64_t k) { return dyadic_invariants(k).epsilon; }
int gamma(std::int64_t k) { return dyadic_invariants(k).gamma; }
bool is_power_of_two(std::int64_t k) { return k >= 1 && std::has_single_bit(static_cast<std::uint64_t>(k)); }

int binom_parity(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  std::uint64_t top = static_cast<std::uint64_t>(a);
  if (a < 0) {
    // (1+T)^{2^N} = 1 mod T^{b+1} once 2^N > b, so a and a + 2^N agree.
    unsigned n = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(b)));
    while (n < 63 && (std::uint64_t{1} << n) < static_cast<std::uint64_t>(-(a + 1)) + 1) ++n;
    if (n >= 63) throw ParameterError("binomial argument out of range");
    top = static_cast<std::uint64_t>(a + (std::int64_t{1} << n));
  }
  return (static_cast<std::uint64_t>(b) & ~top) == 0 ? 1 : 0;
}

std::int64_t key_upper(const KeyQuery& q) {
  if (q.d < 2) throw ParameterError("d must be at least 2");
  if (q.m < 1 || q.m > 30) throw ParameterError("m must lie in 1..30");
  if (q.r.size() != static_cast<std::size_t>(q.m))
    throw ParameterError("expected " + std::to_string(q.m) + " multiplicities");
  std::int64_t sum = 0;
  for (int i = 1; i < q.m; ++i) sum += q.r[static_cast<std::size_t>(i - 1)] << (q.m - 1 - i);
  sum += q.r.back();
  const std::int64_t w = (std::int64_t{1} << (q.m - 1)) - 1;
  return sum - (q.d - 1 + q.ell) * w - q.ell;
}

int key_condition(const KeyQuery& q) { return binom_parity(key_upper(q), q.d - 1); }

int base_case_oracle(int d, std::int64_t ell, std::int64_t r1) {
  if (d < 2) throw ParameterError("d must be at least 2");
  RingSpec s;
  s.vars = 1;
  s.stem = "f";
  s.caps = {static_cast<std::uint32_t>(d)};
  auto ring = make_ring(s);
  const auto one_plus_f = parse_polynomial("1 + f1", ring);
  const std::int64_t n = r1 - ell;
  Polynomial p = n >= 0 ? pow(one_plus_f, static_cast<std::uint64_t>(n))
                        : geometric_inverse(pow(one_plus_f, static_cast<std::uint64_t>(-n)));
  Monomial top;
  top[0] = static_cast<Exponent>(d - 1);
  return monomial_coefficient(p, top) ? 1 : 0;
}

std::vector<FamilyCase> key_families(int d, int max_m) {
  if (d < 2) throw ParameterError("d must be at least 2");
  const int t = gamma(d) - 1;
  const std::int64_t e = d - (std::int64_t{1} << t);
  std::vector<FamilyCase> out;
  for (int m = 1; m <= max_m; ++m) {
    std::vector<std::int64_t> r1(static_cast<std::size_t>(m), 2 * e);
    r1[0] = 0;
    std::vector<std::int64_t> r2(static_cast<std::size_t>(m), 2 * e);
    std::vector<std::int64_t> r3(static_cast<std::size_t>(m), 0);
    auto add = [&](int fam, std::int64_t ell, std::vector<std::int64_t> r, std::int64_t k) {
      FamilyCase c{fam, m, ell, r, k, 0};
      c.value = key_condition({d, m, ell, std::move(r)});
      out.push_back(std::move(c));
    };
    add(1, 1, r1, 0);
    add(2, d + 1, r2, 0);
    for (std::int64_t k = 0; k <= 2; ++k) add(3, -(d - 1 + k * (std::int64_t{1} << (t + 1))), r3, k);
  }
  return out;
}

}  // namespace f2coh
