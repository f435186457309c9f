#include "f2coh/ideal.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "f2coh/invariants.hpp"

namespace f2coh {

namespace {

void check_n(int n) {
  if (n < 1 || n > 6) throw ParameterError("n must lie in 1..6");
}

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return b[i / 64] >> (i % 64) & 1; }
void flip(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }
void xor_into(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
bool none(const Bits& b) {
  for (auto w : b)
    if (w) return false;
  return true;
}
std::size_t lowest(const Bits& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(b[i]));
  return static_cast<std::size_t>(-1);
}

// Reduced row echelon form over F2, pivots on the lowest set bit.
std::vector<Bits> rref(std::vector<Bits> rows) {
  std::vector<Bits> out;
  for (auto& r : rows) {
    for (const auto& p : out)
      if (test(r, lowest(p))) xor_into(r, p);
    if (none(r)) continue;
    const std::size_t lead = lowest(r);
    for (auto& p : out)
      if (test(p, lead)) xor_into(p, r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) { return lowest(a) < lowest(b); });
  return out;
}

Polynomial from_coords(const Ring& ring, const std::vector<Monomial>& basis, const Bits& v) {
  std::vector<Monomial> t;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (test(v, j)) t.push_back(basis[j]);
  return Polynomial::from_terms(ring, t);
}

struct Slice {
  std::vector<Monomial> monos;
  std::vector<bool> vanishing;  // expansion of the monomial itself is 0
  std::vector<Bits> kernel;     // rref, coordinates over monos
};

Slice kernel_slice(int n, std::uint32_t q, std::uint64_t degree) {
  Slice s;
  s.monos = q_monomials_of_degree(n, degree);
  const std::size_t cols = s.monos.size();
  const std::size_t cw = (cols + 63) / 64;
  auto qr = q_ring(n);

  std::map<Monomial, std::size_t> row_of;
  std::vector<std::vector<std::size_t>> images;
  for (const auto& m : s.monos) {
    auto e = expand_Q(Polynomial::monomial(qr, m), q);
    s.vanishing.push_back(e.is_zero());
    std::vector<std::size_t> rows;
    for (const auto& t : e.terms()) rows.push_back(row_of.try_emplace(t, row_of.size()).first->second);
    images.push_back(std::move(rows));
  }
  const std::size_t rw = (row_of.size() + 63) / 64;

  // Column images augmented with identity coordinates.
  struct Pivot {
    Bits img, aug;
    std::size_t lead;
  };
  std::vector<Pivot> pivots;
  std::vector<Bits> kernel;
  for (std::size_t j = 0; j < cols; ++j) {
    Bits img(rw, 0), aug(cw, 0);
    for (auto r : images[j]) flip(img, r);
    flip(aug, j);
    for (const auto& p : pivots)
      if (test(img, p.lead)) {
        xor_into(img, p.img);
        xor_into(aug, p.aug);
      }
    if (none(img)) {
      kernel.push_back(std::move(aug));
      continue;
    }
    const std::size_t lead = lowest(img);
    for (auto& p : pivots)
      if (test(p.img, lead)) {
        xor_into(p.img, img);
        xor_into(p.aug, aug);
      }
    pivots.push_back({std::move(img), std::move(aug), lead});
  }
  s.kernel = rref(std::move(kernel));
  return s;
}

}  // namespace

Ring q_ring(int n) {
  check_n(n);
  RingSpec s;
  s.vars = n;
  s.stem = "Q";
  s.index_base = 0;
  for (int r = 0; r < n; ++r) s.degrees.push_back((1u << n) - (1u << r));
  return make_ring(s);
}

Polynomial expand_Q(const Polynomial& p, std::uint32_t q) {
  const int n = p.ctx().vars();
  check_n(n);
  if (!p.ctx().same_ring(*q_ring(n))) throw ContextError("expected a polynomial in Q0..Q" + std::to_string(n - 1));
  auto target = with_max_terms(v_ring(n, q), p.ctx().max_terms());
  std::vector<Polynomial> images;
  for (int r = 0; r < n; ++r) images.push_back(change_ring(dickson_upper_formula(n, r), target));
  return substitute(p, images);
}

bool in_truncation_ideal(const Polynomial& p, std::uint32_t q) { return expand_Q(p, q).is_zero(); }

std::vector<Monomial> q_monomials_of_degree(int n, std::uint64_t degree) {
  check_n(n);
  std::vector<Monomial> out;
  Monomial cur;
  std::vector<std::uint64_t> deg;
  for (int r = 0; r < n; ++r) deg.push_back((1u << n) - (1u << r));
  // Recursion over Q0 first so the tuples come out in ascending lex order.
  auto rec = [&](auto&& self, int r, std::uint64_t left) -> void {
    if (r == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e * deg[static_cast<std::size_t>(r)] <= left; ++e) {
      if (e > kMaxExponent) throw ResourceError("exponent exceeds 16-bit range");
      cur[r] = static_cast<Exponent>(e);
      self(self, r + 1, left - e * deg[static_cast<std::size_t>(r)]);
    }
    cur[r] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Polynomial> ideal_kernel_in_degree(int n, std::uint32_t q, std::uint64_t degree) {
  check_n(n);
  if (degree > kDefaultIdealDegreeCap)
    throw ResourceError("degree above the slice cap " + std::to_string(kDefaultIdealDegreeCap));
  auto s = kernel_slice(n, q, degree);
  std::vector<Polynomial> out;
  for (const auto& v : s.kernel) out.push_back(from_coords(q_ring(n), s.monos, v));
  return out;
}

GenerationReport monomial_generation_check(int n, std::uint32_t q, std::uint64_t max_degree) {
  check_n(n);
  if (max_degree > kDefaultIdealDegreeCap)
    throw ResourceError("degree above the slice cap " + std::to_string(kDefaultIdealDegreeCap));
  GenerationReport rep;
  for (std::uint64_t deg = 0; deg <= max_degree; ++deg) {
    auto s = kernel_slice(n, q, deg);
    std::size_t mono_count = 0;
    for (bool v : s.vanishing) mono_count += v;
    if (s.kernel.size() == mono_count) continue;
    // Project away the vanishing-monomial coordinates; what survives lies outside their span.
    std::vector<Bits> rest;
    for (auto v : s.kernel) {
      for (std::size_t j = 0; j < s.monos.size(); ++j)
        if (s.vanishing[j] && test(v, j)) flip(v, j);
      rest.push_back(std::move(v));
    }
    rest = rref(std::move(rest));
    rep.holds = false;
    rep.failing_degree = deg;
    rep.counterexample = from_coords(q_ring(n), s.monos, rest.front());
    return rep;
  }
  return rep;
}

}  // namespace f2coh
