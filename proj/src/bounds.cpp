#include "f2coh/bounds.hpp"

#include <bit>

#include "f2coh/parity.hpp"

namespace f2coh {

namespace {

void check_param(std::int64_t v, std::int64_t lo, const char* name) {
  if (v < lo) throw ParameterError(std::string(name) + " must be at least " + std::to_string(lo));
  if (v > kMaxBoundParameter) throw ParameterError(std::string(name) + " exceeds 2^30");
}

std::int64_t pw(int e) { return std::int64_t{1} << e; }

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// d = 2^t + e with 0 <= e < 2^t.
struct Dyadic {
  int t;
  std::int64_t e;
};
Dyadic split(std::int64_t d) {
  int t = gamma(d) - 1;
  return {t, d - pw(t)};
}

// 2^gamma(d) - d - 1 and its 2-adic valuation.
std::int64_t gap(std::int64_t d) { return pw(gamma(d)) - d - 1; }
int val2(std::int64_t x) { return std::countr_zero(static_cast<std::uint64_t>(x)); }

struct Collector {
  BoundQuery q;
  std::vector<BoundResult> out;
  void add(const char* source, const char* label, std::optional<std::int64_t> v, std::string formula) {
    BoundResult r{v, source, label, std::move(formula), false};
    if (v) r.nontrivial = *v > trivial_baseline(q);
    out.push_back(std::move(r));
  }
};

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::k_regular: return "k-regular";
    case BoundKind::l_skew: return "l-skew";
    case BoundKind::combined: return "k-regular-l-skew";
    case BoundKind::complex_k_regular: return "complex-k-regular";
    case BoundKind::complex_l_skew: return "complex-l-skew";
  }
  return "?";
}

BoundKind parse_bound_kind(const std::string& text) {
  for (auto k : {BoundKind::k_regular, BoundKind::l_skew, BoundKind::combined,
                 BoundKind::complex_k_regular, BoundKind::complex_l_skew})
    if (to_string(k) == text) return k;
  throw ParameterError("unknown bound kind '" + text + "'");
}

std::int64_t trivial_baseline(const BoundQuery& q) {
  switch (q.kind) {
    case BoundKind::k_regular:
    case BoundKind::complex_k_regular: return q.k - 1;
    case BoundKind::l_skew:
    case BoundKind::complex_l_skew: return (q.d + 1) * q.ell - 2;
    case BoundKind::combined: return q.k + (q.d + 1) * q.ell - 2;
  }
  return 0;
}

std::vector<BoundResult> bound_k_regular(std::int64_t d, std::int64_t k) {
  check_param(d, 1, "d");
  check_param(k, 1, "k");
  Collector c{{BoundKind::k_regular, d, k, 1}, {}};
  const std::int64_t a = alpha(k), eps = epsilon(k);
  if (is_power_of_two(d)) {
    c.add(kDualClass, "d-power-of-2", d * (k - a) + a - 1, "N <= d(k-alpha(k))+alpha(k)-1");
  } else {
    c.add(kDualClass, "d-not-power-of-2", (d - 1) * (k - eps) / 2 + k - 1,
          "N <= (d-1)(k-eps(k))/2+k-1");
    if (d % 2 == 0)
      c.add(kDualClass, "d-even-not-power-of-2", d * (k - eps) / 2 + k - a + eps - 1,
            "N <= d(k-eps(k))/2+k-alpha(k)+eps(k)-1");
  }
  if (d >= 2) {
    auto [t, e] = split(d);
    c.add(kKeyParity, "dyadic", (d - e - 1) * (k - a) + e * (a - eps) + k - 1,
          "N <= (d-e-1)(k-alpha(k))+e(alpha(k)-eps(k))+k-1, d=2^t+e");
  }
  return c.out;
}

std::vector<BoundResult> bound_l_skew(std::int64_t d, std::int64_t ell) {
  check_param(d, 2, "d");
  check_param(ell, 1, "ell");
  Collector c{{BoundKind::l_skew, d, 1, ell}, {}};
  const std::int64_t a = alpha(ell), eps = epsilon(ell);
  const bool p2 = is_power_of_two(d), p2next = is_power_of_two(d + 1);
  if (d == 2 && ell >= 2) c.add(kDualClass, "d-equals-2", 4 * ell - a - 2, "N <= 4l-alpha(l)-2");
  if (ell == 2) c.add(kDualClass, "l-equals-2", pw(gamma(d)) + d - 1, "N <= 2^gamma(d)+d-1");
  if (p2 && ell >= 2)
    c.add(kDualClass, "d-power-of-2", 2 * d * ell - (d - 1) * a - 2, "N <= 2dl-(d-1)alpha(l)-2");
  if (p2next && ell >= 2) c.add(kDualClass, "d-plus-1-power-of-2", std::nullopt, "no result");
  if (d >= 5 && !p2 && !p2next && ell >= 3) {
    const std::int64_t g = gap(d);
    c.add(kDualClass, "generic", g * (ell - eps) / 2 + (d + 1) * ell - 2,
          "N <= (2^gamma(d)-d-1)(l-eps(l))/2+(d+1)l-2");
    const std::int64_t p = pw(val2(g));
    c.add(kDualClass, "generic-2-adic", (g + p) * (ell - eps) / 2 - p * a + (d + 1) * ell - 2,
          "N <= (2^gamma(d)-d-1+2^a1)(l-eps(l))/2-2^a1 alpha(l)+(d+1)l-2");
  }
  auto [t, e] = split(d);
  c.add(kKeyParity, "dyadic", (d - 2 * e - 1) * (ell - a) + (d + 1) * ell - 2,
        "N <= (d-2e-1)(l-alpha(l))+(d+1)l-2, d=2^t+e");
  return c.out;
}

std::vector<BoundResult> bound_combined(std::int64_t d, std::int64_t k, std::int64_t ell) {
  check_param(d, 1, "d");
  check_param(k, 1, "k");
  check_param(ell, 1, "ell");
  Collector c{{BoundKind::combined, d, k, ell}, {}};
  const std::int64_t ak = alpha(k), ek = epsilon(k), al = alpha(ell), el = epsilon(ell);
  const bool p2 = is_power_of_two(d), p2next = is_power_of_two(d + 1);
  const std::int64_t base = (d + 1) * ell + k - 2;
  if (d == 2)
    c.add(kDualClass, "d-equals-2", (d + 1) * ell + 2 * k - ak + ell - al - 2,
          "N <= (d+1)l+2k-alpha(k)+l-alpha(l)-2");
  if (d >= 2 && p2 && ell == 2)
    c.add(kDualClass, "d-power-of-2-l-equals-2", base + (d - 1) * (k - ak + 1),
          "N <= (d+1)l+k-2+(d-1)(k-alpha(k)+1)");
  if (d >= 2 && !p2 && ell == 2)
    c.add(kDualClass, "d-not-power-of-2-l-equals-2", base + (d - 1) * (k - ek) / 2 + gap(d),
          "N <= (d+1)l+k-2+(d-1)(k-eps(k))/2+2^gamma(d)-d-1");
  if (d >= 2 && p2)
    c.add(kDualClass, "d-power-of-2", base + (d - 1) * (k - ak + ell - al),
          "N <= (d+1)l+k-2+(d-1)(k-alpha(k)+l-alpha(l))");
  if (p2next)
    c.add(kDualClass, "d-plus-1-power-of-2", base + (d - 1) * (k - ek) / 2,
          "N <= (d+1)l+k-2+(d-1)(k-eps(k))/2");
  if (d >= 5 && !p2 && !p2next)
    c.add(kDualClass, "generic", base + (d - 1) * (k - ek) / 2 + gap(d) * (ell - el) / 2,
          "N <= (d+1)l+k-2+(d-1)(k-eps(k))/2+(2^gamma(d)-d-1)(l-eps(l))/2");
  if (d >= 6 && d % 2 == 0 && !p2 && ell >= 3) {
    const std::int64_t g = gap(d), p = pw(val2(g));
    c.add(kDualClass, "even-2-adic",
          base + d * (k - ek) / 2 - ak + ek + (g + p) * (ell - el) / 2 - p * al,
          "N <= (d+1)l+k-2+d(k-eps(k))/2-alpha(k)+eps(k)+(2^gamma(d)-d-1+2^a1)(l-eps(l))/2-2^a1 alpha(l)");
  }
  if (d >= 2) {
    auto [t, e] = split(d);
    c.add(kKeyParity, "dyadic", (d - e - 1) * (k - ak) + e * (ak - ek) + (d - 2 * e - 1) * (ell - al) + base,
          "N <= (d-e-1)(k-alpha(k))+e(alpha(k)-eps(k))+(d-2e-1)(l-alpha(l))+(d+1)l+k-2, d=2^t+e");
  }
  return c.out;
}

std::vector<BoundResult> bound_complex_k_regular(std::int64_t d, std::int64_t k) {
  check_param(d, 1, "d");
  check_param(k, 1, "k");
  Collector c{{BoundKind::complex_k_regular, d, k, 1}, {}};
  const std::int64_t a = alpha(k), eps = epsilon(k);
  // N < (M+k)/2, so the largest excluded N is ceil((M+k)/2) - 1.
  if (is_power_of_two(d)) {
    const std::int64_t m = (d - 1) * (k - a);
    c.add(kDualClass, "d-power-of-2", (m + k + 1) / 2 - 1, "N < (M+k)/2, M=(d-1)(k-alpha(k))");
  } else {
    const std::int64_t m = (d - 1) * (k - eps) / 2;
    c.add(kDualClass, "d-not-power-of-2", (m + k + 1) / 2 - 1, "N < (M+k)/2, M=(d-1)(k-eps(k))/2");
  }
  if (d >= 3 && d % 2 == 1) {
    const std::int64_t dc = (d + 1) / 2;
    auto [t, e] = split(dc);
    c.add(kKeyParity, "dyadic", (dc - 1 - e) * (k - a) + e * (a - eps) + k - 1,
          "N <= (dC-1-e)(k-alpha(k))+e(alpha(k)-eps(k))+k-1, d=2dC-1, dC=2^t+e");
  }
  return c.out;
}

std::vector<BoundResult> bound_complex_l_skew(std::int64_t dc, std::int64_t ell) {
  check_param(dc, 1, "d");
  check_param(ell, 1, "ell");
  Collector c{{BoundKind::complex_l_skew, dc, 1, ell}, {}};
  const std::int64_t a = alpha(ell), eps = epsilon(ell);
  const std::int64_t wide = pw(gamma(dc) + 1) - 2 * dc - 1;
  auto add = [&](const char* label, std::int64_t m, const char* mtext) {
    c.add(kDualClass, label, dc + floor_div2(m - ell - 2), std::string("N <= d+(M-l-2)/2, M=") + mtext);
  };
  if (ell == 2) add("l-equals-2", wide, "2^(gamma(d)+1)-2d-1");
  if (is_power_of_two(dc)) add("d-power-of-2", (2 * dc - 1) * (ell - a), "(2d-1)(l-alpha(l))");
  else if (dc >= 3) add("d-not-power-of-2", wide * (ell - eps) / 2, "(2^(gamma(d)+1)-2d-1)(l-eps(l))/2");
  if (dc >= 2) {
    auto [t, e] = split(dc);
    c.add(kKeyParity, "dyadic", (dc - 1 - 2 * e) * (ell - a) + (dc + 1) * ell - 2,
          "N <= (dC-1-2e)(l-alpha(l))+(dC+1)l-2, dC=2^t+e");
  }
  return c.out;
}

std::vector<BoundResult> bounds_for(const BoundQuery& q) {
  switch (q.kind) {
    case BoundKind::k_regular: return bound_k_regular(q.d, q.k);
    case BoundKind::l_skew: return bound_l_skew(q.d, q.ell);
    case BoundKind::combined: return bound_combined(q.d, q.k, q.ell);
    case BoundKind::complex_k_regular: return bound_complex_k_regular(q.d, q.k);
    case BoundKind::complex_l_skew: return bound_complex_l_skew(q.d, q.ell);
  }
  return {};
}

BoundResult best_bound(const BoundQuery& q) {
  auto all = bounds_for(q);
  const BoundResult* best = nullptr;
  for (const auto& r : all)
    if (r.value && (!best || *r.value > *best->value)) best = &r;
  if (best) return *best;
  if (!all.empty()) return all.front();
  return BoundResult{std::nullopt, "none", "none", "no applicable case", false};
}

}  // namespace f2coh
