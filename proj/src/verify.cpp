#include "f2coh/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "f2coh/bounds.hpp"
#include "f2coh/cli.hpp"
#include "f2coh/errors.hpp"
#include "f2coh/homology.hpp"
#include "f2coh/ideal.hpp"
#include "f2coh/invariants.hpp"
#include "f2coh/parity.hpp"
#include "f2coh/pe_basis.hpp"
#include "f2coh/sw.hpp"

#ifndef F2COH_GOLDEN_DIR
#define F2COH_GOLDEN_DIR "golden"
#endif

namespace f2coh {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    throw CheckFailure(os.str());
  }
}

std::string str(std::int64_t v) { return std::to_string(v); }

bool pow2(std::int64_t d) { return d > 0 && std::has_single_bit(static_cast<std::uint64_t>(d)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckFailure("missing golden file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// CLI output for args must match golden_dir/name byte for byte.
void golden(const VerifyContext& ctx, const std::string& name, const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  expect(code == 0, "command for " + name + " exited with " + str(code) + ": " + err.str());
  const std::string want = read_file(ctx.golden_dir + "/" + name);
  if (out.str() != want) {
    std::size_t at = 0;
    const std::string got = out.str();
    while (at < got.size() && at < want.size() && got[at] == want[at]) ++at;
    throw CheckFailure("output differs from golden file " + name + " at byte " + std::to_string(at));
  }
}

Polynomial Qp(const char* t) { return parse_polynomial(t, q_ring(2)); }

// ---- invariants ----

void dickson_triple(const VerifyContext&) {
  for (int m = 1; m <= 5; ++m)
    for (int r = 0; r < m; ++r) {
      const std::string at = "m=" + str(m) + " r=" + str(r);
      auto brute = dickson_bruteforce(m, r);
      auto rec = dickson_recurrence(m, r);
      auto formula = dickson_upper_formula(m, r);
      expect(rec == formula, "recurrence and closed form differ at " + at);
      expect(k_to_x(formula) == brute, "closed form and product differ at " + at);
      expect(degrees_present(brute) == std::vector<std::uint64_t>{(1u << m) - (1u << r)}, "degree law fails at " + at);
    }
}

void dickson_top_form(const VerifyContext&) {
  for (int m = 1; m <= 16; ++m) {
    Monomial all;
    std::vector<Monomial> top;
    for (int j = 0; j < m; ++j) {
      all[j] = 1;
      Monomial t;
      t[j] = static_cast<Exponent>(1u << (m - 1 - j));
      top.push_back(t);
    }
    expect(dickson_recurrence(m, 0) == Polynomial::monomial(k_ring(m), all), "d_{m,0} is not k1...km at m=" + str(m));
    expect(dickson_upper_formula(m, m - 1) == Polynomial::from_terms(k_ring(m), top),
           "top Dickson form differs at m=" + str(m));
  }
}

void mui_m3(const VerifyContext&) {
  expect_eq(to_string(mui_h(3, 1)), std::string("x3"), "h1");
  expect_eq(to_string(mui_h(3, 2)), std::string("x2^2 + x2*x3"), "h2");
  auto x = [](const char* t) { return parse_polynomial(t, x_ring(3)); };
  expect(mui_h(3, 3) == x("x1") * x("x1 + x2") * x("x1 + x3") * x("x1 + x2 + x3"), "h3 differs from x1(x1+x2)(x1+x3)(x1+x2+x3)");
}

void restriction_images(const VerifyContext&) {
  for (int m = 1; m <= 6; ++m)
    for (int r = 1; r <= m; ++r) {
      auto v = restriction_v(m, r);
      expect(change_ring(v, x_ring(m)) == mui_h(m, r), "restriction image differs from h at m=" + str(m) + " r=" + str(r));
      expect(degrees_present(v) == std::vector<std::uint64_t>{1u << (r - 1)}, "restriction degree at m=" + str(m));
    }
}

// ---- ideal ----

void ideal_q3(const VerifyContext&) {
  for (const char* t : {"Q0^3", "Q0^2*Q1", "Q0*Q1^2", "Q0^2 + Q1^3"})
    expect(in_truncation_ideal(Qp(t), 3), std::string(t) + " should lie in the ideal for q=3");
  expect(!in_truncation_ideal(Qp("Q1^3"), 3), "Q1^3 should not lie in the ideal for q=3");
  auto rep = monomial_generation_check(2, 3, 8);
  expect(!rep.holds && rep.counterexample, "generation check for q=3 should fail");
  expect_eq(to_string(*rep.counterexample), std::string("Q0^2 + Q1^3"), "q=3 counterexample");
}

void ideal_q4(const VerifyContext&) {
  for (const char* t : {"Q0^4", "Q0^3*Q1", "Q0^2*Q1^2", "Q1^4"})
    expect(in_truncation_ideal(Qp(t), 4), std::string(t) + " should lie in the ideal for q=4");
  expect(!in_truncation_ideal(Qp("Q0*Q1^3"), 4), "Q0*Q1^3 should not lie in the ideal for q=4");
  auto rep = monomial_generation_check(2, 4, 10);
  expect(!rep.holds && rep.counterexample, "generation check for q=4 should fail");
}

void ideal_golden(const VerifyContext& ctx) {
  golden(ctx, "ideal.n2q3.txt", {"ideal", "--n", "2", "--q", "3", "--check-monomial-generation"});
}

// ---- sw ----

void dual_d3m2(const VerifyContext& ctx) {
  auto img = dual_image(3, 2, 1);
  expect_eq(to_string(img.poly), std::string("1 + V1^2 + V2 + V1*V2 + V2^2"), "dual image");
  expect(top_nonzero_degree(img) == 4u, "top nonzero degree should be 4");
  expect_eq(to_string(homogeneous_component(img.poly, 4)), std::string("V2^2"), "degree 4 component");
  golden(ctx, "dual-sw.d3m2.txt", {"dual-sw", "--d", "3", "--m", "2", "--power", "1"});
}

void dual_d6m2(const VerifyContext& ctx) {
  auto img = dual_image(6, 2, 1);
  expect_eq(to_string(homogeneous_component(img.poly, 10)), std::string("V1^2*V2^4 + V2^5"), "degree 10 component");
  expect_eq(to_string(homogeneous_component(img.poly, 11)), std::string("V1*V2^5"), "degree 11 component");
  expect(top_nonzero_degree(img) == 11u, "top nonzero degree should be 11");
  golden(ctx, "dual-sw.d6m2.txt", {"dual-sw", "--d", "6", "--m", "2", "--power", "1"});
}

void height_law(const VerifyContext&) {
  for (int d = 2; d <= 32; ++d)
    for (int m = 1; m <= 4; ++m) {
      const std::string at = "d=" + str(d) + " m=" + str(m);
      auto w = total_class_image(d, m).poly;
      expect(pow(w, sw_height(d)).is_one(), "w^H is not 1 at " + at);
      auto dual = dual_image(d, m, 1).poly;
      expect(dual == geometric_inverse(w), "dual image is not the inverse at " + at);
      expect((dual * w).is_one(), "dual times w is not 1 at " + at);
    }
}

void witness_power_of_2(const VerifyContext&) {
  for (int d : {2, 4, 8, 16})
    for (int m = 1; m <= 4; ++m) {
      Monomial all;
      for (int i = 0; i < m; ++i) all[i] = static_cast<Exponent>(d - 1);
      expect(witness_coefficient(dual_image(d, m, 1), all), "(V1...Vm)^{d-1} missing at d=" + str(d) + " m=" + str(m));
    }
}

void witness_lower_degree(const VerifyContext&) {
  for (int d = 3; d <= 32; ++d) {
    if (pow2(d)) continue;
    for (int m = 1; m <= 4; ++m) {
      auto img = dual_image(d, m, 1);
      const std::uint64_t deg = static_cast<std::uint64_t>(d - 1) << (m - 1);
      expect(!homogeneous_component(img.poly, deg).is_zero(),
             "degree (d-1)2^{m-1} vanishes at d=" + str(d) + " m=" + str(m));
    }
  }
}

void witness_even(const VerifyContext&) {
  for (int d = 6; d <= 32; d += 2) {
    if (pow2(d)) continue;
    for (int m = 1; m <= 4; ++m) {
      Monomial wit;
      for (int i = 0; i + 1 < m; ++i) wit[i] = 1;
      wit[m - 1] = static_cast<Exponent>(d - 1);
      expect(witness_coefficient(dual_image(d, m, 1), wit), "V1...V_{m-1}V_m^{d-1} missing at d=" + str(d) + " m=" + str(m));
    }
  }
}

void total_triviality(const VerifyContext&) {
  for (int d : {3, 7, 15, 31})
    for (int m = 1; m <= 4; ++m)
      expect(dual_image(d, m, static_cast<std::uint64_t>(d + 1)).poly.is_one(),
             "dual of the (d+1)-fold power is not 1 at d=" + str(d) + " m=" + str(m));
}

// ---- parity ----

void key_base_case(const VerifyContext&) {
  int cases = 0;
  for (int d = 2; d <= 16; ++d)
    for (std::int64_t ell = -8; ell <= 8; ++ell)
      for (std::int64_t r1 = 0; r1 <= 16; ++r1) {
        ++cases;
        expect(key_condition({d, 1, ell, {r1}}) == base_case_oracle(d, ell, r1),
               "key condition differs from the expansion at d=" + str(d) + " ell=" + str(ell) + " r1=" + str(r1));
      }
  expect_eq(cases, 4335, "case count");
}

void binom_properties(const VerifyContext&) {
  for (std::int64_t a = -256; a <= 256; ++a)
    for (std::int64_t b = 0; b <= 64; ++b) {
      const std::int64_t shift = std::int64_t{1} << std::bit_width(static_cast<std::uint64_t>(b));
      for (std::int64_t s : {shift, shift * 2, std::int64_t{1024}})
        expect(binom_parity(a, b) == binom_parity(a + s, b), "shift invariance fails at a=" + str(a) + " b=" + str(b));
      if (b >= 1)
        expect(binom_parity(a, b) == (binom_parity(a - 1, b) ^ binom_parity(a - 1, b - 1)),
               "Pascal rule fails at a=" + str(a) + " b=" + str(b));
    }
}

void key_families_check(const VerifyContext&) {
  expect(key_condition({6, 3, 7, {4, 4, 4}}) == 1, "family (2) at d=6 m=3");
  expect(key_condition({5, 2, -12, {0, 0}}) == 1, "family (3) at d=5 m=2");
  expect(key_condition({4, 2, 1, {0, 0}}) == 1, "family (1) at d=4 m=2");
  for (int d = 2; d <= 64; ++d)
    for (const auto& c : key_families(d, 6))
      expect(c.value == 1, "family " + str(c.family) + " fails at d=" + str(d) + " m=" + str(c.m));
}

// ---- bounds ----

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

void dominates(const std::vector<BoundResult>& rs, const std::string& at) {
  auto [dual, key] = split_values(rs);
  expect(key >= 0, "no key-parity value at " + at);
  if (dual) expect(key >= *dual, "dual-class bound " + str(*dual) + " exceeds key-parity " + str(key) + " at " + at);
}

void bounds_dominance(const VerifyContext&) {
  for (std::int64_t d = 2; d <= 64; ++d)
    for (std::int64_t k = 1; k <= 64; ++k) {
      dominates(bound_k_regular(d, k), "k-regular d=" + str(d) + " k=" + str(k));
      dominates(bound_l_skew(d, k), "l-skew d=" + str(d) + " l=" + str(k));
    }
  for (std::int64_t d = 2; d <= 32; ++d)
    for (std::int64_t k = 1; k <= 16; ++k)
      for (std::int64_t ell = 1; ell <= 16; ++ell)
        dominates(bound_combined(d, k, ell), "combined d=" + str(d) + " k=" + str(k) + " l=" + str(ell));
}

void bounds_examples(const VerifyContext&) {
  auto best = [](BoundKind kind, std::int64_t d, std::int64_t k, std::int64_t ell) {
    return best_bound({kind, d, k, ell}).value.value_or(-1);
  };
  expect_eq(best(BoundKind::k_regular, 6, 4, 1), 14, "k-regular d=6 k=4");
  expect_eq(best(BoundKind::k_regular, 4, 3, 1), 5, "k-regular d=4 k=3");
  expect_eq(best(BoundKind::k_regular, 2, 1, 1), 0, "k-regular d=2 k=1");
  expect_eq(best(BoundKind::l_skew, 2, 1, 4), 13, "l-skew d=2 l=4");
  expect_eq(best(BoundKind::combined, 6, 2, 2), 20, "combined d=6 k=2 l=2");
  expect_eq(best(BoundKind::combined, 4, 2, 2), 16, "combined d=4 k=2 l=2");
  expect_eq(best(BoundKind::complex_l_skew, 2, 1, 2), 5, "complex l-skew dC=2 l=2");
}

// ---- homology ----

void homology_examples(const VerifyContext& ctx) {
  using S = std::vector<std::uint64_t>;
  expect(poincare_config(3, 4) == S{1, 1, 2, 2, 1, 1, 1}, "d=3 k=4 series");
  expect(poincare_config(2, 4) == S{1, 1, 1, 1}, "d=2 k=4 series");
  expect(poincare_config(3, 2) == S{1, 1, 1}, "d=3 k=2 series");
  expect(poincare_config(2, 2) == S{1, 1}, "d=2 k=2 series");
  expect(poincare_config(2, 3) == S{1, 1, 0}, "d=2 k=3 series");
  for (int d = 2; d <= 9; ++d)
    expect(poincare_config(d, 2) == S(static_cast<std::size_t>(d), 1), "k=2 series is not all ones at d=" + str(d));
  golden(ctx, "homdim.d3k4.csv", {"homdim", "--d", "3", "--k", "4", "--format", "csv"});
}

void homology_fuks(const VerifyContext&) {
  for (int n = 1; n <= 40; ++n) {
    auto p = poincare_config(2, n);
    auto f = fuks_series(n);
    f.resize(p.size());
    expect(p == f, "enumeration and Fuks count differ at n=" + str(n));
  }
  for (int n = 2; n <= 512; ++n)
    expect((fuks_dim(n, n - 1) > 0) == pow2(n), "top-class criterion fails at n=" + str(n));
}

// ---- pe ----

std::vector<PeCount> trimmed(std::vector<PeCount> s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

void pe_d5m2(const VerifyContext&) {
  auto s = pe_series_split(5, 2);
  expect(s.size() == 45, "d=5 m=2 size is " + to_string_u128(s.size()));
  expect(pe_basis(5, 2).top().size() == 45, "materialized d=5 m=2 basis size");
  // Cell count in total degree r + s of the two-level table.
  const int d = 5;
  std::vector<PeCount> cells(3 * (d - 1) + 1, 0);
  for (int r = 0; r <= d - 1; ++r)
    for (int sdeg = 0; sdeg <= 2 * d - 2; ++sdeg) {
      int q = 0;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) q += (i + j == sdeg);
      int dim = (sdeg % 2 == 0) ? 1 : 0;
      if (r == 0 || r == d - 1) dim += q;
      cells[static_cast<std::size_t>(r + sdeg)] += static_cast<PeCount>(dim);
    }
  expect(trimmed(s.total()) == trimmed(cells), "degree profile differs from the cell count");
}

void pe_product(const VerifyContext&) {
  for (int d = 2; d <= 16; ++d)
    for (int m = 0; m <= 4; ++m) {
      std::vector<PeCount> prod{1};
      for (int r = 1; r <= m; ++r) {
        const std::size_t step = std::size_t{1} << (r - 1);
        std::vector<PeCount> next(prod.size() + static_cast<std::size_t>(d - 1) * step, 0);
        for (std::size_t i = 0; i < prod.size(); ++i)
          for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j) * step] += prod[i];
        prod = std::move(next);
      }
      expect(trimmed(pe_series_split(d, m).a_series) == trimmed(prod), "a-part differs from the product at d=" + str(d) + " m=" + str(m));
    }
}

void pe_recursion(const VerifyContext&) {
  for (int d = 2; d <= 16; ++d) {
    PeCount n = 1;
    for (int m = 0; m <= 5; ++m) {
      expect(pe_series_split(d, m).size() == n, "series total breaks the size recursion at d=" + str(d) + " m=" + str(m));
      expect(pe_basis_size(d, m) == n, "size function at d=" + str(d) + " m=" + str(m));
      n = static_cast<PeCount>(d) * n + n * (n - 1);
    }
  }
  for (int d = 2; d <= 6; ++d) {
    auto b = pe_basis(d, 3);
    for (std::size_t k = 0; k + 1 < b.levels.size(); ++k) {
      auto n = b.levels[k].size();
      expect(b.levels[k + 1].size() == static_cast<std::size_t>(d) * n + n * (n - 1), "materialized level size at d=" + str(d));
    }
  }
}

std::vector<Check> make_checks() {
  return {
      {"dickson.triple", "invariants", "product, recurrence and closed form agree for m <= 5", dickson_triple},
      {"dickson.top-form", "invariants", "d_{m,0} = k1...km and the top form for m <= 16", dickson_top_form},
      {"mui.m3", "invariants", "h1, h2, h3 for m = 3", mui_m3},
      {"res-v.images", "invariants", "restriction images match h and have degree 2^{r-1}", restriction_images},
      {"ideal.q3", "ideal", "membership and counterexample for n = 2, q = 3", ideal_q3},
      {"ideal.q4", "ideal", "membership and generation failure for n = 2, q = 4", ideal_q4},
      {"ideal.golden-n2q3", "ideal", "ideal report for n = 2, q = 3 matches the golden file", ideal_golden},
      {"dual-sw.d3m2", "sw", "dual image for d = 3, m = 2", dual_d3m2},
      {"dual-sw.d6m2", "sw", "dual image for d = 6, m = 2", dual_d6m2},
      {"sw.height-law", "sw", "w^H = 1 and dual = inverse for d <= 32, m <= 4", height_law},
      {"sw.witness-power-of-2", "sw", "(V1...Vm)^{d-1} for d in {2,4,8,16}", witness_power_of_2},
      {"sw.witness-lower-degree", "sw", "nonvanishing at (d-1)2^{m-1} for d not a power of 2", witness_lower_degree},
      {"sw.witness-even", "sw", "V1...V_{m-1}V_m^{d-1} for even d not a power of 2", witness_even},
      {"sw.total-triviality", "sw", "dual of the (d+1)-fold power is 1 for d + 1 a power of 2", total_triviality},
      {"key.base-case", "parity", "key condition equals the truncated expansion on 4335 cases", key_base_case},
      {"binom2.properties", "parity", "shift invariance and Pascal rule", binom_properties},
      {"key.families", "parity", "three parameter families give 1 for d <= 64, m <= 6", key_families_check},
      {"bounds.dominance", "bounds", "key-parity bounds dominate the dual-class bounds", bounds_dominance},
      {"bounds.examples", "bounds", "worked bound values", bounds_examples},
      {"homdim.examples", "homology", "worked configuration-space series", homology_examples},
      {"homdim.fuks", "homology", "enumeration equals the Fuks count; top-class criterion", homology_fuks},
      {"pe.d5m2", "pe", "d = 5, m = 2 size and degree profile", pe_d5m2},
      {"pe.product-law", "pe", "a-part equals the truncated product", pe_product},
      {"pe.size-recursion", "pe", "size recursion", pe_recursion},
  };
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = make_checks();
  return checks;
}

std::vector<std::string> verify_sections() {
  std::vector<std::string> out;
  for (const auto& c : all_checks())
    if (std::find(out.begin(), out.end(), c.section) == out.end()) out.push_back(c.section);
  return out;
}

std::string default_golden_dir() { return F2COH_GOLDEN_DIR; }

namespace {

CheckResult execute(const Check& c, const VerifyContext& ctx) {
  CheckResult r{c.id, c.section, false, {}, 0.0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(ctx);
    r.pass = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& section, const VerifyContext& ctx) {
  if (!section.empty()) {
    auto secs = verify_sections();
    if (std::find(secs.begin(), secs.end(), section) == secs.end())
      throw ParameterError("unknown section '" + section + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& c : all_checks())
    if (section.empty() || c.section == section) out.push_back(execute(c, ctx));
  return out;
}

CheckResult run_check(const std::string& id, const VerifyContext& ctx) {
  for (const auto& c : all_checks())
    if (c.id == id) return execute(c, ctx);
  throw ParameterError("unknown check '" + id + "'");
}

}  // namespace f2coh
