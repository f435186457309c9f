#include "f2coh/cli.hpp"

#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "f2coh/bounds.hpp"
#include "f2coh/errors.hpp"
#include "f2coh/homology.hpp"
#include "f2coh/ideal.hpp"
#include "f2coh/invariants.hpp"
#include "f2coh/parity.hpp"
#include "f2coh/pe_basis.hpp"
#include "f2coh/sw.hpp"
#include "f2coh/verify.hpp"
#include "json.hpp"

namespace f2coh {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { table, csv, json };

struct Globals {
  Format format = Format::table;
  std::size_t max_terms = kDefaultMaxTerms;
  std::uint64_t max_grid = 65536;
};

Json header() {
  Json j;
  j["version"] = kJsonVersion;
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json poly_terms(const Polynomial& p) { return Json(term_strings(p)); }

void emit_poly(std::ostream& out, Format f, Json meta, const Polynomial& p) {
  switch (f) {
    case Format::table:
      out << to_string(p) << '\n';
      break;
    case Format::csv:
      out << "term\n";
      for (const auto& t : term_strings(p)) out << t << '\n';
      break;
    case Format::json:
      meta["terms"] = poly_terms(p);
      emit_json(out, meta);
      break;
  }
}

std::uint64_t json_count(PeCount v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw ResourceError("count " + to_string_u128(v) + " does not fit a JSON integer; use table or csv");
  return static_cast<std::uint64_t>(v);
}

std::string opt_value(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

Json opt_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json bound_json(const BoundResult& r) {
  Json j;
  j["source"] = r.source;
  j["case"] = r.case_label;
  j["excluded_N"] = opt_json(r.value);
  j["formula"] = r.formula;
  j["nontrivial"] = r.nontrivial;
  return j;
}

// The multiplicity columns printed for a query: unused parameters print as 0.
std::pair<std::int64_t, std::int64_t> kl_columns(const BoundQuery& q) {
  switch (q.kind) {
    case BoundKind::k_regular:
    case BoundKind::complex_k_regular:
      return {q.k, 0};
    case BoundKind::l_skew:
    case BoundKind::complex_l_skew:
      return {0, q.ell};
    case BoundKind::combined:
      return {q.k, q.ell};
  }
  return {0, 0};
}

bool uses_ell_only(BoundKind k) { return k == BoundKind::l_skew || k == BoundKind::complex_l_skew; }

struct Options {
  // dickson / mui / res-v
  int m = 1;
  int r = 0;
  int i = 1;
  std::string basis = "k";
  // dual-sw
  int d = 2;
  std::uint64_t power = 1;
  std::optional<std::uint64_t> degree;
  std::string witness;
  // ideal
  int n = 2;
  std::uint32_t q = 3;
  std::uint64_t max_degree = 16;
  bool check_generation = false;
  std::string member;
  // key / binom2
  std::int64_t ell = 0;
  std::vector<std::int64_t> rs;
  std::int64_t a = 0;
  std::int64_t b = 0;
  // bounds
  std::string kind = "k-regular";
  std::int64_t bd = 2;
  std::int64_t bk = 1;
  std::int64_t bl = 1;
  bool all_theorems = false;
  std::vector<std::int64_t> table;
  // homdim / fuks
  int hk = 1;
  int max_d = HomologyLimits{}.max_d;
  int max_k = HomologyLimits{}.max_k;
  int fn = 1;
  std::optional<int> fk;
  // pe-series
  bool split = false;
  // verify-paper
  std::string section;
  std::string golden_dir;
};

void cmd_dickson(const Options& o, const Globals& g, std::ostream& out) {
  Polynomial p = Polynomial::zero(k_ring(1));
  if (o.basis == "k") p = dickson_upper_formula(o.m, o.r);
  else if (o.basis == "x") p = o.m <= 5 ? dickson_bruteforce(o.m, o.r) : k_to_x(dickson_upper_formula(o.m, o.r));
  else throw ParameterError("basis must be x or k");
  Json j = header();
  j["basis"] = o.basis;
  j["m"] = o.m;
  j["r"] = o.r;
  emit_poly(out, g.format, j, p);
}

void cmd_mui(const Options& o, const Globals& g, std::ostream& out) {
  Json j = header();
  j["m"] = o.m;
  j["i"] = o.i;
  emit_poly(out, g.format, j, mui_h(o.m, o.i));
}

void cmd_res_v(const Options& o, const Globals& g, std::ostream& out) {
  Json j = header();
  j["m"] = o.m;
  j["r"] = o.r;
  emit_poly(out, g.format, j, restriction_v(o.m, o.r));
}

void cmd_dual_sw(const Options& o, const Globals& g, std::ostream& out) {
  auto img = dual_image(o.d, o.m, o.power);
  auto top = top_nonzero_degree(img);
  std::vector<std::uint64_t> degs = o.degree ? std::vector<std::uint64_t>{*o.degree} : degrees_present(img.poly);
  std::optional<Monomial> wit;
  if (!o.witness.empty()) wit = parse_monomial(o.witness, img.poly.ctx());
  const std::string top_text = top ? std::to_string(*top) : "none";
  switch (g.format) {
    case Format::table:
      out << "d " << o.d << "\nm " << o.m << "\npower " << o.power << '\n';
      if (!o.degree) out << "dual " << to_string(img.poly) << '\n';
      out << "top_nonzero " << top_text << '\n';
      for (auto deg : degs) out << "degree " << deg << ": " << to_string(homogeneous_component(img.poly, deg)) << '\n';
      if (wit) out << "witness " << monomial_to_string(img.poly.ctx(), *wit) << ": " << witness_coefficient(img, *wit) << '\n';
      break;
    case Format::csv:
      out << "degree,component\n";
      for (auto deg : degs) out << deg << ',' << to_string(homogeneous_component(img.poly, deg)) << '\n';
      break;
    case Format::json: {
      Json j = header();
      j["d"] = o.d;
      j["m"] = o.m;
      j["power"] = o.power;
      j["top_nonzero"] = top ? Json(*top) : Json(nullptr);
      Json comps = Json::object();
      for (auto deg : degs) comps[std::to_string(deg)] = to_string(homogeneous_component(img.poly, deg));
      j["components"] = comps;
      if (wit) {
        Json w;
        w["monomial"] = monomial_to_string(img.poly.ctx(), *wit);
        w["coefficient"] = witness_coefficient(img, *wit) ? 1 : 0;
        j["witness"] = w;
      }
      emit_json(out, j);
      break;
    }
  }
}

void cmd_ideal(const Options& o, const Globals& g, std::ostream& out) {
  if (o.n < 1 || o.n > 6) throw ParameterError("n must be in 1..6");
  if (o.q < 1) throw ParameterError("q must be at least 1");
  std::optional<bool> member;
  Polynomial mp = Polynomial::zero(q_ring(o.n));
  if (!o.member.empty()) {
    mp = parse_polynomial(o.member, q_ring(o.n));
    member = in_truncation_ideal(mp, o.q);
  }
  std::optional<GenerationReport> gen;
  if (o.check_generation) gen = monomial_generation_check(o.n, o.q, o.max_degree);
  std::vector<std::pair<std::uint64_t, std::vector<Polynomial>>> slices;
  if (!member && !gen)
    for (std::uint64_t deg = 0; deg <= o.max_degree; ++deg) {
      auto basis = ideal_kernel_in_degree(o.n, o.q, deg);
      if (!basis.empty()) slices.emplace_back(deg, std::move(basis));
    }
  switch (g.format) {
    case Format::table:
      out << "n " << o.n << "\nq " << o.q << '\n';
      if (member) out << "member " << to_string(mp) << ": " << (*member ? "true" : "false") << '\n';
      if (gen) {
        out << "max_degree " << o.max_degree << '\n';
        out << "monomial_generation " << (gen->holds ? "holds" : "fails") << '\n';
        if (gen->counterexample) {
          out << "failing_degree " << *gen->failing_degree << '\n';
          out << "counterexample " << to_string(*gen->counterexample) << '\n';
        }
      }
      for (const auto& [deg, basis] : slices) {
        out << "degree " << deg << ":";
        for (std::size_t k = 0; k < basis.size(); ++k) out << (k ? "; " : " ") << to_string(basis[k]);
        out << '\n';
      }
      break;
    case Format::csv:
      if (member) out << "poly,in_ideal\n" << to_string(mp) << ',' << (*member ? "true" : "false") << '\n';
      if (gen) {
        out << "holds,failing_degree,counterexample\n" << (gen->holds ? "true" : "false") << ',';
        out << (gen->failing_degree ? std::to_string(*gen->failing_degree) : "none") << ',';
        out << (gen->counterexample ? to_string(*gen->counterexample) : "none") << '\n';
      }
      if (!member && !gen) {
        out << "degree,element\n";
        for (const auto& [deg, basis] : slices)
          for (const auto& p : basis) out << deg << ',' << to_string(p) << '\n';
      }
      break;
    case Format::json: {
      Json j = header();
      j["n"] = o.n;
      j["q"] = o.q;
      j["max_degree"] = o.max_degree;
      if (member) {
        Json mj;
        mj["poly"] = to_string(mp);
        mj["in_ideal"] = *member;
        j["member"] = mj;
      }
      if (gen) {
        Json gj;
        gj["holds"] = gen->holds;
        gj["failing_degree"] = gen->failing_degree ? Json(*gen->failing_degree) : Json(nullptr);
        gj["counterexample"] = gen->counterexample ? Json(to_string(*gen->counterexample)) : Json(nullptr);
        j["generation"] = gj;
      }
      if (!member && !gen) {
        Json arr = Json::array();
        for (const auto& [deg, basis] : slices) {
          Json s;
          s["degree"] = deg;
          Json els = Json::array();
          for (const auto& p : basis) els.push_back(to_string(p));
          s["basis"] = els;
          arr.push_back(s);
        }
        j["kernel"] = arr;
      }
      emit_json(out, j);
      break;
    }
  }
}

void cmd_key(const Options& o, const Globals& g, std::ostream& out) {
  KeyQuery q{o.d, o.m, o.ell, o.rs};
  const auto upper = key_upper(q);
  const int value = key_condition(q);
  switch (g.format) {
    case Format::table:
      out << "upper " << upper << "\nlower " << (o.d - 1) << "\nvalue " << value << '\n';
      break;
    case Format::csv: {
      out << "d,m,ell,upper,lower,value\n";
      out << o.d << ',' << o.m << ',' << o.ell << ',' << upper << ',' << (o.d - 1) << ',' << value << '\n';
      break;
    }
    case Format::json: {
      Json j = header();
      j["d"] = o.d;
      j["m"] = o.m;
      j["ell"] = o.ell;
      j["r"] = o.rs;
      j["upper"] = upper;
      j["lower"] = o.d - 1;
      j["value"] = value;
      emit_json(out, j);
      break;
    }
  }
}

void cmd_binom2(const Options& o, const Globals& g, std::ostream& out) {
  const int v = binom_parity(o.a, o.b);
  switch (g.format) {
    case Format::table:
      out << v << '\n';
      break;
    case Format::csv:
      out << "a,b,parity\n" << o.a << ',' << o.b << ',' << v << '\n';
      break;
    case Format::json: {
      Json j = header();
      j["a"] = o.a;
      j["b"] = o.b;
      j["parity"] = v;
      emit_json(out, j);
      break;
    }
  }
}

void cmd_bounds(const Options& o, const Globals& g, std::ostream& out) {
  const BoundKind kind = parse_bound_kind(o.kind);
  const std::string csv_header = "d,k,l,source,case,excluded_N\n";
  if (!o.table.empty()) {
    if (o.table.size() != 2) throw ParameterError("--table expects dmax,kmax");
    const std::int64_t dmax = o.table[0], kmax = o.table[1];
    const std::int64_t dmin = kind == BoundKind::complex_l_skew ? 1 : 2;
    if (dmax < dmin || kmax < 1) throw ParameterError("--table bounds must be positive");
    if (static_cast<std::uint64_t>(dmax) * static_cast<std::uint64_t>(kmax) > g.max_grid)
      throw ResourceError("table has more than --max-grid = " + std::to_string(g.max_grid) + " cells");
    Json rows = Json::array();
    if (g.format != Format::json) out << csv_header;
    for (std::int64_t d = dmin; d <= dmax; ++d)
      for (std::int64_t x = 1; x <= kmax; ++x) {
        BoundQuery q{kind, d, uses_ell_only(kind) ? 1 : x, uses_ell_only(kind) ? x : o.bl};
        auto best = best_bound(q);
        auto [kc, lc] = kl_columns(q);
        if (g.format == Format::json) {
          Json r;
          r["d"] = d;
          r["k"] = kc;
          r["l"] = lc;
          r["source"] = best.source;
          r["case"] = best.case_label;
          r["excluded_N"] = opt_json(best.value);
          rows.push_back(r);
        } else {
          out << d << ',' << kc << ',' << lc << ',' << best.source << ',' << best.case_label << ','
              << opt_value(best.value) << '\n';
        }
      }
    if (g.format == Format::json) {
      Json j = header();
      j["kind"] = to_string(kind);
      j["rows"] = rows;
      emit_json(out, j);
    }
    return;
  }
  BoundQuery q{kind, o.bd, o.bk, o.bl};
  auto [kc, lc] = kl_columns(q);
  if (o.all_theorems) {
    auto all = bounds_for(q);
    switch (g.format) {
      case Format::table:
      case Format::csv:
        out << csv_header;
        for (const auto& r : all)
          out << q.d << ',' << kc << ',' << lc << ',' << r.source << ',' << r.case_label << ',' << opt_value(r.value) << '\n';
        break;
      case Format::json: {
        Json j = header();
        j["kind"] = to_string(kind);
        j["d"] = q.d;
        j["k"] = kc;
        j["l"] = lc;
        Json arr = Json::array();
        for (const auto& r : all) arr.push_back(bound_json(r));
        j["results"] = arr;
        emit_json(out, j);
        break;
      }
    }
    return;
  }
  auto best = best_bound(q);
  switch (g.format) {
    case Format::table:
      out << "kind " << to_string(kind) << "\nd " << q.d << "\nk " << kc << "\nl " << lc << '\n';
      out << "excluded_N " << opt_value(best.value) << "\nsource " << best.source << "\ncase " << best.case_label
          << "\nformula " << best.formula << "\nnontrivial " << (best.nontrivial ? "true" : "false") << '\n';
      break;
    case Format::csv:
      out << csv_header << q.d << ',' << kc << ',' << lc << ',' << best.source << ',' << best.case_label << ','
          << opt_value(best.value) << '\n';
      break;
    case Format::json: {
      Json j = header();
      j["kind"] = to_string(kind);
      j["d"] = q.d;
      j["k"] = kc;
      j["l"] = lc;
      j["best"] = bound_json(best);
      emit_json(out, j);
      break;
    }
  }
}

void emit_series(std::ostream& out, Format f, const std::string& index, Json meta, const std::vector<std::uint64_t>& s) {
  switch (f) {
    case Format::table:
      for (std::size_t x = 0; x < s.size(); ++x) out << index << ' ' << x << ": " << s[x] << '\n';
      break;
    case Format::csv:
      out << index << ",dim\n";
      for (std::size_t x = 0; x < s.size(); ++x) out << x << ',' << s[x] << '\n';
      break;
    case Format::json:
      meta["dims"] = s;
      emit_json(out, meta);
      break;
  }
}

void cmd_homdim(const Options& o, const Globals& g, std::ostream& out) {
  auto s = poincare_config(o.d, o.hk, HomologyLimits{o.max_d, o.max_k});
  Json j = header();
  j["d"] = o.d;
  j["k"] = o.hk;
  emit_series(out, g.format, "i", j, s);
}

void cmd_fuks(const Options& o, const Globals& g, std::ostream& out) {
  if (o.fk) {
    const auto v = fuks_dim(o.fn, *o.fk);
    Json j = header();
    j["n"] = o.fn;
    j["k"] = *o.fk;
    j["dim"] = v;
    if (g.format == Format::json) emit_json(out, j);
    else if (g.format == Format::csv) out << "n,k,dim\n" << o.fn << ',' << *o.fk << ',' << v << '\n';
    else out << v << '\n';
    return;
  }
  auto s = fuks_series(o.fn);
  s.pop_back();  // k = n is always 0
  Json j = header();
  j["n"] = o.fn;
  emit_series(out, g.format, "k", j, s);
}

void cmd_pe_series(const Options& o, const Globals& g, std::ostream& out) {
  auto s = pe_series_split(o.d, o.m);
  auto total = s.total();
  switch (g.format) {
    case Format::table:
      for (std::size_t x = 0; x < total.size(); ++x) {
        out << "degree " << x << ": ";
        if (o.split) out << "a " << to_string_u128(s.a_series[x]) << " i " << to_string_u128(s.i_series[x]) << " total ";
        out << to_string_u128(total[x]) << '\n';
      }
      out << "size " << to_string_u128(s.size()) << '\n';
      break;
    case Format::csv:
      out << (o.split ? "degree,a,i,total\n" : "degree,total\n");
      for (std::size_t x = 0; x < total.size(); ++x) {
        out << x << ',';
        if (o.split) out << to_string_u128(s.a_series[x]) << ',' << to_string_u128(s.i_series[x]) << ',';
        out << to_string_u128(total[x]) << '\n';
      }
      break;
    case Format::json: {
      Json j = header();
      j["d"] = o.d;
      j["m"] = o.m;
      auto arr = [](const std::vector<PeCount>& v) {
        Json a = Json::array();
        for (auto c : v) a.push_back(json_count(c));
        return a;
      };
      j["a_series"] = arr(s.a_series);
      j["i_series"] = arr(s.i_series);
      j["total"] = arr(total);
      emit_json(out, j);
      break;
    }
  }
}

int cmd_verify(const Options& o, const Globals& g, std::ostream& out) {
  VerifyContext ctx{o.golden_dir.empty() ? default_golden_dir() : o.golden_dir};
  auto results = run_checks(o.section, ctx);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  switch (g.format) {
    case Format::table:
      for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.section << "]";
        if (!r.pass) out << ": " << r.detail;
        out << '\n';
      }
      out << "summary: " << (results.size() - failed) << " passed, " << failed << " failed\n";
      break;
    case Format::csv:
      out << "id,section,result\n";
      for (const auto& r : results) out << r.id << ',' << r.section << ',' << (r.pass ? "pass" : "fail") << '\n';
      break;
    case Format::json: {
      Json j = header();
      Json arr = Json::array();
      for (const auto& r : results) {
        Json c;
        c["id"] = r.id;
        c["section"] = r.section;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        arr.push_back(c);
      }
      j["checks"] = arr;
      j["passed"] = results.size() - failed;
      j["failed"] = failed;
      emit_json(out, j);
      break;
    }
  }
  return failed ? kExitVerification : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mod-2 computations for configuration spaces and embedding obstructions", "f2coh"};
  app.require_subcommand(1);
  Globals g;
  Options o;
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--max-terms", g.max_terms, "Term guard for polynomial results")->check(CLI::PositiveNumber);
  app.add_option("--max-grid", g.max_grid, "Cell guard for bound tables")->check(CLI::PositiveNumber);

  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  auto* dickson = sub("dickson", "Dickson invariant d_{m,r}");
  dickson->add_option("--m", o.m, "Rank")->required();
  dickson->add_option("--r", o.r, "Index 0..m-1")->required();
  dickson->add_option("--basis", o.basis, "x (ambient) or k (upper-triangular)")->check(CLI::IsMember({"x", "k"}));

  auto* mui = sub("mui", "Mui invariant h_i");
  mui->add_option("--m", o.m, "Rank")->required();
  mui->add_option("--i", o.i, "Index 1..m")->required();

  auto* resv = sub("res-v", "Restriction image of V_{m,r}");
  resv->add_option("--m", o.m, "Rank")->required();
  resv->add_option("--r", o.r, "Index 1..m")->required();

  auto* dual = sub("dual-sw", "Dual Stiefel-Whitney image in F2[V]/<V^d>");
  dual->add_option("--d", o.d, "Dimension")->required();
  dual->add_option("--m", o.m, "Rank")->required();
  dual->add_option("--power", o.power, "Whitney power p >= 1");
  dual->add_option("--degree", o.degree, "Only this homogeneous component");
  dual->add_option("--witness", o.witness, "Report the coefficient of this monomial");

  auto* ideal = sub("ideal", "Truncation ideal in the Dickson algebra");
  ideal->add_option("--n", o.n, "Number of generators Q0..Q_{n-1}")->required();
  ideal->add_option("--q", o.q, "Truncation exponent")->required();
  ideal->add_option("--max-degree", o.max_degree, "Largest degree searched");
  ideal->add_flag("--check-monomial-generation", o.check_generation, "Test generation by monomials");
  ideal->add_option("--member", o.member, "Q-polynomial to test for membership");

  auto* key = sub("key", "Binomial key condition");
  key->add_option("--d", o.d, "Dimension")->required();
  key->add_option("--m", o.m, "Rank")->required();
  key->add_option("--ell", o.ell, "Shift")->required();
  key->add_option("--r", o.rs, "r1,...,rm")->required()->delimiter(',');

  auto* binom = sub("binom2", "Parity of binom(a, b), a may be negative");
  binom->add_option("--a", o.a, "Upper argument")->required();
  binom->add_option("--b", o.b, "Lower argument")->required();

  auto* bounds = sub("bounds", "Embedding bounds");
  bounds->add_option("--kind", o.kind, "k-regular | l-skew | k-regular-l-skew | complex-k-regular | complex-l-skew");
  bounds->add_option("--d", o.bd, "Domain dimension");
  bounds->add_option("--k", o.bk, "Regularity k");
  bounds->add_option("--ell", o.bl, "Skewness l");
  bounds->add_flag("--all-theorems", o.all_theorems, "List every applicable case");
  bounds->add_option("--table", o.table, "dmax,kmax grid of best bounds")->delimiter(',');

  auto* homdim = sub("homdim", "Mod-2 Betti numbers of unordered configuration spaces");
  homdim->add_option("--d", o.d, "Dimension")->required();
  homdim->add_option("--k", o.hk, "Number of points")->required();
  homdim->add_option("--max-d", o.max_d, "Grid guard on d");
  homdim->add_option("--max-k", o.max_k, "Grid guard on k");

  auto* fuks = sub("fuks", "Fuks count of powers-of-2 partitions");
  fuks->add_option("--n", o.fn, "Number of strands")->required();
  fuks->add_option("--k", o.fk, "Single degree");

  auto* pe = sub("pe-series", "Poincare series of the epicycle quotient");
  pe->add_option("--d", o.d, "Dimension")->required();
  pe->add_option("--m", o.m, "Rank")->required();
  pe->add_flag("--split", o.split, "Show the a-part and i-part");

  auto* verify = sub("verify-paper", "Run the golden verification suite");
  verify->add_option("--section", o.section, "Restrict to one section");
  verify->add_option("--golden-dir", o.golden_dir, "Directory of golden files");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParameter;
  }

  g.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
  const std::size_t saved_terms = default_max_terms();
  std::ostringstream buf;
  int code = kExitOk;
  try {
    set_default_max_terms(g.max_terms);
    if (*dickson) cmd_dickson(o, g, buf);
    else if (*mui) cmd_mui(o, g, buf);
    else if (*resv) cmd_res_v(o, g, buf);
    else if (*dual) cmd_dual_sw(o, g, buf);
    else if (*ideal) cmd_ideal(o, g, buf);
    else if (*key) cmd_key(o, g, buf);
    else if (*binom) cmd_binom2(o, g, buf);
    else if (*bounds) cmd_bounds(o, g, buf);
    else if (*homdim) cmd_homdim(o, g, buf);
    else if (*fuks) cmd_fuks(o, g, buf);
    else if (*pe) cmd_pe_series(o, g, buf);
    else if (*verify) code = cmd_verify(o, g, buf);
  } catch (const ResourceError& e) {
    set_default_max_terms(saved_terms);
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    set_default_max_terms(saved_terms);
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const std::bad_alloc&) {
    set_default_max_terms(saved_terms);
    err << "resource limit: out of memory\n";
    return kExitResource;
  }
  set_default_max_terms(saved_terms);
  out << buf.str();
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace f2coh
