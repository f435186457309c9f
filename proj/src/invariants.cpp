#include "f2coh/invariants.hpp"

#include <bit>
#include <string>

namespace f2coh {

namespace {

void check_m(int m, int limit) {
  if (m < 1 || m > limit)
    throw ParameterError("m must lie in 1.." + std::to_string(limit));
}

Ring uniform(int m, const char* stem) {
  RingSpec s;
  s.vars = m;
  s.stem = stem;
  return make_ring(s);
}

Polynomial linear_form(const Ring& r, const std::vector<int>& vars) {
  std::vector<Monomial> t;
  for (int v : vars) {
    Monomial x;
    x[v] = 1;
    t.push_back(x);
  }
  return Polynomial::from_terms(r, t);
}

// Product of (lead + sum of a subset of span) over all subsets.
Polynomial subset_product(const Ring& r, int lead, const std::vector<int>& span) {
  Polynomial acc = Polynomial::one(r);
  for (std::uint32_t mask = 0; mask < (1u << span.size()); ++mask) {
    std::vector<int> vars{lead};
    for (std::size_t b = 0; b < span.size(); ++b)
      if (mask >> b & 1) vars.push_back(span[b]);
    acc = acc * linear_form(r, vars);
  }
  return acc;
}

}  // namespace

Ring x_ring(int m) { return uniform(m, "x"); }
Ring y_ring(int m) { return uniform(m, "y"); }

Ring k_ring(int m) {
  RingSpec s;
  s.vars = m;
  s.stem = "k";
  for (int j = 0; j < m; ++j) s.degrees.push_back(1u << j);
  return make_ring(s);
}

Ring v_ring(int m, std::uint32_t cap) {
  RingSpec s;
  s.vars = m;
  s.stem = "V";
  for (int j = 0; j < m; ++j) {
    s.degrees.push_back(1u << j);
    s.caps.push_back(cap);
  }
  return make_ring(s);
}

Polynomial mui_h(int m, int i) {
  check_m(m, 8);
  if (i < 1 || i > m) throw ParameterError("i must lie in 1..m");
  // x_{m-i+1} is index m-i; the span runs over x_{m-i+2}..x_m.
  std::vector<int> span;
  for (int v = m - i + 1; v < m; ++v) span.push_back(v);
  return subset_product(x_ring(m), m - i, span);
}

Polynomial restriction_v(int m, int r) {
  check_m(m, 8);
  if (r < 1 || r > m) throw ParameterError("r must lie in 1..m");
  auto ring = y_ring(m);
  Polynomial acc = Polynomial::one(ring);
  const int free = r - 1;  // lambda_m .. lambda_{m-r+2}
  for (std::uint32_t lam = 0; lam < (1u << free); ++lam) {
    std::vector<Monomial> form;
    Monomial lead;
    lead[m - r] = 1;
    form.push_back(lead);
    for (int b = 0; b < free; ++b)
      if (lam >> b & 1) {
        Monomial y;
        y[m - 1 - b] = 1;
        form.push_back(y);
      }
    acc = acc * Polynomial::from_terms(ring, form);
  }
  return acc;
}

Polynomial dickson_bruteforce(int m, int r) {
  check_m(m, 5);
  if (r < 0 || r >= m) throw ParameterError("r must lie in 0..m-1");
  RingSpec s;
  s.vars = m + 1;  // last variable is T
  s.stem = "x";
  auto ring = make_ring(s);
  Polynomial f = Polynomial::one(ring);
  for (std::uint32_t v = 0; v < (1u << m); ++v) {
    std::vector<int> vars{m};
    for (int b = 0; b < m; ++b)
      if (v >> b & 1) vars.push_back(b);
    f = f * linear_form(ring, vars);
  }
  std::vector<Monomial> coeff;
  for (const auto& t : f.terms())
    if (t[m] == (1u << r)) {
      Monomial c = t;
      c[m] = 0;
      coeff.push_back(c);
    }
  return Polynomial::from_terms(x_ring(m), coeff);
}

Polynomial dickson_recurrence(int m, int r) {
  check_m(m, 16);
  if (r < 0 || r >= m) throw ParameterError("r must lie in 0..m-1");
  auto ring = k_ring(m);
  // row[i] holds d_{j,i} for the current j; d_{j,j} = 1.
  std::vector<Polynomial> row{Polynomial::one(ring)};
  for (int j = 1; j <= m; ++j) {
    auto kj = Polynomial::variable(ring, j - 1);
    std::vector<Polynomial> next;
    for (int i = 0; i < j; ++i) {
      Polynomial t = row[static_cast<std::size_t>(i)] * kj;
      if (i > 0) t = t + square(row[static_cast<std::size_t>(i - 1)]);
      next.push_back(std::move(t));
    }
    next.push_back(Polynomial::one(ring));
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

Polynomial dickson_upper_formula(int m, int r) {
  check_m(m, 16);
  if (r < 0 || r >= m) throw ParameterError("r must lie in 0..m-1");
  std::vector<Monomial> terms;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != r) continue;
    Monomial t;
    int seen = 0;  // chosen indices passed so far
    for (int v = 0; v < m; ++v) {
      if (mask >> v & 1) {
        ++seen;
        continue;
      }
      t[v] = static_cast<Exponent>(1u << (r - seen));
    }
    terms.push_back(t);
  }
  return Polynomial::from_terms(k_ring(m), terms);
}

Polynomial reverse_variables(const Polynomial& p) {
  const int m = p.ctx().vars();
  BitMatrix rev(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) rev[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - 1 - i)] = 1;
  return linear_substitute(p, rev);
}

Polynomial k_in_x(int m, int j) { return reverse_variables(mui_h(m, j)); }

Polynomial k_to_x(const Polynomial& p) {
  const int m = p.ctx().vars();
  std::vector<Polynomial> images;
  for (int j = 1; j <= m; ++j) images.push_back(k_in_x(m, j));
  return substitute(p, images);
}

}  // namespace f2coh
