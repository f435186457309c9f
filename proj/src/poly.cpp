#include "f2coh/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

namespace f2coh {

namespace {
std::atomic<std::size_t> g_default_max_terms{kDefaultMaxTerms};
}  // namespace

std::size_t default_max_terms() { return g_default_max_terms.load(); }

void set_default_max_terms(std::size_t n) {
  if (n == 0) throw ParameterError("term guard must be positive");
  g_default_max_terms.store(n);
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Exponent x : m.e) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

RingContext::RingContext(RingSpec spec) : spec_(std::move(spec)) {
  if (spec_.vars < 1 || spec_.vars > kMaxVars)
    throw ParameterError("ring needs 1.." + std::to_string(kMaxVars) + " variables");
  const auto n = static_cast<std::size_t>(spec_.vars);
  if (spec_.degrees.empty()) spec_.degrees.assign(n, 1);
  if (spec_.caps.empty()) spec_.caps.assign(n, 0);
  if (spec_.degrees.size() != n || spec_.caps.size() != n)
    throw ParameterError("degree/cap list length differs from variable count");
  for (auto d : spec_.degrees)
    if (d == 0) throw ParameterError("variable degrees must be positive");
  for (auto c : spec_.caps)
    if (c > kMaxExponent + 1) throw ParameterError("truncation cap exceeds exponent width");
  if (spec_.stem.empty()) throw ParameterError("empty variable stem");
  for (char ch : spec_.stem)
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      throw ParameterError("variable stem must be alphabetic");
  if (spec_.index_base != 0 && spec_.index_base != 1)
    throw ParameterError("index base must be 0 or 1");
  if (spec_.max_terms == 0) throw ParameterError("term guard must be positive");
}

bool RingContext::all_capped() const {
  return std::all_of(spec_.caps.begin(), spec_.caps.end(), [](auto c) { return c != 0; });
}

bool RingContext::uniform_degrees() const {
  return std::all_of(spec_.degrees.begin(), spec_.degrees.end(),
                     [&](auto d) { return d == spec_.degrees.front(); });
}

std::uint64_t RingContext::degree_of(const Monomial& m) const {
  std::uint64_t deg = 0;
  for (int i = 0; i < spec_.vars; ++i) deg += std::uint64_t{m[i]} * degree(i);
  return deg;
}

bool RingContext::admits(const Monomial& m) const {
  for (int i = 0; i < spec_.vars; ++i)
    if (cap(i) != 0 && m[i] >= cap(i)) return false;
  if (spec_.degree_cap && degree_of(m) > *spec_.degree_cap) return false;
  return true;
}

std::optional<std::uint64_t> RingContext::max_degree() const {
  std::optional<std::uint64_t> top;
  if (all_capped()) {
    std::uint64_t s = 0;
    for (int i = 0; i < spec_.vars; ++i) s += std::uint64_t{cap(i) - 1} * degree(i);
    top = s;
  }
  if (spec_.degree_cap) top = top ? std::min(*top, *spec_.degree_cap) : *spec_.degree_cap;
  return top;
}

bool RingContext::same_ring(const RingContext& o) const {
  return spec_.vars == o.spec_.vars && spec_.degrees == o.spec_.degrees &&
         spec_.caps == o.spec_.caps && spec_.degree_cap == o.spec_.degree_cap &&
         spec_.stem == o.spec_.stem && spec_.index_base == o.spec_.index_base;
}

Ring make_ring(RingSpec spec) { return std::make_shared<const RingContext>(std::move(spec)); }

Ring with_degree_cap(const Ring& r, std::optional<std::uint64_t> cap) {
  RingSpec s = r->spec();
  s.degree_cap = cap;
  return make_ring(std::move(s));
}

Ring with_max_terms(const Ring& r, std::size_t max_terms) {
  RingSpec s = r->spec();
  s.max_terms = max_terms;
  return make_ring(std::move(s));
}

namespace {

void guard_terms(const RingContext& ctx, std::size_t n) {
  if (n > ctx.max_terms())
    throw ResourceError("term count " + std::to_string(n) + " exceeds guard " +
                        std::to_string(ctx.max_terms()));
}

void require_same(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (!a.ctx().same_ring(b.ctx())) throw ContextError("operands belong to different rings");
}

// Sort and keep each monomial that occurs an odd number of times.
void sort_cancel(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) v[out++] = v[i];
    i = j;
  }
  v.resize(out);
}

std::vector<Monomial> symdiff(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Product exponent vector; false when the product dies in the ring.
bool product(const RingContext& ctx, const Monomial& a, const Monomial& b, Monomial& out) {
  for (int i = 0; i < ctx.vars(); ++i) {
    std::uint32_t s = std::uint32_t{a[i]} + b[i];
    std::uint32_t c = ctx.cap(i);
    if (c != 0 && s >= c) return false;
    if (s > kMaxExponent) throw ResourceError("exponent exceeds 16-bit range");
    out[i] = static_cast<Exponent>(s);
  }
  return true;
}

// Mixed-radix layout of a fully truncated ring; index order matches monomial order.
struct DenseLayout {
  int n = 0;
  std::array<std::uint64_t, kMaxVars> stride{};
  std::array<std::uint32_t, kMaxVars> cap{};
  std::uint64_t size = 1;

  static constexpr std::uint64_t kLimit = std::uint64_t{1} << 26;

  static std::optional<DenseLayout> of(const RingContext& ctx) {
    if (!ctx.all_capped()) return std::nullopt;
    DenseLayout l;
    l.n = ctx.vars();
    for (int i = l.n - 1; i >= 0; --i) {
      l.stride[static_cast<std::size_t>(i)] = l.size;
      l.cap[static_cast<std::size_t>(i)] = ctx.cap(i);
      l.size *= ctx.cap(i);
      if (l.size > kLimit) return std::nullopt;
    }
    return l;
  }

  std::uint64_t index(const Monomial& m) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < n; ++i) idx += m[i] * stride[static_cast<std::size_t>(i)];
    return idx;
  }

  Monomial decode(std::uint64_t idx) const {
    Monomial m;
    for (int i = 0; i < n; ++i) {
      m[i] = static_cast<Exponent>(idx / stride[static_cast<std::size_t>(i)]);
      idx %= stride[static_cast<std::size_t>(i)];
    }
    return m;
  }

  std::vector<Monomial> collect(const std::vector<std::uint8_t>& bits) const {
    std::vector<Monomial> out;
    for (std::uint64_t i = 0; i < size; ++i)
      if (bits[i]) out.push_back(decode(i));
    return out;
  }
};

Polynomial mul_sparse(const Polynomial& a, const Polynomial& b) {
  const RingContext& ctx = a.ctx();
  constexpr std::size_t kFlush = std::size_t{1} << 20;
  std::vector<Monomial> acc, buf;
  buf.reserve(std::min(kFlush, a.size() * b.size()));
  Monomial m;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      if (!product(ctx, x, y, m)) continue;
      if (ctx.degree_cap() && ctx.degree_of(m) > *ctx.degree_cap()) continue;
      buf.push_back(m);
    }
    if (buf.size() >= kFlush) {
      sort_cancel(buf);
      acc = symdiff(acc, buf);
      buf.clear();
      guard_terms(ctx, acc.size());
    }
  }
  sort_cancel(buf);
  acc = symdiff(acc, buf);
  guard_terms(ctx, acc.size());
  return Polynomial::from_terms(a.ring(), std::move(acc));
}

Polynomial mul_dense(const Polynomial& a, const Polynomial& b, const DenseLayout& l) {
  const RingContext& ctx = a.ctx();
  std::vector<std::uint8_t> bits(l.size, 0);
  const auto cap = ctx.degree_cap();
  std::vector<std::uint64_t> bidx, bdeg;
  for (const auto& y : b.terms()) {
    bidx.push_back(l.index(y));
    bdeg.push_back(ctx.degree_of(y));
  }
  for (const auto& x : a.terms()) {
    const std::uint64_t xi = l.index(x);
    const std::uint64_t xd = ctx.degree_of(x);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Monomial& y = b.terms()[j];
      bool alive = true;
      for (int i = 0; i < l.n && alive; ++i)
        alive = std::uint32_t{x[i]} + y[i] < l.cap[static_cast<std::size_t>(i)];
      if (!alive) continue;
      if (cap && xd + bdeg[j] > *cap) continue;
      bits[xi + bidx[j]] ^= 1;
    }
  }
  auto terms = l.collect(bits);
  guard_terms(ctx, terms.size());
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw ContextError("null ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Monomial> sorted_unique, Sorted)
    : ring_(std::move(ring)), terms_(std::move(sorted_unique)) {}

Polynomial Polynomial::one(Ring ring) { return monomial(std::move(ring), Monomial{}); }

Polynomial Polynomial::variable(Ring ring, int i) {
  if (i < 0 || i >= ring->vars()) throw ParameterError("variable index out of range");
  Monomial m;
  m[i] = 1;
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m) {
  return from_terms(std::move(ring), {m});
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Monomial> raw) {
  if (!ring) throw ContextError("null ring");
  const RingContext& ctx = *ring;
  for (const auto& m : raw)
    for (int i = ctx.vars(); i < kMaxVars; ++i)
      if (m[i] != 0) throw ContextError("monomial has more variables than the ring");
  std::erase_if(raw, [&](const Monomial& m) { return !ctx.admits(m); });
  sort_cancel(raw);
  guard_terms(ctx, raw.size());
  return Polynomial(std::move(ring), std::move(raw), Sorted{});
}

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_.front() == Monomial{}; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ctx().same_ring(b.ctx()) && a.terms_ == b.terms_;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  auto t = symdiff(a.terms_, b.terms_);
  guard_terms(a.ctx(), t.size());
  return Polynomial(a.ring_, std::move(t), Polynomial::Sorted{});
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring_);
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  if (auto l = DenseLayout::of(a.ctx()); l && big.size() * small.size() * 8 >= l->size)
    return mul_dense(big, small, *l);
  return mul_sparse(big, small);
}

Polynomial frobenius(const Polynomial& p, unsigned a) {
  if (a == 0) return p;
  const RingContext& ctx = p.ctx();
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const auto& m : p.terms_) {
    Monomial q;
    bool alive = true;
    for (int i = 0; i < ctx.vars() && alive; ++i) {
      std::uint64_t e = std::uint64_t{m[i]} << std::min(a, 40u);
      if (ctx.cap(i) != 0 && e >= ctx.cap(i)) alive = false;
      else if (e > kMaxExponent) throw ResourceError("exponent exceeds 16-bit range");
      else q[i] = static_cast<Exponent>(e);
    }
    if (alive && ctx.degree_cap() && ctx.degree_of(q) > *ctx.degree_cap()) alive = false;
    if (alive) out.push_back(q);
  }
  // Scaling is monotone and injective, so order and uniqueness survive.
  return Polynomial(p.ring_, std::move(out), Polynomial::Sorted{});
}

Polynomial square(const Polynomial& p) { return frobenius(p, 1); }

Polynomial pow(const Polynomial& p, std::uint64_t n) {
  Polynomial result = Polynomial::one(p.ring());
  Polynomial base = p;
  while (n != 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n != 0) base = square(base);
  }
  return result;
}

Polynomial geometric_inverse(const Polynomial& p, std::optional<std::uint64_t> cap) {
  const RingContext& ctx = p.ctx();
  if (!monomial_coefficient(p, Monomial{})) throw NotAUnitError("constant term is not 1");
  if (!cap) cap = ctx.max_degree();
  if (!cap) throw ParameterError("inverse needs a degree cap in an untruncated ring");
  const std::uint64_t top = *cap;

  std::vector<Monomial> rest;
  for (const auto& m : p.terms_)
    if (m != Monomial{} && ctx.degree_of(m) <= top) rest.push_back(m);

  auto l = DenseLayout::of(ctx);
  if (l && l->size * rest.size() > (std::uint64_t{1} << 24)) {
    // u = 1 + n with every variable capped: u^(2^k) = 1 once 2^k reaches all caps,
    // so u^-1 = prod_{j<k} u^(2^j). High Frobenius powers are sparse; multiply them first.
    std::uint32_t cmax = 1;
    for (int i = 0; i < ctx.vars(); ++i) cmax = std::max(cmax, ctx.cap(i));
    unsigned k = 0;
    while ((std::uint64_t{1} << k) < cmax) ++k;
    std::vector<Monomial> lowered = rest;
    lowered.push_back(Monomial{});
    sort_cancel(lowered);
    const Polynomial u(p.ring_, std::move(lowered), Polynomial::Sorted{});
    Polynomial acc = Polynomial::one(p.ring_);
    for (unsigned j = k; j-- > 0;) acc = mul(acc, frobenius(u, j));
    if (top >= ctx.max_degree().value_or(top)) return acc;
    std::vector<Monomial> keep;
    for (const auto& m : acc.terms_)
      if (ctx.degree_of(m) <= top) keep.push_back(m);
    return Polynomial(p.ring_, std::move(keep), Polynomial::Sorted{});
  }
  if (l) {
    // q[mu] = sum over terms a != 1 dividing mu of q[mu / a]; mu / a precedes mu.
    std::vector<std::uint8_t> q(l->size, 0);
    std::vector<std::uint64_t> ridx;
    for (const auto& a : rest) ridx.push_back(l->index(a));
    Monomial mu;
    q[0] = 1;
    for (std::uint64_t idx = 1; idx < l->size; ++idx) {
      for (int i = l->n - 1; i >= 0; --i) {  // odometer step to idx
        if (++mu[i] < l->cap[static_cast<std::size_t>(i)]) break;
        mu[i] = 0;
      }
      if (ctx.degree_of(mu) > top) continue;
      std::uint8_t bit = 0;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        bool divides = true;
        for (int i = 0; i < l->n && divides; ++i) divides = rest[k][i] <= mu[i];
        if (divides) bit ^= q[idx - ridx[k]];
      }
      q[idx] = bit;
    }
    auto terms = l->collect(q);
    guard_terms(ctx, terms.size());
    return Polynomial::from_terms(p.ring_, std::move(terms));
  }

  // Degree by degree: q_n = sum_{i>=1} p_i q_{n-i}.
  std::map<std::uint64_t, Polynomial> parts;
  for (const auto& m : rest) {
    auto it = parts.try_emplace(ctx.degree_of(m), Polynomial::zero(p.ring_)).first;
    it->second.terms_.push_back(m);
  }
  std::vector<Polynomial> q;
  q.push_back(Polynomial::one(p.ring_));
  std::size_t live = 1;
  for (std::uint64_t n = 1; n <= top; ++n) {
    Polynomial qn = Polynomial::zero(p.ring_);
    for (const auto& [i, pi] : parts) {
      if (i > n) break;
      qn = add(qn, mul(pi, q[n - i]));
    }
    live += qn.size();
    guard_terms(ctx, live);
    q.push_back(std::move(qn));
  }
  std::vector<Monomial> all;
  for (auto& part : q) all.insert(all.end(), part.terms_.begin(), part.terms_.end());
  return Polynomial::from_terms(p.ring_, std::move(all));
}

bool rank_full(const BitMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::uint32_t> rows(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) return false;
    for (std::size_t c = 0; c < n; ++c)
      if (m[r][c] & 1) rows[r] |= 1u << c;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !(rows[piv] >> c & 1)) ++piv;
    if (piv == n) return false;
    std::swap(rows[piv], rows[c]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && (rows[r] >> c & 1)) rows[r] ^= rows[c];
  }
  return true;
}

Polynomial linear_substitute(const Polynomial& p, const BitMatrix& m) {
  const RingContext& ctx = p.ctx();
  const auto n = static_cast<std::size_t>(ctx.vars());
  if (m.size() != n) throw InvalidSubstitutionError("matrix size differs from variable count");
  for (const auto& row : m)
    if (row.size() != n) throw InvalidSubstitutionError("matrix is not square");
  if (!ctx.uniform_degrees())
    throw UnsupportedError("linear substitution needs equal variable degrees");
  if (!rank_full(m)) throw InvalidSubstitutionError("matrix is singular over F2");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Monomial> form;
    for (std::size_t j = 0; j < n; ++j)
      if (m[j][i] & 1) {
        Monomial v;
        v[static_cast<int>(j)] = 1;
        form.push_back(v);
      }
    images.push_back(Polynomial::from_terms(p.ring(), std::move(form)));
  }
  return substitute(p, images);
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != static_cast<std::size_t>(p.ctx().vars()))
    throw InvalidSubstitutionError("one image per variable required");
  if (images.empty()) throw InvalidSubstitutionError("no images");
  const Ring& target = images.front().ring();
  for (const auto& im : images)
    if (!im.ctx().same_ring(*target)) throw ContextError("images live in different rings");

  std::map<std::pair<int, Exponent>, Polynomial> cache;
  auto power = [&](int i, Exponent e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, pow(images[static_cast<std::size_t>(i)], e)).first;
    return it->second;
  };

  std::vector<Monomial> raw;
  for (const auto& m : p.terms()) {
    Polynomial t = Polynomial::one(target);
    for (int i = 0; i < p.ctx().vars() && !t.is_zero(); ++i)
      if (m[i] != 0) t = mul(t, power(i, m[i]));
    raw.insert(raw.end(), t.terms().begin(), t.terms().end());
    if (raw.size() > 4 * target->max_terms()) {
      raw = Polynomial::from_terms(target, std::move(raw)).terms();
    }
  }
  return Polynomial::from_terms(target, std::move(raw));
}

Polynomial change_ring(const Polynomial& p, const Ring& target) {
  if (target->vars() != p.ctx().vars()) throw ContextError("variable counts differ");
  return Polynomial::from_terms(target, p.terms());
}

Polynomial reduce(const Polynomial& p) { return Polynomial::from_terms(p.ring_, p.terms_); }

Polynomial homogeneous_component(const Polynomial& p, std::uint64_t n) {
  std::vector<Monomial> out;
  for (const auto& m : p.terms_)
    if (p.ctx().degree_of(m) == n) out.push_back(m);
  return Polynomial(p.ring_, std::move(out), Polynomial::Sorted{});
}

std::optional<std::uint64_t> top_degree(const Polynomial& p) {
  std::optional<std::uint64_t> top;
  for (const auto& m : p.terms()) {
    auto d = p.ctx().degree_of(m);
    if (!top || d > *top) top = d;
  }
  return top;
}

bool monomial_coefficient(const Polynomial& p, const Monomial& m) {
  return std::binary_search(p.terms().begin(), p.terms().end(), m);
}

std::vector<std::uint64_t> degrees_present(const Polynomial& p) {
  std::vector<std::uint64_t> out;
  for (const auto& m : p.terms()) out.push_back(p.ctx().degree_of(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Monomial> canonical_terms(const Polynomial& p) {
  std::vector<std::pair<std::uint64_t, Monomial>> keyed;
  keyed.reserve(p.size());
  for (const auto& m : p.terms()) keyed.emplace_back(p.ctx().degree_of(m), m);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second > y.second;
  });
  std::vector<Monomial> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

std::string monomial_to_string(const RingContext& ctx, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ctx.vars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ctx.stem();
    s += std::to_string(i + ctx.index_base());
    if (m[i] > 1) {
      s += '^';
      s += std::to_string(m[i]);
    }
  }
  return s.empty() ? "1" : s;
}

std::vector<std::string> term_strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& m : canonical_terms(p)) out.push_back(monomial_to_string(p.ctx(), m));
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : term_strings(p)) {
    if (!s.empty()) s += " + ";
    s += t;
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

Monomial parse_monomial(std::string_view text, const RingContext& ctx) {
  text = trim(text);
  Monomial m;
  if (text == "1") return m;
  for (auto factor : split(text, '*')) {
    if (factor.substr(0, ctx.stem().size()) != ctx.stem())
      throw ParseError("factor '" + std::string(factor) + "' does not use stem " + ctx.stem());
    factor.remove_prefix(ctx.stem().size());
    std::uint64_t exp = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      exp = parse_uint(trim(factor.substr(caret + 1)), "exponent");
      factor = trim(factor.substr(0, caret));
    }
    std::uint64_t idx = parse_uint(factor, "variable index");
    if (idx < static_cast<std::uint64_t>(ctx.index_base()) ||
        idx - static_cast<std::uint64_t>(ctx.index_base()) >= static_cast<std::uint64_t>(ctx.vars()))
      throw ParseError("variable index " + std::to_string(idx) + " out of range");
    int i = static_cast<int>(idx) - ctx.index_base();
    std::uint64_t total = m[i] + exp;
    if (total > kMaxExponent) throw ParseError("exponent too large");
    m[i] = static_cast<Exponent>(total);
  }
  return m;
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial text");
  if (text == "0") return Polynomial::zero(ring);
  std::vector<Monomial> raw;
  for (auto term : split(text, '+')) {
    if (term.empty()) throw ParseError("empty term");
    raw.push_back(parse_monomial(term, *ring));
  }
  return Polynomial::from_terms(ring, std::move(raw));
}

}  // namespace f2coh
