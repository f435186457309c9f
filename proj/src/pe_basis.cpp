#include "f2coh/pe_basis.hpp"

#include <algorithm>

namespace f2coh {

namespace {

void check_params(int d, int m) {
  if (d < 2) throw ParameterError("d must be at least 2");
  if (m < 0) throw ParameterError("m must be nonnegative");
  if (d > 16 || m > 5) throw ResourceError("pe-basis supports d <= 16 and m <= 5");
}

PeCount add_checked(PeCount a, PeCount b) {
  PeCount r = a + b;
  if (r < a) throw ResourceError("count exceeds 128 bits");
  return r;
}

PeCount mul_checked(PeCount a, PeCount b) {
  if (a != 0 && b > ~PeCount{0} / a) throw ResourceError("count exceeds 128 bits");
  return a * b;
}

using Series = std::vector<PeCount>;

Series stretch(const Series& s) {
  Series out(s.empty() ? 0 : 2 * s.size() - 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) out[2 * i] = s[i];
  return out;
}

Series times(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_checked(out[i + j], mul_checked(a[i], b[j]));
  return out;
}

Series plus(Series a, const Series& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = add_checked(a[i], b[i]);
  return a;
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

}  // namespace

std::string to_string_u128(PeCount v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string PeBasis::construction(int level, std::size_t index) const {
  const auto& e = levels.at(static_cast<std::size_t>(level)).at(index);
  switch (e.rule) {
    case PeRule::unit:
      return "1";
    case PeRule::square:
      return "sq(" + construction(level - 1, e.left) + ")f^" + std::to_string(e.j);
    case PeRule::pair:
      return "pr(" + construction(level - 1, e.left) + "," + construction(level - 1, e.right) + ")";
    case PeRule::pair_top:
      return "pt(" + construction(level - 1, e.left) + "," + construction(level - 1, e.right) + ")";
  }
  return {};
}

PeBasis pe_basis(int d, int m, std::size_t max_elements) {
  check_params(d, m);
  PeBasis b;
  b.d = d;
  b.m = m;
  b.levels.push_back({PeBasisElement{}});
  for (int k = 0; k < m; ++k) {
    const auto& prev = b.levels.back();
    const std::size_t n = prev.size();
    PeCount want = add_checked(mul_checked(static_cast<PeCount>(d), n), mul_checked(n, n - 1));
    if (want > max_elements)
      throw ResourceError("basis level of size " + to_string_u128(want) + " exceeds the element limit " +
                          std::to_string(max_elements));
    std::vector<PeBasisElement> next;
    next.reserve(static_cast<std::size_t>(want));
    for (std::uint32_t v = 0; v < n; ++v)
      for (int j = 0; j < d; ++j)
        next.push_back({2 * prev[v].degree + static_cast<std::uint64_t>(j), prev[v].a_part, PeRule::square, j, v, v});
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) {
        std::uint64_t deg = prev[u].degree + prev[v].degree;
        next.push_back({deg, false, PeRule::pair, 0, u, v});
        next.push_back({deg + static_cast<std::uint64_t>(d - 1), false, PeRule::pair_top, 0, u, v});
      }
    b.levels.push_back(std::move(next));
  }
  return b;
}

std::vector<PeCount> PeSeries::total() const { return plus(a_series, i_series); }

PeCount PeSeries::size() const {
  PeCount s = 0;
  for (auto c : total()) s = add_checked(s, c);
  return s;
}

PeSeries pe_series_split(int d, int m) {
  check_params(d, m);
  const Series g(static_cast<std::size_t>(d), 1);
  Series top(static_cast<std::size_t>(d), 0);
  top[0] = 1;
  top[static_cast<std::size_t>(d - 1)] = add_checked(top[static_cast<std::size_t>(d - 1)], 1);
  Series a{1};
  Series i;
  for (int k = 0; k < m; ++k) {
    Series t = plus(a, i);
    // unordered pairs of distinct elements: (T(t)^2 - T(t^2)) / 2
    Series sq = times(t, t);
    Series diag = stretch(t);
    for (std::size_t x = 0; x < diag.size(); ++x) sq[x] -= diag[x];
    for (auto& c : sq) c /= 2;
    Series next_i = plus(times(stretch(i), g), times(top, sq));
    a = times(stretch(a), g);
    i = std::move(next_i);
    trim(i);
  }
  PeSeries out;
  out.d = d;
  out.m = m;
  out.a_series = std::move(a);
  out.i_series = std::move(i);
  std::size_t len = std::max(out.a_series.size(), out.i_series.size());
  out.a_series.resize(len, 0);
  out.i_series.resize(len, 0);
  return out;
}

PeSeries pe_series_of(const PeBasis& basis) {
  PeSeries out;
  out.d = basis.d;
  out.m = basis.m;
  std::uint64_t maxdeg = 0;
  for (const auto& e : basis.top()) maxdeg = std::max(maxdeg, e.degree);
  out.a_series.assign(maxdeg + 1, 0);
  out.i_series.assign(maxdeg + 1, 0);
  for (const auto& e : basis.top()) (e.a_part ? out.a_series : out.i_series)[e.degree] += 1;
  return out;
}

PeCount pe_basis_size(int d, int m) {
  check_params(d, m);
  PeCount n = 1;
  for (int k = 0; k < m; ++k) n = add_checked(mul_checked(static_cast<PeCount>(d), n), mul_checked(n, n - 1));
  return n;
}

}  // namespace f2coh
