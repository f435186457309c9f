#include "f2coh/homology.hpp"

#include <string>

namespace f2coh {

namespace {

void add_checked(std::uint64_t& into, std::uint64_t v) {
  if (__builtin_add_overflow(into, v, &into)) throw ResourceError("count exceeds 64 bits");
}

}  // namespace

std::uint64_t AdmissibleWord::degree() const {
  std::uint64_t deg = 0;
  for (std::size_t j = 0; j < indices.size(); ++j) deg += static_cast<std::uint64_t>(indices[j]) << j;
  return deg;
}

std::vector<AdmissibleWord> admissible_words(int d, std::uint64_t max_weight) {
  if (d < 2) throw ParameterError("d must be at least 2");
  std::vector<AdmissibleWord> out;
  AdmissibleWord cur;
  auto rec = [&](auto&& self, int lo) -> void {
    out.push_back(cur);
    if (cur.weight() * 2 > max_weight) return;
    for (int i = lo; i <= d - 1; ++i) {
      cur.indices.push_back(i);
      self(self, i);
      cur.indices.pop_back();
    }
  };
  if (max_weight >= 1) rec(rec, 1);
  return out;
}

std::vector<std::uint64_t> poincare_config(int d, int k, const HomologyLimits& lim) {
  if (d < 2) throw ParameterError("d must be at least 2");
  if (k < 1) throw ParameterError("k must be at least 1");
  if (d > lim.max_d || k > lim.max_k)
    throw ResourceError("(d, k) beyond the configured grid limit d <= " + std::to_string(lim.max_d) +
                        ", k <= " + std::to_string(lim.max_k));
  const auto K = static_cast<std::size_t>(k);
  const std::size_t top = static_cast<std::size_t>(d - 1) * (K - 1);
  // dp[w][g]: multisets of the words seen so far with weight w and degree g.
  std::vector<std::vector<std::uint64_t>> dp(K + 1, std::vector<std::uint64_t>(top + 1, 0));
  dp[0][0] = 1;
  for (const auto& word : admissible_words(d, K)) {
    const auto w = static_cast<std::size_t>(word.weight());
    const auto g = static_cast<std::size_t>(word.degree());
    if (g > top) continue;
    for (std::size_t x = w; x <= K; ++x)
      for (std::size_t y = g; y <= top; ++y)
        if (dp[x - w][y - g]) add_checked(dp[x][y], dp[x - w][y - g]);
  }
  return dp[K];
}

std::uint64_t dim_config_homology(int d, int k, std::uint64_t i, const HomologyLimits& lim) {
  auto series = poincare_config(d, k, lim);
  return i < series.size() ? series[i] : 0;
}

std::vector<std::uint64_t> fuks_series(int n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (n > 4096) throw ResourceError("n above 4096");
  const auto N = static_cast<std::size_t>(n);
  // dp[c][s]: multisets of c powers of 2 with sum s.
  std::vector<std::vector<std::uint64_t>> dp(N + 1, std::vector<std::uint64_t>(N + 1, 0));
  dp[0][0] = 1;
  for (std::size_t p = 1; p <= N; p <<= 1)
    for (std::size_t c = 1; c <= N; ++c)
      for (std::size_t s = p; s <= N; ++s)
        if (dp[c - 1][s - p]) add_checked(dp[c][s], dp[c - 1][s - p]);
  std::vector<std::uint64_t> out(N + 1, 0);
  for (std::size_t k = 0; k < N; ++k) out[k] = dp[N - k][N];
  return out;
}

std::uint64_t fuks_dim(int n, int k) {
  if (k < 0) throw ParameterError("k must be nonnegative");
  if (k > n) return 0;
  return fuks_series(n)[static_cast<std::size_t>(k)];
}

}  // namespace f2coh
