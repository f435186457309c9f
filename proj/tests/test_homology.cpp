#include <map>

#include "doctest.h"
#include "f2coh/homology.hpp"

using namespace f2coh;

namespace {

using Series = std::vector<std::uint64_t>;

// Independent oracle: explicit multiset enumeration over the word list.
Series brute_poincare(int d, int k) {
  auto words = admissible_words(d, static_cast<std::uint64_t>(k));
  Series out(static_cast<std::size_t>((d - 1) * (k - 1) + 1), 0);
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t w, std::uint64_t g) -> void {
    if (w == static_cast<std::uint64_t>(k)) {
      if (g < out.size()) ++out[g];
      return;
    }
    for (std::size_t j = from; j < words.size(); ++j)
      if (w + words[j].weight() <= static_cast<std::uint64_t>(k)) self(self, j, w + words[j].weight(), g + words[j].degree());
  };
  rec(rec, 0, 0, 0);
  return out;
}

}  // namespace

TEST_CASE("words") {
  auto w = admissible_words(3, 4);
  // empty, (1), (2), (1,1), (1,2), (2,2)
  CHECK(w.size() == 6);
  AdmissibleWord q12{{1, 2}};
  CHECK(q12.weight() == 4);
  CHECK(q12.degree() == 5);
  CHECK(AdmissibleWord{}.weight() == 1);
  CHECK(AdmissibleWord{}.degree() == 0);
}

TEST_CASE("small configuration spaces") {
  CHECK(poincare_config(3, 4) == Series{1, 1, 2, 2, 1, 1, 1});
  CHECK(poincare_config(2, 4) == Series{1, 1, 1, 1});
  CHECK(poincare_config(3, 2) == Series{1, 1, 1});
  CHECK(poincare_config(2, 2) == Series{1, 1});
  CHECK(poincare_config(2, 3) == Series{1, 1, 0});
  for (int d = 2; d <= 6; ++d) {
    CHECK(dim_config_homology(d, 1, 0) == 1);
    CHECK(dim_config_homology(d, 1, 1) == 0);
    CHECK(poincare_config(d, 2) == Series(static_cast<std::size_t>(d), 1));
  }
  CHECK(dim_config_homology(3, 4, 7) == 0);
}

TEST_CASE("enumeration matches brute force") {
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= 12; ++k) CHECK(poincare_config(d, k) == brute_poincare(d, k));
}

TEST_CASE("fuks") {
  CHECK(fuks_dim(4, 2) == 1);
  CHECK(fuks_dim(4, 0) == 1);
  CHECK(fuks_dim(4, 4) == 0);
  CHECK(fuks_dim(4, 5) == 0);
  CHECK_THROWS_AS(fuks_dim(0, 0), ParameterError);
  for (int n = 1; n <= 40; ++n) {
    auto p = poincare_config(2, n);
    auto f = fuks_series(n);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == f[i]);
    for (std::size_t i = p.size(); i < f.size(); ++i) CHECK(f[i] == 0);
  }
  for (int n = 2; n <= 512; ++n) {
    bool pow2 = (n & (n - 1)) == 0;
    CHECK((fuks_dim(n, n - 1) > 0) == pow2);
  }
}

TEST_CASE("top class and stabilization") {
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= 20; ++k) {
      auto p = poincare_config(d, k);
      bool pow2 = (k & (k - 1)) == 0;
      CHECK((p.back() > 0) == pow2);
    }
  for (int d = 2; d <= 6; ++d)
    for (int k = 2; k <= 12; ++k) {
      auto a = poincare_config(d, k);
      auto b = poincare_config(d + 1, k);
      // a word using index d has degree >= d, so degrees below d agree
      for (int i = 0; i < d && i < static_cast<int>(a.size()); ++i) CHECK(a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(poincare_config(10, 4), ResourceError);
  CHECK_THROWS_AS(poincare_config(3, 257), ResourceError);
  CHECK_THROWS_AS(poincare_config(1, 4), ParameterError);
  CHECK_THROWS_AS(poincare_config(3, 0), ParameterError);
  HomologyLimits lim{12, 300};
  CHECK(poincare_config(10, 4, lim).size() == 28);
}
