#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "f2coh/errors.hpp"

namespace f2coh {

using PeCount = unsigned __int128;

std::string to_string_u128(PeCount v);

enum class PeRule {
  unit,     // the single element at m = 0
  square,   // (v (x) v) f^j, 0 <= j <= d-1
  pair,     // unordered pair u != v
  pair_top  // unordered pair u != v times f^{d-1}
};

struct PeBasisElement {
  std::uint64_t degree = 0;
  bool a_part = true;
  PeRule rule = PeRule::unit;
  int j = 0;                 // exponent of f for rule square
  std::uint32_t left = 0;    // predecessor index in the previous level
  std::uint32_t right = 0;   // second predecessor for pair rules
};

struct PeBasis {
  int d = 2;
  int m = 0;
  // levels[k] is the basis for 2^k points, k = 0..m.
  std::vector<std::vector<PeBasisElement>> levels;

  const std::vector<PeBasisElement>& top() const { return levels.back(); }
  // Construction tree of levels[level][index] in the form 1, sq(x)f^j, pr(x,y), pt(x,y).
  std::string construction(int level, std::size_t index) const;
};

inline constexpr std::size_t kDefaultPeMaxElements = 10'000'000;

// Materialized basis; ResourceError when a level would exceed max_elements.
PeBasis pe_basis(int d, int m, std::size_t max_elements = kDefaultPeMaxElements);

struct PeSeries {
  int d = 2;
  int m = 0;
  std::vector<PeCount> a_series;
  std::vector<PeCount> i_series;

  std::vector<PeCount> total() const;
  PeCount size() const;
};

// Degree counts of the a-part and i-part, computed from generating functions.
PeSeries pe_series_split(int d, int m);
// Same counts read off a materialized basis.
PeSeries pe_series_of(const PeBasis& basis);

// |B_{k+1}| = d |B_k| + |B_k| (|B_k| - 1) starting from |B_0| = 1.
PeCount pe_basis_size(int d, int m);

}  // namespace f2coh
