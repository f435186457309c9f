#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2coh/errors.hpp"

namespace f2coh {

enum class BoundKind { k_regular, l_skew, combined, complex_k_regular, complex_l_skew };

std::string to_string(BoundKind kind);
BoundKind parse_bound_kind(const std::string& text);

// Source families.
inline constexpr const char* kDualClass = "dual-class";   // nonvanishing dual classes via height
inline constexpr const char* kKeyParity = "key-parity";   // binomial key condition, d = 2^t + e

struct BoundQuery {
  BoundKind kind = BoundKind::k_regular;
  std::int64_t d = 2;  // complex l-skew: the complex dimension
  std::int64_t k = 1;
  std::int64_t ell = 1;
};

struct BoundResult {
  std::optional<std::int64_t> value;  // largest excluded N; none when the case yields nothing
  std::string source;
  std::string case_label;
  std::string formula;
  // Above the dimension-count baseline that holds for every embedding.
  bool nontrivial = false;
};

inline constexpr std::int64_t kMaxBoundParameter = std::int64_t{1} << 30;

std::vector<BoundResult> bound_k_regular(std::int64_t d, std::int64_t k);
std::vector<BoundResult> bound_l_skew(std::int64_t d, std::int64_t ell);
std::vector<BoundResult> bound_combined(std::int64_t d, std::int64_t k, std::int64_t ell);
// Domain R^d, codomain C^N.
std::vector<BoundResult> bound_complex_k_regular(std::int64_t d, std::int64_t k);
// Domain C^dc, codomain C^N.
std::vector<BoundResult> bound_complex_l_skew(std::int64_t dc, std::int64_t ell);

std::vector<BoundResult> bounds_for(const BoundQuery& q);
// Largest value over the applicable cases; ties keep the first listed.
BoundResult best_bound(const BoundQuery& q);

// Dimension-count baseline: excluded N up to this value is automatic.
std::int64_t trivial_baseline(const BoundQuery& q);

}  // namespace f2coh
