#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2coh/errors.hpp"

namespace f2coh {

inline constexpr int kMaxVars = 16;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;
inline constexpr std::size_t kDefaultMaxTerms = 10'000'000;

using Exponent = std::uint16_t;

// Term guard used by rings created without an explicit one.
std::size_t default_max_terms();
void set_default_max_terms(std::size_t n);

// Exponent vector; entries past the ring's variable count stay zero.
// Ordering is plain lexicographic with variable 0 most significant.
struct Monomial {
  std::array<Exponent, kMaxVars> e{};

  Exponent& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  Exponent operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct RingSpec {
  int vars = 1;
  std::vector<std::uint32_t> degrees;  // empty means all 1
  std::vector<std::uint32_t> caps;     // empty or 0 entries mean unbounded
  std::optional<std::uint64_t> degree_cap;
  std::string stem = "x";
  int index_base = 1;
  std::size_t max_terms = default_max_terms();
};

// F2[x_1..x_n] / <x_i^{cap_i}>, optionally cut off above a total degree.
class RingContext {
 public:
  explicit RingContext(RingSpec spec);

  int vars() const { return spec_.vars; }
  std::uint32_t degree(int i) const { return spec_.degrees[static_cast<std::size_t>(i)]; }
  // 0 means unbounded.
  std::uint32_t cap(int i) const { return spec_.caps[static_cast<std::size_t>(i)]; }
  bool all_capped() const;
  std::optional<std::uint64_t> degree_cap() const { return spec_.degree_cap; }
  const std::string& stem() const { return spec_.stem; }
  int index_base() const { return spec_.index_base; }
  std::size_t max_terms() const { return spec_.max_terms; }
  const RingSpec& spec() const { return spec_; }

  bool uniform_degrees() const;
  std::uint64_t degree_of(const Monomial& m) const;
  bool admits(const Monomial& m) const;
  // Largest degree a nonzero element can have, if finite.
  std::optional<std::uint64_t> max_degree() const;

  // Same algebra and same display alphabet; the term guard is ignored.
  bool same_ring(const RingContext& o) const;

 private:
  RingSpec spec_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(RingSpec spec);
Ring with_degree_cap(const Ring& r, std::optional<std::uint64_t> cap);
Ring with_max_terms(const Ring& r, std::size_t max_terms);

class Polynomial {
 public:
  explicit Polynomial(Ring ring);

  static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
  static Polynomial one(Ring ring);
  static Polynomial variable(Ring ring, int i);
  static Polynomial monomial(Ring ring, const Monomial& m);
  // Raw term list: repeated terms cancel in pairs, terms outside the ring are dropped.
  static Polynomial from_terms(Ring ring, std::vector<Monomial> raw);

  const Ring& ring() const { return ring_; }
  const RingContext& ctx() const { return *ring_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  struct Sorted {};
  Polynomial(Ring ring, std::vector<Monomial> sorted_unique, Sorted);

  Ring ring_;
  std::vector<Monomial> terms_;

  friend Polynomial add(const Polynomial&, const Polynomial&);
  friend Polynomial mul(const Polynomial&, const Polynomial&);
  friend Polynomial frobenius(const Polynomial&, unsigned);
  friend Polynomial geometric_inverse(const Polynomial&, std::optional<std::uint64_t>);
  friend Polynomial homogeneous_component(const Polynomial&, std::uint64_t);
  friend Polynomial reduce(const Polynomial&);
};

using BitMatrix = std::vector<std::vector<int>>;

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
// Exponents scaled by 2^a (the a-fold Frobenius).
Polynomial frobenius(const Polynomial& p, unsigned a);
Polynomial square(const Polynomial& p);
Polynomial pow(const Polynomial& p, std::uint64_t n);
// Inverse of a polynomial with constant term 1, exact through degree `cap`
// (default: the ring's degree cap, else its maximal degree).
Polynomial geometric_inverse(const Polynomial& p, std::optional<std::uint64_t> cap = std::nullopt);
// x_i -> sum_j M[j][i] x_j. Requires M invertible and equal variable degrees.
Polynomial linear_substitute(const Polynomial& p, const BitMatrix& m);
// x_i -> images[i], evaluated in the images' ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
// Re-read the same exponent vectors in another ring with equal variable count.
Polynomial change_ring(const Polynomial& p, const Ring& target);
Polynomial reduce(const Polynomial& p);

Polynomial homogeneous_component(const Polynomial& p, std::uint64_t n);
std::optional<std::uint64_t> top_degree(const Polynomial& p);
bool monomial_coefficient(const Polynomial& p, const Monomial& m);
// Distinct degrees carrying terms, ascending.
std::vector<std::uint64_t> degrees_present(const Polynomial& p);

bool rank_full(const BitMatrix& m);

// Ascending degree; inside a degree, variable 1 most significant, higher exponent first.
std::vector<Monomial> canonical_terms(const Polynomial& p);
std::string monomial_to_string(const RingContext& ctx, const Monomial& m);
std::string to_string(const Polynomial& p);
std::vector<std::string> term_strings(const Polynomial& p);
Monomial parse_monomial(std::string_view text, const RingContext& ctx);
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

}  // namespace f2coh
