#pragma once

// Arithmetic in F2[x] and in the quotient rings F2[x]/p(x).
//
// A Poly is one machine word: bit k holds the coefficient of x^k, so the
// supported degree range is 0..63.

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cudtaus {

class Poly {
 public:
  static constexpr int kMaxDegree = 63;
  /// Degree reported for the zero polynomial; compares below every real degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  constexpr Poly() = default;
  constexpr explicit Poly(std::uint64_t bits) : bits_(bits) {}

  static constexpr Poly zero() { return Poly{}; }
  static constexpr Poly one() { return Poly{1}; }
  static constexpr Poly x() { return Poly{2}; }
  static constexpr Poly monomial(int k) { return Poly{std::uint64_t{1} << k}; }

  /// Builds a polynomial from the exponents of its nonzero terms.
  static Poly from_exponents(std::initializer_list<int> exponents);

  /// Parses space-separated 0/1 coefficients listed in ascending degree
  /// ("1 1 0 1" is 1 + x + x^3). Throws std::invalid_argument on bad input.
  static Poly parse(std::string_view text);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr int degree() const {
    return bits_ == 0 ? kZeroDegree : 63 - std::countl_zero(bits_);
  }
  constexpr bool coeff(int k) const { return ((bits_ >> k) & 1U) != 0; }
  constexpr int weight() const { return std::popcount(bits_); }

  /// Ascending 0/1 coefficient text, the inverse of parse(). Zero prints "0".
  std::string to_string() const;
  /// Human-readable form such as "x^3+x+1".
  std::string to_algebraic() const;

  friend constexpr Poly operator+(Poly a, Poly b) { return Poly{a.bits_ ^ b.bits_}; }
  friend constexpr bool operator==(Poly, Poly) = default;
  friend constexpr auto operator<=>(Poly, Poly) = default;

 private:
  std::uint64_t bits_ = 0;
};

constexpr Poly add(Poly a, Poly b) { return a + b; }

/// Plain product; throws std::overflow_error if the degree would exceed 63.
Poly multiply(Poly a, Poly b);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division a = quotient * b + remainder, deg(remainder) < deg(b).
DivMod divmod(Poly a, Poly b);

/// a mod p. Throws std::domain_error for p = 0.
Poly mod(Poly a, Poly p);

/// (a * b) mod p. Throws std::domain_error if deg(p) < 1.
Poly mulmod(Poly a, Poly b, Poly p);

/// base^e mod p by square-and-multiply. Throws std::domain_error if deg(p) < 1.
Poly modpow(Poly base, std::uint64_t e, Poly p);

Poly gcd(Poly a, Poly b);

/// r with q * r = 1 mod p. Throws std::domain_error when gcd(q, p) != 1.
Poly inverse_mod(Poly q, Poly p);

/// Continued fraction [a0; A_1, ..., A_v] of a rational function.
struct CFExpansion {
  Poly a0;
  std::vector<Poly> quotients;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

/// Euclidean expansion of q/p. Non-coprime inputs expand q/g over p/g.
CFExpansion continued_fraction(Poly q, Poly p);

/// Last convergent of the expansion as (numerator, denominator), i.e. the
/// reduced pair (q/g, p/g).
std::pair<Poly, Poly> reconstruct(const CFExpansion& cf);

/// True iff a0 = 0 and every partial quotient has degree exactly one.
bool all_quotients_degree_one(const CFExpansion& cf);

/// Rabin's test. Requires deg(p) >= 1.
bool is_irreducible(Poly p);

/// True iff p is irreducible and x has multiplicative order 2^deg(p) - 1.
bool is_primitive(Poly p);

struct PrimePower {
  std::uint64_t prime;
  int multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization in ascending prime order; empty for n = 1.
std::vector<PrimePower> factor_integer(std::uint64_t n);

/// Cached factorization of 2^m - 1 for 1 <= m <= 64.
const std::vector<PrimePower>& mersenne_factors(int m);

/// 2^m - 1, the period of a maximal-period generator of degree m.
constexpr std::uint64_t period_length(int m) {
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

}  // namespace cudtaus
