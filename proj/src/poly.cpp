#include "cudtaus/poly.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cudtaus {

Poly Poly::from_exponents(std::initializer_list<int> exponents) {
  std::uint64_t bits = 0;
  for (int e : exponents) {
    if (e < 0 || e > kMaxDegree) {
      throw std::invalid_argument("exponent out of range: " + std::to_string(e));
    }
    bits ^= std::uint64_t{1} << e;
  }
  return Poly{bits};
}

Poly Poly::parse(std::string_view text) {
  std::uint64_t bits = 0;
  int k = 0;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      continue;
    }
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("polynomial text must contain only 0/1 coefficients");
    }
    if (k > kMaxDegree) {
      throw std::invalid_argument("polynomial degree exceeds 63");
    }
    if (ch == '1') {
      bits |= std::uint64_t{1} << k;
    }
    ++k;
  }
  if (k == 0) {
    throw std::invalid_argument("empty polynomial text");
  }
  return Poly{bits};
}

std::string Poly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    if (k > 0) {
      out += ' ';
    }
    out += coeff(k) ? '1' : '0';
  }
  return out;
}

std::string Poly::to_algebraic() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (!coeff(k)) {
      continue;
    }
    if (!out.empty()) {
      out += '+';
    }
    if (k == 0) {
      out += '1';
    } else if (k == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(k);
    }
  }
  return out;
}

Poly multiply(Poly a, Poly b) {
  if (a.is_zero() || b.is_zero()) {
    return Poly{};
  }
  if (a.degree() + b.degree() > Poly::kMaxDegree) {
    throw std::overflow_error("polynomial product exceeds degree 63");
  }
  std::uint64_t acc = 0;
  std::uint64_t rest = b.bits();
  while (rest != 0) {
    int k = std::countr_zero(rest);
    acc ^= a.bits() << k;
    rest &= rest - 1;
  }
  return Poly{acc};
}

DivMod divmod(Poly a, Poly b) {
  if (b.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  const int db = b.degree();
  std::uint64_t q = 0;
  std::uint64_t r = a.bits();
  while (r != 0) {
    int dr = 63 - std::countl_zero(r);
    if (dr < db) {
      break;
    }
    q |= std::uint64_t{1} << (dr - db);
    r ^= b.bits() << (dr - db);
  }
  return {Poly{q}, Poly{r}};
}

Poly mod(Poly a, Poly p) { return divmod(a, p).remainder; }

namespace {

void require_modulus(Poly p) {
  if (p.degree() < 1) {
    throw std::domain_error("modulus must have degree >= 1");
  }
}

// a * x mod p for deg(a) < deg(p) <= 63.
inline std::uint64_t times_x(std::uint64_t a, std::uint64_t p, std::uint64_t top) {
  a <<= 1;
  return (a & top) != 0 ? a ^ p : a;
}

std::uint64_t mulmod_bits(std::uint64_t a, std::uint64_t b, std::uint64_t p, int m) {
  const std::uint64_t top = std::uint64_t{1} << m;
  std::uint64_t acc = 0;
  while (b != 0) {
    if ((b & 1U) != 0) {
      acc ^= a;
    }
    b >>= 1;
    a = times_x(a, p, top);
  }
  return acc;
}

}  // namespace

Poly mulmod(Poly a, Poly b, Poly p) {
  require_modulus(p);
  a = mod(a, p);
  b = mod(b, p);
  return Poly{mulmod_bits(a.bits(), b.bits(), p.bits(), p.degree())};
}

Poly modpow(Poly base, std::uint64_t e, Poly p) {
  require_modulus(p);
  const int m = p.degree();
  std::uint64_t b = mod(base, p).bits();
  std::uint64_t acc = mod(Poly::one(), p).bits();
  while (e != 0) {
    if ((e & 1U) != 0) {
      acc = mulmod_bits(acc, b, p.bits(), m);
    }
    e >>= 1;
    if (e != 0) {
      b = mulmod_bits(b, b, p.bits(), m);
    }
  }
  return Poly{acc};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    a = std::exchange(b, mod(a, b));
  }
  return a;
}

Poly inverse_mod(Poly q, Poly p) {
  require_modulus(p);
  // Invariant: s0 * q = r0 (mod p), s1 * q = r1 (mod p).
  Poly r0 = p;
  Poly r1 = mod(q, p);
  Poly s0;
  Poly s1 = Poly::one();
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 + mulmod(quot, s1, p));
  }
  if (r0 != Poly::one()) {
    throw std::domain_error("polynomial is not invertible modulo " + p.to_algebraic());
  }
  return mod(s0, p);
}

CFExpansion continued_fraction(Poly q, Poly p) {
  if (p.is_zero()) {
    throw std::domain_error("continued fraction with zero denominator");
  }
  CFExpansion cf;
  auto [a0, rem] = divmod(q, p);
  cf.a0 = a0;
  Poly num = p;
  Poly den = rem;
  while (!den.is_zero()) {
    auto [quot, r] = divmod(num, den);
    cf.quotients.push_back(quot);
    num = std::exchange(den, r);
  }
  return cf;
}

std::pair<Poly, Poly> reconstruct(const CFExpansion& cf) {
  // Convergent recurrences h_k = A_k h_{k-1} + h_{k-2}, likewise for k_k.
  Poly h_prev = Poly::one();
  Poly h = cf.a0;
  Poly k_prev;
  Poly k = Poly::one();
  for (Poly a : cf.quotients) {
    h_prev = std::exchange(h, multiply(a, h) + h_prev);
    k_prev = std::exchange(k, multiply(a, k) + k_prev);
  }
  return {h, k};
}

bool all_quotients_degree_one(const CFExpansion& cf) {
  return cf.a0.is_zero() &&
         std::all_of(cf.quotients.begin(), cf.quotients.end(),
                     [](Poly a) { return a.degree() == 1; });
}

namespace {

// x^(2^k) mod p by k squarings.
Poly frobenius_power(int k, Poly p) {
  Poly v = mod(Poly::x(), p);
  for (int i = 0; i < k; ++i) {
    v = mulmod(v, v, p);
  }
  return v;
}

}  // namespace

bool is_irreducible(Poly p) {
  require_modulus(p);
  const int m = p.degree();
  const Poly xr = mod(Poly::x(), p);
  if (frobenius_power(m, p) != xr) {
    return false;
  }
  for (const auto& [r, mult] : factor_integer(static_cast<std::uint64_t>(m))) {
    Poly h = frobenius_power(m / static_cast<int>(r), p) + xr;
    if (gcd(h, p) != Poly::one()) {
      return false;
    }
  }
  return true;
}

bool is_primitive(Poly p) {
  require_modulus(p);
  const int m = p.degree();
  if (!p.coeff(0) || !is_irreducible(p)) {
    return false;
  }
  const std::uint64_t order = period_length(m);
  if (modpow(Poly::x(), order, p) != Poly::one()) {
    return false;
  }
  for (const auto& [r, mult] : mersenne_factors(m)) {
    if (modpow(Poly::x(), order / r, p) == Poly::one()) {
      return false;
    }
  }
  return true;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t acc = 1 % n;
  a %= n;
  while (e != 0) {
    if ((e & 1U) != 0) {
      acc = mul_mod_u64(acc, a, n);
    }
    a = mul_mod_u64(a, a, n);
    e >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin for all 64-bit n.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) {
      return n == b;
    }
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

// Brent's variant of Pollard rho; n must be an odd composite.
std::uint64_t rho_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mul_mod_u64(v, v, n) + c) % n; };
    std::uint64_t y = 2;
    std::uint64_t x = 2;
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        y = f(y);
      }
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod_u64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) {
      return g;
    }
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) {
    return;
  }
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  std::uint64_t d = rho_factor(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<PrimePower> factor_integer(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("cannot factor zero");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d < (1U << 16) && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (std::uint64_t pr : primes) {
    if (!out.empty() && out.back().prime == pr) {
      ++out.back().multiplicity;
    } else {
      out.push_back({pr, 1});
    }
  }
  return out;
}

const std::vector<PrimePower>& mersenne_factors(int m) {
  if (m < 1 || m > 64) {
    throw std::invalid_argument("mersenne_factors: m out of range");
  }
  static std::array<std::vector<PrimePower>, 65> cache;
  static std::array<std::once_flag, 65> once;
  std::call_once(once[m], [m] { cache[m] = factor_integer(period_length(m)); });
  return cache[m];
}

}  // namespace cudtaus
