#include "cudtaus/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cudtaus/lattice.hpp"
#include "cudtaus/parallel.hpp"

namespace cudtaus {

namespace {

// A * F for A = x (select clear) or A = x + 1 (select set).
inline Poly times_partial_quotient(Poly f, bool plus_one) {
  const std::uint64_t shifted = f.bits() << 1;
  return Poly{plus_one ? shifted ^ f.bits() : shifted};
}

void require_search_degree(int m) {
  if (m < 1 || m > 32) {
    throw std::invalid_argument("degree m must lie in [1, 32], got " + std::to_string(m));
  }
}

using u128 = unsigned __int128;

// Solves base^k = target in a cyclic group of the given order.
std::optional<std::uint64_t> baby_step_giant_step(Poly base, Poly target, std::uint64_t order,
                                                  Poly p) {
  const auto stride = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(static_cast<std::size_t>(stride) * 2);
  Poly cur = Poly::one();
  for (std::uint64_t j = 0; j < stride; ++j) {
    baby.try_emplace(cur.bits(), j);
    cur = mulmod(cur, base, p);
  }
  // cur = base^stride; step the target by its inverse.
  const Poly giant = inverse_mod(cur, p);
  Poly y = target;
  for (std::uint64_t i = 0; i <= stride; ++i) {
    if (auto it = baby.find(y.bits()); it != baby.end()) {
      const std::uint64_t k = i * stride + it->second;
      if (k < order) {
        return k;
      }
    }
    y = mulmod(y, giant, p);
  }
  return std::nullopt;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    r *= b;
  }
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

// Inverse of a modulo n for gcd(a, n) = 1.
std::uint64_t inverse_mod_int(std::uint64_t a, std::uint64_t n) {
  __int128 t = 0;
  __int128 new_t = 1;
  __int128 r = n;
  __int128 new_r = a % n;
  while (new_r != 0) {
    const __int128 quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) {
    t += n;
  }
  return static_cast<std::uint64_t>(t);
}

// Discrete log of q base x for primitive p, assuming order 2^m - 1.
// Baby-step giant-step runs inside each prime-order subgroup and the
// prime-power pieces are joined by the Chinese remainder theorem.
std::optional<std::uint64_t> discrete_log_primitive(Poly q, Poly p) {
  const int m = p.degree();
  const std::uint64_t n = period_length(m);
  if (n == 1) {
    return q == Poly::one() ? std::optional<std::uint64_t>{0} : std::nullopt;
  }
  std::uint64_t result = 0;
  std::uint64_t modulus = 1;
  for (const auto& [r, e] : mersenne_factors(m)) {
    const std::uint64_t re = ipow(r, e);
    const std::uint64_t cofactor = n / re;
    const Poly g = modpow(Poly::x(), cofactor, p);       // order r^e
    const Poly h = modpow(q, cofactor, p);
    const Poly gamma = modpow(g, re / r, p);             // order r
    const Poly g_inv = inverse_mod(g, p);
    std::uint64_t xr = 0;
    std::uint64_t rk = 1;
    for (int k = 0; k < e; ++k) {
      const Poly hk = modpow(mulmod(modpow(g_inv, xr, p), h, p), re / (rk * r), p);
      const auto digit = baby_step_giant_step(gamma, hk, r, p);
      if (!digit) {
        return std::nullopt;
      }
      xr += *digit * rk;
      rk *= r;
    }
    // Combine result (mod modulus) with xr (mod re).
    const std::uint64_t diff = (xr + re - result % re) % re;
    const std::uint64_t step = mul_mod(diff, inverse_mod_int(modulus % re, re), re);
    result += modulus * step;
    modulus *= re;
  }
  if (modpow(Poly::x(), result, p) != mod(q, p)) {
    return std::nullopt;
  }
  return result;
}

int t3_of(Poly p, Poly q) {
  return t_values(build_matrices_unchecked(p, q, 3), 3)[3];
}

bool admissible_sigma(std::uint64_t sigma, int m, int w) {
  return sigma > 0 && std::gcd(sigma, period_length(m)) == 1 &&
         sigma >= static_cast<std::uint64_t>(w);
}

bool ranked_before(const SearchRecord& a, const SearchRecord& b) {
  const auto ta = a.t.begin() + std::min<std::ptrdiff_t>(4, static_cast<std::ptrdiff_t>(a.t.size()));
  const auto tb = b.t.begin() + std::min<std::ptrdiff_t>(4, static_cast<std::ptrdiff_t>(b.t.size()));
  if (!std::equal(ta, a.t.end(), tb, b.t.end())) {
    return std::lexicographical_compare(ta, a.t.end(), tb, b.t.end());
  }
  if (a.delta != b.delta) {
    return a.delta < b.delta;
  }
  return a.pair.path < b.pair.path;
}

}  // namespace

FibonacciPair fibonacci_pair(int m, std::uint64_t path) {
  require_search_degree(m);
  Poly prev = Poly::one();
  Poly cur = times_partial_quotient(Poly::one(), (path & 1U) != 0);
  for (int k = 2; k <= m; ++k) {
    const bool plus_one = ((path >> (k - 1)) & 1U) != 0;
    prev = std::exchange(cur, times_partial_quotient(cur, plus_one) + prev);
  }
  return {cur, prev, path};
}

std::optional<std::uint64_t> discrete_log_x(Poly q, Poly p) {
  if (p.degree() < 1 || p.degree() > 32 || q.is_zero() || q.degree() >= p.degree() ||
      !is_primitive(p)) {
    return std::nullopt;
  }
  return discrete_log_primitive(q, p);
}

SearchResult algorithm1(int m, const SearchOptions& options) {
  require_search_degree(m);
  if (m < 3) {
    throw std::invalid_argument("algorithm1 needs m >= 3");
  }
  const std::uint64_t total = std::uint64_t{1} << m;
  const int workers = std::max(options.threads, 1);
  std::vector<std::vector<SearchRecord>> partial(static_cast<std::size_t>(workers));
  std::vector<SearchStats> partial_stats(static_cast<std::size_t>(workers));
  std::vector<std::pair<std::size_t, std::size_t>> blocks(static_cast<std::size_t>(workers));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k] = {total * k / blocks.size(), total * (k + 1) / blocks.size()};
  }
  parallel_for(blocks.size(), workers, [&](std::size_t k) {
    auto& out = partial[k];
    auto& stats = partial_stats[k];
    for (std::uint64_t path = blocks[k].first; path < blocks[k].second; ++path) {
      const FibonacciPair pair = fibonacci_pair(m, path);
      ++stats.enumerated;
      if (!is_primitive(pair.fm)) {
        continue;
      }
      ++stats.primitive;
      const auto sigma = discrete_log_primitive(pair.fm1, pair.fm);
      if (!sigma || !admissible_sigma(*sigma, m, options.w)) {
        continue;
      }
      ++stats.admissible;
      if (t3_of(pair.fm, pair.fm1) > options.t3_max) {
        continue;
      }
      ++stats.t3_survivors;
      const auto gm = build_matrices_unchecked(pair.fm, pair.fm1, m);
      SearchRecord rec;
      rec.pair = pair;
      rec.sigma = *sigma;
      rec.t = t_values(gm, m);
      rec.delta = resolution_gap_sum(gm);
      out.push_back(std::move(rec));
    }
  });
  SearchResult result;
  for (std::size_t k = 0; k < partial.size(); ++k) {
    auto& part = partial[k];
    std::move(part.begin(), part.end(), std::back_inserter(result.records));
    result.stats.enumerated += partial_stats[k].enumerated;
    result.stats.primitive += partial_stats[k].primitive;
    result.stats.admissible += partial_stats[k].admissible;
    result.stats.t3_survivors += partial_stats[k].t3_survivors;
  }
  std::sort(result.records.begin(), result.records.end(), ranked_before);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    result.records[i].rank = i + 1;
  }
  return result;
}

bool same_tie_class(const SearchRecord& a, const SearchRecord& b) {
  if (a.t.size() != b.t.size()) {
    return false;
  }
  const auto from = std::min<std::ptrdiff_t>(4, static_cast<std::ptrdiff_t>(a.t.size()));
  return std::equal(a.t.begin() + from, a.t.end(), b.t.begin() + from);
}

std::size_t select_best(const std::vector<SearchRecord>& ranked, int delta_threshold) {
  if (ranked.empty()) {
    throw std::invalid_argument("select_best on an empty ranking");
  }
  std::size_t head = 0;
  while (head < ranked.size()) {
    // Within a tie class records are sorted by delta, so the head is minimal.
    if (ranked[head].delta <= delta_threshold) {
      return head;
    }
    std::size_t next = head + 1;
    while (next < ranked.size() && same_tie_class(ranked[head], ranked[next])) {
      ++next;
    }
    head = next;
  }
  return 0;
}

CensusResult census_t3(int m, const SearchOptions& options) {
  require_search_degree(m);
  const std::uint64_t total = std::uint64_t{1} << m;
  const int workers = std::max(options.threads, 1);
  std::vector<CensusResult> partial(static_cast<std::size_t>(workers));
  parallel_for(partial.size(), workers, [&](std::size_t k) {
    auto& out = partial[k];
    const std::uint64_t begin = total * k / partial.size();
    const std::uint64_t end = total * (k + 1) / partial.size();
    for (std::uint64_t path = begin; path < end; ++path) {
      const FibonacciPair pair = fibonacci_pair(m, path);
      const int t3 = t3_of(pair.fm, pair.fm1);
      ++out.all_pairs[t3];
      if (!is_primitive(pair.fm)) {
        continue;
      }
      ++out.primitive[t3];
      const auto sigma = discrete_log_primitive(pair.fm1, pair.fm);
      if (sigma && admissible_sigma(*sigma, m, options.w)) {
        ++out.admissible[t3];
      }
    }
  });
  CensusResult merged;
  for (const auto& part : partial) {
    for (const auto& [t, c] : part.all_pairs) merged.all_pairs[t] += c;
    for (const auto& [t, c] : part.primitive) merged.primitive[t] += c;
    for (const auto& [t, c] : part.admissible) merged.admissible[t] += c;
  }
  return merged;
}

std::vector<Poly> primitive_polynomials(int m) {
  require_search_degree(m);
  std::vector<Poly> out;
  const std::uint64_t top = std::uint64_t{1} << m;
  for (std::uint64_t low = 1; low < top; low += 2) {
    const Poly p{top | low};
    if (is_primitive(p)) {
      out.push_back(p);
    }
  }
  if (m == 1) {
    out = {Poly{3}};
  }
  return out;
}

std::optional<std::pair<Poly, Poly>> find_t0_s3(int m, int threads) {
  const auto polys = primitive_polynomials(m);
  std::vector<std::optional<std::pair<Poly, Poly>>> hits(polys.size());
  parallel_for(polys.size(), threads, [&](std::size_t i) {
    const Poly p = polys[i];
    for (std::uint64_t q = 1; q < (std::uint64_t{1} << m); ++q) {
      if (t3_of(p, Poly{q}) == 0) {
        hits[i] = std::pair{p, Poly{q}};
        return;
      }
    }
  });
  for (const auto& h : hits) {
    if (h) {
      return h;
    }
  }
  return std::nullopt;
}

bool verify_no_t0_s3(int m, int threads) { return !find_t0_s3(m, threads).has_value(); }

}  // namespace cudtaus
