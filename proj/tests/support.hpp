#pragma once

// Independent reference implementations used as oracles by the tests. They
// share nothing with the library beyond the Poly value type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "cudtaus/point_set.hpp"
#include "cudtaus/poly.hpp"

namespace oracle {

using cudtaus::Poly;

inline int deg(std::uint64_t a) { return a == 0 ? -1 : 63 - __builtin_clzll(a); }

// Schoolbook remainder, one bit at a time.
inline std::uint64_t rem(std::uint64_t a, std::uint64_t p) {
  const int dp = deg(p);
  for (int d = deg(a); d >= dp; d = deg(a)) {
    a ^= p << (d - dp);
  }
  return a;
}

// (a * b) mod p through a 128-bit carry-less product.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  unsigned __int128 prod = 0;
  for (int k = 0; k < 64; ++k) {
    if ((b >> k) & 1U) prod ^= static_cast<unsigned __int128>(a) << k;
  }
  const int dp = deg(p);
  for (int d = 127; d >= dp; --d) {
    if ((prod >> d) & 1U) prod ^= static_cast<unsigned __int128>(p) << (d - dp);
  }
  return static_cast<std::uint64_t>(prod);
}

// Multiplicative order of x modulo p by walking powers; 0 if x^k never
// returns to 1 within the limit.
inline std::uint64_t order_of_x(std::uint64_t p, std::uint64_t limit) {
  std::uint64_t cur = rem(2, p);
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (cur == 1) return k;
    cur = mulmod(cur, 2, p);
  }
  return 0;
}

// Irreducible iff no polynomial of degree 1..deg/2 divides p.
inline bool irreducible_by_division(std::uint64_t p) {
  const int d = deg(p);
  for (std::uint64_t f = 2; deg(f) <= d / 2; ++f) {
    if (rem(p, f) == 0) return false;
  }
  return d >= 1;
}

inline std::vector<std::pair<std::uint64_t, int>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Rank over F2 of a list of row words.
inline int rank(std::vector<std::uint64_t> rows) {
  int r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(),
                           [bit](std::uint64_t v) { return (v >> bit) & 1U; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + r, it);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != r && ((rows[i] >> bit) & 1U)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

// Calls fn on every composition (d_1..d_s) of d into s non-negative parts.
inline void compositions(int d, int s, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(static_cast<std::size_t>(s), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == s - 1) {
      parts[static_cast<std::size_t>(j)] = left;
      fn(parts);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[static_cast<std::size_t>(j)] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, d);
}

// Laurent digit r of g/p as coefficient of x^(m-1) after r shifts.
inline int digit(std::uint64_t g, std::uint64_t p, int r) {
  const int m = deg(p);
  for (int k = 0; k < r; ++k) g = rem(g << 1, p);
  return static_cast<int>((g >> (m - 1)) & 1U);
}

// Generating matrices rebuilt from first principles: row r of matrix j has
// bit c = digit r of (x^c q^j mod p)/p.
inline std::vector<std::vector<std::uint64_t>> matrices(std::uint64_t p, std::uint64_t q, int s) {
  const int m = deg(p);
  std::vector<std::vector<std::uint64_t>> out;
  std::uint64_t qj = 1;
  for (int j = 0; j < s; ++j) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
    for (int c = 0; c < m; ++c) {
      const std::uint64_t g = rem(qj << c, p);
      for (int r = 0; r < m; ++r) {
        if (digit(g, p, r)) rows[static_cast<std::size_t>(r)] |= std::uint64_t{1} << c;
      }
    }
    out.push_back(rows);
    qj = mulmod(qj, q, p);
  }
  return out;
}

// t-value by plain Gaussian elimination on every composition, descending d.
inline int naive_t_value(const std::vector<std::vector<std::uint64_t>>& mats, int m) {
  const int s = static_cast<int>(mats.size());
  for (int d = m; d >= 0; --d) {
    bool ok = true;
    compositions(d, s, [&](const std::vector<int>& parts) {
      if (!ok) return;
      std::vector<std::uint64_t> rows;
      for (int j = 0; j < s; ++j) {
        for (int r = 0; r < parts[static_cast<std::size_t>(j)]; ++r) {
          rows.push_back(mats[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]);
        }
      }
      if (rank(rows) < d) ok = false;
    });
    if (ok) return m - d;
  }
  return m;
}

// Smallest t such that every elementary interval of volume 2^(t-m) holds
// exactly 2^t points, by direct counting over w-bit coordinates.
inline int counting_t_value(const cudtaus::PointSet& points, int m) {
  const int s = points.dimension();
  const int w = points.word_bits();
  for (int t = 0; t <= m; ++t) {
    bool ok = true;
    compositions(m - t, s, [&](const std::vector<int>& parts) {
      if (!ok) return;
      std::vector<std::uint32_t> count(std::size_t{1} << (m - t), 0);
      for (std::size_t i = 0; i < points.size(); ++i) {
        std::uint64_t cell = 0;
        for (int j = 0; j < s; ++j) {
          const int dj = parts[static_cast<std::size_t>(j)];
          cell = (cell << dj) | (dj == 0 ? 0 : points.point(i)[static_cast<std::size_t>(j)] >> (w - dj));
        }
        ++count[cell];
      }
      ok = std::all_of(count.begin(), count.end(),
                       [t](std::uint32_t c) { return c == (std::uint32_t{1} << t); });
    });
    if (ok) return t;
  }
  return m + 1;
}

}  // namespace oracle
