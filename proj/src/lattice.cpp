#include "cudtaus/lattice.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

namespace cudtaus {

std::vector<std::uint8_t> laurent_digits(Poly g, Poly p, int n) {
  const int m = p.degree();
  if (m < 1 || g.degree() >= m) {
    throw std::invalid_argument("laurent_digits requires deg(g) < deg(p)");
  }
  const std::uint64_t top = std::uint64_t{1} << m;
  std::uint64_t v = g.bits();
  std::vector<std::uint8_t> out(static_cast<std::size_t>(std::max(n, 0)));
  for (auto& digit : out) {
    digit = static_cast<std::uint8_t>((v >> (m - 1)) & 1U);
    v <<= 1;
    if ((v & top) != 0) {
      v ^= p.bits();
    }
  }
  return out;
}

std::uint64_t laurent_word(Poly g, Poly p, int w) {
  const int m = p.degree();
  if (m < 1 || g.degree() >= m || w < 1 || w > 64) {
    throw std::invalid_argument("laurent_word requires deg(g) < deg(p) and 1 <= w <= 64");
  }
  const std::uint64_t top = std::uint64_t{1} << m;
  std::uint64_t v = g.bits();
  std::uint64_t word = 0;
  for (int r = 0; r < w; ++r) {
    word = (word << 1) | ((v >> (m - 1)) & 1U);
    v <<= 1;
    if ((v & top) != 0) {
      v ^= p.bits();
    }
  }
  return word;
}

std::uint64_t GeneratingMatrices::apply(int j, std::uint64_t h) const {
  std::uint64_t out = 0;
  for (int r = 0; r < depth; ++r) {
    out = (out << 1) | static_cast<std::uint64_t>(std::popcount(rows[j][r] & h) & 1);
  }
  return out;
}

GeneratingMatrices build_matrices_unchecked(Poly p, Poly q, int s, int depth) {
  const int m = p.degree();
  if (m < 1) {
    throw std::invalid_argument("build_matrices: deg(p) must be >= 1");
  }
  if (q.degree() >= m) {
    throw std::invalid_argument("build_matrices: deg(q) must be < deg(p)");
  }
  if (s < 1) {
    throw std::invalid_argument("build_matrices: dimension must be >= 1");
  }
  if (depth < 0) {
    depth = m;
  }
  GeneratingMatrices gm{m, s, depth, {}};
  gm.rows.assign(static_cast<std::size_t>(s), std::vector<std::uint64_t>(static_cast<std::size_t>(depth)));
  Poly g = mod(Poly::one(), p);
  // Entry (r, c) of matrix j is Laurent digit r + c of (q^j mod p)/p, so each
  // matrix is a Hankel matrix read off one digit stream.
  for (int j = 0; j < s; ++j) {
    const auto digits = laurent_digits(g, p, depth + m - 1);
    for (int r = 0; r < depth; ++r) {
      std::uint64_t row = 0;
      for (int c = 0; c < m; ++c) {
        row |= static_cast<std::uint64_t>(digits[static_cast<std::size_t>(r + c)]) << c;
      }
      gm.rows[j][r] = row;
    }
    g = mulmod(g, q, p);
  }
  return gm;
}

GeneratingMatrices build_matrices(Poly p, Poly q, int s) {
  if (p.degree() < 1 || p.degree() > 32) {
    throw std::invalid_argument("build_matrices: deg(p) must be in [1, 32], got " +
                                std::to_string(p.degree()));
  }
  if (!is_primitive(p)) {
    throw std::invalid_argument("build_matrices: p = " + p.to_algebraic() + " is not primitive");
  }
  if (q.degree() >= p.degree()) {
    throw std::invalid_argument("build_matrices: deg(q) must be < deg(p)");
  }
  if (q.is_zero() || gcd(q, p) != Poly::one()) {
    throw std::invalid_argument("build_matrices: gcd(q, p) must be 1");
  }
  return build_matrices_unchecked(p, q, s);
}

namespace {

// Row echelon basis keyed by leading bit; supports LIFO removal because a
// stored vector is only ever reduced by vectors inserted before it.
class RowBasis {
 public:
  int insert(std::uint64_t v) {
    while (v != 0) {
      const int b = 63 - std::countl_zero(v);
      if (pivot_[b] == 0) {
        pivot_[b] = v;
        return b;
      }
      v ^= pivot_[b];
    }
    return -1;
  }
  void erase(int b) { pivot_[b] = 0; }

 private:
  std::array<std::uint64_t, 64> pivot_{};
};

// Checks that for every composition (d_1, ..., d_s) of d the first d_j rows
// of matrix j are jointly independent. With skip_empty_last, compositions with
// d_s = 0 are assumed to be known good.
//
// When the first matrix is the identity its k leading rows are the unit
// vectors e_0..e_{k-1}, so that level reduces to masking those bits out of
// every later row instead of inserting them.
class CompositionChecker {
 public:
  CompositionChecker(const std::vector<std::vector<std::uint64_t>>& rows, int depth, int s,
                     bool identity_first, bool skip_empty_last)
      : rows_(rows),
        depth_(depth),
        s_(s),
        identity_first_(identity_first),
        skip_empty_last_(skip_empty_last) {}

  bool check(int d) {
    if (d > depth_ * s_) {
      return false;
    }
    if (!identity_first_ || s_ == 1) {
      return descend(0, d, ~std::uint64_t{0});
    }
    const int max_first = std::min(d - (skip_empty_last_ ? 1 : 0), depth_);
    for (int k = 0; k <= max_first; ++k) {
      if (d - k > depth_ * (s_ - 1)) {
        continue;
      }
      const std::uint64_t mask = k >= 64 ? 0 : ~std::uint64_t{0} << k;
      if (!descend(1, d - k, mask)) {
        return false;
      }
    }
    return true;
  }

 private:
  bool descend(int j, int remaining, std::uint64_t mask) {
    const auto& rows = rows_[static_cast<std::size_t>(j)];
    std::array<int, 64> slots{};
    int added = 0;
    bool ok = true;
    if (j == s_ - 1) {
      if (remaining == 0) {
        return true;
      }
      if (remaining > depth_) {
        return false;
      }
      for (; added < remaining; ++added) {
        const int slot = basis_.insert(rows[static_cast<std::size_t>(added)] & mask);
        if (slot < 0) {
          ok = false;
          break;
        }
        slots[static_cast<std::size_t>(added)] = slot;
      }
    } else {
      const int max_here = std::min(remaining - (skip_empty_last_ ? 1 : 0), depth_);
      for (int k = 0; k <= max_here; ++k) {
        if (k > 0) {
          const int slot = basis_.insert(rows[static_cast<std::size_t>(k - 1)] & mask);
          if (slot < 0) {
            ok = false;
            break;
          }
          slots[static_cast<std::size_t>(added++)] = slot;
        }
        if (remaining - k > depth_ * (s_ - 1 - j)) {
          continue;
        }
        if (!descend(j + 1, remaining - k, mask)) {
          ok = false;
          break;
        }
      }
    }
    while (added > 0) {
      basis_.erase(slots[static_cast<std::size_t>(--added)]);
    }
    return ok;
  }

  const std::vector<std::vector<std::uint64_t>>& rows_;
  int depth_;
  int s_;
  bool identity_first_;
  bool skip_empty_last_;
  RowBasis basis_;
};

// Inverse of an m x m matrix given by rows (bit c of row r = entry (r, c)).
std::optional<std::vector<std::uint64_t>> invert(const std::vector<std::uint64_t>& rows, int m) {
  std::vector<std::uint64_t> a(rows.begin(), rows.begin() + m);
  std::vector<std::uint64_t> inv(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    inv[static_cast<std::size_t>(r)] = std::uint64_t{1} << r;
  }
  for (int c = 0; c < m; ++c) {
    int pivot = -1;
    for (int r = c; r < m; ++r) {
      if ((a[static_cast<std::size_t>(r)] >> c) & 1U) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      return std::nullopt;
    }
    std::swap(a[static_cast<std::size_t>(c)], a[static_cast<std::size_t>(pivot)]);
    std::swap(inv[static_cast<std::size_t>(c)], inv[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < m; ++r) {
      if (r != c && ((a[static_cast<std::size_t>(r)] >> c) & 1U)) {
        a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(c)];
        inv[static_cast<std::size_t>(r)] ^= inv[static_cast<std::size_t>(c)];
      }
    }
  }
  return inv;
}

// Row vector times matrix over F2.
std::uint64_t row_times(std::uint64_t v, const std::vector<std::uint64_t>& matrix) {
  std::uint64_t out = 0;
  while (v != 0) {
    out ^= matrix[static_cast<std::size_t>(std::countr_zero(v))];
    v &= v - 1;
  }
  return out;
}

int leading_rank(const std::vector<std::uint64_t>& rows, int limit) {
  RowBasis basis;
  int r = 0;
  while (r < limit && basis.insert(rows[r]) >= 0) {
    ++r;
  }
  return r;
}

}  // namespace

std::vector<int> t_values(const GeneratingMatrices& gm, int s_max) {
  if (s_max < 1 || s_max > gm.s) {
    throw std::invalid_argument("t_values: s_max must be in [1, gm.s]");
  }
  std::vector<int> t(static_cast<std::size_t>(s_max) + 1, 0);
  // strength = m - t; it never increases with the dimension.
  int strength = leading_rank(gm.rows[0], std::min(gm.m, gm.depth));
  t[1] = gm.m - strength;
  if (s_max == 1) {
    return t;
  }
  // Right-multiplying every matrix by C_1^{-1} preserves row independence and
  // turns C_1 into the identity.
  std::vector<std::vector<std::uint64_t>> rows(gm.rows.begin(), gm.rows.begin() + s_max);
  bool identity_first = false;
  if (gm.depth == gm.m) {
    if (const auto inv = invert(gm.rows[0], gm.m)) {
      for (auto& matrix : rows) {
        for (auto& row : matrix) {
          row = row_times(row, *inv);
        }
      }
      identity_first = true;
    }
  }
  for (int s = 2; s <= s_max; ++s) {
    CompositionChecker checker(rows, gm.depth, s, identity_first, /*skip_empty_last=*/true);
    while (strength > 0 && !checker.check(strength)) {
      --strength;
    }
    t[static_cast<std::size_t>(s)] = gm.m - strength;
  }
  return t;
}

int t_value(const GeneratingMatrices& gm) { return t_values(gm, gm.s)[gm.s]; }

int resolution(const GeneratingMatrices& gm, int s) {
  if (s < 1 || s > gm.s) {
    throw std::invalid_argument("resolution: s must be in [1, gm.s]");
  }
  RowBasis basis;
  const int cap = std::min(gm.m / s, gm.depth);
  for (int l = 0; l < cap; ++l) {
    for (int j = 0; j < s; ++j) {
      if (basis.insert(gm.rows[j][l]) < 0) {
        return l;
      }
    }
  }
  return cap;
}

int resolution_gap_sum(const GeneratingMatrices& gm) {
  if (gm.s < gm.m) {
    throw std::invalid_argument("resolution_gap_sum needs at least m matrices");
  }
  int sum = 0;
  for (int s = 1; s <= gm.m; ++s) {
    sum += gm.m / s - resolution(gm, s);
  }
  return sum;
}

TValueProfile profile(Poly p, Poly q, int s_max, int w) {
  const int m = p.degree();
  if (s_max < 1) {
    throw std::invalid_argument("profile: s_max must be >= 1");
  }
  const auto gm = build_matrices(p, q, std::max(s_max, m));
  TValueProfile prof;
  prof.m = m;
  prof.w = w;
  prof.s_max = s_max;
  prof.t = t_values(gm, s_max);
  prof.l.assign(static_cast<std::size_t>(m) + 1, 0);
  prof.gap.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int s = 1; s <= m; ++s) {
    prof.l[s] = resolution(gm, s);
    prof.gap[s] = m / s - prof.l[s];
    prof.delta += prof.gap[s];
  }
  return prof;
}

PointSet korobov_point_set(Poly p, Poly q, int s, int w) {
  const int m = p.degree();
  if (m < 1 || m > 32 || q.degree() >= m || s < 1) {
    throw std::invalid_argument("korobov_point_set: invalid parameters");
  }
  std::vector<Poly> multipliers;
  Poly g = mod(Poly::one(), p);
  for (int j = 0; j < s; ++j) {
    multipliers.push_back(g);
    g = mulmod(g, q, p);
  }
  PointSet out(s, w);
  out.reserve(std::size_t{1} << m);
  std::vector<std::uint64_t> coords(static_cast<std::size_t>(s));
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << m); ++h) {
    for (int j = 0; j < s; ++j) {
      coords[j] = laurent_word(mulmod(Poly{h}, multipliers[j], p), p, w);
    }
    out.push_back(coords);
  }
  return out;
}

bool is_net_bruteforce(const PointSet& points, int t, int m, int s) {
  if (t < 0 || t > m) {
    throw std::invalid_argument("is_net_bruteforce: t must lie in [0, m]");
  }
  if (points.size() != (std::size_t{1} << m) || points.dimension() != s) {
    throw std::invalid_argument("is_net_bruteforce: expected 2^m points of dimension s");
  }
  const int w = points.word_bits();
  const int total = m - t;
  if (total > w * s) {
    throw std::invalid_argument("is_net_bruteforce: not enough digits per coordinate");
  }
  const std::size_t cells = std::size_t{1} << total;
  const std::size_t expected = std::size_t{1} << t;
  std::vector<std::size_t> counts(cells);
  std::vector<int> shape(static_cast<std::size_t>(s), 0);
  shape[static_cast<std::size_t>(s) - 1] = total;
  // Iterate all compositions of `total` into s parts.
  while (true) {
    bool feasible = std::all_of(shape.begin(), shape.end(), [w](int d) { return d <= w; });
    if (feasible) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto pt = points.point(i);
        std::size_t cell = 0;
        for (int j = 0; j < s; ++j) {
          const int d = shape[j];
          if (d > 0) {
            cell = (cell << d) | static_cast<std::size_t>(pt[j] >> (w - d));
          }
        }
        ++counts[cell];
      }
      if (std::any_of(counts.begin(), counts.end(), [expected](std::size_t c) { return c != expected; })) {
        return false;
      }
    }
    // Next composition: move one unit from the last nonzero part leftwards.
    int k = s - 1;
    while (k > 0 && shape[k] == 0) {
      --k;
    }
    if (k == 0) {
      break;
    }
    const int moved = shape[k];
    shape[k] = 0;
    ++shape[k - 1];
    shape[static_cast<std::size_t>(s) - 1] = moved - 1;
  }
  return true;
}

}  // namespace cudtaus
