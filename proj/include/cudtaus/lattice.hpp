#pragma once

// Digital-net view of a polynomial Korobov lattice point set
//
//   P_s = { nu_w( h/p * (1, q, ..., q^(s-1)) ) : deg h < m },
//
// plus the rank machinery that measures its quality: t-values, equidistribution
// resolutions, resolution gaps and their sum.

#include <cstdint>
#include <vector>

#include "cudtaus/point_set.hpp"
#include "cudtaus/poly.hpp"

namespace cudtaus {

/// First n Laurent digits a_0..a_{n-1} of g/p = sum a_r x^(-r-1).
/// Requires deg(g) < deg(p).
std::vector<std::uint8_t> laurent_digits(Poly g, Poly p, int n);

/// First w Laurent digits of g/p packed most-significant first, i.e. the
/// integer 2^w * nu_w(g/p). Requires deg(g) < deg(p) and 1 <= w <= 64.
std::uint64_t laurent_word(Poly g, Poly p, int w);

/// Generating matrices C_1..C_s over F2. Row r of matrix j is stored as an
/// m-bit word whose bit c is the entry (r, c); column c of matrix j holds the
/// Laurent digits of (x^c q^j mod p)/p.
struct GeneratingMatrices {
  int m = 0;
  int s = 0;
  int depth = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  /// Digit vector of coordinate j for the polynomial h (given as its bits).
  std::uint64_t apply(int j, std::uint64_t h) const;
};

/// Validated construction: p primitive, deg(q) < deg(p), gcd(q, p) = 1 and
/// s >= 1. Throws std::invalid_argument naming the failing precondition.
GeneratingMatrices build_matrices(Poly p, Poly q, int s);

/// Construction without the primitivity check, for census work over
/// arbitrary coprime pairs. Requires deg(p) >= 1 and deg(q) < deg(p).
/// depth defaults to m rows per matrix.
GeneratingMatrices build_matrices_unchecked(Poly p, Poly q, int s, int depth = -1);

/// t-value of the s-dimensional net described by all of gm's matrices.
int t_value(const GeneratingMatrices& gm);

/// t-values of the projections onto the first s coordinates, for
/// s = 1..s_max (s_max <= gm.s). Entry 0 of the result is unused.
std::vector<int> t_values(const GeneratingMatrices& gm, int s_max);

/// Largest l <= floor(m/s) such that the first l rows of the first s
/// matrices are jointly independent. Requires 1 <= s <= gm.s.
int resolution(const GeneratingMatrices& gm, int s);

/// Sum over s = 1..m of the resolution gaps floor(m/s) - l_s. Requires
/// gm.s >= m.
int resolution_gap_sum(const GeneratingMatrices& gm);

struct TValueProfile {
  int m = 0;
  int w = 32;
  int s_max = 0;
  std::vector<int> t;    // t[s] for 1 <= s <= s_max
  std::vector<int> l;    // l[s] for 1 <= s <= m
  std::vector<int> gap;  // gap[s] = floor(m/s) - l[s]
  int delta = 0;
};

inline constexpr int kDefaultMaxDimension = 20;

/// t-values up to s_max plus resolutions, gaps and their sum for (p, q).
TValueProfile profile(Poly p, Poly q, int s_max = kDefaultMaxDimension, int w = 32);

/// The 2^m points of P_s ordered by h = 0, 1, ..., 2^m - 1.
PointSet korobov_point_set(Poly p, Poly q, int s, int w);

/// Direct counting over every elementary interval of volume 2^(t-m).
/// Test oracle for small m; throws std::invalid_argument if t is outside
/// [0, m] or the set does not hold 2^m points.
bool is_net_bruteforce(const PointSet& points, int t, int m, int s);

}  // namespace cudtaus
