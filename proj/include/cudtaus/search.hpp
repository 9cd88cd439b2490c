#pragma once

// Exhaustive search over pairs of Fibonacci polynomials
//
//   F_k = A_k F_{k-1} + F_{k-2},  F_0 = 1,  F_1 = A_1,  A_k in {x, x+1},
//
// whose ratio F_{m-1}/F_m has only degree-one partial quotients, i.e. whose
// two-dimensional lattice point set is a (0, m, 2)-net.

#include <cstdint>
#include <map>
#include <optional>
#include <ranges>
#include <utility>
#include <vector>

#include "cudtaus/poly.hpp"

namespace cudtaus {

struct FibonacciPair {
  Poly fm;              // F_m
  Poly fm1;             // F_{m-1}
  std::uint64_t path;   // bit k-1 set selects A_k = x + 1, clear selects x

  friend bool operator==(const FibonacciPair&, const FibonacciPair&) = default;
};

/// The pair reached by one path of length m (1 <= m <= 32).
FibonacciPair fibonacci_pair(int m, std::uint64_t path);

/// All 2^m pairs in ascending path order, computed lazily.
inline auto enumerate_fibonacci(int m) {
  return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << m) |
         std::views::transform([m](std::uint64_t path) { return fibonacci_pair(m, path); });
}

/// sigma in [0, 2^m - 1) with x^sigma = q mod p, by baby-step giant-step.
/// Empty when p is not primitive of degree 1..32 or q is not a power of x.
std::optional<std::uint64_t> discrete_log_x(Poly q, Poly p);

struct SearchRecord {
  FibonacciPair pair;
  std::uint64_t sigma = 0;
  std::vector<int> t;   // t[s] for 3 <= s <= m; entries below 3 are unused
  int delta = 0;
  std::size_t rank = 0;  // 1-based position in the sorted list
};

struct SearchOptions {
  int w = 32;
  int t3_max = 3;
  int threads = 1;
};

struct SearchStats {
  std::uint64_t enumerated = 0;
  std::uint64_t primitive = 0;
  std::uint64_t admissible = 0;  // sigma found with gcd(sigma, 2^m-1) = 1 and sigma >= w
  std::uint64_t t3_survivors = 0;
};

struct SearchResult {
  std::vector<SearchRecord> records;  // ranked
  SearchStats stats;
};

/// Runs the full search: enumerate, primitivity filter, step size and its
/// admissibility, t^(3) filter, t-vectors up to m, then a total ranking by
/// (t^(4), ..., t^(m)), then delta, then path.
SearchResult algorithm1(int m, const SearchOptions& options = {});

/// True when a and b have identical t-vectors from dimension 4 on.
bool same_tie_class(const SearchRecord& a, const SearchRecord& b);

inline constexpr int kDefaultDeltaThreshold = 3;

/// Index of the selected record: the first record of the first tie class
/// whose smallest delta does not exceed the threshold. Falls back to 0 when
/// every class exceeds it. Requires a non-empty ranked list.
std::size_t select_best(const std::vector<SearchRecord>& ranked,
                        int delta_threshold = kDefaultDeltaThreshold);

/// t^(3) histograms under the three candidate readings of which pairs are
/// counted: after primitivity and step-size admissibility, after primitivity
/// only, and over every Fibonacci pair.
struct CensusResult {
  std::map<int, std::uint64_t> admissible;
  std::map<int, std::uint64_t> primitive;
  std::map<int, std::uint64_t> all_pairs;
};

CensusResult census_t3(int m, const SearchOptions& options = {});

/// A pair (p primitive of degree m, q != 0) whose s = 3 point set is a
/// (0, m, 3)-net, if any exists. Exhaustive; meant for m <= 12.
std::optional<std::pair<Poly, Poly>> find_t0_s3(int m, int threads = 1);

/// True iff no maximal-period pair of degree m reaches t^(3) = 0.
bool verify_no_t0_s3(int m, int threads = 1);

/// All primitive polynomials of degree m in ascending bit order.
std::vector<Poly> primitive_polynomials(int m);

}  // namespace cudtaus
