#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cudtaus/lattice.hpp"
#include "cudtaus/params.hpp"
#include "cudtaus/search.hpp"
#include "support.hpp"

using namespace cudtaus;

namespace {

const Poly kP10 = Poly::from_exponents({0, 6, 7, 9, 10});
const Poly kQ10 = Poly::from_exponents({1, 3, 4, 5, 7, 9});

// Random primitive polynomial of degree m with a random admissible q.
std::pair<Poly, Poly> random_pair(std::mt19937_64& rng, int m) {
  const auto prims = primitive_polynomials(m);
  const Poly p = prims[rng() % prims.size()];
  Poly q;
  do {
    q = Poly{rng() & ((std::uint64_t{1} << m) - 1)};
  } while (q.is_zero());
  return {p, q};
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("laurent digits") {
  const Poly tri = Poly::from_exponents({0, 1, 2});
  CHECK(laurent_digits(Poly::one(), tri, 6) == std::vector<std::uint8_t>{0, 1, 1, 0, 1, 1});
  CHECK(laurent_word(Poly::one(), tri, 6) == 27);
  const auto zeros = laurent_digits(Poly::zero(), kP10, 20);
  CHECK(std::all_of(zeros.begin(), zeros.end(), [](auto d) { return d == 0; }));
  CHECK_THROWS_AS(laurent_digits(kP10, kP10, 4), std::invalid_argument);
  const auto d = laurent_digits(kQ10, kP10, 40);
  for (int r = 0; r < 40; ++r) {
    CHECK(d[static_cast<std::size_t>(r)] == oracle::digit(kQ10.bits(), kP10.bits(), r));
  }
}

TEST_CASE("generating matrices") {
  const auto gm = build_matrices(kP10, kQ10, 4);
  CHECK(gm.rows == oracle::matrices(kP10.bits(), kQ10.bits(), 4));
  CHECK(oracle::rank(gm.rows[0]) == 10);

  // Row-vector products reproduce the explicit Korobov points.
  const PointSet pts = korobov_point_set(kP10, kQ10, 4, 10);
  for (std::uint64_t h = 0; h < 1024; ++h) {
    for (int j = 0; j < 4; ++j) {
      CHECK(gm.apply(j, h) == pts.point(h)[static_cast<std::size_t>(j)]);
    }
  }

  CHECK_THROWS_AS(build_matrices(Poly::from_exponents({0, 1, 2, 3, 4}), Poly::x(), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_matrices(kP10, Poly::monomial(10), 2), std::invalid_argument);
  CHECK_THROWS_AS(build_matrices(kP10, Poly::zero(), 2), std::invalid_argument);
  CHECK_THROWS_AS(build_matrices(kP10, kQ10, 0), std::invalid_argument);
  try {
    build_matrices(Poly::from_exponents({0, 1, 2, 3, 4}), Poly::x(), 2);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("primitive") != std::string::npos);
  }

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto [p, q] = random_pair(rng, 2 + static_cast<int>(rng() % 15));
    CHECK(oracle::rank(build_matrices(p, q, 1).rows[0]) == p.degree());
  }
}

TEST_CASE("t-values of the m=10 entry") {
  const auto gm = build_matrices(kP10, kQ10, 20);
  const auto t = t_values(gm, 20);
  const std::vector<int> want{0, 3, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7};
  CHECK(std::vector<int>(t.begin() + 2, t.end()) == want);
  CHECK(t[1] == 0);
  CHECK(t_value(build_matrices(kP10, kQ10, 2)) == 0);
  CHECK(resolution_gap_sum(gm) == 2);
  CHECK(resolution(gm, 1) == 10);
  CHECK(resolution(gm, 2) == 5);
  CHECK_THROWS_AS(t_values(gm, 21), std::invalid_argument);
  CHECK_THROWS_AS(resolution(gm, 0), std::invalid_argument);
  CHECK_THROWS_AS(resolution_gap_sum(build_matrices(kP10, kQ10, 9)), std::invalid_argument);

  const auto& e13 = entry_for(13).params;
  CHECK(t_values(build_matrices(e13.p, e13.q, 3), 3)[3] == 2);
}

TEST_CASE("rank engine agrees with naive elimination") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    const int m = 3 + static_cast<int>(rng() % 8);
    const int s = 2 + static_cast<int>(rng() % 3);
    const auto [p, q] = random_pair(rng, m);
    const auto gm = build_matrices(p, q, s);
    const auto t = t_values(gm, s);
    for (int k = 1; k <= s; ++k) {
      const std::vector<std::vector<std::uint64_t>> prefix(gm.rows.begin(), gm.rows.begin() + k);
      CHECK(t[static_cast<std::size_t>(k)] == oracle::naive_t_value(prefix, m));
    }
    // Resolution from its definition.
    for (int k = 1; k <= s; ++k) {
      int l = 0;
      for (int cand = m / k; cand >= 0; --cand) {
        std::vector<std::uint64_t> rows;
        for (int j = 0; j < k; ++j)
          for (int r = 0; r < cand; ++r) rows.push_back(gm.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]);
        if (oracle::rank(rows) == static_cast<int>(rows.size())) {
          l = cand;
          break;
        }
      }
      CHECK(resolution(gm, k) == l);
    }
  }
}

TEST_CASE("rank engine agrees with direct counting") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 25; ++i) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const int s = 2 + static_cast<int>(rng() % 2);
    const auto [p, q] = random_pair(rng, m);
    const PointSet pts = korobov_point_set(p, q, s, 32);
    const int t = t_value(build_matrices(p, q, s));
    CHECK(oracle::counting_t_value(pts, m) == t);
    CHECK(is_net_bruteforce(pts, t, m, s));
    if (t > 0) CHECK_FALSE(is_net_bruteforce(pts, t - 1, m, s));
  }
}

TEST_CASE("brute-force net test") {
  const PointSet pts = korobov_point_set(kP10, kQ10, 2, 32);
  CHECK(is_net_bruteforce(pts, 0, 10, 2));
  CHECK_THROWS_AS(is_net_bruteforce(pts, -1, 10, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_net_bruteforce(pts, 11, 10, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_net_bruteforce(pts, 0, 9, 2), std::invalid_argument);

  // Moving one point into another's cell breaks the balance.
  PointSet broken = pts;
  broken.point(5)[0] = broken.point(6)[0];
  broken.point(5)[1] = broken.point(6)[1];
  CHECK_FALSE(is_net_bruteforce(broken, 0, 10, 2));
}

TEST_CASE("monotonicity and resolution bounds") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const int m = 4 + static_cast<int>(rng() % 13);
    const auto [p, q] = random_pair(rng, m);
    const auto prof = profile(p, q, 12);
    CHECK(prof.t[1] == 0);
    CHECK(prof.l[1] == m);
    for (int s = 1; s < 12; ++s) CHECK(prof.t[static_cast<std::size_t>(s)] <= prof.t[static_cast<std::size_t>(s) + 1]);
    for (int s = 1; s <= m; ++s) {
      const auto l = prof.l[static_cast<std::size_t>(s)];
      CHECK(l * s <= m);
      CHECK(prof.gap[static_cast<std::size_t>(s)] >= 0);
      if (s <= 12 && prof.t[static_cast<std::size_t>(s)] == 0) CHECK(l == m / s);
    }
  }
}

TEST_CASE("two-dimensional t-value zero iff degree-one expansion") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const auto prims = primitive_polynomials(m);
    const Poly p = prims[rng() % prims.size()];
    for (std::uint64_t q = 1; q < (std::uint64_t{1} << m); ++q) {
      const bool net = t_value(build_matrices(p, Poly{q}, 2)) == 0;
      CHECK(net == all_quotients_degree_one(continued_fraction(Poly{q}, p)));
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("slow") {

TEST_CASE("profiles of the large entries") {
  const auto& e29 = entry_for(29).params;
  const auto prof29 = profile(e29.p, e29.q);
  for (int s = 11; s <= 20; ++s) CHECK(prof29.t[static_cast<std::size_t>(s)] == 20);

  const auto& e32 = entry_for(32).params;
  const auto prof32 = profile(e32.p, e32.q);
  CHECK(prof32.t[2] == 0);
  CHECK(prof32.t[3] == 3);
  CHECK(prof32.t[20] == 20);
  CHECK(prof32.delta == 4);
}

}  // TEST_SUITE
