// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--full] [--only N]
//
// --full extends the t-value reproduction from m <= 20 to every table entry.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cudtaus/experiments.hpp"
#include "cudtaus/generator.hpp"
#include "cudtaus/lattice.hpp"
#include "cudtaus/parallel.hpp"
#include "cudtaus/params.hpp"
#include "cudtaus/search.hpp"

using namespace cudtaus;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_threads = 1;
bool g_full = false;

Outcome table_validation() {
  VerifyOptions opt;
  opt.t_values = false;
  int failed = 0;
  std::string first;
  for (const auto& e : table()) {
    const auto report = verify(e, opt);
    for (const auto& c : report.checks) {
      if (!c.pass) {
        ++failed;
        if (first.empty()) first = "m=" + std::to_string(report.m) + " " + c.name;
      }
    }
  }
  return {failed == 0, failed == 0 ? "23 entries, all structural checks pass"
                                   : std::to_string(failed) + " failed checks, first " + first};
}

Outcome table_tvalues() {
  const int top = g_full ? kTableMaxM : 20;
  int failed = 0;
  std::string first;
  for (const auto& e : table()) {
    if (e.params.m > top) continue;
    const auto report = verify(e);
    for (const auto& c : report.checks) {
      if (!c.pass) {
        ++failed;
        if (first.empty()) {
          first = "m=" + std::to_string(report.m) + " " + c.name + " expected " + c.expected +
                  " got " + c.actual;
        }
      }
    }
  }
  std::string scope = "t2..t20 and delta for m=10.." + std::to_string(top);
  return {failed == 0, failed == 0 ? scope : scope + ": " + std::to_string(failed) +
                                                 " mismatches, first " + first};
}

Outcome census17() {
  SearchOptions opt;
  opt.threads = g_threads;
  const auto c = census_t3(17, opt);
  auto count = [](const std::map<int, std::uint64_t>& h, int t) {
    const auto it = h.find(t);
    return it == h.end() ? std::uint64_t{0} : it->second;
  };
  auto matches = [&](const std::map<int, std::uint64_t>& h) {
    return count(h, 2) == 4 && count(h, 3) == 464;
  };
  std::ostringstream d;
  d << "admissible " << count(c.admissible, 2) << "/" << count(c.admissible, 3)
    << ", primitive-only " << count(c.primitive, 2) << "/" << count(c.primitive, 3)
    << ", all pairs " << count(c.all_pairs, 2) << "/" << count(c.all_pairs, 3) << "; matching:";
  if (matches(c.admissible)) d << " admissible";
  if (matches(c.primitive)) d << " primitive-only";
  if (matches(c.all_pairs)) d << " all-pairs";
  return {matches(c.admissible) || matches(c.primitive), d.str()};
}

Outcome two_q_census() {
  std::uint64_t irreducible = 0;
  std::uint64_t bad = 0;
  for (int m = 2; m <= 12; ++m) {
    for (std::uint64_t low = 1; low < (std::uint64_t{1} << m); low += 2) {
      const Poly p{(std::uint64_t{1} << m) | low};
      if (!is_irreducible(p)) continue;
      ++irreducible;
      std::vector<Poly> hits;
      for (std::uint64_t q = 1; q < (std::uint64_t{1} << m); ++q) {
        if (all_quotients_degree_one(continued_fraction(Poly{q}, p))) hits.push_back(Poly{q});
      }
      if (hits.size() != 2 || inverse_mod(hits[0], p) != hits[1]) ++bad;
    }
  }
  // Degree one: q = 1 is its own inverse, so the pair collapses to one q.
  bool degree_one_ok = true;
  for (const Poly p : {Poly::x(), Poly::from_exponents({0, 1})}) {
    degree_one_ok = degree_one_ok && all_quotients_degree_one(continued_fraction(Poly::one(), p));
  }
  return {bad == 0 && degree_one_ok,
          std::to_string(irreducible) + " irreducible p with 2 <= m <= 12, " + std::to_string(bad) +
              " violations (m = 1 has the single self-inverse q = 1)"};
}

Outcome no_t0_s3() {
  std::string hits;
  for (int m = 3; m <= 10; ++m) {
    if (const auto h = find_t0_s3(m, g_threads)) {
      hits += " m=" + std::to_string(m) + " p=" + h->first.to_algebraic();
    }
  }
  return {hits.empty(), hits.empty() ? "no pair with t3 = 0 for 3 <= m <= 10 (m = 1 and m = 2 do have such pairs)"
                                     : "found:" + hits};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const int m = 2 + static_cast<int>(rng() % 11);
    const int s = 2 + static_cast<int>(rng() % 2);
    const auto prims = primitive_polynomials(m);
    const Poly p = prims[rng() % prims.size()];
    Poly q;
    do {
      q = Poly{rng() & period_length(m)};
    } while (q.is_zero());
    const int t = t_value(build_matrices(p, q, s));
    const PointSet pts = korobov_point_set(p, q, s, 32);
    int brute = m;
    for (int cand = 0; cand <= m; ++cand) {
      if (is_net_bruteforce(pts, cand, m, s)) {
        brute = cand;
        break;
      }
    }
    if (brute != t) ++mismatches;
  }
  return {mismatches == 0, "50 random pairs, m <= 12, s in {2,3}: " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome streams() {
  int checked = 0;
  std::string bad;
  for (const auto& e : table()) {
    if (e.params.m > 16) continue;
    ++checked;
    Tausworthe a(e.params);
    PolynomialGenerator b(e.params);
    BitRecurrenceGenerator c(e.params);
    const std::uint64_t period = period_length(e.params.m);
    bool same = true;
    for (std::uint64_t i = 0; i < period; ++i) {
      const auto x = a.next();
      same = same && x == b.next() && x == c.next();
    }
    // b has made one full lap; it must be back at the seed and not earlier.
    PolynomialGenerator lap(e.params);
    std::uint64_t n = 0;
    do {
      lap.next();
      ++n;
    } while (lap.state() != Poly::one());
    if (!same || n != period || b.state() != Poly::one()) bad += " m=" + std::to_string(e.params.m);
  }
  const std::string detail = std::to_string(checked) + " entries with m <= 16";
  return {bad.empty(), bad.empty() ? detail + ", identical streams, period 2^m - 1"
                                   : detail + ", failures:" + bad};
}

Outcome pump() {
  const int reps = 300;
  const auto cud = gibbs_pump({SourceKind::cud, 1, {}}, {}, pump_data(), 12, reps, g_threads);
  const auto iid = gibbs_pump({SourceKind::iid, 1, {}}, {}, pump_data(), 12, reps, g_threads);
  bool ok = true;
  std::ostringstream d;
  d.precision(3);
  for (int k = 0; k < 4; ++k) {
    std::vector<double> a, b;
    for (const auto& e : cud) a.push_back(e.mean[static_cast<std::size_t>(k)]);
    for (const auto& e : iid) b.push_back(e.mean[static_cast<std::size_t>(k)]);
    const double va = summarize(a).variance;
    const double vb = summarize(b).variance;
    ok = ok && vb >= 1e3 * va;
    d << (k ? "; " : "") << "lambda" << k + 1 << " " << va << " vs " << vb << " (x" << vb / va << ")";
  }
  return {ok, "m=12, 300 shifts: " + d.str()};
}

Outcome gaussian() {
  bool ok = true;
  std::ostringstream d;
  d.precision(3);
  for (int m : {12, 14, 16}) {
    for (double rho : {0.0, 0.3}) {
      auto sd = [&](SourceKind kind) {
        const auto est = gibbs_gaussian({kind, 1, {}}, rho, m, 100, g_threads);
        std::vector<double> v;
        for (const auto& e : est) v.push_back(e.ex1);
        return summarize(v).sd;
      };
      const double a = sd(SourceKind::cud);
      const double b = sd(SourceKind::iid);
      ok = ok && b >= 10.0 * a;
      d << (d.tellp() > 0 ? "; " : "") << "m=" << m << " rho=" << rho << " x" << b / a;
    }
  }
  return {ok, "sd ratio iid/cud over 100 shifts: " + d.str()};
}

Outcome properties() {
  std::mt19937_64 rng(7);
  int fails = 0;
  for (int i = 0; i < 2000; ++i) {
    const Poly p{(rng() >> 34) | (std::uint64_t{1} << 29)};
    const Poly q{rng() >> 36};
    const auto [num, den] = reconstruct(continued_fraction(q, p));
    const Poly g = gcd(q, p);
    if (num != divmod(q, g).quotient || den != divmod(p, g).quotient) ++fails;
    const Poly a{rng() >> 2};
    const auto [qt, r] = divmod(a, p);
    if (multiply(qt, p) + r != a || r.degree() >= p.degree()) ++fails;
    std::vector<std::uint64_t> t{rng(), rng()};
    const auto orig = t;
    const std::vector<std::uint64_t> z{rng(), rng()};
    digital_shift(t, z);
    digital_shift(t, z);
    if (t != orig) ++fails;
  }
  for (const auto& e : table()) {
    if (e.params.m > 18) continue;
    const auto prof = profile(e.params.p, e.params.q);
    for (int s = 1; s < prof.s_max; ++s) {
      if (prof.t[static_cast<std::size_t>(s)] > prof.t[static_cast<std::size_t>(s) + 1]) ++fails;
    }
  }
  const auto& e10 = entry_for(10).params;
  const PointSet base = korobov_point_set(e10.p, e10.q, 2, 32);
  const bool base_net = is_net_bruteforce(base, 0, 10, 2);
  for (int i = 0; i < 10; ++i) {
    const std::vector<std::uint64_t> z{rng() >> 32, rng() >> 32};
    PointSet shifted = base;
    for (std::size_t k = 0; k < shifted.size(); ++k) digital_shift(shifted.point(k), z);
    if (!base_net || !is_net_bruteforce(shifted, 0, 10, 2)) ++fails;
  }
  return {fails == 0, "CF round trip, divmod multiply-back, shift involution, t monotonicity, "
                      "shift-invariant t at m=10 s=2: " + std::to_string(fails) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) {
      g_full = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--full] [--only N]\n");
      return 2;
    }
  }
  g_threads = default_threads();

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"parameter table validation", table_validation},
      {"t-values and delta of the table", table_tvalues},
      {"t3 census at m=17", census17},
      {"two degree-one q per irreducible p", two_q_census},
      {"no t3 = 0 maximal-period pair", no_t0_s3},
      {"rank t-value equals brute-force counting", oracle_equivalence},
      {"stream equivalence and period", streams},
      {"pump variance reduction", pump},
      {"gaussian sd ordering", gaussian},
      {"property suites", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    if (only != 0 && only != index) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", index, name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    failed += out.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
