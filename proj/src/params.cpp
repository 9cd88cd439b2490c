#include "cudtaus/params.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cudtaus/lattice.hpp"

namespace cudtaus {

namespace {

struct RawEntry {
  int m;
  const char* p;
  const char* q;
  std::uint64_t sigma;
  std::array<int, 19> t;
  int delta;
  std::array<int, 19> reference_t;
  int reference_delta;
};

// p and q coefficients are listed in ascending degree, exactly as published.
constexpr RawEntry kRaw[] = {
    {10,
     "1 0 0 0 0 0 1 1 0 1 1",
     "0 1 0 1 1 1 0 1 0 1",
     70,
     {0, 3, 3, 4, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7},
     2,
     {2, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7},
     0},
    {11,
     "1 1 0 0 1 0 0 1 1 0 1 1",
     "0 1 0 0 0 0 1 1 1 0 1",
     179,
     {0, 3, 3, 5, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7},
     1,
     {2, 5, 5, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8},
     0},
    {12,
     "1 1 1 1 1 0 0 1 0 0 1 1 1",
     "0 0 1 0 0 1 1 1 1 0 1 1",
     146,
     {0, 3, 4, 5, 6, 6, 6, 6, 6, 6, 6, 8, 8, 8, 8, 8, 8, 8, 8},
     2,
     {2, 3, 5, 5, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8, 8},
     0},
    {13,
     "1 1 1 0 1 0 0 0 1 0 1 1 1 1",
     "1 0 1 0 1 1 1 1 1 0 0 1 1",
     139,
     {0, 2, 3, 5, 6, 6, 7, 7, 7, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9},
     0,
     {1, 5, 5, 5, 6, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9},
     0},
    {14,
     "1 0 1 0 1 1 0 1 1 1 1 0 1 1 1",
     "1 0 1 1 1 1 0 1 0 0 1 0 1 1",
     5192,
     {0, 3, 4, 5, 7, 7, 7, 7, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9},
     1,
     {1, 6, 7, 7, 7, 7, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 10, 10, 10},
     0},
    {15,
     "1 1 0 1 1 0 0 1 1 1 0 1 0 1 1 1",
     "0 0 1 1 0 1 1 1 0 0 0 0 0 1 1",
     1028,
     {0, 3, 4, 6, 7, 8, 8, 9, 9, 9, 9, 10, 10, 10, 10, 10, 10, 10, 10},
     1,
     {2, 4, 5, 7, 7, 7, 8, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 10, 10},
     0},
    {16,
     "1 1 0 1 0 1 1 1 1 1 0 0 1 0 0 1 1",
     "1 0 0 1 1 1 0 1 0 0 1 1 0 1 1 1",
     12749,
     {0, 3, 4, 7, 7, 8, 10, 10, 10, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11},
     1,
     {3, 4, 5, 8, 8, 8, 8, 8, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 12},
     0},
    {17,
     "1 0 1 1 1 0 0 0 0 1 0 1 1 0 0 0 1 1",
     "1 1 1 1 0 1 0 1 1 1 0 1 1 1 1 0 1",
     20984,
     {0, 3, 4, 7, 7, 7, 8, 10, 10, 10, 10, 11, 11, 11, 11, 11, 12, 12, 12},
     1,
     {2, 5, 6, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 11, 11, 11, 11},
     0},
    {18,
     "1 1 0 1 0 1 1 0 1 0 1 0 0 0 1 1 0 1 1",
     "1 1 1 0 0 1 1 1 0 0 0 0 0 1 1 1 0 1",
     72349,
     {0, 3, 5, 6, 7, 9, 9, 9, 10, 10, 10, 10, 11, 11, 11, 12, 12, 13, 13},
     2,
     {3, 4, 5, 7, 8, 9, 9, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12},
     0},
    {19,
     "1 0 1 1 0 1 1 1 1 0 0 0 1 1 0 0 1 0 0 1",
     "0 0 0 0 1 1 1 1 0 0 0 0 1 1 1 0 1 0 1",
     92609,
     {0, 3, 5, 6, 7, 12, 12, 12, 12, 12, 12, 12, 13, 13, 13, 13, 13, 13, 13},
     1,
     {2, 4, 8, 8, 8, 9, 9, 9, 11, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12},
     0},
    {20,
     "1 1 1 0 1 0 1 0 1 1 1 0 0 1 1 1 0 0 1 0 1",
     "0 1 0 0 0 1 1 1 1 0 0 1 1 1 0 0 1 0 0 1",
     226826,
     {0, 3, 5, 7, 7, 10, 10, 11, 11, 12, 12, 13, 13, 13, 13, 13, 13, 13, 13},
     2,
     {3, 4, 8, 8, 8, 13, 13, 13, 13, 13, 13, 13, 13, 14, 14, 14, 14, 14, 14},
     0},
    {21,
     "1 1 1 1 1 1 0 1 1 1 0 0 1 0 1 0 1 1 1 0 0 1",
     "0 1 0 1 1 1 0 0 1 1 0 0 1 1 0 1 0 0 1 0 1",
     1127911,
     {0, 3, 5, 8, 8, 9, 10, 10, 10, 13, 13, 13, 13, 13, 13, 13, 13, 14, 14},
     1,
     {3, 6, 8, 8, 8, 11, 11, 11, 12, 12, 12, 12, 12, 12, 12, 12, 13, 13, 15},
     0},
    {22,
     "1 1 0 0 1 0 0 0 1 1 0 0 1 0 1 0 0 0 1 1 0 1 1",
     "0 0 1 1 0 1 0 0 0 0 1 0 0 1 0 0 1 1 0 1 1 1",
     629680,
     {0, 3, 5, 7, 10, 10, 12, 12, 12, 12, 13, 13, 13, 13, 15, 15, 15, 15, 15},
     1,
     {7, 7, 7, 8, 8, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 15},
     0},
    {23,
     "1 1 1 0 0 1 1 0 0 1 0 1 0 1 1 0 0 1 1 1 0 0 0 1",
     "1 0 1 0 0 1 0 0 1 1 0 0 1 0 1 1 1 1 0 0 0 1 1",
     1796311,
     {0, 3, 5, 9, 9, 11, 12, 13, 13, 13, 13, 13, 13, 13, 15, 15, 15, 15, 15},
     1,
     {5, 5, 9, 9, 9, 9, 11, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15},
     0},
    {24,
     "1 1 1 1 0 0 0 1 1 0 1 0 1 1 0 0 0 1 0 1 1 1 1 0 1",
     "1 1 0 0 0 0 1 1 1 1 1 1 0 0 1 0 1 0 1 0 1 1 1 1",
     7017398,
     {0, 3, 6, 8, 10, 11, 12, 13, 14, 14, 14, 14, 15, 17, 17, 17, 17, 17, 17},
     3,
     {5, 5, 8, 8, 11, 11, 11, 12, 14, 14, 14, 14, 14, 14, 14, 15, 15, 16, 16},
     0},
    {25,
     "1 1 1 0 1 0 1 1 0 0 1 1 0 1 1 0 0 1 0 1 1 0 1 1 1 1",
     "0 1 0 1 0 0 1 0 0 0 1 0 1 0 0 1 1 1 0 1 1 0 0 1 1",
     2947446,
     {0, 3, 6, 7, 12, 12, 12, 13, 13, 13, 14, 14, 16, 16, 16, 18, 18, 18, 18},
     3,
     {4, 6, 8, 8, 9, 10, 11, 12, 12, 12, 14, 16, 16, 16, 16, 16, 16, 16, 16},
     0},
    {26,
     "1 1 1 0 1 0 1 1 0 1 0 1 1 0 1 1 1 0 0 0 0 0 1 1 1 1 1",
     "1 1 0 1 1 1 0 1 0 0 0 0 1 0 1 1 0 1 0 0 0 0 0 0 1 1",
     19101221,
     {0, 3, 6, 8, 12, 12, 12, 13, 13, 13, 14, 14, 15, 15, 15, 16, 16, 16, 18},
     2,
     {6, 7, 7, 9, 11, 11, 12, 13, 13, 14, 15, 15, 16, 16, 16, 16, 17, 17, 17},
     0},
    {27,
     "1 1 0 0 0 1 0 0 1 0 0 0 1 0 1 0 0 0 1 1 0 1 1 1 0 1 0 1",
     "0 1 0 1 0 0 0 1 1 1 1 1 1 0 1 0 1 0 0 1 0 1 0 1 1 1 1",
     4397933,
     {0, 3, 7, 7, 11, 12, 13, 13, 13, 14, 14, 14, 16, 16, 16, 16, 16, 16, 16},
     3,
     {3, 6, 8, 11, 12, 12, 14, 14, 14, 15, 15, 15, 15, 15, 16, 16, 16, 17, 17},
     0},
    {28,
     "1 0 0 0 1 0 1 1 0 0 0 1 1 0 1 0 1 0 0 1 1 0 0 1 0 1 1 1 1",
     "0 0 0 1 1 0 1 0 0 1 1 0 0 0 1 1 1 1 0 0 0 1 0 1 0 0 1 1",
     167713336,
     {0, 3, 7, 9, 9, 13, 13, 13, 13, 14, 15, 17, 17, 17, 17, 17, 17, 17, 17},
     2,
     {4, 5, 13, 13, 13, 13, 13, 14, 15, 15, 15, 16, 16, 16, 17, 17, 17, 18, 18},
     0},
    {29,
     "1 0 1 0 0 0 0 0 0 1 0 1 0 1 0 1 1 0 1 1 1 0 0 1 1 0 1 0 1 1",
     "1 1 1 1 1 0 1 0 0 1 1 1 0 0 0 0 1 0 1 1 1 1 0 1 0 1 1 0 1",
     83189117,
     {0, 3, 6, 9, 11, 13, 14, 14, 14, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20},
     1,
     {5, 5, 12, 12, 12, 12, 14, 14, 15, 17, 17, 17, 17, 17, 17, 17, 17, 17, 18},
     0},
    {30,
     "1 0 0 0 0 1 0 1 1 0 0 0 1 0 1 0 0 1 1 1 1 1 0 0 0 0 0 1 0 0 1",
     "0 1 0 1 1 1 1 0 1 0 0 0 0 0 0 0 1 1 0 0 0 1 1 1 1 0 1 1 0 1",
     315800840,
     {0, 3, 7, 9, 12, 13, 14, 14, 16, 16, 16, 17, 17, 17, 17, 17, 17, 18, 19},
     1,
     {2, 7, 7, 10, 13, 13, 13, 14, 17, 17, 17, 17, 17, 17, 18, 18, 18, 18, 19},
     0},
    {31,
     "1 0 1 1 1 0 1 1 1 0 0 0 0 1 0 0 0 0 1 1 1 0 1 1 1 1 0 1 1 0 1 1",
     "0 0 0 0 1 1 1 1 0 1 0 0 0 1 1 0 1 1 1 1 1 1 1 0 0 1 1 0 1 0 1",
     36109125,
     {0, 3, 7, 9, 12, 12, 15, 15, 15, 16, 18, 19, 19, 19, 19, 19, 19, 19, 20},
     1,
     {2, 5, 9, 10, 13, 13, 15, 15, 15, 15, 17, 18, 18, 18, 18, 18, 19, 19, 19},
     0},
    {32,
     "1 0 0 0 1 0 1 0 1 1 0 1 1 1 1 1 1 1 0 0 0 0 0 1 0 1 0 0 0 1 1 0 1",
     "0 1 0 0 0 0 1 1 1 0 1 1 1 0 1 1 0 1 0 1 0 1 0 1 0 1 1 1 1 1 1 1",
     686019401,
     {0, 3, 7, 10, 13, 14, 14, 15, 15, 17, 17, 17, 18, 18, 20, 20, 20, 20, 20},
     4,
     {5, 5, 9, 9, 13, 13, 15, 15, 15, 15, 16, 16, 17, 18, 18, 18, 19, 19, 20},
     0},
};

std::vector<PublishedEntry> build_table() {
  std::vector<PublishedEntry> out;
  for (const auto& raw : kRaw) {
    PublishedEntry e;
    e.params = GeneratorParams{raw.m, 32, Poly::parse(raw.p), Poly::parse(raw.q), raw.sigma};
    e.expected_t = raw.t;
    e.expected_delta = raw.delta;
    e.reference_t = raw.reference_t;
    e.reference_delta = raw.reference_delta;
    out.push_back(e);
  }
  return out;
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(bool v) { return v ? "true" : "false"; }

}  // namespace

std::span<const PublishedEntry> table() {
  static const std::vector<PublishedEntry> entries = build_table();
  return entries;
}

const PublishedEntry& entry_for(int m) {
  if (m < kTableMinM || m > kTableMaxM) {
    throw std::out_of_range("no published entry for m = " + std::to_string(m));
  }
  return table()[static_cast<std::size_t>(m - kTableMinM)];
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

VerificationReport verify(const PublishedEntry& entry, const VerifyOptions& options) {
  const auto& prm = entry.params;
  VerificationReport report;
  report.m = prm.m;
  auto add = [&report](std::string name, auto expected, auto actual) {
    const std::string e = str(expected);
    const std::string a = str(actual);
    report.checks.push_back({std::move(name), e, a, e == a});
  };

  add("deg_p", prm.m, prm.p.degree());
  const bool degree_ok = prm.p.degree() == prm.m && prm.m >= 1 && prm.m <= 32;
  add("primitive", true, degree_ok && is_primitive(prm.p));
  add("deg_q_lt_m", true, prm.q.degree() < prm.m);
  const std::uint64_t period = period_length(prm.m);
  const Poly power = degree_ok ? modpow(Poly::x(), prm.sigma, prm.p) : Poly{};
  add("sigma_consistent", prm.q.to_string(), power.to_string());
  add("sigma_range", true, prm.sigma > 0 && prm.sigma < period);
  add("gcd_sigma_period", 1, std::gcd(prm.sigma, period));
  add("sigma_ge_32", true, prm.sigma >= 32);

  const auto cf = continued_fraction(prm.q, prm.p);
  add("cf_quotients", prm.m, cf.quotients.size());
  add("cf_degree_one", true, all_quotients_degree_one(cf));

  if (options.t_values && degree_ok && report.ok()) {
    const auto prof = profile(prm.p, prm.q, kTableMaxDimension, prm.w);
    for (int s = 2; s <= kTableMaxDimension; ++s) {
      add("t" + std::to_string(s), entry.expected_t_at(s), prof.t[static_cast<std::size_t>(s)]);
    }
    add("delta", entry.expected_delta, prof.delta);
  }
  return report;
}

GeneratorParams read_params(std::istream& in) {
  std::string header;
  std::string p_line;
  std::string q_line;
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') {
        return true;
      }
    }
    return false;
  };
  if (!next_line(header) || !next_line(p_line) || !next_line(q_line)) {
    throw std::invalid_argument("parameter file needs three lines: 'm w sigma', p, q");
  }
  GeneratorParams prm;
  std::istringstream hs(header);
  long long m = 0;
  long long w = 0;
  unsigned long long sigma = 0;
  std::string extra;
  if (!(hs >> m >> w >> sigma) || (hs >> extra)) {
    throw std::invalid_argument("malformed header line, expected 'm w sigma': " + header);
  }
  if (m < 1 || m > 63 || w < 1 || w > 64) {
    throw std::invalid_argument("m or w out of range in header: " + header);
  }
  prm.m = static_cast<int>(m);
  prm.w = static_cast<int>(w);
  prm.sigma = sigma;
  prm.p = Poly::parse(p_line);
  prm.q = Poly::parse(q_line);
  return prm;
}

GeneratorParams read_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open parameter file: " + path);
  }
  return read_params(in);
}

void write_params(std::ostream& out, const GeneratorParams& params) {
  out << params.m << ' ' << params.w << ' ' << params.sigma << '\n';
  // q is padded to m coefficients to mirror the published layout.
  std::string q = params.q.to_string();
  const int q_terms = params.q.is_zero() ? 1 : params.q.degree() + 1;
  for (int k = q_terms; k < params.m; ++k) {
    q += " 0";
  }
  out << params.p.to_string() << '\n' << q << '\n';
}

}  // namespace cudtaus
