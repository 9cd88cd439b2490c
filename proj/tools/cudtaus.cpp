// Command-line front end: search, verify-table, tvalue, generate, experiment.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cudtaus/experiments.hpp"
#include "cudtaus/generator.hpp"
#include "cudtaus/lattice.hpp"
#include "cudtaus/parallel.hpp"
#include "cudtaus/params.hpp"
#include "cudtaus/search.hpp"
#include "cudtaus/version.hpp"

namespace {

using namespace cudtaus;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string short_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void header(std::ostream& out, const std::string& command) {
  out << "# cudtaus " << kVersion << '\n' << "# command: " << command << '\n';
}

struct ParamSource {
  int m = 0;
  std::string file;
};

// Generator parameters from --params-file or the embedded table, with the
// provenance line written to out.
GeneratorParams load_params(const ParamSource& src, std::ostream& out) {
  if (!src.file.empty()) {
    GeneratorParams params = read_params_file(src.file);
    require_valid(params);
    out << "# params: file " << src.file << '\n';
    return params;
  }
  if (src.m == 0) {
    throw CLI::ValidationError("either --m or --params-file is required");
  }
  const GeneratorParams& params = entry_for(src.m).params;
  out << "# params: embedded table entry m=" << src.m << '\n';
  return params;
}

// Ascending coefficients without separators.
std::string compact(Poly p) {
  std::string s = p.to_string();
  std::erase(s, ' ');
  return s;
}

void describe(std::ostream& out, const GeneratorParams& params) {
  out << "# m=" << params.m << " w=" << params.w << " sigma=" << params.sigma
      << " p=" << compact(params.p) << " q=" << compact(params.q) << '\n';
}

int resolve_threads(int threads) { return threads > 0 ? threads : default_threads(); }

// search ---------------------------------------------------------------------

struct SearchArgs {
  int m = 0;
  int w = 32;
  int top = 10;
  int delta_threshold = kDefaultDeltaThreshold;
  bool census = false;
  int threads = 0;
};

int run_search(const SearchArgs& a) {
  std::ostream& out = std::cout;
  header(out, "search");
  out << "# params: exhaustive enumeration of Fibonacci polynomial pairs\n";
  SearchOptions options;
  options.w = a.w;
  options.threads = resolve_threads(a.threads);
  out << "# m=" << a.m << " w=" << a.w << '\n';

  if (a.census) {
    const CensusResult census = census_t3(a.m, options);
    out << "reading,t3,count\n";
    const std::pair<const char*, const std::map<int, std::uint64_t>*> readings[] = {
        {"admissible", &census.admissible},
        {"primitive", &census.primitive},
        {"all_pairs", &census.all_pairs}};
    for (const auto& [name, hist] : readings) {
      for (const auto& [t, count] : *hist) {
        out << name << ',' << t << ',' << count << '\n';
      }
    }
    return kExitOk;
  }

  const SearchResult result = algorithm1(a.m, options);
  const auto& st = result.stats;
  out << "# enumerated=" << st.enumerated << " primitive=" << st.primitive
      << " admissible=" << st.admissible << " t3_survivors=" << st.t3_survivors << '\n';
  out << "rank,path,p,q,sigma";
  for (int s = 3; s <= a.m; ++s) {
    out << ",t" << s;
  }
  out << ",delta\n";
  const std::size_t shown = a.top <= 0 ? result.records.size()
                                       : std::min<std::size_t>(result.records.size(),
                                                               static_cast<std::size_t>(a.top));
  for (std::size_t i = 0; i < shown; ++i) {
    const SearchRecord& r = result.records[i];
    out << r.rank << ',' << r.pair.path << ',' << compact(r.pair.fm) << ','
        << compact(r.pair.fm1) << ',' << r.sigma;
    for (int s = 3; s <= a.m; ++s) {
      out << ',' << r.t[static_cast<std::size_t>(s)];
    }
    out << ',' << r.delta << '\n';
  }
  if (!result.records.empty()) {
    const SearchRecord& best = result.records[select_best(result.records, a.delta_threshold)];
    out << "# selected rank=" << best.rank << " p=" << compact(best.pair.fm)
        << " q=" << compact(best.pair.fm1) << " sigma=" << best.sigma
        << " delta=" << best.delta << '\n';
  } else {
    out << "# selected none\n";
  }
  return kExitOk;
}

// verify-table ---------------------------------------------------------------

struct VerifyArgs {
  int min_m = kTableMinM;
  int max_m = kTableMaxM;
  bool skip_t = false;
};

int run_verify(const VerifyArgs& a) {
  std::ostream& out = std::cout;
  header(out, "verify-table");
  out << "# params: embedded table m=" << a.min_m << ".." << a.max_m << '\n';
  out << "m,check,expected,actual,pass\n";
  VerifyOptions options;
  options.t_values = !a.skip_t;
  bool ok = true;
  for (const PublishedEntry& entry : table()) {
    if (entry.params.m < a.min_m || entry.params.m > a.max_m) {
      continue;
    }
    const VerificationReport report = verify(entry, options);
    for (const Check& c : report.checks) {
      out << report.m << ',' << c.name << ',' << c.expected << ',' << c.actual << ','
          << (c.pass ? "true" : "false") << '\n';
    }
    out.flush();
    ok = ok && report.ok();
  }
  return ok ? kExitOk : kExitFailed;
}

// tvalue ---------------------------------------------------------------------

struct TValueArgs {
  ParamSource params;
  int s_max = kDefaultMaxDimension;
};

int run_tvalue(const TValueArgs& a) {
  std::ostream& out = std::cout;
  header(out, "tvalue");
  const GeneratorParams params = load_params(a.params, out);
  describe(out, params);
  const TValueProfile prof = profile(params.p, params.q, a.s_max, params.w);
  out << "m,s,t,l,gap\n";
  const int rows = std::max(prof.s_max, prof.m);
  for (int s = 1; s <= rows; ++s) {
    out << prof.m << ',' << s << ',';
    if (s <= prof.s_max) out << prof.t[static_cast<std::size_t>(s)];
    out << ',';
    if (s <= prof.m) out << prof.l[static_cast<std::size_t>(s)];
    out << ',';
    if (s <= prof.m) out << prof.gap[static_cast<std::size_t>(s)];
    out << '\n';
  }
  out << "# delta=" << prof.delta << '\n';
  return kExitOk;
}

// generate -------------------------------------------------------------------

struct GenerateArgs {
  ParamSource params;
  std::uint64_t count = 10;
  std::string format = "hex";
};

int run_generate(const GenerateArgs& a) {
  std::ostream& out = std::cout;
  header(out, "generate");
  const GeneratorParams params = load_params(a.params, out);
  describe(out, params);
  out << "# seed X_0=1 format=" << a.format << '\n';
  Tausworthe gen(params);
  const int w = params.w;
  char buf[80];
  for (std::uint64_t i = 0; i < a.count; ++i) {
    const std::uint64_t word = gen.next();
    if (a.format == "hex") {
      std::snprintf(buf, sizeof buf, "0x%0*llx", (w + 3) / 4, static_cast<unsigned long long>(word));
      out << buf << '\n';
    } else if (a.format == "dec") {
      std::snprintf(buf, sizeof buf, "%.17g", std::ldexp(static_cast<double>(word), -w));
      out << buf << '\n';
    } else {
      std::string bits(static_cast<std::size_t>(w), '0');
      for (int k = 0; k < w; ++k) {
        if ((word >> (w - 1 - k)) & 1U) bits[static_cast<std::size_t>(k)] = '1';
      }
      out << bits << '\n';
    }
  }
  return kExitOk;
}

// experiment -----------------------------------------------------------------

struct ExperimentArgs {
  ParamSource params;
  double rho = 0.0;
  int replicates = 0;
  std::string source = "cud";
  std::uint64_t seed = 1;
  int threads = 0;
  std::string trace;
};

SourceConfig experiment_source(const ExperimentArgs& a, int m, std::ostream& out) {
  SourceConfig cfg;
  cfg.seed = a.seed;
  if (a.source == "iid") {
    cfg.kind = SourceKind::iid;
    out << "# params: none (iid baseline mt19937_64)\n";
  } else {
    cfg.kind = SourceKind::cud;
    ParamSource ps = a.params;
    ps.m = m;
    cfg.params = load_params(ps, out);
    describe(out, *cfg.params);
  }
  out << "# source=" << a.source << " seed=" << a.seed
      << " replicate r draws from seed_seq(seed, r)\n";
  return cfg;
}

int run_gauss(const ExperimentArgs& a) {
  std::ostream& out = std::cout;
  header(out, "experiment gauss");
  const int replicates = a.replicates > 0 ? a.replicates : 100;
  const SourceConfig cfg = experiment_source(a, a.params.m, out);
  const int m = cfg.params ? cfg.params->m : a.params.m;
  out << "# m=" << m << " rho=" << short_real(a.rho) << " replicates=" << replicates << '\n';
  const auto est = gibbs_gaussian(cfg, a.rho, m, replicates, resolve_threads(a.threads));
  out << "replicate,ex1,ex2,ex1x2\n";
  std::vector<double> c1, c2, c12;
  for (std::size_t r = 0; r < est.size(); ++r) {
    out << r << ',' << real(est[r].ex1) << ',' << real(est[r].ex2) << ',' << real(est[r].ex1x2)
        << '\n';
    c1.push_back(est[r].ex1);
    c2.push_back(est[r].ex2);
    c12.push_back(est[r].ex1x2);
  }
  if (est.size() >= 2) {
    out << '\n' << "estimator,mean,sd,log2_sd\n";
    const std::pair<const char*, const std::vector<double>*> cols[] = {
        {"ex1", &c1}, {"ex2", &c2}, {"ex1x2", &c12}};
    for (const auto& [name, v] : cols) {
      const Summary s = summarize(*v);
      out << name << ',' << real(s.mean) << ',' << real(s.sd) << ',' << real(s.log2_sd) << '\n';
    }
  }
  if (!a.trace.empty()) {
    std::vector<std::pair<double, double>> trace;
    gaussian_replicate(cfg, a.rho, m, 0, &trace);
    std::FILE* f = std::fopen(a.trace.c_str(), "w");
    if (f == nullptr) {
      throw std::runtime_error("cannot write " + a.trace);
    }
    std::fprintf(f, "i,x1,x2\n");
    for (std::size_t i = 0; i < trace.size(); ++i) {
      std::fprintf(f, "%zu,%.16e,%.16e\n", i + 1, trace[i].first, trace[i].second);
    }
    std::fclose(f);
  }
  return kExitOk;
}

int run_pump(const ExperimentArgs& a) {
  std::ostream& out = std::cout;
  header(out, "experiment pump");
  const int replicates = a.replicates > 0 ? a.replicates : 300;
  const SourceConfig cfg = experiment_source(a, a.params.m, out);
  const int m = cfg.params ? cfg.params->m : a.params.m;
  const PumpModelConfig model;
  out << "# m=" << m << " replicates=" << replicates << " alpha=" << short_real(model.alpha)
      << " gamma=" << short_real(model.gamma) << " delta=" << short_real(model.delta) << '\n';
  const auto est = gibbs_pump(cfg, model, pump_data(), m, replicates, resolve_threads(a.threads));
  out << "replicate";
  for (int j = 1; j <= 10; ++j) out << ",lambda" << j;
  out << ",beta\n";
  for (std::size_t r = 0; r < est.size(); ++r) {
    out << r;
    for (double v : est[r].mean) out << ',' << real(v);
    out << '\n';
  }
  if (est.size() >= 2) {
    out << '\n' << "param,variance\n";
    for (int k = 0; k < kPumpDimension; ++k) {
      std::vector<double> col;
      for (const auto& e : est) col.push_back(e.mean[static_cast<std::size_t>(k)]);
      out << (k < 10 ? "lambda" + std::to_string(k + 1) : std::string("beta")) << ','
          << real(summarize(col).variance) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short-period Tausworthe generators: search, validation and Gibbs experiments"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "exhaustive Fibonacci-pair search");
  search_cmd->add_option("--m", search.m, "degree")->required()->check(CLI::Range(3, 32));
  search_cmd->add_option("--w", search.w, "output bits (sigma >= w)")->check(CLI::Range(1, 64));
  search_cmd->add_option("--top", search.top, "records to print, 0 for all");
  search_cmd->add_option("--delta-threshold", search.delta_threshold,
                         "largest delta accepted when selecting");
  search_cmd->add_flag("--census", search.census, "t3 histogram instead of the ranking");
  search_cmd->add_option("--threads", search.threads, "worker threads (default CUD_THREADS)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-table", "check every embedded table entry");
  verify_cmd->add_option("--min-m", verify_args.min_m, "smallest m checked")
      ->check(CLI::Range(kTableMinM, kTableMaxM));
  verify_cmd->add_option("--max-m", verify_args.max_m, "largest m checked")
      ->check(CLI::Range(kTableMinM, kTableMaxM));
  verify_cmd->add_flag("--skip-tvalues", verify_args.skip_t, "omit t-value and delta checks");

  TValueArgs tv;
  auto* tvalue_cmd = app.add_subcommand("tvalue", "t-value and resolution profile");
  auto* tv_m = tvalue_cmd->add_option("--m", tv.params.m, "embedded table entry")
                   ->check(CLI::Range(kTableMinM, kTableMaxM));
  auto* tv_file = tvalue_cmd->add_option("--params-file", tv.params.file, "parameter file")
                      ->check(CLI::ExistingFile);
  tv_m->excludes(tv_file);
  tvalue_cmd->add_option("--s-max", tv.s_max, "largest dimension")->check(CLI::Range(1, 64));

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "emit output fractions");
  auto* gen_m = generate_cmd->add_option("--m", gen.params.m, "embedded table entry")
                    ->check(CLI::Range(kTableMinM, kTableMaxM));
  auto* gen_file = generate_cmd->add_option("--params-file", gen.params.file, "parameter file")
                       ->check(CLI::ExistingFile);
  gen_m->excludes(gen_file);
  generate_cmd->add_option("--count", gen.count, "number of outputs");
  generate_cmd->add_option("--format", gen.format, "hex, dec or binary")
      ->check(CLI::IsMember({"hex", "dec", "binary"}));

  auto* experiment_cmd = app.add_subcommand("experiment", "Gibbs-sampling experiments");
  experiment_cmd->require_subcommand(1);
  ExperimentArgs gauss;
  gauss.params.m = 12;
  ExperimentArgs pump;
  pump.params.m = 12;
  auto add_common = [](CLI::App* cmd, ExperimentArgs& a) {
    auto* m = cmd->add_option("--m", a.params.m, "generator degree")
                  ->check(CLI::Range(kTableMinM, kTableMaxM));
    auto* file = cmd->add_option("--params-file", a.params.file, "parameter file")
                     ->check(CLI::ExistingFile);
    m->excludes(file);
    cmd->add_option("--replicates", a.replicates, "digital-shift replicates")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--source", a.source, "cud or iid")->check(CLI::IsMember({"cud", "iid"}));
    cmd->add_option("--seed", a.seed, "seed for shifts and the iid baseline");
    cmd->add_option("--threads", a.threads, "worker threads (default CUD_THREADS)");
  };
  auto* gauss_cmd = experiment_cmd->add_subcommand("gauss", "bivariate normal Gibbs sampler");
  add_common(gauss_cmd, gauss);
  gauss_cmd->add_option("--rho", gauss.rho, "correlation")->check(CLI::Range(-0.999999, 0.999999));
  gauss_cmd->add_option("--trace", gauss.trace, "write replicate 0's (X1, X2) chain to this CSV");
  auto* pump_cmd = experiment_cmd->add_subcommand("pump", "pump-failure model Gibbs sampler");
  add_common(pump_cmd, pump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [cmd, src] : {std::pair{tvalue_cmd, &tv.params}, std::pair{generate_cmd, &gen.params}}) {
    if (*cmd && src->m == 0 && src->file.empty()) {
      std::cerr << "error: either --m or --params-file is required\n" << cmd->help();
      return kExitUsage;
    }
  }

  try {
    if (*search_cmd) return run_search(search);
    if (*verify_cmd) return run_verify(verify_args);
    if (*tvalue_cmd) return run_tvalue(tv);
    if (*generate_cmd) return run_generate(gen);
    if (*gauss_cmd) return run_gauss(gauss);
    if (*pump_cmd) return run_pump(pump);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
