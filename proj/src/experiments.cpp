#include "cudtaus/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cudtaus/parallel.hpp"
#include "cudtaus/params.hpp"
#include "cudtaus/quantile.hpp"

namespace cudtaus {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t replicate, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(replicate),
                    static_cast<std::uint32_t>(replicate >> 32), stream};
  return std::mt19937_64(seq);
}

constexpr std::uint32_t kShiftStream = 1;
constexpr std::uint32_t kIidStream = 2;

std::uint64_t iteration_count(int m) {
  if (m < 1 || m > 32) {
    throw std::invalid_argument("m must lie in [1, 32], got " + std::to_string(m));
  }
  return std::uint64_t{1} << m;
}

}  // namespace

double word_to_uniform(std::uint64_t word, int w) {
  const double lo = std::ldexp(1.0, -w - 1);
  // For w > 52 the upper bound rounds to 1 in double precision.
  const double hi = std::min(1.0 - lo, std::nextafter(1.0, 0.0));
  return std::clamp(std::ldexp(static_cast<double>(word), -w), lo, hi);
}

DrivingSource::DrivingSource(const SourceConfig& config, int m, int s, std::uint64_t replicate)
    : kind_(config.kind), s_(s), words_(static_cast<std::size_t>(s)) {
  if (s < 1) {
    throw std::invalid_argument("block size must be >= 1");
  }
  if (kind_ == SourceKind::iid) {
    iid_ = seeded(config.seed, replicate, kIidStream);
    w_ = 53;
    return;
  }
  const GeneratorParams params = config.params ? *config.params : entry_for(m).params;
  if (params.m != m) {
    throw std::invalid_argument("generator degree " + std::to_string(params.m) +
                                " does not match m = " + std::to_string(m));
  }
  w_ = params.w;
  stream_.emplace(params, s);
  auto rng = seeded(config.seed, replicate, kShiftStream);
  const std::uint64_t mask = w_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w_) - 1;
  shift_.resize(static_cast<std::size_t>(s));
  for (auto& z : shift_) {
    z = rng() & mask;
  }
}

void DrivingSource::next(std::span<double> u) {
  if (u.size() != static_cast<std::size_t>(s_)) {
    throw std::invalid_argument("driving tuple arity mismatch");
  }
  ++blocks_;
  if (kind_ == SourceKind::iid) {
    for (auto& x : u) {
      x = word_to_uniform(iid_() >> 11, 53);
    }
    return;
  }
  stream_->next(words_);
  digital_shift(words_, shift_);
  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] = word_to_uniform(words_[j], w_);
  }
}

std::uint64_t DrivingSource::outputs_consumed() const {
  if (stream_) {
    return stream_->outputs_consumed();
  }
  return blocks_ * static_cast<std::uint64_t>(s_);
}

GaussianEstimate gaussian_replicate(const SourceConfig& config, double rho, int m,
                                    std::uint64_t replicate,
                                    std::vector<std::pair<double, double>>* trace) {
  if (!(rho > -1.0 && rho < 1.0)) {
    throw std::invalid_argument("rho must lie in (-1, 1)");
  }
  const std::uint64_t n = iteration_count(m);
  DrivingSource source(config, m, 2, replicate);
  const double c = std::sqrt(1.0 - rho * rho);
  std::array<double, 2> u{};
  double x2 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s12 = 0.0;
  if (trace != nullptr) {
    trace->clear();
    trace->reserve(n);
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    source.next(u);
    const double x1 = rho * x2 + c * inv_normal_cdf(u[0]);
    x2 = rho * x1 + c * inv_normal_cdf(u[1]);
    s1 += x1;
    s2 += x2;
    s12 += x1 * x2;
    if (trace != nullptr) {
      trace->emplace_back(x1, x2);
    }
  }
  const double inv = 1.0 / static_cast<double>(n);
  return {s1 * inv, s2 * inv, s12 * inv, source.outputs_consumed()};
}

std::vector<GaussianEstimate> gibbs_gaussian(const SourceConfig& config, double rho, int m,
                                             int replicates, int threads) {
  if (replicates < 1) {
    throw std::invalid_argument("replicates must be >= 1");
  }
  std::vector<GaussianEstimate> out(static_cast<std::size_t>(replicates));
  parallel_for(out.size(), threads, [&](std::size_t r) {
    out[r] = gaussian_replicate(config, rho, m, r);
  });
  return out;
}

const PumpData& pump_data() {
  static const PumpData data{
      {5, 1, 5, 14, 3, 19, 1, 1, 4, 22},
      {94.32, 15.72, 62.88, 125.76, 5.24, 31.44, 1.05, 1.05, 2.10, 10.48},
  };
  return data;
}

PumpEstimate pump_replicate(const SourceConfig& config, const PumpModelConfig& model,
                            const PumpData& data, int m, std::uint64_t replicate) {
  if (!(model.alpha > 0.0 && model.gamma > 0.0 && model.delta > 0.0)) {
    throw std::invalid_argument("pump model hyperparameters must be positive");
  }
  const std::uint64_t n = iteration_count(m);
  DrivingSource source(config, m, kPumpDimension, replicate);

  std::array<double, 10> lambda{};
  double lambda_sum = 0.0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    lambda[j] = data.failures[j] / data.times[j];
    lambda_sum += lambda[j];
  }
  const double beta_shape = model.gamma + 10.0 * model.alpha;
  double beta = beta_shape / (model.delta + lambda_sum);

  std::array<double, kPumpDimension> u{};
  std::array<double, kPumpDimension> sum{};
  for (std::uint64_t i = 0; i < n; ++i) {
    source.next(u);
    lambda_sum = 0.0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      lambda[j] = inv_gamma_cdf(u[j], data.failures[j] + model.alpha, data.times[j] + beta);
      lambda_sum += lambda[j];
      sum[j] += lambda[j];
    }
    beta = inv_gamma_cdf(u[10], beta_shape, model.delta + lambda_sum);
    sum[10] += beta;
  }
  PumpEstimate est;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    est.mean[k] = sum[k] / static_cast<double>(n);
  }
  est.outputs_consumed = source.outputs_consumed();
  return est;
}

std::vector<PumpEstimate> gibbs_pump(const SourceConfig& config, const PumpModelConfig& model,
                                     const PumpData& data, int m, int replicates, int threads) {
  if (replicates < 1) {
    throw std::invalid_argument("replicates must be >= 1");
  }
  std::vector<PumpEstimate> out(static_cast<std::size_t>(replicates));
  parallel_for(out.size(), threads, [&](std::size_t r) {
    out[r] = pump_replicate(config, model, data, m, r);
  });
  return out;
}

Summary summarize(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("summarize needs at least two replicates");
  }
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  Summary s;
  s.mean = mean;
  s.variance = ss / (n - 1.0);
  s.sd = std::sqrt(s.variance);
  s.log2_sd = std::log2(s.sd);
  return s;
}

}  // namespace cudtaus
