#pragma once

// Gibbs-sampling studies driven either by a digitally shifted Tausworthe
// stream (origin tuple first, then non-overlapping s-blocks) or by an IID
// pseudo-random baseline.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "cudtaus/generator.hpp"

namespace cudtaus {

enum class SourceKind { cud, iid };

/// How each replicate's driving sequence is built. For the CUD variant the
/// generator defaults to the embedded table entry of the requested degree.
struct SourceConfig {
  SourceKind kind = SourceKind::cud;
  std::uint64_t seed = 1;
  std::optional<GeneratorParams> params;
};

/// Uniform driving sequence for one replicate, delivered in s-tuples.
class DrivingSource {
 public:
  /// s-blocks of the degree-m generator (CUD) or of the IID baseline.
  /// Replicate r draws its shift (or its IID stream) from seed_seq{seed, r}.
  DrivingSource(const SourceConfig& config, int m, int s, std::uint64_t replicate);

  /// Fills u with the next tuple mapped into [2^(-w-1), 1 - 2^(-w-1)].
  void next(std::span<double> u);

  int block_size() const { return s_; }
  SourceKind kind() const { return kind_; }
  std::uint64_t blocks_delivered() const { return blocks_; }
  /// Generator outputs consumed so far; the origin tuple consumes none.
  std::uint64_t outputs_consumed() const;
  /// The digital shift words (empty for IID).
  std::span<const std::uint64_t> shift() const { return shift_; }

 private:
  SourceKind kind_;
  int s_;
  int w_ = 32;
  std::optional<BlockStream> stream_;
  std::vector<std::uint64_t> shift_;
  std::vector<std::uint64_t> words_;
  std::mt19937_64 iid_;
  std::uint64_t blocks_ = 0;
};

/// Maps a w-bit word to (0, 1), clamping away from the endpoints.
double word_to_uniform(std::uint64_t word, int w);

struct GaussianEstimate {
  double ex1 = 0.0;
  double ex2 = 0.0;
  double ex1x2 = 0.0;
  std::uint64_t outputs_consumed = 0;
};

/// One replicate of the systematic Gibbs sampler for the bivariate normal
/// with correlation rho: 2^m iterations, one 2-tuple each, X_{0,2} = 0.
/// When trace is given it receives every (X1, X2).
GaussianEstimate gaussian_replicate(const SourceConfig& config, double rho, int m,
                                    std::uint64_t replicate,
                                    std::vector<std::pair<double, double>>* trace = nullptr);

std::vector<GaussianEstimate> gibbs_gaussian(const SourceConfig& config, double rho, int m,
                                             int replicates, int threads = 1);

struct PumpData {
  std::array<int, 10> failures;
  std::array<double, 10> times;
};

/// Failure counts and observation times of the ten pumps.
const PumpData& pump_data();

struct PumpModelConfig {
  double alpha = 1.802;
  double gamma = 0.1;
  double delta = 1.0;
};

inline constexpr int kPumpDimension = 11;

struct PumpEstimate {
  std::array<double, kPumpDimension> mean{};  // lambda_1..lambda_10, beta
  std::uint64_t outputs_consumed = 0;
};

/// One replicate of the pump-model Gibbs sampler: 2^m iterations, each
/// consuming an 11-tuple (ten lambda updates, then beta). Starts from
/// lambda_j = x_j / t_j and the conditional mean of beta.
PumpEstimate pump_replicate(const SourceConfig& config, const PumpModelConfig& model,
                            const PumpData& data, int m, std::uint64_t replicate);

std::vector<PumpEstimate> gibbs_pump(const SourceConfig& config, const PumpModelConfig& model,
                                     const PumpData& data, int m, int replicates,
                                     int threads = 1);

struct Summary {
  double mean = 0.0;
  double sd = 0.0;
  double variance = 0.0;  // unbiased
  double log2_sd = 0.0;
};

/// Cross-replicate summary. Throws std::invalid_argument for fewer than two
/// values.
Summary summarize(std::span<const double> values);

}  // namespace cudtaus
