#pragma once

// Short-period Tausworthe generators.
//
// Three equivalent ways of producing the output stream u_0, u_1, ... are
// provided: the bit-level linear recurrence (BitRecurrenceGenerator), the
// polynomial LCG X_i = q X_{i-1} mod p (PolynomialGenerator) and the w-bit
// column-XOR state transition (Tausworthe, the production path).
// Outputs are w-bit words; the fraction is word / 2^w.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cudtaus/point_set.hpp"
#include "cudtaus/poly.hpp"

namespace cudtaus {

struct GeneratorParams {
  int m = 0;
  int w = 32;
  Poly p;
  Poly q;
  std::uint64_t sigma = 0;

  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

struct ParamsCheck {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

/// Checks the maximal-period conditions: 2 <= m <= 32, m <= w <= 64,
/// p primitive of degree m, deg(q) < m, 0 < sigma < 2^m - 1,
/// x^sigma = q mod p and gcd(sigma, 2^m - 1) = 1. sigma < w and sigma < 64
/// are reported as warnings.
ParamsCheck check_params(const GeneratorParams& params);

/// Throws std::invalid_argument listing every failed condition.
void require_valid(const GeneratorParams& params);

/// nu_w(state / p) as a w-bit word.
std::uint64_t output(Poly state, Poly p, int w);

/// q * state mod p.
Poly step(Poly state, Poly q, Poly p);

/// The unique state polynomial (deg < m) whose first m Laurent digits over p
/// are the given bits, most significant first.
Poly state_from_digits(std::uint64_t leading_digits, Poly p);

/// Columns b_0..b_{m-1}: XOR of the columns selected by the top m bits of the
/// current output word gives the next output word.
std::vector<std::uint64_t> transition_columns(const GeneratorParams& params);

/// Production generator using the column-XOR transition. Seeded at X_0 = 1.
class Tausworthe {
 public:
  explicit Tausworthe(const GeneratorParams& params);

  /// Returns the current output and advances.
  std::uint64_t next() {
    const std::uint64_t out = word_;
    std::uint64_t selector = word_ >> (params_.w - params_.m);
    std::uint64_t acc = 0;
    while (selector != 0) {
      const int bit = std::countr_zero(selector);
      acc ^= columns_[static_cast<std::size_t>(bit)];
      selector &= selector - 1;
    }
    word_ = acc;
    return out;
  }

  const GeneratorParams& params() const { return params_; }

 private:
  GeneratorParams params_;
  // columns_[k] is b_{m-1-k}: bit k of the selector is digit m-1-k.
  std::vector<std::uint64_t> columns_;
  std::uint64_t word_ = 0;
};

/// Reference generator iterating the polynomial state directly.
class PolynomialGenerator {
 public:
  explicit PolynomialGenerator(const GeneratorParams& params, Poly seed = Poly::one());

  std::uint64_t next();
  Poly state() const { return state_; }

 private:
  GeneratorParams params_;
  Poly state_;
};

/// Reference generator reading w-bit windows at stride sigma from the
/// m-sequence a_k = c_1 a_{k-1} + ... + c_m a_{k-m}. Stores one full period
/// of bits, so m is limited to 24.
class BitRecurrenceGenerator {
 public:
  explicit BitRecurrenceGenerator(const GeneratorParams& params);

  std::uint64_t next();
  std::span<const std::uint8_t> sequence() const { return bits_; }

 private:
  GeneratorParams params_;
  std::vector<std::uint8_t> bits_;
  std::uint64_t position_ = 0;
};

/// {0} together with the 2^m - 1 overlapping s-tuples of one period,
/// wrapping around at the end.
PointSet point_set_overlapping(const GeneratorParams& params, int s);

/// Emits the origin tuple, then consecutive non-overlapping s-blocks of the
/// periodic stream. Requires gcd(2^m - 1, s) = 1 so that 2^m tuples cover
/// every phase once.
class BlockStream {
 public:
  BlockStream(const GeneratorParams& params, int s);

  void next(std::span<std::uint64_t> block);
  int block_size() const { return s_; }
  std::uint64_t blocks_emitted() const { return blocks_; }
  std::uint64_t outputs_consumed() const { return consumed_; }

 private:
  Tausworthe gen_;
  int s_;
  std::uint64_t blocks_ = 0;
  std::uint64_t consumed_ = 0;
};

/// The full 2^m-tuple non-overlapping sequence as an ordered point set.
PointSet stream_nonoverlapping(const GeneratorParams& params, int s);

/// Coordinate-wise XOR of a tuple with a shift of the same arity.
void digital_shift(std::span<std::uint64_t> tuple, std::span<const std::uint64_t> shift);

}  // namespace cudtaus
