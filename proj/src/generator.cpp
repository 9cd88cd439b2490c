#include "cudtaus/generator.hpp"

#include <numeric>
#include <stdexcept>

#include "cudtaus/lattice.hpp"

namespace cudtaus {

ParamsCheck check_params(const GeneratorParams& params) {
  ParamsCheck check;
  auto fail = [&check](std::string msg) { check.errors.push_back(std::move(msg)); };
  const int m = params.m;
  if (m < 2 || m > 32) {
    fail("m = " + std::to_string(m) + " outside [2, 32]");
    return check;
  }
  if (params.w < m || params.w > 64) {
    fail("w = " + std::to_string(params.w) + " outside [m, 64]");
  }
  if (params.p.degree() != m) {
    fail("deg(p) = " + std::to_string(params.p.degree()) + " differs from m");
    return check;
  }
  if (!is_primitive(params.p)) {
    fail("p is not primitive");
  }
  if (params.q.degree() >= m) {
    fail("deg(q) must be < m");
  }
  const std::uint64_t period = period_length(m);
  if (params.sigma == 0 || params.sigma >= period) {
    fail("sigma must satisfy 0 < sigma < 2^m - 1");
  }
  if (std::gcd(params.sigma, period) != 1) {
    fail("gcd(sigma, 2^m - 1) != 1");
  }
  if (modpow(Poly::x(), params.sigma, params.p) != params.q) {
    fail("x^sigma mod p differs from q");
  }
  if (params.sigma < static_cast<std::uint64_t>(params.w)) {
    check.warnings.push_back("sigma < w: output words overlap in the bit stream");
  } else if (params.sigma < 64) {
    check.warnings.push_back("sigma < 64: not suitable for w = 64");
  }
  return check;
}

void require_valid(const GeneratorParams& params) {
  const auto check = check_params(params);
  if (!check.ok()) {
    std::string msg = "invalid generator parameters:";
    for (const auto& e : check.errors) {
      msg += " " + e + ";";
    }
    throw std::invalid_argument(msg);
  }
}

std::uint64_t output(Poly state, Poly p, int w) { return laurent_word(state, p, w); }

Poly step(Poly state, Poly q, Poly p) { return mulmod(q, state, p); }

Poly state_from_digits(std::uint64_t leading_digits, Poly p) {
  const int m = p.degree();
  // G = polynomial part of p(x) * sum_k a_k x^(-k-1), with a_k the k-th digit.
  std::uint64_t g = 0;
  for (int i = 0; i < m; ++i) {
    int bit = 0;
    for (int k = 0; i + k + 1 <= m; ++k) {
      const int a_k = static_cast<int>((leading_digits >> (m - 1 - k)) & 1U);
      bit ^= a_k & static_cast<int>(p.coeff(i + k + 1));
    }
    g |= static_cast<std::uint64_t>(bit) << i;
  }
  return Poly{g};
}

std::vector<std::uint64_t> transition_columns(const GeneratorParams& params) {
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(params.m));
  for (int j = 0; j < params.m; ++j) {
    const Poly unit = state_from_digits(std::uint64_t{1} << (params.m - 1 - j), params.p);
    cols[static_cast<std::size_t>(j)] = output(step(unit, params.q, params.p), params.p, params.w);
  }
  return cols;
}

Tausworthe::Tausworthe(const GeneratorParams& params) : params_(params) {
  require_valid(params_);
  const auto cols = transition_columns(params_);
  columns_.assign(cols.rbegin(), cols.rend());
  word_ = output(Poly::one(), params_.p, params_.w);
}

PolynomialGenerator::PolynomialGenerator(const GeneratorParams& params, Poly seed)
    : params_(params), state_(mod(seed, params.p)) {
  require_valid(params_);
  if (state_.is_zero()) {
    throw std::invalid_argument("generator state must be nonzero");
  }
}

std::uint64_t PolynomialGenerator::next() {
  const std::uint64_t out = output(state_, params_.p, params_.w);
  state_ = step(state_, params_.q, params_.p);
  return out;
}

BitRecurrenceGenerator::BitRecurrenceGenerator(const GeneratorParams& params) : params_(params) {
  require_valid(params_);
  if (params_.m > 24) {
    throw std::invalid_argument("bit recurrence reference supports m <= 24");
  }
  const int m = params_.m;
  const std::uint64_t period = period_length(m);
  bits_.resize(period);
  const auto seed = laurent_digits(Poly::one(), params_.p, m);
  std::copy(seed.begin(), seed.end(), bits_.begin());
  // p(x) = x^m + c_1 x^(m-1) + ... + c_m, so c_j is the coefficient of x^(m-j).
  std::vector<int> taps;
  for (int j = 1; j <= m; ++j) {
    if (params_.p.coeff(m - j)) {
      taps.push_back(j);
    }
  }
  for (std::uint64_t k = static_cast<std::uint64_t>(m); k < period; ++k) {
    std::uint8_t a = 0;
    for (int j : taps) {
      a ^= bits_[k - static_cast<std::uint64_t>(j)];
    }
    bits_[k] = a;
  }
}

std::uint64_t BitRecurrenceGenerator::next() {
  const std::uint64_t period = bits_.size();
  std::uint64_t word = 0;
  std::uint64_t idx = position_;
  for (int j = 0; j < params_.w; ++j) {
    word = (word << 1) | bits_[idx];
    if (++idx == period) {
      idx = 0;
    }
  }
  position_ = (position_ + params_.sigma) % period;
  return word;
}

PointSet point_set_overlapping(const GeneratorParams& params, int s) {
  if (s < 1) {
    throw std::invalid_argument("point_set_overlapping: s must be >= 1");
  }
  Tausworthe gen(params);
  const std::uint64_t period = period_length(params.m);
  std::vector<std::uint64_t> stream(period);
  for (auto& u : stream) {
    u = gen.next();
  }
  PointSet out(s, params.w);
  out.reserve(period + 1);
  std::vector<std::uint64_t> coords(static_cast<std::size_t>(s), 0);
  out.push_back(coords);
  for (std::uint64_t i = 0; i < period; ++i) {
    for (int j = 0; j < s; ++j) {
      coords[static_cast<std::size_t>(j)] = stream[(i + static_cast<std::uint64_t>(j)) % period];
    }
    out.push_back(coords);
  }
  return out;
}

BlockStream::BlockStream(const GeneratorParams& params, int s) : gen_(params), s_(s) {
  if (s < 1) {
    throw std::invalid_argument("block size must be >= 1");
  }
  if (std::gcd(period_length(params.m), static_cast<std::uint64_t>(s)) != 1) {
    throw std::invalid_argument("block size " + std::to_string(s) + " shares a factor with 2^" +
                                std::to_string(params.m) + " - 1");
  }
}

void BlockStream::next(std::span<std::uint64_t> block) {
  if (block.size() != static_cast<std::size_t>(s_)) {
    throw std::invalid_argument("block arity mismatch");
  }
  if (blocks_++ == 0) {
    std::fill(block.begin(), block.end(), 0);
    return;
  }
  for (auto& u : block) {
    u = gen_.next();
  }
  consumed_ += static_cast<std::uint64_t>(s_);
}

PointSet stream_nonoverlapping(const GeneratorParams& params, int s) {
  BlockStream stream(params, s);
  const std::uint64_t n = std::uint64_t{1} << params.m;
  PointSet out(s, params.w);
  out.reserve(n);
  std::vector<std::uint64_t> block(static_cast<std::size_t>(s));
  for (std::uint64_t i = 0; i < n; ++i) {
    stream.next(block);
    out.push_back(block);
  }
  return out;
}

void digital_shift(std::span<std::uint64_t> tuple, std::span<const std::uint64_t> shift) {
  if (tuple.size() != shift.size()) {
    throw std::invalid_argument("digital_shift: arity mismatch");
  }
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    tuple[j] ^= shift[j];
  }
}

}  // namespace cudtaus
