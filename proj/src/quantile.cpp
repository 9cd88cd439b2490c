#include "cudtaus/quantile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cudtaus {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 10000;

void require_gamma_args(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::domain_error("gamma shape must be positive, got " + std::to_string(a));
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("gamma argument must be non-negative, got " + std::to_string(x));
  }
}

// log of x^a e^-x / Gamma(a)
double log_prefactor(double a, double x) { return a * std::log(x) - x - std::lgamma(a); }

// P(a, x) by its power series; good for x < a + 1.
double p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxTerms; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) {
      return sum * std::exp(log_prefactor(a, x));
    }
  }
  throw std::runtime_error("incomplete gamma series did not converge");
}

// Q(a, x) by Lentz's continued fraction; good for x >= a + 1.
double q_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) {
      return std::exp(log_prefactor(a, x)) * h;
    }
  }
  throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

double gamma_density(double a, double x) {
  return std::exp((a - 1.0) * std::log(x) - x - std::lgamma(a));
}

}  // namespace

double inv_normal_cdf(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("inv_normal_cdf needs 0 < u < 1, got " + std::to_string(u));
  }
  const double q = u - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                 67265.770927008700853) * r + 45921.953931549871457) * r +
               13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((r * 5226.495278852854561 + 28729.085735721942674) * r +
                 39307.89580009271061) * r + 21213.794301586595867) * r +
               5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }
  double r = q < 0.0 ? u : 1.0 - u;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r +
                0.24178072517745061177) * r + 1.27045825245236838258) * r +
              3.64784832476320460504) * r + 5.7694972214606914055) * r +
            4.6303378461565452959) * r + 1.42343711074968357734) /
          (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                0.0151986665636164571966) * r + 0.14810397642748007459) * r +
              0.68976733498510000455) * r + 1.6763848301838038494) * r +
            2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r +
                0.0012426609473880784386) * r + 0.026532189526576123093) * r +
              0.29656057182850489123) * r + 1.7848265399172913358) * r +
            5.4637849111641143699) * r + 6.6579046435011037772) /
          (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r +
                1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
              0.0148753612908506148525) * r + 0.13692988092273580531) * r +
            0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -val : val;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double gamma_p(double a, double x) {
  require_gamma_args(a, x);
  if (x == 0.0) {
    return 0.0;
  }
  return x < a + 1.0 ? p_series(a, x) : 1.0 - q_fraction(a, x);
}

double gamma_q(double a, double x) {
  require_gamma_args(a, x);
  if (x == 0.0) {
    return 1.0;
  }
  return x < a + 1.0 ? 1.0 - p_series(a, x) : q_fraction(a, x);
}

double inv_gamma_cdf(double u, double shape, double rate) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("inv_gamma_cdf needs 0 < u < 1, got " + std::to_string(u));
  }
  if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate)) {
    throw std::domain_error("inv_gamma_cdf needs positive shape and rate");
  }
  // Residual increasing in z; the upper tail is matched through Q to keep
  // relative accuracy when u is close to 1.
  const bool upper = u > 0.5;
  const double target = upper ? 1.0 - u : u;
  auto residual = [&](double z) {
    return upper ? target - gamma_q(shape, z) : gamma_p(shape, z) - target;
  };

  // Wilson-Hilferty starting point.
  const double k = 1.0 / (9.0 * shape);
  const double c = 1.0 - k + inv_normal_cdf(u) * std::sqrt(k);
  double z = shape * c * c * c;
  if (!(z > 0.0) || shape < 1.0) {
    // Small-z approximation P(a, z) ~ z^a / Gamma(a + 1).
    z = std::exp((std::log(u) + std::lgamma(shape + 1.0)) / shape);
  }
  z = std::max(z, std::numeric_limits<double>::min());

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    const double f = residual(z);
    if (f == 0.0) {
      return z / rate;
    }
    (f < 0.0 ? lo : hi) = z;
    const double dens = gamma_density(shape, z);
    double next = dens > 0.0 ? z - f / dens : std::numeric_limits<double>::quiet_NaN();
    if (!(next > lo && next < hi)) {
      next = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * z;
    }
    if (std::fabs(next - z) <= 4.0 * kEps * z) {
      return next / rate;
    }
    z = next;
  }
  throw std::runtime_error("inv_gamma_cdf did not converge for shape " + std::to_string(shape) +
                           ", u " + std::to_string(u));
}

}  // namespace cudtaus
