#include "casimir/special_functions.hpp"

#include "casimir/errors.hpp"
#include "log_gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace casimir {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

PolylogResult polylog_direct(double x, int p, double tol) {
  const double ax = std::abs(x);
  double sum = 0.0;
  double power = 1.0;
  std::size_t ell = 0;
  double bound = 0.0;
  for (;;) {
    ++ell;
    power *= x;
    sum += power / std::pow(static_cast<double>(ell), p);
    // |x|^{L+1} / ((L+1)^p (1-|x|)) bounds the remainder after L terms.
    bound = std::abs(power) * ax /
            (std::pow(static_cast<double>(ell + 1), p) * (1.0 - ax));
    if (bound <= tol * std::abs(sum) || bound == 0.0) break;
  }
  return {sum, bound, ell};
}

// Expansion around x = 1 in mu = log(x), valid for |mu| < 2 pi:
//   Li_p(e^mu) = sum_{k != p-1} zeta(p-k) mu^k / k!
//              + mu^{p-1} / (p-1)! [H_{p-1} - log(-mu)]
PolylogResult polylog_near_one(double x, int p, double tol) {
  const double mu = std::log(x);
  double harmonic = 0.0;
  for (int j = 1; j <= p - 1; ++j) harmonic += 1.0 / j;

  double sum = 0.0;
  double mu_pow = 1.0;   // mu^k / k!
  double last_nonzero = 0.0;
  int quiet = 0;
  const int k_max = 120;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) mu_pow *= mu / k;
    double term = 0.0;
    if (k == p - 1) {
      term = mu_pow * (harmonic - std::log(-mu));
    } else {
      term = zeta(p - k) * mu_pow;
    }
    sum += term;
    if (term != 0.0) last_nonzero = std::abs(term);
    if (k > p && std::abs(term) <= 0.25 * tol * std::abs(sum)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  // Terms fall off like (|mu| / 2 pi)^k; the last retained nonzero term
  // dominates the neglected remainder.
  const double bound = last_nonzero + 4.0 * kEps * std::abs(sum);
  return {sum, bound, 0};
}

double rising_factorial(double s, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= s + i;
  return r;
}

} // namespace

BernoulliTable::BernoulliTable(int max_order) {
  if (max_order < 0) throw DomainError("BernoulliTable: negative order");
  values_.resize(static_cast<std::size_t>(max_order) + 1);
  values_[0] = 1;
  using boost::multiprecision::cpp_int;
  for (int m = 1; m <= max_order; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc = 0;
    cpp_int binom = 1; // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * values_[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    values_[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  doubles_.reserve(values_.size());
  for (const auto& v : values_) doubles_.push_back(v.convert_to<double>());
}

const Rational& BernoulliTable::exact(int k) const {
  if (k < 0 || k > max_order()) {
    throw DomainError("BernoulliTable: order " + std::to_string(k) + " out of range");
  }
  return values_[static_cast<std::size_t>(k)];
}

double BernoulliTable::operator[](int k) const {
  if (k < 0 || k > max_order()) {
    throw DomainError("BernoulliTable: order " + std::to_string(k) + " out of range");
  }
  return doubles_[static_cast<std::size_t>(k)];
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table(60);
  return table;
}

Rational bernoulli(int k) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("bernoulli: order must be even and >= 2, got " + std::to_string(k));
  }
  if (k <= bernoulli_table().max_order()) return bernoulli_table().exact(k);
  return BernoulliTable(k).exact(k);
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: s must exceed 1");
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be positive");

  const auto& bern = bernoulli_table();
  const double shift = std::max(0.0, std::ceil(16.0 - a));
  const auto n_direct = static_cast<long>(shift);

  double direct = 0.0;
  for (long n = n_direct - 1; n >= 0; --n) direct += std::pow(a + static_cast<double>(n), -s);

  const double x = a + shift;
  // Integral tail plus half the boundary term ...
  double tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // ... plus Euler-Maclaurin corrections B_2k/(2k)! (s)_{2k-1} x^{-s-2k+1}.
  double factorial = 1.0;
  for (int k = 1; 2 * k <= bern.max_order(); ++k) {
    factorial *= (2.0 * k - 1.0) * (2.0 * k);
    const double term = bern[2 * k] / factorial * rising_factorial(s, 2 * k - 1) *
                        std::pow(x, -s - 2.0 * k + 1.0);
    tail += term;
    if (std::abs(term) < 1e-18 * std::abs(tail + direct)) break;
  }
  return direct + tail;
}

double zeta(int s) {
  if (s == 1) throw DomainError("zeta: pole at s = 1");
  if (s == 0) return -0.5;
  if (s < 0) {
    // zeta(1 - m) = -B_m / m for m >= 2
    const int m = 1 - s;
    if (m % 2 == 1) return 0.0;
    return -bernoulli_table()[m] / m;
  }
  return hurwitz_zeta(static_cast<double>(s), 1.0);
}

PolylogResult polylog_with_error(PolylogArg arg, double tol) {
  const double x = arg.x;
  const int p = arg.p;
  if (!(std::abs(x) <= 1.0)) throw DomainError("polylog: |x| must not exceed 1");
  if (p < 2) throw DomainError("polylog: order p must be >= 2");
  if (!(tol > 0.0)) throw DomainError("polylog: tolerance must be positive");

  if (x == 0.0) return {0.0, 0.0, 0};
  if (x == 1.0) {
    const double z = zeta(p);
    return {z, 4.0 * kEps * z, 0};
  }
  if (x == -1.0) {
    // Li_p(-1) = -(1 - 2^{1-p}) zeta(p)
    const double v = -(1.0 - std::ldexp(1.0, 1 - p)) * zeta(p);
    return {v, 4.0 * kEps * std::abs(v), 0};
  }
  if (std::abs(x) <= 0.5) return polylog_direct(x, p, tol);
  if (x > 0.0) return polylog_near_one(x, p, tol);

  // Li_p(-y) = 2^{1-p} Li_p(y^2) - Li_p(y)
  const auto squared = polylog_with_error({x * x, p}, tol);
  const auto positive = polylog_with_error({-x, p}, tol);
  const double scale = std::ldexp(1.0, 1 - p);
  return {scale * squared.value - positive.value,
          scale * squared.error_bound + positive.error_bound, 0};
}

double polylog(PolylogArg arg, double tol) { return polylog_with_error(arg, tol).value; }

double erlang_weight(int ell, double rate, double s) {
  if (ell < 1) throw DomainError("erlang_weight: ell must be >= 1");
  if (!(rate > 0.0)) throw DomainError("erlang_weight: rate must be positive");
  if (!(s >= 0.0)) throw DomainError("erlang_weight: s must be non-negative");
  if (ell == 1) return rate * std::exp(-rate * s);
  if (s == 0.0) return 0.0;
  const double log_w = ell * std::log(rate) + (ell - 1) * std::log(s) - rate * s -
                       detail::log_gamma(static_cast<double>(ell));
  return std::exp(log_w);
}

double gamma_density(double shape, double rate, double s) {
  if (!(shape > 0.0)) throw DomainError("gamma_density: shape must be positive");
  if (!(rate > 0.0)) throw DomainError("gamma_density: rate must be positive");
  if (!(s >= 0.0)) throw DomainError("gamma_density: s must be non-negative");
  if (s == 0.0) {
    if (shape == 1.0) return rate;
    return shape < 1.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(s) - rate * s -
                  detail::log_gamma(shape));
}

double hypoexponential_density(int n1, double rate1, int n2, double rate2, double s) {
  if (n1 < 0 || n2 < 0 || n1 + n2 < 1) {
    throw DomainError("hypoexponential_density: shapes must be >= 0 with a positive total");
  }
  if (n1 == 0) return erlang_weight(n2, rate2, s);
  if (n2 == 0) return erlang_weight(n1, rate1, s);
  if (!(rate1 > 0.0) || !(rate2 > 0.0)) {
    throw DomainError("hypoexponential_density: rates must be positive");
  }
  if (rate1 == rate2) return erlang_weight(n1 + n2, rate1, s);
  if (!(s >= 0.0)) throw DomainError("hypoexponential_density: s must be non-negative");
  if (s == 0.0) return 0.0;

  // Gamma(n_slow, a) = sum_m NB(m; n_slow, a/b) Gamma(n_slow + m, b) for a < b,
  // so the sum is a positive mixture of Erlang(n1 + n2 + m, b) with terms
  //   t_m = NB(m; n_slow, p) Erlang(k0 + m, b)(s),
  //   t_{m+1}/t_m = (n_slow + m)/(m + 1) * (1 - p) b s / (k0 + m).
  const bool first_slow = rate1 < rate2;
  const double n_slow = first_slow ? n1 : n2;
  const double a = first_slow ? rate1 : rate2;
  const double b = first_slow ? rate2 : rate1;
  const double k0 = n1 + n2;
  const double p = a / b;
  const double c = (1.0 - p) * b * s;

  // The ratio decreases through 1 at the root of
  //   m^2 + (k0 + 1 - c) m + k0 - c n_slow = 0.
  const double lin = k0 + 1.0 - c;
  const double disc = lin * lin - 4.0 * (k0 - c * n_slow);
  double mode = disc > 0.0 ? 0.5 * (-lin + std::sqrt(disc)) : 0.0;
  mode = std::floor(std::max(mode, 0.0));

  const auto ratio = [&](double m) { return (n_slow + m) / (m + 1.0) * c / (k0 + m); };
  constexpr double kNegligible = 1e-18;

  // Sum relative to the mode term, then restore its scale.
  double sum = 1.0;
  double term = 1.0;
  for (double m = mode; term > kNegligible * sum; m += 1.0) {
    term *= ratio(m);
    sum += term;
  }
  term = 1.0;
  for (double m = mode - 1.0; m >= 0.0 && term > kNegligible * sum; m -= 1.0) {
    term /= ratio(m);
    sum += term;
  }
  const double log_mode_term = detail::log_gamma(n_slow + mode) - detail::log_gamma(n_slow) -
                               detail::log_gamma(mode + 1.0) + n_slow * std::log(p) +
                               mode * std::log1p(-p) + (k0 + mode) * std::log(b) +
                               (k0 + mode - 1.0) * std::log(s) - b * s -
                               detail::log_gamma(k0 + mode);
  return std::exp(log_mode_term) * sum;
}

} // namespace casimir
