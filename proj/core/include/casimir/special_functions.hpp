#pragma once

// Series special functions used by the closed-form limits: the incomplete
// zeta function (polylogarithm of integer order), Hurwitz zeta, Bernoulli
// numbers, and delay densities for sums of exponential reflection delays.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace casimir {

using Rational = boost::multiprecision::cpp_rational;

/// Argument of the incomplete zeta function  sum_{l>=1} x^l / l^p.
struct PolylogArg {
  double x = 0.0;
  int p = 2;
};

struct PolylogResult {
  double value = 0.0;
  /// Upper bound on |value - exact|, excluding floating-point rounding.
  double error_bound = 0.0;
  /// Number of series terms summed directly (0 for transformed evaluations).
  std::size_t terms = 0;
};

/// sum_{l>=1} x^l / l^p for |x| <= 1 and integer p >= 2.
///
/// |x| <= 1/2 is summed directly with the geometric tail bound. Larger |x|
/// uses the expansion in log(x) around x = 1 (positive x) or the duplication
/// formula (negative x); x = +-1 reduce to zeta values.
/// Throws DomainError if |x| > 1, p < 2 or tol <= 0.
PolylogResult polylog_with_error(PolylogArg arg, double tol = 1e-15);

double polylog(PolylogArg arg, double tol = 1e-15);

/// Riemann zeta at an integer argument s != 1 (negative and zero included).
double zeta(int s);

/// Hurwitz zeta  sum_{n>=0} (n + a)^{-s}  for real s > 1, a > 0.
/// Direct summation up to a shift, then an Euler-Maclaurin tail built from
/// the Bernoulli table.
double hurwitz_zeta(double s, double a);

/// Exact Bernoulli number B_k for even k >= 2 (B_2 = 1/6, B_4 = -1/30, ...).
Rational bernoulli(int k);

/// Exact Bernoulli numbers B_0 .. B_n via the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = -1/2.
class BernoulliTable {
public:
  explicit BernoulliTable(int max_order);

  [[nodiscard]] int max_order() const noexcept { return static_cast<int>(values_.size()) - 1; }
  [[nodiscard]] const Rational& exact(int k) const;
  [[nodiscard]] double operator[](int k) const;

private:
  std::vector<Rational> values_;
  std::vector<double> doubles_;
};

/// Process-wide table up to order 60, built once.
const BernoulliTable& bernoulli_table();

/// Density of the sum of `ell` independent exponential delays of rate
/// `rate` (Erlang):  rate^ell s^(ell-1) e^(-rate s) / (ell-1)!.
/// Throws DomainError for ell < 1, rate <= 0 or s < 0.
double erlang_weight(int ell, double rate, double s);

/// Same density with a real shape parameter (Gamma density).
double gamma_density(double shape, double rate, double s);

/// Density of Gamma(n1, rate1) + Gamma(n2, rate2), integer shapes >= 0 with
/// n1 + n2 >= 1. Unequal rates use the negative-binomial mixture of Erlang
/// densities at the larger rate, whose weights are all positive.
double hypoexponential_density(int n1, double rate1, int n2, double rate2, double s);

} // namespace casimir
