#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special_functions.hpp"

#include "frozen_values.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace casimir;
using std::numbers::pi;

namespace {

bool meets_contract(const IntegrationResult& r, const QuadratureSpec& s) {
  return !r.converged || r.error_estimate <= std::max(s.abs_tol, s.rel_tol * std::abs(r.value));
}

} // namespace

TEST_CASE("spec validation and tightening") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.max_roundtrips = 0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  const auto t = QuadratureSpec{}.tightened(1e-12, 1.0);
  CHECK(t.rel_tol == 1e-12);
  CHECK(t.abs_tol == QuadratureSpec{}.abs_tol);
}

TEST_CASE("Gauss-Kronrod is exact for low-degree polynomials") {
  const auto p = gauss_kronrod_15([](double x) { return std::pow(x, 22) - 3.0 * x * x; }, 0.0, 1.0);
  CHECK(std::abs(p.value - (1.0 / 23.0 - 1.0)) < 1e-15);
}

TEST_CASE("finite adaptive integration") {
  const QuadratureSpec s;
  const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, s);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-10);
  CHECK(meets_contract(r, s));

  const auto zero_width = integrate([](double x) { return x; }, 1.0, 1.0, s);
  CHECK(zero_width.value == 0.0);
}

TEST_CASE("non-convergence is reported, not thrown") {
  QuadratureSpec s;
  s.max_subdivisions = 2;
  s.rel_tol = 1e-14;
  s.abs_tol = 1e-300;
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, s);
  CHECK_FALSE(r.converged);
}

TEST_CASE("semi-infinite integrals of the Gamma family") {
  const QuadratureSpec s;
  const auto g2 = integrate_semi_infinite([](double u) { return u * std::exp(-u); }, 1.0, s);
  CHECK(g2.converged);
  CHECK(rel_diff(g2.value, 1.0) < 1e-12);

  const auto bose3 =
      integrate_semi_infinite([](double u) { return u * u * u / std::expm1(u); }, 1.0, s);
  CHECK(rel_diff(bose3.value, pi * pi * pi * pi / 15.0) < 1e-11);

  const auto bose1 = integrate_semi_infinite([](double u) { return u / std::expm1(u); }, 1.0, s);
  CHECK(rel_diff(bose1.value, pi * pi / 6.0) < 1e-11);

  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, 0.0, s), DomainError);
}

TEST_CASE("Gamma family is exact to rel_tol and tightening never hurts") {
  for (int n = 0; n <= 8; ++n) {
    for (double scale : {0.1, 1.0, 7.0}) {
      const auto f = [n, scale](double u) { return std::pow(u, n) * std::exp(-u / scale); };
      const double exact = std::tgamma(n + 1.0) * std::pow(scale, n + 1);
      double previous_error = 1.0;
      for (double tol : {1e-6, 1e-9, 1e-12}) {
        QuadratureSpec s;
        s.rel_tol = tol;
        s.abs_tol = 1e-300;
        const auto r = integrate_semi_infinite(f, scale, s);
        const double err = rel_diff(r.value, exact);
        CHECK(r.converged);
        CHECK(err <= tol);
        CHECK(meets_contract(r, s));
        CHECK(err <= std::max(previous_error, 4e-16));
        previous_error = err;
      }
    }
  }
}

TEST_CASE("geometric roundtrip series") {
  const QuadratureSpec s;
  const auto half = sum_roundtrip_series([](int l) { return std::pow(0.5, l); }, 0.5, s);
  CHECK(half.converged);
  CHECK(std::abs(half.value - 1.0) < 1e-10);

  const auto li2 = sum_roundtrip_series(
      [](int l) { return std::pow(0.5, l) / (static_cast<double>(l) * l); }, 0.5, s);
  CHECK(rel_diff(li2.value, frozen::li2_half) < 1e-10);

  const auto zero = sum_roundtrip_series([](int) { return 0.0; }, 0.5, s);
  CHECK(zero.converged);
  CHECK(zero.value == 0.0);
  CHECK(zero.terms == 1);
}

TEST_CASE("roundtrip series flags ratio >= 1 and exhausted caps") {
  QuadratureSpec s;
  CHECK_FALSE(sum_roundtrip_series([](int) { return 1.0; }, 1.0, s).converged);
  s.max_roundtrips = 5;
  const auto r = sum_roundtrip_series([](int l) { return std::pow(0.9, l); }, 0.9, s);
  CHECK_FALSE(r.converged);
  CHECK(r.terms == 5);
}

TEST_CASE("converged series are independent of a raised cap") {
  QuadratureSpec a;
  QuadratureSpec b;
  b.max_roundtrips = 100000;
  const auto term = [](int l) { return std::pow(0.8, l) / l; };
  CHECK(sum_roundtrip_series(term, 0.8, a).value == sum_roundtrip_series(term, 0.8, b).value);
}

TEST_CASE("algebraic series extrapolation") {
  const QuadratureSpec s;
  const auto z2 = sum_algebraic_series([](int l) { return 1.0 / (double(l) * l); }, 2.0, s);
  CHECK(z2.converged);
  CHECK(rel_diff(z2.value, pi * pi / 6.0) < 1e-10);

  const auto z4 = sum_algebraic_series([](int l) { return std::pow(double(l), -4); }, 4.0, s);
  CHECK(z4.converged);
  CHECK(rel_diff(z4.value, pi * pi * pi * pi / 90.0) < 1e-12);

  // l^-2 with subleading l^-3, l^-4 corrections: sum 1/(l(l+1)) = 1
  const auto telescoping =
      sum_algebraic_series([](int l) { return 1.0 / (double(l) * (l + 1.0)); }, 2.0, s);
  CHECK(std::abs(telescoping.value - 1.0) < 1e-10);

  CHECK_THROWS_AS(sum_algebraic_series([](int) { return 0.0; }, 1.0, s), DomainError);
}

TEST_CASE("central difference") {
  CHECK(std::abs(central_difference([](double x) { return x * x * x; }, 2.0, 1e-3) - 12.0) < 1e-5);
  CHECK_THROWS_AS(central_difference([](double x) { return x; }, 0.0, 0.0), DomainError);
}
