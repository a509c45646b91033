#include "casimir/casimir4d.hpp"

#include "casimir/errors.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace casimir {

namespace {

using std::numbers::pi;

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_separation(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("separation q must be positive");
}

void require_loop_reflectivity(double r0) {
  if (!(std::abs(r0) <= 1.0)) throw DomainError("loop reflectivity |r0| must not exceed 1");
}

void require_zero_temperature(const PlanarCavityConfig& cfg, const char* who) {
  if (cfg.temperature != 0.0) {
    throw DomainError(std::string(who) + ": zero-temperature representation");
  }
}

// pi^m * num / den / q^n, arranged so that num = 1 costs no rounding.
double rational_times_pi_power(const Rational& c, int pi_power, double q, int q_power) {
  double value = static_cast<double>(boost::multiprecision::numerator(c));
  for (int i = 0; i < pi_power; ++i) value *= pi;
  value /= static_cast<double>(boost::multiprecision::denominator(c));
  return value / std::pow(q, q_power);
}

// Euler-Maclaurin coefficient of pi^2 / q^4 per polarization. The mode
// function is kappa^2 (K - kappa) / (4 pi^2); only odd derivatives at 0 enter
// and the cutoff K multiplies an even power, so it drops out.
Rational mode_sum_coefficient() {
  // Coefficients of -kappa^3 (the K-independent part), index = power.
  const std::array<Rational, 4> poly{0, 0, 0, -1};
  Rational coefficient = 0;
  for (int k = 1; 2 * k - 1 < static_cast<int>(poly.size()); ++k) {
    const int m = 2 * k - 1;
    Rational derivative = poly[static_cast<std::size_t>(m)];
    for (int i = 2; i <= m; ++i) derivative *= i; // f^(m)(0) = m! c_m
    Rational factorial = 1;
    for (int i = 2; i <= 2 * k; ++i) factorial *= i;
    const Rational term = bernoulli(2 * k) / factorial * derivative / 4;
    if (k != 2 && term != 0) throw std::logic_error("mode sum: unexpected surviving term");
    coefficient += term;
  }
  return coefficient;
}

ForceResult closed_form_limit(double value, double error, Method method) {
  ForceResult out;
  out.value = value;
  out.error_estimate = error + 4.0 * kEps * std::abs(value);
  out.method = method;
  out.converged = true;
  return out;
}

} // namespace

double PlanarMirrorModel::reflection_imag(Polarization, double kappa) const {
  return base.reflection_imag(kappa);
}

void PlanarCavityConfig::validate() const {
  require_separation(q);
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("planar cavity: temperature must be non-negative");
  }
}

double PlanarCavityConfig::loop_reflection_imag(Polarization p, double kappa) const {
  return mirror1.reflection_imag(p, kappa) * mirror2.reflection_imag(p, kappa);
}

double PlanarCavityConfig::loop_reflection_bound() const {
  return mirror1.base.reflection_bound() * mirror2.base.reflection_bound();
}

PlanarCavityConfig PlanarCavityConfig::factorized(const CavityConfig& cfg) {
  return {{cfg.mirror1}, {cfg.mirror2}, cfg.q, cfg.temperature};
}

ForceResult pressure_imag_axis_polarization(const PlanarCavityConfig& cfg, Polarization p,
                                            const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  require_zero_temperature(cfg, "pressure_imag_axis");
  const double q = cfg.q;
  // u = 2 kappa q
  const auto integrand = [&](double u) {
    const double r = cfg.loop_reflection_imag(p, u / (2.0 * q));
    if (r == 0.0) return 0.0;
    return u * u * u * r / (std::expm1(u) + (1.0 - r));
  };
  const auto res = integrate_semi_infinite(integrand, 1.0, spec);
  const double q2 = q * q;
  const double scale = 1.0 / (32.0 * pi * pi * q2 * q2);
  ForceResult out;
  out.value = scale * res.value;
  out.error_estimate = scale * res.error_estimate;
  out.method = Method::ImagAxis;
  out.converged = res.converged;
  return out;
}

ForceResult pressure_imag_axis(const PlanarCavityConfig& cfg, const QuadratureSpec& spec) {
  const ForceResult a = pressure_imag_axis_polarization(cfg, Polarization::P1, spec);
  const ForceResult b = pressure_imag_axis_polarization(cfg, Polarization::P2, spec);
  ForceResult out;
  out.value = a.value + b.value;
  out.error_estimate = a.error_estimate + b.error_estimate;
  out.method = Method::ImagAxis;
  out.converged = a.converged && b.converged;
  return out;
}

ForceResult pressure_large_distance(double r0, double q, const QuadratureSpec& spec) {
  require_separation(q);
  require_loop_reflectivity(r0);
  spec.validate();
  const auto li = polylog_with_error({r0, 4});
  const double q2 = q * q;
  const double scale = 3.0 / (8.0 * pi * pi * q2 * q2);
  return closed_form_limit(scale * li.value, scale * li.error_bound, Method::LargeDistance);
}

ForceResult pressure_roundtrip(const PlanarCavityConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  require_zero_temperature(cfg, "pressure_roundtrip");
  const double q = cfg.q;
  const double bound = cfg.loop_reflection_bound();
  ForceResult out;
  out.method = Method::Roundtrip;
  if (bound == 0.0) {
    out.converged = true;
    out.roundtrips_used = 0;
    return out;
  }

  const QuadratureSpec inner = spec.tightened(1e-12, 1e-24);
  double term_error = 0.0;
  bool terms_ok = true;
  const SeriesTerm term = [&](int ell) {
    // u = 2 l kappa q; both polarizations are equal under factorization.
    const double tau = 2.0 * ell * q;
    const auto integrand = [&](double u) {
      const double r = cfg.loop_reflection_imag(Polarization::P1, u / tau);
      return u * u * u * std::pow(r, ell) * std::exp(-u);
    };
    const auto res = integrate_semi_infinite(integrand, 1.0, inner);
    const double t2 = tau * tau;
    const double scale = 1.0 / (pi * pi * t2 * t2);
    term_error += scale * res.error_estimate;
    terms_ok = terms_ok && res.converged;
    return scale * res.value;
  };
  const IntegrationResult s = bound < 1.0 ? sum_roundtrip_series(term, bound, spec)
                                          : sum_algebraic_series(term, 4.0, spec);
  out.value = s.value;
  out.error_estimate = s.error_estimate + term_error;
  out.roundtrips_used = s.terms;
  const double budget =
      std::max(spec.abs_tol, std::max(spec.rel_tol, spec.series_tail_tol) * std::abs(out.value));
  out.converged = s.converged && terms_ok && out.error_estimate <= budget;
  return out;
}

ForceResult pressure_thermal_large_distance(double r0, double q, double T,
                                            const QuadratureSpec& spec) {
  require_separation(q);
  require_loop_reflectivity(r0);
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("temperature must be non-negative");
  spec.validate();
  if (T == 0.0) return pressure_large_distance(r0, q, spec);

  ForceResult out = pressure_high_temperature(r0, q, T);
  out.method = Method::LargeDistance;
  if (r0 == 0.0) return out;

  const SeriesTerm term = [&](int ell) {
    return std::pow(r0, ell) * kernel_4d_thermal_excess(2.0 * ell * q, T);
  };
  const double ratio = std::abs(r0) * std::exp(-4.0 * pi * T * q);
  const IntegrationResult s = sum_roundtrip_series(term, ratio, spec);
  out.value += s.value;
  out.error_estimate += s.error_estimate;
  out.roundtrips_used = s.terms;
  out.converged = s.converged;
  return out;
}

ForceResult pressure_high_temperature(double r0, double q, double T) {
  require_separation(q);
  require_loop_reflectivity(r0);
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("temperature must be non-negative");
  if (r0 == 0.0 || T == 0.0) return closed_form_limit(0.0, 0.0, Method::HighTemperature);
  const auto li = polylog_with_error({r0, 3});
  const double scale = T / (4.0 * pi * q * q * q);
  return closed_form_limit(scale * li.value, scale * li.error_bound, Method::HighTemperature);
}

ForceResult mode_sum_oracle_4d_polarization(double q) {
  require_separation(q);
  ForceResult out;
  out.value = rational_times_pi_power(mode_sum_coefficient(), 2, q, 4);
  out.method = Method::ModeSumOracle;
  out.converged = true;
  return out;
}

ForceResult mode_sum_oracle_4d(double q) {
  require_separation(q);
  ForceResult out;
  out.value = rational_times_pi_power(2 * mode_sum_coefficient(), 2, q, 4);
  out.method = Method::ModeSumOracle;
  out.converged = true;
  return out;
}

EnergyResult energy_4d(const PlanarCavityConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  require_zero_temperature(cfg, "energy_4d");
  const double q = cfg.q;
  const auto integrand = [&](double kappa) {
    const double r = cfg.loop_reflection_imag(Polarization::P1, kappa);
    if (r == 0.0) return 0.0;
    const double arg = (1.0 - r) - r * std::expm1(-2.0 * kappa * q);
    if (!(arg > 0.0)) {
      throw SingularityError("energy_4d: r e^{-2 kappa q} >= 1 at kappa = " + std::to_string(kappa));
    }
    return kappa * kappa * std::log(arg);
  };
  const auto res = integrate_semi_infinite(integrand, 1.0 / (2.0 * q), spec);
  EnergyResult out;
  out.value = res.value / (2.0 * pi * pi);
  out.error_estimate = res.error_estimate / (2.0 * pi * pi);
  out.method = Method::ImagAxis;
  out.kind = EnergyKind::CasimirEnergy;
  out.converged = res.converged;
  return out;
}

EnergyResult energy_4d_large_distance(double r0, double q) {
  require_separation(q);
  require_loop_reflectivity(r0);
  const auto li = polylog_with_error({r0, 4});
  const double scale = 1.0 / (8.0 * pi * pi * q * q * q);
  EnergyResult out;
  out.value = -scale * li.value;
  out.error_estimate = scale * li.error_bound + 4.0 * kEps * std::abs(out.value);
  out.method = Method::LargeDistance;
  out.kind = EnergyKind::CasimirEnergy;
  out.converged = true;
  return out;
}

EnergyResult integrated_field_energy_perfect(double q) {
  require_separation(q);
  EnergyResult out;
  out.value = -q * mode_sum_oracle_4d(q).value / 3.0;
  out.error_estimate = 4.0 * kEps * std::abs(out.value);
  out.method = Method::ClosedForm;
  out.kind = EnergyKind::IntegratedFieldEnergy;
  out.converged = true;
  return out;
}

} // namespace casimir
