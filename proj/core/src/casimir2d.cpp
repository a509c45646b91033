#include "casimir/casimir2d.hpp"

#include "casimir/errors.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace casimir {

namespace {

using std::numbers::pi;

void require_separation(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("separation q must be positive");
}

void require_temperature(double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("temperature must be non-negative");
}

// Time-domain loop structure: each roundtrip multiplies by `amplitude` and
// adds one exponential delay per lorentzian mirror.
struct LoopDelay {
  double amplitude = 0.0;
  std::vector<double> rates;
};

LoopDelay loop_delay(const CavityConfig& cfg) {
  const auto k1 = cfg.mirror1.delay_kernel();
  const auto k2 = cfg.mirror2.delay_kernel();
  if (!k1 || !k2) {
    throw CapabilityError("roundtrip series needs time-domain reflection kernels; got " +
                          cfg.mirror1.describe() + " and " + cfg.mirror2.describe());
  }
  LoopDelay d;
  d.amplitude = k1->amplitude * k2->amplitude;
  if (k1->rate) d.rates.push_back(*k1->rate);
  if (k2->rate) d.rates.push_back(*k2->rate);
  return d;
}

struct TermValue {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

// E[g(2 l q + S_l)] with S_l the total delay after l roundtrips.
TermValue delay_average(const LoopDelay& d, int ell, double q,
                        const std::function<double(double)>& g, const QuadratureSpec& inner) {
  const double base = 2.0 * ell * q;
  if (d.rates.empty()) return {g(base), 0.0, true};

  std::function<double(double)> density;
  double mean = 0.0;
  double var = 0.0;
  double slow = 0.0;
  if (d.rates.size() == 1) {
    const double w = d.rates[0];
    density = [ell, w](double s) { return erlang_weight(ell, w, s); };
    mean = ell / w;
    var = ell / (w * w);
    slow = w;
  } else {
    const double w1 = d.rates[0];
    const double w2 = d.rates[1];
    if (std::abs(w1 - w2) <= 1e-12 * std::max(w1, w2)) {
      density = [ell, w1](double s) { return erlang_weight(2 * ell, w1, s); };
    } else {
      density = [ell, w1, w2](double s) { return hypoexponential_density(ell, w1, ell, w2, s); };
    }
    mean = ell / w1 + ell / w2;
    var = ell / (w1 * w1) + ell / (w2 * w2);
    slow = std::min(w1, w2);
  }
  const double sd = std::sqrt(var);
  const double lo = std::max(0.0, mean - 15.0 * sd);
  const double hi = mean + 15.0 * sd + 40.0 / slow;
  const auto r = integrate([&](double s) { return density(s) * g(base + s); }, lo, hi, inner, 8);
  return {r.value, r.error_estimate, r.converged};
}

struct SeriesOutcome {
  double value = 0.0;
  double error = 0.0;
  int terms = 0;
  bool converged = false;
};

// Sums term(l) either geometrically (ratio < 1) or, when ratio == 1 and the
// terms are algebraic with the given leading power, by extrapolation.
SeriesOutcome sum_terms(const std::function<TermValue(int)>& term, double ratio, double power,
                        const QuadratureSpec& spec) {
  double term_error = 0.0;
  bool terms_ok = true;
  const SeriesTerm wrapped = [&](int ell) {
    const TermValue t = term(ell);
    term_error += t.error;
    terms_ok = terms_ok && t.converged;
    return t.value;
  };
  const IntegrationResult r = ratio < 1.0 ? sum_roundtrip_series(wrapped, ratio, spec)
                                          : sum_algebraic_series(wrapped, power, spec);
  SeriesOutcome out;
  out.value = r.value;
  out.error = r.error_estimate + term_error;
  out.terms = r.terms;
  const double budget =
      std::max(spec.abs_tol, std::max(spec.rel_tol, spec.series_tail_tol) * std::abs(out.value));
  out.converged = r.converged && terms_ok && out.error <= budget;
  return out;
}

QuadratureSpec inner_spec(const QuadratureSpec& spec) { return spec.tightened(1e-12, 1e-22); }

// Geometric ratio of successive roundtrip terms at temperature T; 1 flags
// the algebraic zero-temperature tail.
double roundtrip_ratio(double amplitude, double q, double T) {
  if (T == 0.0) return 1.0;
  return std::abs(amplitude) * std::exp(-4.0 * pi * T * q);
}

} // namespace

ForceResult force_imag_axis(const CavityConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  if (cfg.temperature != 0.0) {
    throw DomainError("force_imag_axis: zero-temperature representation; use the roundtrip series");
  }
  const double q = cfg.q;
  const auto integrand = [&](double u) {
    const double r = cfg.loop_reflection_imag(u / (2.0 * q));
    if (r == 0.0) return 0.0;
    // e^u - r written without cancellation near u = 0, r = 1
    return u * r / (std::expm1(u) + (1.0 - r));
  };
  const auto res = integrate_semi_infinite(integrand, 1.0, spec);
  const double scale = 1.0 / (4.0 * pi * q * q);
  ForceResult out;
  out.value = scale * res.value;
  out.error_estimate = scale * res.error_estimate;
  out.method = Method::ImagAxis;
  out.converged = res.converged;
  return out;
}

ForceResult force_roundtrip_time(const CavityConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  const LoopDelay loop = loop_delay(cfg);
  ForceResult out;
  out.method = Method::RoundtripTime;
  if (loop.amplitude == 0.0) {
    out.converged = true;
    out.roundtrips_used = 0;
    return out;
  }
  const double q = cfg.q;
  const double T = cfg.temperature;
  const QuadratureSpec inner = inner_spec(spec);
  const auto kernel = [T](double tau) { return thermal_kernel_time(tau, T); };
  const auto term = [&](int ell) {
    TermValue t = delay_average(loop, ell, q, kernel, inner);
    const double sign = -std::pow(loop.amplitude, ell);
    t.value *= sign;
    return t;
  };
  const SeriesOutcome s = sum_terms(term, roundtrip_ratio(loop.amplitude, q, T), 2.0, spec);
  out.value = s.value;
  out.error_estimate = s.error;
  out.roundtrips_used = s.terms;
  out.converged = s.converged;
  return out;
}

ForceResult force_large_distance(double r0, double q, double T, const QuadratureSpec& spec) {
  require_separation(q);
  require_temperature(T);
  spec.validate();
  if (!(std::abs(r0) <= 1.0)) throw DomainError("force_large_distance: |r0| must not exceed 1");

  ForceResult out;
  out.method = Method::LargeDistance;
  if (r0 == 0.0) {
    out.converged = true;
    return out;
  }
  if (T == 0.0) {
    const auto li = polylog_with_error({r0, 2});
    const double scale = 1.0 / (4.0 * pi * q * q);
    out.value = scale * li.value;
    out.error_estimate = scale * li.error_bound + 4.0 * std::numeric_limits<double>::epsilon() *
                                                      std::abs(out.value);
    out.converged = true;
    return out;
  }
  const auto term = [&](int ell) {
    return TermValue{-std::pow(r0, ell) * thermal_kernel_time(2.0 * ell * q, T), 0.0, true};
  };
  const SeriesOutcome s = sum_terms(term, roundtrip_ratio(r0, q, T), 2.0, spec);
  out.value = s.value;
  out.error_estimate = s.error;
  out.roundtrips_used = s.terms;
  out.converged = s.converged;
  return out;
}

ForceResult mode_sum_oracle_2d(double q) {
  require_separation(q);
  // (B_2 / 2!) * (1 / 2): the rational prefactor of pi / q^2.
  const Rational coefficient = bernoulli(2) / 2 / 2;
  ForceResult out;
  out.value = static_cast<double>(coefficient) * pi / (q * q);
  out.method = Method::ModeSumOracle;
  out.converged = true;
  return out;
}

EnergyResult casimir_energy(const CavityConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  if (cfg.temperature != 0.0) {
    throw DomainError("casimir_energy: zero-temperature quantity; use free_energy for T > 0");
  }
  const double q = cfg.q;
  const auto integrand = [&](double xi) {
    const double r = cfg.loop_reflection_imag(xi);
    if (r == 0.0) return 0.0;
    // 1 - r e^{-2 xi q} = (1 - r) - r expm1(-2 xi q)
    const double arg = (1.0 - r) - r * std::expm1(-2.0 * xi * q);
    if (!(arg > 0.0)) {
      throw SingularityError("casimir_energy: r[i xi] e^{-2 xi q} >= 1 at xi = " +
                             std::to_string(xi));
    }
    return std::log(arg);
  };
  const auto res = integrate_semi_infinite(integrand, 1.0 / (2.0 * q), spec);
  EnergyResult out;
  out.value = res.value / (2.0 * pi);
  out.error_estimate = res.error_estimate / (2.0 * pi);
  out.method = Method::ImagAxis;
  out.kind = EnergyKind::CasimirEnergy;
  out.converged = res.converged;
  return out;
}

EnergyResult casimir_energy_large_distance(double r0, double q) {
  require_separation(q);
  if (!(std::abs(r0) <= 1.0)) throw DomainError("casimir_energy_large_distance: |r0| must not exceed 1");
  const auto li = polylog_with_error({r0, 2});
  const double scale = 1.0 / (4.0 * pi * q);
  EnergyResult out;
  out.value = -scale * li.value;
  out.error_estimate =
      scale * li.error_bound + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.method = Method::LargeDistance;
  out.kind = EnergyKind::CasimirEnergy;
  out.converged = true;
  return out;
}

EnergyResult free_energy(const CavityConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  const LoopDelay loop = loop_delay(cfg);
  EnergyResult out;
  out.method = Method::RoundtripTime;
  out.kind = EnergyKind::FreeEnergy;
  if (loop.amplitude == 0.0) {
    out.converged = true;
    out.roundtrips_used = 0;
    return out;
  }
  const double q = cfg.q;
  const double T = cfg.temperature;
  const QuadratureSpec inner = inner_spec(spec);
  const auto kernel = [T](double tau) { return thermal_kernel_antiderivative(tau, T); };
  const auto term = [&](int ell) {
    TermValue t = delay_average(loop, ell, q, kernel, inner);
    const double factor = -std::pow(loop.amplitude, ell) / (2.0 * ell);
    t.value *= factor;
    t.error *= std::abs(factor);
    return t;
  };
  const SeriesOutcome s = sum_terms(term, roundtrip_ratio(loop.amplitude, q, T), 2.0, spec);
  out.value = s.value;
  out.error_estimate = s.error;
  out.roundtrips_used = s.terms;
  out.converged = s.converged;
  return out;
}

EnergyResult internal_energy_thermal(const CavityConfig& cfg, const QuadratureSpec& spec) {
  cfg.validate();
  spec.validate();
  const double T = cfg.temperature;
  if (T == 0.0) {
    EnergyResult out = free_energy(cfg, spec);
    out.kind = EnergyKind::InternalEnergy;
    return out;
  }
  QuadratureSpec tight = spec.tightened(1e-11, std::min(spec.abs_tol, 1e-18));
  tight.series_tail_tol = std::min(spec.series_tail_tol, 1e-12);

  const double h = 1e-4 * T;
  CavityConfig shifted = cfg;
  const EnergyResult center = free_energy(cfg, tight);
  shifted.temperature = T + h;
  const EnergyResult up = free_energy(shifted, tight);
  shifted.temperature = T - h;
  const EnergyResult down = free_energy(shifted, tight);

  const double derivative = (up.value - down.value) / (2.0 * h);
  EnergyResult out;
  out.value = center.value - T * derivative;
  out.error_estimate =
      center.error_estimate + T * (up.error_estimate + down.error_estimate) / (2.0 * h);
  out.method = Method::RoundtripTime;
  out.kind = EnergyKind::InternalEnergy;
  out.roundtrips_used = std::max({*center.roundtrips_used, *up.roundtrips_used,
                                  *down.roundtrips_used});
  out.converged = center.converged && up.converged && down.converged;
  return out;
}

} // namespace casimir
