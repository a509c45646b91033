#include "casimir/spectral.hpp"

#include "casimir/errors.hpp"

#include <cmath>
#include <numbers>

namespace casimir {

namespace {

using std::numbers::pi;

constexpr double kAsymptoticSwitch = 20.0;

void require_positive_time(double tau, const char* who) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError(std::string(who) + ": tau must be positive and finite");
  }
}

void require_temperature(double T, const char* who) {
  if (!(T >= 0.0) || !std::isfinite(T)) {
    throw DomainError(std::string(who) + ": temperature must be non-negative");
  }
}

// csch^2 x = 4 e^{-2x} / (1 - e^{-2x})^2 without overflow or cancellation.
double csch_squared(double x) {
  const double e = std::exp(-2.0 * x);
  const double d = -std::expm1(-2.0 * x);
  return 4.0 * e / (d * d);
}

// coth x - 1 = 2 / (e^{2x} - 1)
double coth_minus_one(double x) { return 2.0 / std::expm1(2.0 * x); }

} // namespace

SpectralKernel::SpectralKernel(double T) : temperature(T) {
  require_temperature(T, "SpectralKernel");
}

double SpectralKernel::alpha() const noexcept { return pi * temperature; }

double SpectralKernel::photon_number(double omega) const {
  return casimir::photon_number(omega, temperature);
}

double SpectralKernel::spectral_density(double omega) const {
  return thermal_spectral_density(omega, temperature);
}

double SpectralKernel::time_kernel(double tau) const {
  return thermal_kernel_time(tau, temperature);
}

double vacuum_kernel_time(double tau) {
  require_positive_time(tau, "vacuum_kernel_time");
  return -1.0 / (pi * tau * tau);
}

double thermal_kernel_time(double tau, double T) {
  require_positive_time(tau, "thermal_kernel_time");
  require_temperature(T, "thermal_kernel_time");
  if (T == 0.0) return vacuum_kernel_time(tau);
  const double alpha = pi * T;
  const double x = alpha * tau;
  if (x > kAsymptoticSwitch) return -4.0 * pi * T * T * std::exp(-2.0 * x);
  return -(alpha * alpha / pi) * csch_squared(x);
}

double photon_number(double omega, double T) {
  require_temperature(T, "photon_number");
  if (T == 0.0) return 1.0;
  if (omega == 0.0) throw DomainError("photon_number: diverges at w = 0 for T > 0");
  const double x = std::abs(omega) / (2.0 * T);
  return 1.0 + coth_minus_one(x);
}

double thermal_spectral_density(double omega, double T) {
  require_temperature(T, "thermal_spectral_density");
  const double w = std::abs(omega);
  if (T == 0.0) return w;
  if (w == 0.0) return 2.0 * T;
  const double x = w / (2.0 * T);
  // x coth x -> 1 smoothly; expm1 keeps small x accurate.
  return 2.0 * T * x * (1.0 + coth_minus_one(x));
}

double thermal_kernel_antiderivative(double tau, double T) {
  require_positive_time(tau, "thermal_kernel_antiderivative");
  require_temperature(T, "thermal_kernel_antiderivative");
  if (T == 0.0) return 1.0 / (pi * tau);
  const double alpha = pi * T;
  return (alpha / pi) * coth_minus_one(alpha * tau);
}

double kernel_4d_vacuum(double tau) {
  require_positive_time(tau, "kernel_4d_vacuum");
  const double t2 = tau * tau;
  return 6.0 / (pi * pi * t2 * t2);
}

double kernel_4d_thermal(double tau, double T) {
  require_positive_time(tau, "kernel_4d_thermal");
  require_temperature(T, "kernel_4d_thermal");
  if (T == 0.0) return kernel_4d_vacuum(tau);
  const double x = pi * T * tau;
  const double coth = 1.0 + coth_minus_one(x);
  const double c2 = csch_squared(x);
  return 2.0 * T / (pi * tau * tau * tau) * (coth + x * c2 + x * x * coth * c2);
}

double kernel_4d_thermal_excess(double tau, double T) {
  require_positive_time(tau, "kernel_4d_thermal_excess");
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw DomainError("kernel_4d_thermal_excess: temperature must be positive");
  }
  const double x = pi * T * tau;
  const double coth = 1.0 + coth_minus_one(x);
  const double c2 = csch_squared(x);
  return 2.0 * T / (pi * tau * tau * tau) * (coth_minus_one(x) + x * c2 + x * x * coth * c2);
}

} // namespace casimir
