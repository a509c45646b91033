#pragma once

// Vacuum and thermal field-fluctuation kernels (hbar = 1).
//
// Frequency domain: c_T[w] = |w| n_T[w] with n_T[w] = coth(|w| / 2T).
// Time domain: the Fourier transforms used by the roundtrip series,
//   c(tau)   = -1 / (pi tau^2)
//   c_T(tau) = -(alpha^2 / pi) csch^2(alpha tau),  alpha = pi T.

namespace casimir {

struct SpectralKernel {
  double temperature = 0.0;

  /// Throws DomainError unless temperature >= 0 and finite.
  explicit SpectralKernel(double T = 0.0);

  [[nodiscard]] double alpha() const noexcept;
  /// n_T[w]; DomainError at w = 0 when T > 0.
  [[nodiscard]] double photon_number(double omega) const;
  /// c_T[w] = |w| n_T[w], finite (= 2T) at w = 0.
  [[nodiscard]] double spectral_density(double omega) const;
  /// c_T(tau); the vacuum kernel when T = 0.
  [[nodiscard]] double time_kernel(double tau) const;
};

double vacuum_kernel_time(double tau);
double thermal_kernel_time(double tau, double T);

double photon_number(double omega, double T);
double thermal_spectral_density(double omega, double T);

/// K_T(tau) = (alpha / pi) (coth(alpha tau) - 1), the antiderivative of
/// c_T that vanishes as tau -> inf; 1 / (pi tau) at T = 0.
double thermal_kernel_antiderivative(double tau, double T);

/// 4D large-distance kernel C(tau) = 6 / (pi^2 tau^4).
double kernel_4d_vacuum(double tau);

/// Thermal 4D kernel C(tau) = (1/pi^2) d^2/dtau^2 [alpha coth(alpha tau) / tau],
/// in closed form with x = alpha tau:
///   (2T / (pi tau^3)) [coth x + x csch^2 x + x^2 coth x csch^2 x].
/// Reduces to kernel_4d_vacuum as T -> 0 and to 2T / (pi tau^3) for T tau >> 1.
double kernel_4d_thermal(double tau, double T);

/// kernel_4d_thermal minus its classical part 2T / (pi tau^3); positive and
/// O(T x^2 e^{-2x} / tau^3) for large x. Zero-temperature value is undefined
/// (DomainError).
double kernel_4d_thermal_excess(double tau, double T);

} // namespace casimir
