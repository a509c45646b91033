#pragma once

// Casimir pressure and energy between plane mirrors in the 3+1 dimensional
// electromagnetic vacuum (hbar = c = 1; positive pressure attracts).
//
// Reflectivities are factorized: r_p[i w, i kappa] = r_base[i kappa] for both
// polarizations, so the frequency integral at fixed normal wavevector kappa
// is elementary and every quantity reduces to a single kappa integral.

#include "casimir/quadrature.hpp"
#include "casimir/results.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

enum class Polarization { P1, P2 };

struct PlanarMirrorModel {
  MirrorModel base = MirrorModel::perfect();

  [[nodiscard]] double reflection_imag(Polarization p, double kappa) const;
};

struct PlanarCavityConfig {
  PlanarMirrorModel mirror1;
  PlanarMirrorModel mirror2;
  double q = 1.0;
  double temperature = 0.0;

  void validate() const;
  [[nodiscard]] double loop_reflection_imag(Polarization p, double kappa) const;
  /// sup over kappa of |r1 r2|.
  [[nodiscard]] double loop_reflection_bound() const;

  /// Planar cavity whose mirrors reuse the scalar models of `cfg`.
  static PlanarCavityConfig factorized(const CavityConfig& cfg);
};

/// F_p = 1/(2 pi^2) int_0^inf dkappa kappa^3 r/(e^{2 kappa q} - r) for one
/// polarization; T = 0.
ForceResult pressure_imag_axis_polarization(const PlanarCavityConfig& cfg, Polarization p,
                                            const QuadratureSpec& spec = {});

/// Sum over both polarizations. Throws DomainError for T > 0.
ForceResult pressure_imag_axis(const PlanarCavityConfig& cfg, const QuadratureSpec& spec = {});

/// 3 polylog(r0, 4) / (8 pi^2 q^4).
ForceResult pressure_large_distance(double r0, double q, const QuadratureSpec& spec = {});

/// Roundtrip expansion of pressure_imag_axis:
///   F^(l) = (1/pi^2) int_0^inf dkappa kappa^3 r^l e^{-2 l kappa q}
/// (both polarizations). For sup|r| = 1 the terms decay like 1/l^4 and the
/// partial sums are extrapolated.
ForceResult pressure_roundtrip(const PlanarCavityConfig& cfg, const QuadratureSpec& spec = {});

/// sum_l r0^l C_T(2 l q) with the thermal 4D kernel. The classical part
/// 2T/(pi tau^3) is summed in closed form, T polylog(r0, 3) / (4 pi q^3);
/// the remainder is exponentially small in T q and summed term by term.
ForceResult pressure_thermal_large_distance(double r0, double q, double T,
                                            const QuadratureSpec& spec = {});

/// Classical limit T polylog(r0, 3) / (4 pi q^3).
ForceResult pressure_high_temperature(double r0, double q, double T);

/// Euler-Maclaurin evaluation of the mode sum for perfect mirrors; only the
/// B_4 term survives. Per polarization pi^2 / (480 q^4).
ForceResult mode_sum_oracle_4d_polarization(double q);
/// Both polarizations, pi^2 / (240 q^4).
ForceResult mode_sum_oracle_4d(double q);

/// U = 1/(2 pi^2) int_0^inf dkappa kappa^2 log(1 - r e^{-2 kappa q}) (both
/// polarizations); dU/dq equals pressure_imag_axis.
EnergyResult energy_4d(const PlanarCavityConfig& cfg, const QuadratureSpec& spec = {});

/// Large-distance energy -polylog(r0, 4) / (8 pi^2 q^3), T = 0.
EnergyResult energy_4d_large_distance(double r0, double q);

/// Integrated field energy -q F / 3 of perfect mirrors, -pi^2 / (720 q^3).
/// Coincides with energy_4d only in the perfect-reflection limit.
EnergyResult integrated_field_energy_perfect(double q);

} // namespace casimir
