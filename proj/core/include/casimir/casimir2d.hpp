#pragma once

// Casimir force, energy and free energy between two pointlike mirrors in a
// two-dimensional (1+1) scalar vacuum. hbar = c = k_B = 1; F > 0 attracts.

#include "casimir/quadrature.hpp"
#include "casimir/results.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

/// F = 1/(4 pi q^2) int_0^inf du u r[iu/2q] / (e^u - r[iu/2q]), T = 0.
/// Works for every model with imaginary-axis reflectivities, including
/// |r[0]| = 1. Throws DomainError for T > 0.
ForceResult force_imag_axis(const CavityConfig& cfg, const QuadratureSpec& spec = {});

/// Sum over roundtrips l of
///   F^(l) = -(r1 r2)^l-amplitude * int ds h_l(s) c_T(2 l q + s),
/// where h_l is the density of the total reflection delay accumulated in l
/// roundtrips (Erlang or hypoexponential for lorentzian mirrors, a point mass
/// at 0 for perfect ones). T = 0 terms fall off like 1/l^2 and the partial
/// sums are Richardson-extrapolated; T > 0 terms fall off like e^{-4 pi T q l}.
/// Throws CapabilityError for models without a time-domain kernel.
ForceResult force_roundtrip_time(const CavityConfig& cfg, const QuadratureSpec& spec = {});

/// Large-distance force for a frequency-independent loop reflectivity r0:
///   T = 0:  polylog(r0, 2) / (4 pi q^2)
///   T > 0:  -sum_l r0^l c_T(2 l q)
ForceResult force_large_distance(double r0, double q, double T, const QuadratureSpec& spec = {});

/// Euler-Maclaurin evaluation for perfect mirrors: only the B_2 term
/// survives, F = (B_2 / 2!) (pi^2 / q^2) / (2 pi) = pi / (24 q^2).
ForceResult mode_sum_oracle_2d(double q);

/// U = 1/(2 pi) int_0^inf dxi log(1 - r[i xi] e^{-2 xi q}), with dU/dq = F.
/// Throws SingularityError if r e^{-2 xi q} >= 1 at a sampled point and
/// DomainError for T > 0.
EnergyResult casimir_energy(const CavityConfig& cfg, const QuadratureSpec& spec = {});

/// Large-distance energy for a frequency-independent loop reflectivity r0,
/// U = -polylog(r0, 2) / (4 pi q), T = 0.
EnergyResult casimir_energy_large_distance(double r0, double q);

/// Free energy normalized to vanish at infinite separation:
///   F_free = -sum_l (amplitude^l / 2l) int ds h_l(s) K_T(2 l q + s),
/// K_T(tau) = T (coth(pi T tau) - 1), K_0(tau) = 1/(pi tau).
/// dF_free/dq equals force_roundtrip_time; at T = 0 it equals casimir_energy.
EnergyResult free_energy(const CavityConfig& cfg, const QuadratureSpec& spec = {});

/// U = F_free - T dF_free/dT, the T-derivative by centered difference with
/// relative step 1e-4. At T = 0 the entropy term vanishes and U = F_free.
EnergyResult internal_energy_thermal(const CavityConfig& cfg, const QuadratureSpec& spec = {});

} // namespace casimir
