#pragma once

// Numerical integration and roundtrip-series summation.
//
// All integrands seen here are smooth and non-oscillatory: forces are
// evaluated on the imaginary frequency axis or as delay-weighted time-domain
// kernels, never as real-frequency Fourier integrals.

#include <cstddef>
#include <functional>

namespace casimir {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  double series_tail_tol = 1e-10;
  int max_roundtrips = 10000;

  /// Throws DomainError unless every tolerance is positive and the caps are >= 1.
  void validate() const;

  /// Copy with both integration tolerances capped at `rel` / `abs`.
  [[nodiscard]] QuadratureSpec tightened(double rel, double abs) const;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  /// Number of series terms summed (series routines only).
  int terms = 0;
};

using Integrand = std::function<double(double)>;
using SeriesTerm = std::function<double(int)>;

/// 15-point Kronrod estimate on [a, b] with its embedded 7-point Gauss
/// difference turned into an error estimate (QUADPACK heuristic).
struct PanelEstimate {
  double value = 0.0;
  double error = 0.0;
};
PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b);

/// Globally adaptive bisection on [a, b], starting from `initial_panels`
/// equal pieces. Non-convergence is reported through the flag.
IntegrationResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                            int initial_panels = 1);

/// Integral of f over (0, inf) for integrands that decay at least like
/// exp(-u / decay_scale). Panels [0, u1], [u1, u2], ... grow geometrically in
/// units of decay_scale and are refined in a single global adaptive pool;
/// new panels are appended until the last one is negligible against the
/// tolerance. Throws DomainError if decay_scale <= 0.
IntegrationResult integrate_semi_infinite(const Integrand& f, double decay_scale,
                                          const QuadratureSpec& spec);

/// sum_{l>=1} term(l) for terms bounded by A * ratio_bound^l. Stops at the
/// first L whose geometric tail bound |term(L)| ratio / (1 - ratio) drops
/// below series_tail_tol relative to the partial sum (or abs_tol).
/// ratio_bound >= 1 and an exhausted max_roundtrips both clear `converged`.
IntegrationResult sum_roundtrip_series(const SeriesTerm& term, double ratio_bound,
                                       const QuadratureSpec& spec);

/// sum_{l>=1} term(l) for terms with an algebraic tail
///   term(l) ~ c_0 l^-p + c_1 l^-(p+1) + ...   (p > 1).
/// Partial sums at L = L0 2^m are Richardson-extrapolated in powers 1/L^(p-1),
/// 1/L^p, ...; the error estimate is the change between successive diagonal
/// entries of the tableau.
IntegrationResult sum_algebraic_series(const SeriesTerm& term, double leading_power,
                                       const QuadratureSpec& spec);

/// Centered difference (f(x+h) - f(x-h)) / 2h.
double central_difference(const std::function<double(double)>& f, double x, double h);

} // namespace casimir
