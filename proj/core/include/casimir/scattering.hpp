#pragma once

// Mirror scattering models and two-mirror (Fabry-Perot) composition.
//
// A mirror is described by frequency-dependent reflection r[w] and
// transmission s[w] amplitudes. Admissible models are real in the time
// domain, causal, lossless (unitary S matrix) and transparent at high
// frequency. Force computations only need r on the positive imaginary axis,
// where it is real and bounded by 1 in modulus.

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace casimir {

using Complex = std::complex<double>;

/// Samples of r[i xi] with monotone cubic (Fritsch-Carlson) interpolation.
/// Outside the sampled range the end values are held.
class TabulatedReflectivity {
public:
  enum class Units { Absolute, QRelative };

  TabulatedReflectivity(std::vector<double> xi, std::vector<double> r, Units units);

  /// Text format: rows "xi r_value", '#' comments, optional header line
  /// "units: absolute" or "units: q-relative" (default absolute).
  /// Throws FormatError on malformed rows, non-increasing xi or |r| > 1.
  static TabulatedReflectivity parse(std::istream& in, const std::string& source = "<stream>");
  static TabulatedReflectivity load(const std::filesystem::path& path);

  /// Interpolated value at xi in the table's own units.
  [[nodiscard]] double operator()(double xi) const;

  [[nodiscard]] Units units() const noexcept { return units_; }
  [[nodiscard]] std::span<const double> xi() const noexcept { return xi_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return r_; }

private:
  std::vector<double> xi_;
  std::vector<double> r_;
  std::vector<double> slope_;
  Units units_;
};

enum class MirrorKind { Perfect, Lorentzian, Tabulated, Transparent };

/// Reflection kernel r(t) = amplitude * rate * exp(-rate t) for t >= 0, or
/// amplitude * delta(t) when `rate` is empty (instantaneous reflection).
struct DelayKernel {
  double amplitude = -1.0;
  std::optional<double> rate;
};

class MirrorModel {
public:
  /// r = -1, s = 0 at every frequency. Only usable as a limit: it is not
  /// transparent at high frequency.
  static MirrorModel perfect();

  /// Single-pole causal mirror with cutoff frequency `cutoff`:
  ///   r[w] = -W/(W - i w),  s[w] = -i w/(W - i w),
  ///   r[i xi] = -W/(W + xi),  r(t) = -W exp(-W t).
  static MirrorModel lorentzian(double cutoff);

  /// r = 0, s = 1.
  static MirrorModel transparent();

  /// Imaginary-axis samples only. For q-relative tables, `q_reference`
  /// converts the table's xi (in units of 1/q) to absolute frequencies.
  static MirrorModel tabulated(std::shared_ptr<const TabulatedReflectivity> table,
                               double q_reference = 1.0);

  [[nodiscard]] MirrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] double cutoff() const; // lorentzian only
  [[nodiscard]] bool has_real_axis() const noexcept { return kind_ != MirrorKind::Tabulated; }
  [[nodiscard]] std::optional<DelayKernel> delay_kernel() const;

  [[nodiscard]] Complex reflection(double omega) const;
  [[nodiscard]] Complex transmission(double omega) const;
  [[nodiscard]] Complex reflection_derivative(double omega) const;
  [[nodiscard]] double reflection_imag(double xi) const;
  /// sup over xi >= 0 of |r[i xi]|.
  [[nodiscard]] double reflection_bound() const;
  /// r(t) for t >= 0; CapabilityError for delta kernels and tabulated models.
  [[nodiscard]] double reflection_time(double t) const;

  [[nodiscard]] std::string describe() const;

private:
  MirrorModel(MirrorKind kind, double cutoff) : kind_(kind), cutoff_(cutoff) {}

  MirrorKind kind_;
  double cutoff_ = 0.0;
  std::shared_ptr<const TabulatedReflectivity> table_;
  double xi_scale_ = 1.0;
};

struct CavityConfig {
  MirrorModel mirror1 = MirrorModel::perfect();
  MirrorModel mirror2 = MirrorModel::perfect();
  double q = 1.0;
  double temperature = 0.0;

  /// Throws DomainError unless q > 0 and T >= 0.
  void validate() const;

  /// Loop reflectivity r = r1 r2.
  [[nodiscard]] Complex loop_reflection(double omega) const;
  [[nodiscard]] Complex loop_reflection_derivative(double omega) const;
  [[nodiscard]] double loop_reflection_imag(double xi) const;
  /// r1[0] r2[0] evaluated on the imaginary axis at xi = 0.
  [[nodiscard]] double static_loop_reflection() const;
};

/// 2x2 complex matrix, row-major.
struct Matrix2c {
  Complex m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  [[nodiscard]] Complex det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  [[nodiscard]] Matrix2c adjoint() const;
  [[nodiscard]] Matrix2c operator*(const Matrix2c& rhs) const;
  [[nodiscard]] double distance_to_identity() const;
  static Matrix2c identity();
};

/// Elementary scattering matrix of one mirror at position `position`.
Matrix2c mirror_matrix(const MirrorModel& mirror, double omega, double position);

struct CavityMatrices {
  Matrix2c S; // global scattering, Phi_out = S Phi_in
  Matrix2c R; // resonance, Phi_cav = R Phi_in
  Complex d;  // 1 - r exp(2 i w q)
};

/// S and R of the two-mirror cavity. The mirrors sit at -q/2 and +q/2.
/// Throws SingularityError when |d| < 1e-14.
CavityMatrices cavity_matrices(const CavityConfig& cfg, double omega);

/// Airy factor g = (1 - |r|^2) / |1 - r exp(2 i w q)|^2.
double airy_factor(const CavityConfig& cfg, double omega);

/// (|R11|^2 + |R12|^2 + |R21|^2 + |R22|^2) / 2, equal to the Airy factor.
double airy_factor_from_resonance(const CavityMatrices& mats);

/// q-dependent part of the total scattering phase,
///   Delta = i Log[(1 - r e^{2iwq}) / (1 - r* e^{-2iwq})] = -2 arg(1 - r e^{2iwq}).
/// For |r| < 1, Re(1 - r e^{2iwq}) > 0, so the principal argument lies on the
/// branch with Delta[0] = 0 at every frequency.
double phase_shift(const CavityConfig& cfg, double omega);

/// Phase shift along an increasing frequency sweep, unwrapped so that it is
/// continuous from the first point (needed only when |r| = 1).
std::vector<double> phase_shift_sweep(const CavityConfig& cfg, std::span<const double> omegas);

/// Pieces of d(Delta)/dw for r = rho e^{i delta}, psi = 2 w q + delta:
///   airy    = -(1 - g) 2q
///   delay   = -(1 - g) d(delta)/dw
///   modulus =  g sin(psi) d/dw log((1 + rho) / (1 - rho))
struct PhaseShiftDecomposition {
  double airy = 0.0;
  double delay = 0.0;
  double modulus = 0.0;

  [[nodiscard]] double total() const { return airy + delay + modulus; }
};

struct DecompositionOptions {
  /// Use the model's closed-form dr/dw; otherwise a centered difference.
  bool analytic_derivative = true;
  /// Centered-difference step relative to max(|w|, 1/q).
  double relative_step = 1e-5;
};

PhaseShiftDecomposition phase_shift_derivative_decomposition(const CavityConfig& cfg,
                                                             double omega,
                                                             DecompositionOptions options = {});

enum class CheckStatus { Pass, Fail, Skipped };

struct ConditionCheck {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  double worst_residual = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::string model;
  std::vector<ConditionCheck> checks;
  /// w |r[w]| does not vanish at the top of the grid (e.g. lorentzian).
  bool marginal_transparency = false;
  std::vector<std::string> warnings;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const ConditionCheck* find(const std::string& name) const;
};

struct ValidationOptions {
  double tolerance = 1e-12;
  /// Transparency requires |r[w_max]| below this; marginality is flagged
  /// when w_max |r[w_max]| is not below it.
  double transparency_threshold = 1e-2;
};

/// Checks reality, unitarity, |r[i xi]| <= 1 and high-frequency transparency
/// on `grid` (positive frequencies, also used as xi samples).
ValidationReport validate_model(const MirrorModel& model, std::span<const double> grid,
                                ValidationOptions options = {});

} // namespace casimir
