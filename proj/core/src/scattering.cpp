#include "casimir/scattering.hpp"

#include "casimir/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace casimir {

namespace {

constexpr double kSingularDenominator = 1e-14;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> m(n, 0.0);
  if (n < 2) return m;
  std::vector<double> h(n - 1);
  std::vector<double> delta(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x[k + 1] - x[k];
    delta[k] = (y[k + 1] - y[k]) / h[k];
  }
  if (n == 2) {
    m[0] = m[1] = delta[0];
    return m;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    m[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (std::signbit(s) != std::signbit(d0) || d0 == 0.0) {
      s = 0.0;
    } else if (std::signbit(d0) != std::signbit(d1) && std::abs(s) > 3.0 * std::abs(d0)) {
      s = 3.0 * d0;
    }
    return s;
  };
  m[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  m[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return m;
}

} // namespace

// ---------------------------------------------------------------------------
// TabulatedReflectivity

TabulatedReflectivity::TabulatedReflectivity(std::vector<double> xi, std::vector<double> r,
                                             Units units)
    : xi_(std::move(xi)), r_(std::move(r)), units_(units) {
  if (xi_.empty() || xi_.size() != r_.size()) {
    throw FormatError("tabulated reflectivity: need matching, non-empty xi and r columns");
  }
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    if (!std::isfinite(xi_[i]) || !std::isfinite(r_[i])) {
      throw FormatError("tabulated reflectivity: non-finite sample");
    }
    if (xi_[i] < 0.0) throw FormatError("tabulated reflectivity: xi must be non-negative");
    if (std::abs(r_[i]) > 1.0) {
      throw FormatError("tabulated reflectivity: |r| > 1 at xi = " + std::to_string(xi_[i]));
    }
    if (i > 0 && !(xi_[i] > xi_[i - 1])) {
      throw FormatError("tabulated reflectivity: xi must be strictly increasing");
    }
  }
  slope_ = pchip_slopes(xi_, r_);
}

TabulatedReflectivity TabulatedReflectivity::parse(std::istream& in, const std::string& source) {
  std::vector<double> xi;
  std::vector<double> r;
  Units units = Units::Absolute;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (text.rfind("units:", 0) == 0) {
      const std::string value = trim(text.substr(6));
      if (value == "absolute") {
        units = Units::Absolute;
      } else if (value == "q-relative") {
        units = Units::QRelative;
      } else {
        throw FormatError(source + ":" + std::to_string(line_no) + ": unknown units '" + value + "'");
      }
      continue;
    }
    std::istringstream row(text);
    double x = 0.0;
    double y = 0.0;
    std::string extra;
    if (!(row >> x >> y) || (row >> extra)) {
      throw FormatError(source + ":" + std::to_string(line_no) + ": expected two numbers");
    }
    xi.push_back(x);
    r.push_back(y);
  }
  if (xi.empty()) throw FormatError(source + ": no samples");
  return TabulatedReflectivity(std::move(xi), std::move(r), units);
}

TabulatedReflectivity TabulatedReflectivity::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open reflectivity table " + path.string());
  return parse(in, path.string());
}

double TabulatedReflectivity::operator()(double xi) const {
  if (xi <= xi_.front()) return r_.front();
  if (xi >= xi_.back()) return r_.back();
  const auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
  const auto k = static_cast<std::size_t>(it - xi_.begin()) - 1;
  const double h = xi_[k + 1] - xi_[k];
  const double t = (xi - xi_[k]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * r_[k] + h10 * h * slope_[k] + h01 * r_[k + 1] + h11 * h * slope_[k + 1];
}

// ---------------------------------------------------------------------------
// MirrorModel

MirrorModel MirrorModel::perfect() { return {MirrorKind::Perfect, 0.0}; }

MirrorModel MirrorModel::lorentzian(double cutoff) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw DomainError("lorentzian mirror: cutoff frequency must be positive");
  }
  return {MirrorKind::Lorentzian, cutoff};
}

MirrorModel MirrorModel::transparent() { return {MirrorKind::Transparent, 0.0}; }

MirrorModel MirrorModel::tabulated(std::shared_ptr<const TabulatedReflectivity> table,
                                   double q_reference) {
  if (!table) throw DomainError("tabulated mirror: null table");
  if (!(q_reference > 0.0)) throw DomainError("tabulated mirror: reference q must be positive");
  MirrorModel m{MirrorKind::Tabulated, 0.0};
  m.xi_scale_ = table->units() == TabulatedReflectivity::Units::QRelative ? q_reference : 1.0;
  m.table_ = std::move(table);
  return m;
}

double MirrorModel::cutoff() const {
  if (kind_ != MirrorKind::Lorentzian) throw CapabilityError("cutoff: not a lorentzian mirror");
  return cutoff_;
}

std::optional<DelayKernel> MirrorModel::delay_kernel() const {
  switch (kind_) {
  case MirrorKind::Perfect:
    return DelayKernel{-1.0, std::nullopt};
  case MirrorKind::Lorentzian:
    return DelayKernel{-1.0, cutoff_};
  case MirrorKind::Transparent:
    return DelayKernel{0.0, std::nullopt};
  case MirrorKind::Tabulated:
    break;
  }
  return std::nullopt;
}

Complex MirrorModel::reflection(double omega) const {
  switch (kind_) {
  case MirrorKind::Perfect:
    return {-1.0, 0.0};
  case MirrorKind::Lorentzian:
    return -cutoff_ / Complex(cutoff_, -omega);
  case MirrorKind::Transparent:
    return {0.0, 0.0};
  case MirrorKind::Tabulated:
    break;
  }
  throw CapabilityError("tabulated mirror has no real-frequency amplitudes");
}

Complex MirrorModel::transmission(double omega) const {
  switch (kind_) {
  case MirrorKind::Perfect:
    return {0.0, 0.0};
  case MirrorKind::Lorentzian:
    return Complex(0.0, -omega) / Complex(cutoff_, -omega);
  case MirrorKind::Transparent:
    return {1.0, 0.0};
  case MirrorKind::Tabulated:
    break;
  }
  throw CapabilityError("tabulated mirror has no real-frequency amplitudes");
}

Complex MirrorModel::reflection_derivative(double omega) const {
  switch (kind_) {
  case MirrorKind::Perfect:
  case MirrorKind::Transparent:
    return {0.0, 0.0};
  case MirrorKind::Lorentzian: {
    const Complex den(cutoff_, -omega);
    return Complex(0.0, -cutoff_) / (den * den);
  }
  case MirrorKind::Tabulated:
    break;
  }
  throw CapabilityError("tabulated mirror has no real-frequency amplitudes");
}

double MirrorModel::reflection_imag(double xi) const {
  if (xi < 0.0) throw DomainError("reflection_imag: xi must be non-negative");
  switch (kind_) {
  case MirrorKind::Perfect:
    return -1.0;
  case MirrorKind::Lorentzian:
    return -cutoff_ / (cutoff_ + xi);
  case MirrorKind::Transparent:
    return 0.0;
  case MirrorKind::Tabulated:
    return (*table_)(xi * xi_scale_);
  }
  return 0.0;
}

double MirrorModel::reflection_bound() const {
  switch (kind_) {
  case MirrorKind::Perfect:
  case MirrorKind::Lorentzian:
    return 1.0;
  case MirrorKind::Transparent:
    return 0.0;
  case MirrorKind::Tabulated:
    break;
  }
  // The monotone interpolant never leaves the range of the samples.
  double bound = 0.0;
  for (double r : table_->values()) bound = std::max(bound, std::abs(r));
  return bound;
}

double MirrorModel::reflection_time(double t) const {
  if (t < 0.0) return 0.0;
  if (kind_ == MirrorKind::Lorentzian) return -cutoff_ * std::exp(-cutoff_ * t);
  if (kind_ == MirrorKind::Transparent) return 0.0;
  throw CapabilityError(describe() + " has no regular time-domain reflection kernel");
}

std::string MirrorModel::describe() const {
  switch (kind_) {
  case MirrorKind::Perfect:
    return "perfect";
  case MirrorKind::Lorentzian: {
    std::ostringstream os;
    os << "lorentzian(" << cutoff_ << ")";
    return os.str();
  }
  case MirrorKind::Transparent:
    return "transparent";
  case MirrorKind::Tabulated:
    return "tabulated";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// CavityConfig

void CavityConfig::validate() const {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("cavity: separation q must be positive");
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("cavity: temperature must be non-negative");
  }
}

Complex CavityConfig::loop_reflection(double omega) const {
  return mirror1.reflection(omega) * mirror2.reflection(omega);
}

Complex CavityConfig::loop_reflection_derivative(double omega) const {
  return mirror1.reflection_derivative(omega) * mirror2.reflection(omega) +
         mirror1.reflection(omega) * mirror2.reflection_derivative(omega);
}

double CavityConfig::loop_reflection_imag(double xi) const {
  return mirror1.reflection_imag(xi) * mirror2.reflection_imag(xi);
}

double CavityConfig::static_loop_reflection() const { return loop_reflection_imag(0.0); }

// ---------------------------------------------------------------------------
// Matrices

Matrix2c Matrix2c::adjoint() const {
  Matrix2c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = std::conj(m[j][i]);
  return out;
}

Matrix2c Matrix2c::operator*(const Matrix2c& rhs) const {
  Matrix2c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
  return out;
}

double Matrix2c::distance_to_identity() const {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(m[i][j] - (i == j ? 1.0 : 0.0)));
  return worst;
}

Matrix2c Matrix2c::identity() {
  Matrix2c out;
  out.m[0][0] = out.m[1][1] = 1.0;
  return out;
}

Matrix2c mirror_matrix(const MirrorModel& mirror, double omega, double position) {
  const Complex r = mirror.reflection(omega);
  const Complex s = mirror.transmission(omega);
  const Complex phase = std::polar(1.0, 2.0 * omega * position);
  Matrix2c out;
  out.m[0][0] = s;
  out.m[0][1] = r / phase;
  out.m[1][0] = r * phase;
  out.m[1][1] = s;
  return out;
}

CavityMatrices cavity_matrices(const CavityConfig& cfg, double omega) {
  cfg.validate();
  const Complex r1 = cfg.mirror1.reflection(omega);
  const Complex s1 = cfg.mirror1.transmission(omega);
  const Complex r2 = cfg.mirror2.reflection(omega);
  const Complex s2 = cfg.mirror2.transmission(omega);
  const double q = cfg.q;
  const double q1 = -0.5 * q;
  const double q2 = 0.5 * q;

  const Complex d = 1.0 - r1 * r2 * std::polar(1.0, 2.0 * omega * q);
  if (std::abs(d) < kSingularDenominator) {
    throw SingularityError("cavity_matrices: resonance pole (|d| < 1e-14)");
  }
  const Complex e_minus = std::polar(1.0, -omega * q);
  const Complex e_plus = std::polar(1.0, omega * q);

  CavityMatrices out;
  out.d = d;
  out.S.m[0][0] = s1 * s2 / d;
  out.S.m[1][1] = out.S.m[0][0];
  out.S.m[0][1] = r2 * e_minus + s2 * s2 * r1 * e_plus / d;
  out.S.m[1][0] = r1 * e_minus + s1 * s1 * r2 * e_plus / d;

  out.R.m[0][0] = s1 / d;
  out.R.m[0][1] = s2 * r1 * std::polar(1.0, -2.0 * omega * q1) / d;
  out.R.m[1][0] = s1 * r2 * std::polar(1.0, 2.0 * omega * q2) / d;
  out.R.m[1][1] = s2 / d;
  return out;
}

double airy_factor(const CavityConfig& cfg, double omega) {
  cfg.validate();
  const Complex r = cfg.loop_reflection(omega);
  const Complex d = 1.0 - r * std::polar(1.0, 2.0 * omega * cfg.q);
  if (std::abs(d) < kSingularDenominator) {
    throw SingularityError("airy_factor: resonance pole with |r| = 1");
  }
  return (1.0 - std::norm(r)) / std::norm(d);
}

double airy_factor_from_resonance(const CavityMatrices& mats) {
  const auto& R = mats.R.m;
  return 0.5 * (std::norm(R[0][0]) + std::norm(R[0][1]) + std::norm(R[1][0]) + std::norm(R[1][1]));
}

double phase_shift(const CavityConfig& cfg, double omega) {
  cfg.validate();
  const Complex z = cfg.loop_reflection(omega) * std::polar(1.0, 2.0 * omega * cfg.q);
  const Complex w = 1.0 - z;
  if (std::abs(w) < kSingularDenominator) {
    throw SingularityError("phase_shift: branch point |r e^{2iwq}| = 1 on resonance");
  }
  return -2.0 * std::atan2(w.imag(), w.real());
}

std::vector<double> phase_shift_sweep(const CavityConfig& cfg, std::span<const double> omegas) {
  std::vector<double> out;
  out.reserve(omegas.size());
  constexpr double two_pi = 6.283185307179586476925286766559;
  double offset = 0.0;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (i > 0 && !(omegas[i] > omegas[i - 1])) {
      throw DomainError("phase_shift_sweep: frequencies must increase");
    }
    const double raw = phase_shift(cfg, omegas[i]);
    if (!out.empty()) {
      const double jump = raw + offset - out.back();
      if (jump > 0.5 * two_pi) offset -= two_pi;
      if (jump < -0.5 * two_pi) offset += two_pi;
    }
    out.push_back(raw + offset);
  }
  return out;
}

PhaseShiftDecomposition phase_shift_derivative_decomposition(const CavityConfig& cfg,
                                                             double omega,
                                                             DecompositionOptions options) {
  cfg.validate();
  const double q = cfg.q;
  const Complex r = cfg.loop_reflection(omega);
  Complex dr;
  if (options.analytic_derivative) {
    dr = cfg.loop_reflection_derivative(omega);
  } else {
    const double h = options.relative_step * std::max(std::abs(omega), 1.0 / q);
    dr = (cfg.loop_reflection(omega + h) - cfg.loop_reflection(omega - h)) / (2.0 * h);
  }

  const Complex z = r * std::polar(1.0, 2.0 * omega * q);
  const double denom = std::norm(1.0 - z);
  if (std::sqrt(denom) < kSingularDenominator) {
    throw SingularityError("phase_shift_derivative_decomposition: resonance pole");
  }
  const double rho = std::abs(r);
  const double g = (1.0 - rho * rho) / denom;

  PhaseShiftDecomposition out;
  out.airy = -(1.0 - g) * 2.0 * q;
  if (rho == 0.0) {
    // rho -> 0 limit: only 2 Re[-i r' e^{2iwq}] survives.
    out.modulus = 2.0 * (Complex(0.0, -1.0) * dr * std::polar(1.0, 2.0 * omega * q)).real();
    return out;
  }
  // r' = (rho' + i rho delta') e^{i delta}
  const Complex ratio = dr * std::conj(r) / (rho * rho);
  const double d_rho = ratio.real() * rho;
  const double d_delta = ratio.imag();
  const double psi = 2.0 * omega * q + std::arg(r);
  out.delay = -(1.0 - g) * d_delta;
  // d/dw log((1 + rho)/(1 - rho)) = 2 rho' / (1 - rho^2) and g / (1 - rho^2) = 1/|1 - z|^2
  out.modulus = d_rho == 0.0 ? 0.0 : std::sin(psi) * 2.0 * d_rho / denom;
  return out;
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const ConditionCheck& c) { return c.status == CheckStatus::Fail; });
}

const ConditionCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate_model(const MirrorModel& model, std::span<const double> grid,
                                ValidationOptions options) {
  if (grid.empty()) throw DomainError("validate_model: empty frequency grid");
  for (double w : grid) {
    if (!(w > 0.0)) throw DomainError("validate_model: grid frequencies must be positive");
  }

  ValidationReport report;
  report.model = model.describe();

  ConditionCheck reality{"reality", CheckStatus::Skipped, 0.0, ""};
  ConditionCheck unitarity{"unitarity", CheckStatus::Skipped, 0.0, ""};
  ConditionCheck transparency{"transparency", CheckStatus::Skipped, 0.0, ""};

  if (model.has_real_axis()) {
    double worst_reality = 0.0;
    double worst_unitarity = 0.0;
    for (double w : grid) {
      const Complex r = model.reflection(w);
      const Complex s = model.transmission(w);
      worst_reality = std::max({worst_reality, std::abs(model.reflection(-w) - std::conj(r)),
                                std::abs(model.transmission(-w) - std::conj(s))});
      worst_unitarity = std::max({worst_unitarity, std::abs(std::norm(s) + std::norm(r) - 1.0),
                                  std::abs(s * std::conj(r) + r * std::conj(s))});
    }
    reality.worst_residual = worst_reality;
    reality.status = worst_reality <= options.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
    unitarity.worst_residual = worst_unitarity;
    unitarity.status = worst_unitarity <= options.tolerance ? CheckStatus::Pass : CheckStatus::Fail;

    const double w_max = *std::max_element(grid.begin(), grid.end());
    const double r_top = std::abs(model.reflection(w_max));
    transparency.worst_residual = r_top;
    transparency.status =
        r_top <= options.transparency_threshold ? CheckStatus::Pass : CheckStatus::Fail;
    if (transparency.status == CheckStatus::Fail) {
      transparency.detail = "not transparent at high frequency";
    } else if (w_max * r_top >= options.transparency_threshold) {
      report.marginal_transparency = true;
      transparency.detail = "w|r[w]| does not vanish at high frequency";
      report.warnings.push_back(
          "marginal transparency: w|r[w]| tends to a nonzero constant; real-frequency force "
          "integrals converge only conditionally, imaginary-axis and time-domain forms are used");
    }
  } else {
    reality.detail = unitarity.detail = transparency.detail = "no real-frequency amplitudes";
  }

  ConditionCheck bound{"imaginary-axis bound", CheckStatus::Pass, 0.0, ""};
  for (double xi : grid) {
    const double r = model.reflection_imag(xi);
    if (!std::isfinite(r)) {
      bound.status = CheckStatus::Fail;
      bound.detail = "non-finite r[i xi]";
      break;
    }
    bound.worst_residual = std::max(bound.worst_residual, std::abs(r) - 1.0);
  }
  if (bound.worst_residual > options.tolerance) bound.status = CheckStatus::Fail;
  bound.worst_residual = std::max(bound.worst_residual, 0.0);

  report.checks = {reality, unitarity, bound, transparency};
  return report;
}

} // namespace casimir
