#include "casimir/quadrature.hpp"

#include "casimir/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace casimir {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are
// the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

bool by_error(const Segment& lhs, const Segment& rhs) { return lhs.error < rhs.error; }

class AdaptivePool {
public:
  explicit AdaptivePool(const Integrand& f) : f_(f) {}

  void add(double a, double b) {
    const auto est = gauss_kronrod_15(f_, a, b);
    evaluations_ += 15;
    push({a, b, est.value, est.error});
  }

  // Bisect the worst segment until the global error meets the tolerance.
  // Returns false when the subdivision budget runs out first.
  bool refine(const QuadratureSpec& spec) {
    for (;;) {
      const double tol = tolerance(spec);
      if (error() <= tol) return true;
      if (subdivisions_ >= spec.max_subdivisions) return false;
      std::pop_heap(heap_.begin(), heap_.end(), by_error);
      const Segment worst = heap_.back();
      heap_.pop_back();
      value_ -= worst.value;
      error_ -= worst.error;
      const double mid = 0.5 * (worst.a + worst.b);
      if (!(mid > worst.a && mid < worst.b)) {
        // Segment narrower than the floating-point grid; keep it and give up.
        push(worst);
        return false;
      }
      add(worst.a, mid);
      add(mid, worst.b);
      ++subdivisions_;
      resum();
    }
  }

  [[nodiscard]] double value() const { return value_; }
  [[nodiscard]] double error() const { return error_; }
  [[nodiscard]] std::size_t evaluations() const { return evaluations_; }

  [[nodiscard]] double tolerance(const QuadratureSpec& spec) const {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(value_));
  }

private:
  void push(const Segment& s) {
    heap_.push_back(s);
    std::push_heap(heap_.begin(), heap_.end(), by_error);
    value_ += s.value;
    error_ += s.error;
  }

  // Running sums drift after many updates; recompute them outright.
  void resum() {
    if (subdivisions_ % 64 != 0) return;
    value_ = 0.0;
    error_ = 0.0;
    for (const auto& s : heap_) {
      value_ += s.value;
      error_ += s.error;
    }
  }

  const Integrand& f_;
  std::vector<Segment> heap_;
  double value_ = 0.0;
  double error_ = 0.0;
  std::size_t evaluations_ = 0;
  int subdivisions_ = 0;
};

} // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(series_tail_tol > 0.0)) {
    throw DomainError("QuadratureSpec: tolerances must be positive");
  }
  if (max_subdivisions < 1 || max_roundtrips < 1) {
    throw DomainError("QuadratureSpec: max_subdivisions and max_roundtrips must be >= 1");
  }
}

QuadratureSpec QuadratureSpec::tightened(double rel, double abs) const {
  QuadratureSpec out = *this;
  out.rel_tol = std::min(rel_tol, rel);
  out.abs_tol = std::min(abs_tol, abs);
  return out;
}

PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_center = f(center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  double abs_sum = std::abs(kronrod);

  std::array<double, 7> left{};
  std::array<double, 7> right{};
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    left[i] = f(center - dx);
    right[i] = f(center + dx);
    const double pair = left[i] + right[i];
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(left[i]) + std::abs(right[i]));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }

  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(f_center - mean);
  for (std::size_t i = 0; i < 7; ++i) {
    asc += kKronrodWeights[i] * (std::abs(left[i] - mean) + std::abs(right[i] - mean));
  }

  const double result = kronrod * half;
  const double res_abs = abs_sum * std::abs(half);
  const double res_asc = asc * std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * res_abs, err);
  if (!std::isfinite(result)) err = std::numeric_limits<double>::infinity();
  return {result, err};
}

IntegrationResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                            int initial_panels) {
  spec.validate();
  if (a == b) return {0.0, 0.0, 0, true, 0};
  initial_panels = std::max(1, initial_panels);
  AdaptivePool pool(f);
  const double width = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + width * i;
    const double hi = (i + 1 == initial_panels) ? b : a + width * (i + 1);
    pool.add(lo, hi);
  }
  const bool ok = pool.refine(spec);
  const bool finite = std::isfinite(pool.value()) && std::isfinite(pool.error());
  return {pool.value(), pool.error(), pool.evaluations(), ok && finite, 0};
}

IntegrationResult integrate_semi_infinite(const Integrand& f, double decay_scale,
                                          const QuadratureSpec& spec) {
  spec.validate();
  if (!(decay_scale > 0.0)) throw DomainError("integrate_semi_infinite: decay_scale must be positive");

  AdaptivePool pool(f);
  // [0,1], [1,2], [2,4], [4,8] in units of decay_scale, then widths x1.5.
  double edge = 0.0;
  double width = decay_scale;
  for (int i = 0; i < 4; ++i) {
    pool.add(edge, edge + width);
    edge += width;
    if (i > 0) width *= 2.0;
  }
  width = 6.0 * decay_scale;

  constexpr int kMaxPanels = 400;
  bool ok = true;
  for (int panel = 4; panel < kMaxPanels; ++panel) {
    ok = pool.refine(spec);
    // Probe the next panel; stop once it is negligible.
    const auto probe = gauss_kronrod_15(f, edge, edge + width);
    const double tol = pool.tolerance(spec);
    if (!std::isfinite(probe.value)) {
      ok = false;
      break;
    }
    if (std::abs(probe.value) + probe.error <= 1e-3 * tol) {
      break;
    }
    pool.add(edge, edge + width);
    edge += width;
    width *= 1.5;
    if (panel + 1 == kMaxPanels) ok = false;
  }
  ok = pool.refine(spec) && ok;
  const bool finite = std::isfinite(pool.value()) && std::isfinite(pool.error());
  return {pool.value(), pool.error(), pool.evaluations() + 15, ok && finite, 0};
}

IntegrationResult sum_roundtrip_series(const SeriesTerm& term, double ratio_bound,
                                       const QuadratureSpec& spec) {
  spec.validate();
  IntegrationResult out;
  if (!(ratio_bound >= 0.0 && ratio_bound < 1.0)) {
    out.error_estimate = std::numeric_limits<double>::infinity();
    out.converged = false;
    return out;
  }
  double sum = 0.0;
  for (int ell = 1; ell <= spec.max_roundtrips; ++ell) {
    const double t = term(ell);
    ++out.evaluations;
    sum += t;
    const double tail = std::abs(t) * ratio_bound / (1.0 - ratio_bound);
    out.terms = ell;
    if (!std::isfinite(sum)) break;
    if (tail <= std::max(spec.abs_tol, spec.series_tail_tol * std::abs(sum))) {
      out.value = sum;
      out.error_estimate = tail;
      out.converged = true;
      return out;
    }
    out.error_estimate = tail;
  }
  out.value = sum;
  out.converged = false;
  return out;
}

IntegrationResult sum_algebraic_series(const SeriesTerm& term, double leading_power,
                                       const QuadratureSpec& spec) {
  spec.validate();
  if (!(leading_power > 1.0)) throw DomainError("sum_algebraic_series: leading power must exceed 1");

  constexpr int kFirstLevel = 8;
  IntegrationResult out;
  std::vector<std::vector<double>> tableau;
  double partial = 0.0;
  int summed = 0;
  double previous_diagonal = std::numeric_limits<double>::quiet_NaN();

  for (int level_end = kFirstLevel; level_end <= spec.max_roundtrips; level_end *= 2) {
    for (int ell = summed + 1; ell <= level_end; ++ell) {
      partial += term(ell);
      ++out.evaluations;
    }
    summed = level_end;
    out.terms = summed;

    std::vector<double> row{partial};
    const std::size_t m = tableau.size();
    for (std::size_t k = 0; k < m; ++k) {
      const double factor = std::pow(2.0, leading_power - 1.0 + static_cast<double>(k));
      row.push_back((factor * row[k] - tableau[m - 1][k]) / (factor - 1.0));
    }
    tableau.push_back(row);
    const double diagonal = row.back();

    if (!std::isfinite(diagonal)) break;
    if (m >= 2) {
      const double change = std::abs(diagonal - previous_diagonal);
      out.value = diagonal;
      out.error_estimate = change;
      if (change <= std::max(spec.abs_tol, spec.series_tail_tol * std::abs(diagonal))) {
        out.converged = true;
        return out;
      }
    }
    previous_diagonal = diagonal;
    if (level_end > spec.max_roundtrips / 2) break;
  }
  if (tableau.empty()) {
    out.error_estimate = std::numeric_limits<double>::infinity();
  } else {
    out.value = tableau.back().back();
    if (tableau.size() < 3) out.error_estimate = std::numeric_limits<double>::infinity();
  }
  out.converged = false;
  return out;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
  if (!(h > 0.0)) throw DomainError("central_difference: step must be positive");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace casimir
