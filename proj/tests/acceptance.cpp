// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "casimir/casimir2d.hpp"
#include "casimir/casimir4d.hpp"
#include "casimir/scattering.hpp"

#include "frozen_values.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace casimir;
using std::numbers::pi;

namespace {

struct Check {
  bool ok = true;
  double worst = 0.0; // largest observed relative deviation

  void rel(double got, double want, double tol) {
    const double d = rel_diff(got, want);
    worst = std::max(worst, d);
    if (!(d <= tol)) ok = false;
  }
  void abs(double got, double want, double tol) {
    const double d = std::abs(got - want);
    worst = std::max(worst, d);
    if (!(d <= tol)) ok = false;
  }
  void that(bool condition) {
    if (!condition) ok = false;
  }
};

CavityConfig perfect(double q = 1.0, double T = 0.0) {
  return {MirrorModel::perfect(), MirrorModel::perfect(), q, T};
}

CavityConfig lorentz(double w1, double w2, double q = 1.0) {
  return {MirrorModel::lorentzian(w1), MirrorModel::lorentzian(w2), q, 0.0};
}

MirrorModel constant_table(double r) {
  auto table = std::make_shared<const TabulatedReflectivity>(
      std::vector<double>{0.0, 1.0}, std::vector<double>{r, r}, TabulatedReflectivity::Units::Absolute);
  return MirrorModel::tabulated(table);
}

QuadratureSpec tight() {
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-18;
  spec.series_tail_tol = 1e-13;
  return spec;
}

Check criterion1() {
  Check c;
  const double f1 = force_imag_axis(perfect()).value;
  c.rel(f1, pi / 24.0, 1e-8);
  for (double q : {0.5, 2.0}) c.rel(force_imag_axis(perfect(q)).value * q * q, f1, 1e-10);
  return c;
}

Check criterion2() {
  Check c;
  const double exact = pi * pi / 240.0;
  c.rel(pressure_imag_axis(PlanarCavityConfig::factorized(perfect())).value, exact, 1e-8);
  c.that(mode_sum_oracle_4d(1.0).value == exact);
  return c;
}

Check criterion3() {
  Check c;
  const double zeta2 = pi * pi / 6.0;
  const double zeta4 = std::pow(pi, 4) / 90.0;
  for (double q : {1.0, 2.5}) {
    c.rel(force_large_distance(1.0, q, 0.0).value, zeta2 / (4.0 * pi * q * q), 1e-10);
    c.rel(pressure_large_distance(1.0, q).value, 3.0 * zeta4 / (8.0 * pi * pi * std::pow(q, 4)), 1e-10);
  }
  return c;
}

Check criterion4() {
  Check c;
  for (double wq : {0.1, 1.0, 10.0}) {
    const auto cfg = lorentz(wq, wq);
    c.rel(force_roundtrip_time(cfg).value, force_imag_axis(cfg).value, 1e-6);
    const auto planar = PlanarCavityConfig::factorized(cfg);
    c.rel(pressure_roundtrip(planar).value, pressure_imag_axis(planar).value, 1e-8);
  }
  return c;
}

Check criterion5() {
  Check c;
  const double h = 1e-4;
  const std::vector<std::function<CavityConfig(double)>> models{
      [](double q) { return perfect(q); }, [](double q) { return lorentz(1.0, 1.0, q); }};
  for (const auto& make : models) {
    const double dU2 =
        (casimir_energy(make(1.0 + h), tight()).value - casimir_energy(make(1.0 - h), tight()).value) / (2 * h);
    c.rel(dU2, force_imag_axis(make(1.0)).value, 1e-6);
    auto planar = [&](double q) { return PlanarCavityConfig::factorized(make(q)); };
    const double dU4 =
        (energy_4d(planar(1.0 + h), tight()).value - energy_4d(planar(1.0 - h), tight()).value) / (2 * h);
    c.rel(dU4, pressure_imag_axis(planar(1.0)).value, 1e-6);
  }
  return c;
}

Check criterion6() {
  Check c;
  const auto planar = PlanarCavityConfig::factorized(perfect());
  const double u = energy_4d(planar).value;
  c.rel(u, -pi * pi / 720.0, 1e-8);
  c.rel(u, -pressure_imag_axis(planar).value / 3.0, 1e-8);
  return c;
}

Check criterion7() {
  Check c;
  c.rel(pressure_high_temperature(1.0, 1.0, 1.0).value, frozen::zeta3 / (4.0 * pi), 1e-10);
  c.rel(pressure_thermal_large_distance(1.0, 1.0, 10.0).value, pressure_high_temperature(1.0, 1.0, 10.0).value,
        1e-6);
  return c;
}

Check criterion8() {
  Check c;
  const double T = 5.0;
  const double hot = force_roundtrip_time(perfect(1.0, T)).value;
  const double cold = force_imag_axis(perfect()).value;
  c.that(hot > 0.0 && hot < cold);
  const double ratio = hot / (4.0 * pi * T * T * std::exp(-4.0 * pi * T));
  c.worst = std::abs(std::log(ratio));
  c.that(ratio >= 0.5 && ratio <= 2.0);
  return c;
}

Check criterion9() {
  Check c;
  std::mt19937 gen(20261016);
  std::uniform_real_distribution<double> log_rate(-1.0, 1.0);
  std::uniform_real_distribution<double> sep(0.2, 5.0);
  std::vector<double> grid(100);
  for (int i = 0; i < 100; ++i) grid[static_cast<std::size_t>(i)] = 1e-2 * std::pow(1e4, i / 99.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cfg = lorentz(std::pow(10.0, log_rate(gen)), std::pow(10.0, log_rate(gen)), sep(gen));
    for (double w : grid) {
      const auto m = cavity_matrices(cfg, w);
      c.abs((m.S * m.S.adjoint()).distance_to_identity(), 0.0, 1e-10);
      c.abs(airy_factor(cfg, w), airy_factor_from_resonance(m), 1e-12);
      const Complex expected = mirror_matrix(cfg.mirror1, w, -0.5 * cfg.q).det() *
                               mirror_matrix(cfg.mirror2, w, 0.5 * cfg.q).det() *
                               std::polar(1.0, phase_shift(cfg, w));
      c.abs(std::abs(m.S.det() - expected), 0.0, 1e-10);
      const double hstep = 1e-5 * w;
      const double numeric = (phase_shift(cfg, w + hstep) - phase_shift(cfg, w - hstep)) / (2 * hstep);
      const double scale = std::max(1.0, std::abs(numeric));
      c.abs(phase_shift_derivative_decomposition(cfg, w).total() / scale, numeric / scale, 1e-6);
    }
  }
  return c;
}

Check criterion10() {
  Check c;
  // sign law
  for (double w : {0.1, 1.0, 10.0}) c.that(force_imag_axis(lorentz(w, 3 * w)).value > 0.0);
  for (double r0 : {-0.9, -0.5, -0.1}) {
    const CavityConfig cfg{MirrorModel::perfect(), constant_table(-r0), 1.0, 0.0};
    c.that(force_imag_axis(cfg).value < 0.0);
    c.that(force_large_distance(r0, 1.0, 0.0).value < 0.0);
    c.that(pressure_large_distance(r0, 1.0).value < 0.0);
  }
  // q scaling at fixed W q
  const double f1 = force_imag_axis(lorentz(2.0, 2.0, 1.0)).value;
  for (double q : {0.25, 4.0}) c.rel(force_imag_axis(lorentz(2.0 / q, 2.0 / q, q)).value * q * q, f1, 1e-10);
  // monotone saturation toward pi/24
  double previous = 0.0;
  for (double wq : {1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3}) {
    const double f = force_imag_axis(lorentz(wq, wq)).value;
    c.that(f > previous && f < pi / 24.0);
    previous = f;
  }
  c.that((pi / 24.0 - previous) / (pi / 24.0) < 0.01);
  return c;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"2D perfect-mirror force pi/24 and q^-2 scaling", criterion1},
      {"4D perfect-mirror pressure pi^2/240 and mode-sum oracle", criterion2},
      {"polylog large-distance limits zeta(2), zeta(4)", criterion3},
      {"imaginary-axis vs roundtrip for lorentzian pairs", criterion4},
      {"energy derivatives reproduce forces", criterion5},
      {"4D perfect-mirror energy -pi^2/720 = -qF/3", criterion6},
      {"4D high-temperature limit T zeta(3)/4pi", criterion7},
      {"2D thermal suppression e^{-4 pi T q}", criterion8},
      {"scattering identities on random lorentzian cavities", criterion9},
      {"sign law, scaling and monotone saturation", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    std::string note;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      note = std::string(" exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (worst deviation %.3g, %.2f s)%s\n", c.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), c.worst, seconds, note.c_str());
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
