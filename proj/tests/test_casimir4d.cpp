#include "casimir/casimir4d.hpp"
#include "casimir/errors.hpp"
#include "casimir/special_functions.hpp"

#include "frozen_values.hpp"

#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

using namespace casimir;
using std::numbers::pi;

namespace {

PlanarCavityConfig planar(MirrorModel m1, MirrorModel m2, double q = 1.0, double T = 0.0) {
  return PlanarCavityConfig::factorized({std::move(m1), std::move(m2), q, T});
}

PlanarCavityConfig lorentz_pair(double w, double q = 1.0) {
  return planar(MirrorModel::lorentzian(w), MirrorModel::lorentzian(w), q);
}

PlanarCavityConfig perfect_pair(double q = 1.0, double T = 0.0) {
  return planar(MirrorModel::perfect(), MirrorModel::perfect(), q, T);
}

QuadratureSpec tight() {
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-18;
  return spec;
}

} // namespace

TEST_CASE("planar configuration") {
  const auto cfg = lorentz_pair(2.0);
  CHECK(cfg.loop_reflection_imag(Polarization::P1, 2.0) == doctest::Approx(0.25));
  CHECK(cfg.loop_reflection_imag(Polarization::P2, 2.0) == cfg.loop_reflection_imag(Polarization::P1, 2.0));
  CHECK(cfg.loop_reflection_bound() == 1.0);
  auto bad = cfg;
  bad.q = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("perfect mirrors") {
  const double exact = pi * pi / 240.0;
  const auto p = pressure_imag_axis(perfect_pair());
  CHECK(p.converged);
  CHECK(rel_diff(p.value, exact) < 1e-8);
  CHECK(mode_sum_oracle_4d(1.0).value == exact);
  CHECK(mode_sum_oracle_4d(1.0).method == Method::ModeSumOracle);
  CHECK(mode_sum_oracle_4d_polarization(1.0).value == pi * pi / 480.0);
  CHECK(rel_diff(pressure_imag_axis_polarization(perfect_pair(), Polarization::P2).value, exact / 2.0) < 1e-8);
  CHECK(rel_diff(pressure_roundtrip(perfect_pair()).value, exact) < 1e-8);
  for (double q : {0.5, 2.0}) {
    CHECK(rel_diff(pressure_imag_axis(perfect_pair(q)).value * std::pow(q, 4), p.value) < 1e-10);
  }
  CHECK_THROWS_AS(pressure_imag_axis(perfect_pair(1.0, 0.1)), DomainError);
}

TEST_CASE("lorentzian pairs against the oracle") {
  for (int i = 0; i < 3; ++i) {
    const auto cfg = lorentz_pair(frozen::lorentz_wq[i]);
    const double imag = pressure_imag_axis(cfg).value;
    const auto rt = pressure_roundtrip(cfg);
    CHECK(rt.converged);
    CHECK(rt.method == Method::Roundtrip);
    CHECK(rel_diff(imag, frozen::pressure4d_lorentz[i]) < 1e-8);
    CHECK(rel_diff(rt.value, imag) < 1e-8);
  }
}

TEST_CASE("geometric roundtrip series when the loop reflectivity is bounded below one") {
  auto table = std::make_shared<const TabulatedReflectivity>(
      std::vector<double>{0.0, 1.0, 5.0}, std::vector<double>{-0.6, -0.4, -0.1},
      TabulatedReflectivity::Units::Absolute);
  const auto cfg = planar(MirrorModel::tabulated(table), MirrorModel::perfect());
  const auto rt = pressure_roundtrip(cfg);
  CHECK(rt.converged);
  CHECK(rel_diff(rt.value, pressure_imag_axis(cfg).value) < 1e-8);
}

TEST_CASE("large-distance limits") {
  CHECK(rel_diff(pressure_large_distance(1.0, 1.0).value, 3.0 * (std::pow(pi, 4) / 90.0) / (8.0 * pi * pi)) <
        1e-10);
  CHECK(rel_diff(pressure_large_distance(0.5, 1.0).value, frozen::three_li4_half_over_8pi2) < 1e-12);
  CHECK(pressure_large_distance(-0.5, 1.0).value < 0.0);
  CHECK(rel_diff(energy_4d_large_distance(1.0, 1.0).value, -pi * pi / 720.0) < 1e-12);
  const double q = 2000.0;
  CHECK(rel_diff(pressure_imag_axis(lorentz_pair(1.0, q)).value, pressure_large_distance(1.0, q).value) < 5e-3);
}

TEST_CASE("thermal large-distance kernel") {
  CHECK(rel_diff(pressure_high_temperature(1.0, 1.0, 1.0).value, frozen::zeta3_over_4pi) < 1e-10);
  CHECK(pressure_high_temperature(1.0, 1.0, 1.0).method == Method::HighTemperature);
  CHECK(rel_diff(pressure_thermal_large_distance(0.5, 1.0, 0.2).value, frozen::pressure4d_ld_half_T02) < 1e-9);
  CHECK(rel_diff(pressure_thermal_large_distance(1.0, 1.0, 0.1).value, frozen::pressure4d_ld_one_T01) < 1e-9);
  const double hot = pressure_thermal_large_distance(1.0, 1.0, 10.0).value;
  CHECK(rel_diff(hot, pressure_high_temperature(1.0, 1.0, 10.0).value) < 1e-6);
  CHECK(rel_diff(pressure_thermal_large_distance(1.0, 1.0, 1e-4).value, pi * pi / 240.0) < 1e-6);
  CHECK(rel_diff(pressure_thermal_large_distance(0.5, 1.0, 0.0).value, frozen::three_li4_half_over_8pi2) < 1e-12);
  CHECK_THROWS_AS(pressure_thermal_large_distance(1.0, 1.0, -1.0), DomainError);
}

TEST_CASE("energy") {
  const auto u = energy_4d(perfect_pair());
  CHECK(rel_diff(u.value, -pi * pi / 720.0) < 1e-8);
  CHECK(rel_diff(u.value, -pressure_imag_axis(perfect_pair()).value / 3.0) < 1e-8);
  CHECK(rel_diff(integrated_field_energy_perfect(1.0).value, -pi * pi / 720.0) < 1e-15);
  for (int i = 0; i < 3; ++i) {
    CHECK(rel_diff(energy_4d(lorentz_pair(frozen::lorentz_wq[i])).value, frozen::energy4d_lorentz[i]) < 1e-8);
  }
  const double h = 1e-4;
  for (const auto& make : {+[](double q) { return perfect_pair(q); },
                           +[](double q) { return lorentz_pair(1.0, q); }}) {
    const double dU = (energy_4d(make(1.0 + h), tight()).value - energy_4d(make(1.0 - h), tight()).value) / (2.0 * h);
    CHECK(rel_diff(dU, pressure_imag_axis(make(1.0)).value) < 1e-6);
  }
}

TEST_CASE("sign law and saturation") {
  double previous = 0.0;
  for (double wq : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
    const double p = pressure_imag_axis(lorentz_pair(wq)).value;
    CHECK(p > previous);
    CHECK(p < pi * pi / 240.0);
    previous = p;
  }
  CHECK((pi * pi / 240.0 - previous) / (pi * pi / 240.0) < 0.01);
}
