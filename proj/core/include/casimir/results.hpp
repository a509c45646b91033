#pragma once

#include <optional>
#include <string_view>

namespace casimir {

/// Representation an evaluation went through.
enum class Method {
  ImagAxis,        // exponentially damped imaginary-frequency integral
  RoundtripTime,   // 2D time-domain roundtrip series
  Roundtrip,       // 4D roundtrip series on the imaginary wavevector axis
  LargeDistance,   // zero-frequency loop reflectivity, polylog closed form
  HighTemperature, // classical limit
  ModeSumOracle,   // Euler-Maclaurin evaluation for perfect mirrors
  ClosedForm,
};

std::string_view to_string(Method m) noexcept;
std::optional<Method> method_from_string(std::string_view name) noexcept;

/// Force in natural units; positive values attract.
struct ForceResult {
  double value = 0.0;
  double error_estimate = 0.0;
  Method method = Method::ImagAxis;
  std::optional<int> roundtrips_used;
  bool converged = false;
};

enum class EnergyKind { CasimirEnergy, FreeEnergy, InternalEnergy, IntegratedFieldEnergy };

std::string_view to_string(EnergyKind k) noexcept;

struct EnergyResult {
  double value = 0.0;
  double error_estimate = 0.0;
  Method method = Method::ImagAxis;
  EnergyKind kind = EnergyKind::CasimirEnergy;
  std::optional<int> roundtrips_used;
  bool converged = false;
};

} // namespace casimir
