#include "casimir/results.hpp"

#include <array>
#include <utility>

namespace casimir {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::ImagAxis, "imag-axis"},
    {Method::RoundtripTime, "roundtrip-time"},
    {Method::Roundtrip, "roundtrip"},
    {Method::LargeDistance, "large-distance"},
    {Method::HighTemperature, "high-T"},
    {Method::ModeSumOracle, "mode-sum-oracle"},
    {Method::ClosedForm, "closed-form"},
}};

} // namespace

std::string_view to_string(Method m) noexcept {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view name) noexcept {
  for (const auto& [method, label] : kMethodNames)
    if (label == name) return method;
  return std::nullopt;
}

std::string_view to_string(EnergyKind k) noexcept {
  switch (k) {
  case EnergyKind::CasimirEnergy:
    return "casimir-energy";
  case EnergyKind::FreeEnergy:
    return "free-energy";
  case EnergyKind::InternalEnergy:
    return "internal-energy";
  case EnergyKind::IntegratedFieldEnergy:
    return "integrated-field-energy";
  }
  return "unknown";
}

} // namespace casimir
