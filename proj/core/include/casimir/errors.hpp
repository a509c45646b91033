#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A mirror model lacks the representation an operation needs
/// (e.g. a tabulated model asked for real-frequency amplitudes).
class CapabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluation hit a pole or a logarithmic branch point.
class SingularityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or configuration.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace casimir
