#pragma once

// Front-end of the casimir command-line tool: configuration, dispatch to the
// engines, and record serialization. Kept apart from main() for testing.

#include "casimir/quadrature.hpp"
#include "casimir/scattering.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

namespace casimir::cli {

enum class Command { Force2d, Force4d, Energy2d, Energy4d, FreeEnergy2d, Sweep, ValidateModel, Oracle };
enum class ModelChoice { Perfect, Lorentzian, Tabulated };
enum class MethodChoice { Auto, ImagAxis, Roundtrip, LargeDistance, HighT };
enum class OutputFormat { Csv, Json, Plain };
enum class Spacing { Linear, Log };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int capability = 3;
inline constexpr int not_converged = 4;
inline constexpr int io = 5;
} // namespace exit_code

struct SweepConfig {
  Command command = Command::Force2d;
  std::string param = "q"; // q, T, omega, omega1, omega2, r0
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  Spacing spacing = Spacing::Linear;
};

struct RunConfig {
  Command command = Command::Force2d;
  ModelChoice model = ModelChoice::Perfect;
  double omega1 = 1.0;
  double omega2 = 1.0;
  std::string table;  // tabulated r[i xi] of mirror 1
  std::string table2; // mirror 2; defaults to `table`
  double q = 1.0;
  double T = 0.0;
  MethodChoice method = MethodChoice::Auto;
  std::optional<double> r0;
  QuadratureSpec spec;
  OutputFormat output = OutputFormat::Plain;
  int jobs = 1;
  int dim = 2; // oracle
  SweepConfig sweep;

  /// Throws UsageError on violated invariants.
  void validate() const;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One evaluation.
struct Record {
  std::string param = "none";
  double q = 0.0;
  double T = 0.0;
  double value = 0.0;
  double error = 0.0;
  std::string method;
  bool converged = false;
  std::optional<int> roundtrips;
};

/// Parses argv into `config`. Returns nullopt to continue, or the exit code
/// to return immediately (help, version, parse errors).
std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config,
                                      std::ostream& out, std::ostream& err);

/// Mirror pair described by the model flags.
CavityConfig make_cavity(const RunConfig& config);

/// Single evaluation of a point command (not sweep / validate-model).
Record evaluate(const RunConfig& config);

/// Sweep points in index order.
std::vector<double> sweep_values(const SweepConfig& sweep);

/// Runs the configured command, writing records to `out` and diagnostics to
/// `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes `records` in the given format. Throws std::ios_base::failure when
/// the stream goes bad.
void emit(std::span<const Record> records, OutputFormat format, std::ostream& out);

/// Model-validation reports, one per distinct mirror.
void emit_reports(std::span<const ValidationReport> reports, OutputFormat format,
                  std::ostream& out);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

} // namespace casimir::cli
