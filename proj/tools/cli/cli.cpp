#include "cli.hpp"

#include "casimir/casimir2d.hpp"
#include "casimir/casimir4d.hpp"
#include "casimir/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

namespace casimir::cli {

namespace {

const std::map<std::string, Command> kCommands{
    {"force2d", Command::Force2d},         {"force4d", Command::Force4d},
    {"energy2d", Command::Energy2d},       {"energy4d", Command::Energy4d},
    {"free-energy2d", Command::FreeEnergy2d}, {"sweep", Command::Sweep},
    {"validate-model", Command::ValidateModel}, {"oracle", Command::Oracle},
};

const std::map<std::string, ModelChoice> kModels{
    {"perfect", ModelChoice::Perfect},
    {"lorentzian", ModelChoice::Lorentzian},
    {"tabulated", ModelChoice::Tabulated},
};

const std::map<std::string, MethodChoice> kMethods{
    {"auto", MethodChoice::Auto},
    {"imag-axis", MethodChoice::ImagAxis},
    {"roundtrip", MethodChoice::Roundtrip},
    {"large-distance", MethodChoice::LargeDistance},
    {"high-T", MethodChoice::HighT},
};

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}, {"plain", OutputFormat::Plain}};

const std::map<std::string, Spacing> kSpacings{{"linear", Spacing::Linear}, {"log", Spacing::Log}};

const std::vector<std::string> kSweepParams{"q", "T", "omega", "omega1", "omega2", "r0"};

constexpr const char* kUnitsNote =
    "Units: hbar = c = k_B = 1. With q in metres, multiply a 2D force by hbar*c\n"
    "(3.16153e-26 J m) to get newtons; the same factor turns a 4D pressure into\n"
    "pascals, a 2D energy into joules and a 4D energy into J/m^2. T stands for\n"
    "k_B T/(hbar c) in 1/m. Positive forces attract.\n"
    "Exit status: 0 ok, 2 usage, 3 capability, 4 not converged, 5 I/O.";

bool is_point_command(Command c) {
  return c != Command::Sweep && c != Command::ValidateModel;
}

std::shared_ptr<const TabulatedReflectivity> load_table(const std::string& path) {
  return std::make_shared<const TabulatedReflectivity>(TabulatedReflectivity::load(path));
}

Record from_force(const RunConfig& c, const ForceResult& f, std::string method) {
  return {"none", c.q, c.T, f.value, f.error_estimate, std::move(method), f.converged,
          f.roundtrips_used};
}

Record from_energy(const RunConfig& c, const EnergyResult& e, std::string method) {
  return {"none", c.q, c.T, e.value, e.error_estimate, std::move(method), e.converged,
          e.roundtrips_used};
}

std::string label(Method m) { return std::string(to_string(m)); }

// Closed-form is reported when auto resolves a perfect pair to its exact limit.
std::string limit_label(const RunConfig& c, Method m) {
  const bool exact = c.method == MethodChoice::Auto && c.model == ModelChoice::Perfect && !c.r0 &&
                     c.T == 0.0;
  return exact ? std::string("closed-form") : label(m);
}

Record evaluate_force2d(const RunConfig& c, const CavityConfig& cav) {
  MethodChoice m = c.method;
  if (m == MethodChoice::Auto) {
    if (c.r0 || c.model == ModelChoice::Perfect) {
      m = MethodChoice::LargeDistance;
    } else {
      m = c.T == 0.0 ? MethodChoice::ImagAxis : MethodChoice::Roundtrip;
    }
  }
  switch (m) {
  case MethodChoice::LargeDistance: {
    const double r0 = c.r0.value_or(cav.static_loop_reflection());
    const auto f = force_large_distance(r0, c.q, c.T, c.spec);
    return from_force(c, f, limit_label(c, f.method));
  }
  case MethodChoice::ImagAxis: {
    const auto f = force_imag_axis(cav, c.spec);
    return from_force(c, f, label(f.method));
  }
  case MethodChoice::Roundtrip: {
    const auto f = force_roundtrip_time(cav, c.spec);
    return from_force(c, f, label(f.method));
  }
  case MethodChoice::HighT:
  case MethodChoice::Auto:
    break;
  }
  throw CapabilityError("force2d: no high-temperature closed form in two dimensions");
}

Record evaluate_force4d(const RunConfig& c, const CavityConfig& cav) {
  const auto planar = PlanarCavityConfig::factorized(cav);
  MethodChoice m = c.method;
  if (m == MethodChoice::Auto) {
    if (c.r0 || c.model == ModelChoice::Perfect) {
      m = MethodChoice::LargeDistance;
    } else if (c.T == 0.0) {
      m = MethodChoice::ImagAxis;
    } else {
      throw CapabilityError(
          "force4d: finite-temperature pressure of frequency-dependent mirrors is available only "
          "through --method large-distance or --method high-T");
    }
  }
  const double r0 = c.r0.value_or(cav.static_loop_reflection());
  switch (m) {
  case MethodChoice::LargeDistance: {
    const auto f = pressure_thermal_large_distance(r0, c.q, c.T, c.spec);
    return from_force(c, f, limit_label(c, f.method));
  }
  case MethodChoice::ImagAxis: {
    const auto f = pressure_imag_axis(planar, c.spec);
    return from_force(c, f, label(f.method));
  }
  case MethodChoice::Roundtrip: {
    const auto f = pressure_roundtrip(planar, c.spec);
    return from_force(c, f, label(f.method));
  }
  case MethodChoice::HighT: {
    const auto f = pressure_high_temperature(r0, c.q, c.T);
    return from_force(c, f, label(f.method));
  }
  case MethodChoice::Auto:
    break;
  }
  throw std::logic_error("unreachable");
}

Record evaluate_energy2d(const RunConfig& c, const CavityConfig& cav) {
  MethodChoice m = c.method;
  if (m == MethodChoice::Auto) {
    if (c.T > 0.0) {
      m = MethodChoice::Roundtrip;
    } else if (c.r0 || c.model == ModelChoice::Perfect) {
      m = MethodChoice::LargeDistance;
    } else {
      m = MethodChoice::ImagAxis;
    }
  }
  switch (m) {
  case MethodChoice::LargeDistance: {
    if (c.T > 0.0) throw CapabilityError("energy2d: large-distance energy only at T = 0");
    const auto e = casimir_energy_large_distance(c.r0.value_or(cav.static_loop_reflection()), c.q);
    return from_energy(c, e, limit_label(c, e.method));
  }
  case MethodChoice::ImagAxis: {
    const auto e = casimir_energy(cav, c.spec);
    return from_energy(c, e, label(e.method));
  }
  case MethodChoice::Roundtrip: {
    const auto e = internal_energy_thermal(cav, c.spec);
    return from_energy(c, e, label(e.method));
  }
  case MethodChoice::HighT:
  case MethodChoice::Auto:
    break;
  }
  throw CapabilityError("energy2d: no high-temperature closed form in two dimensions");
}

Record evaluate_energy4d(const RunConfig& c, const CavityConfig& cav) {
  if (c.T > 0.0) throw CapabilityError("energy4d: only the zero-temperature energy is available");
  MethodChoice m = c.method;
  if (m == MethodChoice::Auto) {
    m = c.r0 || c.model == ModelChoice::Perfect ? MethodChoice::LargeDistance
                                                : MethodChoice::ImagAxis;
  }
  if (m == MethodChoice::LargeDistance) {
    const auto e = energy_4d_large_distance(c.r0.value_or(cav.static_loop_reflection()), c.q);
    return from_energy(c, e, limit_label(c, e.method));
  }
  if (m == MethodChoice::ImagAxis) {
    const auto e = energy_4d(PlanarCavityConfig::factorized(cav), c.spec);
    return from_energy(c, e, label(e.method));
  }
  throw CapabilityError("energy4d: available methods are imag-axis and large-distance");
}

Record evaluate_free_energy2d(const RunConfig& c, const CavityConfig& cav) {
  const bool has_kernels = cav.mirror1.delay_kernel() && cav.mirror2.delay_kernel();
  MethodChoice m = c.method;
  if (m == MethodChoice::Auto) {
    m = !has_kernels && c.T == 0.0 ? MethodChoice::ImagAxis : MethodChoice::Roundtrip;
  }
  if (m == MethodChoice::Roundtrip) {
    const auto e = free_energy(cav, c.spec);
    return from_energy(c, e, label(e.method));
  }
  if (m == MethodChoice::ImagAxis && c.T == 0.0) {
    const auto e = casimir_energy(cav, c.spec);
    return from_energy(c, e, label(e.method));
  }
  throw CapabilityError("free-energy2d: use the roundtrip series (or imag-axis at T = 0)");
}

Record evaluate_oracle(const RunConfig& c) {
  if (c.model != ModelChoice::Perfect) {
    throw CapabilityError("oracle: the mode-sum evaluation exists for perfect mirrors only");
  }
  const auto f = c.dim == 2 ? mode_sum_oracle_2d(c.q) : mode_sum_oracle_4d(c.q);
  return from_force(c, f, label(f.method));
}

void apply_sweep_param(RunConfig& c, const std::string& param, double v) {
  if (param == "q") {
    c.q = v;
  } else if (param == "T") {
    c.T = v;
  } else if (param == "omega") {
    c.omega1 = c.omega2 = v;
  } else if (param == "omega1") {
    c.omega1 = v;
  } else if (param == "omega2") {
    c.omega2 = v;
  } else if (param == "r0") {
    c.r0 = v;
  }
}

std::vector<Record> run_sweep(const RunConfig& config) {
  const auto values = sweep_values(config.sweep);
  std::vector<Record> records(values.size());
  std::vector<std::exception_ptr> failures(values.size());
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t i = next++; i < values.size(); i = next++) {
      try {
        RunConfig point = config;
        point.command = config.sweep.command;
        apply_sweep_param(point, config.sweep.param, values[i]);
        point.validate();
        records[i] = evaluate(point);
        records[i].param = config.sweep.param + "=" + format_double(values[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, config.jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, values.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return records;
}

std::vector<double> validation_grid(double q) {
  std::vector<double> grid(100);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double e = -3.0 + 7.0 * static_cast<double>(i) / static_cast<double>(grid.size() - 1);
    grid[i] = std::pow(10.0, e) / q;
  }
  return grid;
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass:
    return "pass";
  case CheckStatus::Fail:
    return "fail";
  case CheckStatus::Skipped:
    return "skipped";
  }
  return "unknown";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

} // namespace

void RunConfig::validate() const {
  if (!(q > 0.0) || !std::isfinite(q)) throw UsageError("--q must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) throw UsageError("--T must be non-negative");
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw UsageError("cutoff frequencies must be positive");
  if (r0 && !(std::abs(*r0) <= 1.0)) throw UsageError("--r0 must lie in [-1, 1]");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  if (dim != 2 && dim != 4) throw UsageError("--dim must be 2 or 4");
  if (model == ModelChoice::Tabulated && table.empty()) {
    throw UsageError("--model tabulated requires --table");
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (command == Command::Sweep) {
    if (!is_point_command(sweep.command)) {
      throw UsageError("--command must name a point command (force2d, force4d, ...)");
    }
    if (std::find(kSweepParams.begin(), kSweepParams.end(), sweep.param) == kSweepParams.end()) {
      throw UsageError("--param must be one of q, T, omega, omega1, omega2, r0");
    }
    if (sweep.points < 1) throw UsageError("--points must be at least 1");
    if (!std::isfinite(sweep.from) || !std::isfinite(sweep.to)) {
      throw UsageError("--from/--to must be finite");
    }
    if (sweep.points > 1 && !(sweep.from < sweep.to)) throw UsageError("sweep needs --from < --to");
    if (sweep.spacing == Spacing::Log && !(sweep.from > 0.0)) {
      throw UsageError("log spacing needs a positive range");
    }
  }
}

std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config,
                                      std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir forces between partially transmitting mirrors", "casimir"};
  app.footer(kUnitsNote);
  app.set_config("--config", "", "Key = value file mirroring the flags; flags override it");

  std::string command;
  app.add_option("COMMAND", command, "force2d | force4d | energy2d | energy4d | free-energy2d | "
                                     "sweep | validate-model | oracle")
      ->required()
      ->check(CLI::IsMember(kCommands));

  app.add_option("--model", config.model, "Mirror model")
      ->transform(CLI::CheckedTransformer(kModels))
      ->option_text("perfect|lorentzian|tabulated");
  app.add_option("--omega1", config.omega1, "Cutoff of mirror 1 (lorentzian)");
  app.add_option("--omega2", config.omega2, "Cutoff of mirror 2 (lorentzian)");
  app.add_option_function<double>(
      "--omega", [&config](double w) { config.omega1 = config.omega2 = w; },
      "Cutoff of both mirrors");
  app.add_option("--table", config.table, "r[i xi] table of mirror 1 (tabulated)");
  app.add_option("--table2", config.table2, "r[i xi] table of mirror 2; defaults to --table");
  app.add_option("--q", config.q, "Mirror separation");
  app.add_option("--T", config.T, "Temperature");
  app.add_option("--method", config.method, "Evaluation path")
      ->transform(CLI::CheckedTransformer(kMethods))
      ->option_text("auto|imag-axis|roundtrip|large-distance|high-T");
  app.add_option("--r0", config.r0, "Loop reflectivity override for large-distance forms");
  app.add_option("--rel-tol", config.spec.rel_tol, "Relative quadrature tolerance");
  app.add_option("--abs-tol", config.spec.abs_tol, "Absolute quadrature tolerance");
  app.add_option("--series-tol", config.spec.series_tail_tol, "Roundtrip series tail tolerance");
  app.add_option("--max-subdivisions", config.spec.max_subdivisions, "Quadrature subdivision cap");
  app.add_option("--max-roundtrips", config.spec.max_roundtrips, "Roundtrip series cap");
  app.add_option("--output", config.output, "csv | json | plain")
      ->transform(CLI::CheckedTransformer(kFormats))
      ->option_text("csv|json|plain");
  config.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_option("--jobs", config.jobs, "Concurrent sweep points");
  app.add_option("--dim", config.dim, "Dimension for the oracle command (2 or 4)");

  std::string sweep_command;
  app.add_option("--command", sweep_command, "Command evaluated at each sweep point")
      ->check(CLI::IsMember(kCommands));
  app.add_option("--param", config.sweep.param, "Swept parameter");
  app.add_option("--from", config.sweep.from, "Sweep start");
  app.add_option("--to", config.sweep.to, "Sweep end");
  app.add_option("--points", config.sweep.points, "Number of sweep points");
  app.add_option("--spacing", config.sweep.spacing, "linear | log")
      ->transform(CLI::CheckedTransformer(kSpacings))
      ->option_text("linear|log");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }
  config.command = kCommands.at(command);
  if (!sweep_command.empty()) config.sweep.command = kCommands.at(sweep_command);
  if (config.table2.empty()) config.table2 = config.table;
  if (config.command == Command::Sweep && sweep_command.empty()) {
    err << "error: sweep requires --command\n";
    return exit_code::usage;
  }
  return std::nullopt;
}

CavityConfig make_cavity(const RunConfig& config) {
  CavityConfig cav;
  cav.q = config.q;
  cav.temperature = config.T;
  switch (config.model) {
  case ModelChoice::Perfect:
    break;
  case ModelChoice::Lorentzian:
    cav.mirror1 = MirrorModel::lorentzian(config.omega1);
    cav.mirror2 = MirrorModel::lorentzian(config.omega2);
    break;
  case ModelChoice::Tabulated: {
    auto t1 = load_table(config.table);
    auto t2 = config.table2 == config.table ? t1 : load_table(config.table2);
    cav.mirror1 = MirrorModel::tabulated(std::move(t1), config.q);
    cav.mirror2 = MirrorModel::tabulated(std::move(t2), config.q);
    break;
  }
  }
  return cav;
}

Record evaluate(const RunConfig& config) {
  if (config.command == Command::Oracle) return evaluate_oracle(config);
  const CavityConfig cav = make_cavity(config);
  switch (config.command) {
  case Command::Force2d:
    return evaluate_force2d(config, cav);
  case Command::Force4d:
    return evaluate_force4d(config, cav);
  case Command::Energy2d:
    return evaluate_energy2d(config, cav);
  case Command::Energy4d:
    return evaluate_energy4d(config, cav);
  case Command::FreeEnergy2d:
    return evaluate_free_energy2d(config, cav);
  default:
    break;
  }
  throw UsageError("evaluate: not a point command");
}

std::vector<double> sweep_values(const SweepConfig& sweep) {
  std::vector<double> out(static_cast<std::size_t>(std::max(sweep.points, 0)));
  if (out.empty()) return out;
  if (out.size() == 1) {
    out[0] = sweep.from;
    return out;
  }
  const double n = static_cast<double>(out.size() - 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double t = static_cast<double>(i) / n;
    if (sweep.spacing == Spacing::Log) {
      out[i] = sweep.from * std::pow(sweep.to / sweep.from, t);
    } else {
      out[i] = sweep.from + t * (sweep.to - sweep.from);
    }
  }
  out.front() = sweep.from;
  out.back() = sweep.to;
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    out.exceptions(std::ios_base::badbit | std::ios_base::failbit);
    config.validate();
    if (config.command == Command::ValidateModel) {
      const CavityConfig cav = make_cavity(config);
      const auto grid = validation_grid(config.q);
      std::vector<ValidationReport> reports{validate_model(cav.mirror1, grid)};
      const bool distinct = config.model == ModelChoice::Lorentzian
                                ? config.omega1 != config.omega2
                                : config.model == ModelChoice::Tabulated &&
                                      config.table2 != config.table;
      if (distinct) reports.push_back(validate_model(cav.mirror2, grid));
      for (const auto& r : reports)
        for (const auto& w : r.warnings) err << "warning: " << r.model << ": " << w << '\n';
      emit_reports(reports, config.output, out);
      return exit_code::ok;
    }

    std::vector<Record> records;
    if (config.command == Command::Sweep) {
      records = run_sweep(config);
    } else {
      records.push_back(evaluate(config));
    }
    emit(records, config.output, out);
    const bool all_converged = std::all_of(records.begin(), records.end(),
                                           [](const Record& r) { return r.converged; });
    if (!all_converged) {
      err << "error: some evaluations did not reach the requested tolerance\n";
      return exit_code::not_converged;
    }
    return exit_code::ok;
  } catch (const std::ios_base::failure& e) {
    err << "error: output failed: " << e.what() << '\n';
    return exit_code::io;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::io;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::capability;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void emit(std::span<const Record> records, OutputFormat format, std::ostream& out) {
  switch (format) {
  case OutputFormat::Csv:
    out << "param,q,T,value,error,method,converged,roundtrips\n";
    for (const auto& r : records) {
      out << csv_field(r.param) << ',' << format_double(r.q) << ',' << format_double(r.T) << ','
          << format_double(r.value) << ',' << format_double(r.error) << ',' << r.method << ','
          << (r.converged ? "true" : "false") << ',';
      if (r.roundtrips) out << *r.roundtrips;
      out << '\n';
    }
    break;
  case OutputFormat::Json: {
    auto array = nlohmann::json::array();
    for (const auto& r : records) {
      array.push_back({{"param", r.param},
                       {"q", r.q},
                       {"T", r.T},
                       {"value", r.value},
                       {"error", r.error},
                       {"method", r.method},
                       {"converged", r.converged},
                       {"roundtrips", r.roundtrips ? nlohmann::json(*r.roundtrips) : nullptr}});
    }
    out << array.dump(2) << '\n';
    break;
  }
  case OutputFormat::Plain: {
    std::size_t param_width = 5;
    for (const auto& r : records) param_width = std::max(param_width, r.param.size());
    const auto w = static_cast<int>(param_width);
    out << std::left << std::setw(w) << "param" << "  " << std::setw(12) << "q" << std::setw(12)
        << "T" << std::setw(24) << "value" << std::setw(12) << "error" << std::setw(16)
        << "method" << std::setw(11) << "converged" << "roundtrips\n";
    for (const auto& r : records) {
      std::ostringstream value;
      value << std::setprecision(16) << r.value;
      std::ostringstream error;
      error << std::setprecision(3) << r.error;
      out << std::setw(w) << r.param << "  " << std::setw(12) << format_double(r.q)
          << std::setw(12) << format_double(r.T) << std::setw(24) << value.str() << std::setw(12)
          << error.str() << std::setw(16) << r.method << std::setw(11)
          << (r.converged ? "yes" : "no") << (r.roundtrips ? std::to_string(*r.roundtrips) : "-")
          << '\n';
    }
    out << std::right;
    break;
  }
  }
  out.flush();
}

void emit_reports(std::span<const ValidationReport> reports, OutputFormat format,
                  std::ostream& out) {
  switch (format) {
  case OutputFormat::Csv:
    out << "model,check,status,worst_residual,detail\n";
    for (const auto& rep : reports)
      for (const auto& c : rep.checks)
        out << csv_field(rep.model) << ',' << csv_field(c.name) << ',' << status_name(c.status)
            << ',' << format_double(c.worst_residual) << ',' << csv_field(c.detail) << '\n';
    break;
  case OutputFormat::Json: {
    auto array = nlohmann::json::array();
    for (const auto& rep : reports) {
      auto checks = nlohmann::json::array();
      for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"status", status_name(c.status)},
                          {"worst_residual", c.worst_residual},
                          {"detail", c.detail}});
      }
      array.push_back({{"model", rep.model},
                       {"passed", rep.passed()},
                       {"marginal_transparency", rep.marginal_transparency},
                       {"warnings", rep.warnings},
                       {"checks", checks}});
    }
    out << array.dump(2) << '\n';
    break;
  }
  case OutputFormat::Plain:
    for (const auto& rep : reports) {
      out << "model " << rep.model << (rep.passed() ? "  (all checks pass)" : "  (checks failed)")
          << '\n';
      for (const auto& c : rep.checks) {
        out << "  " << std::left << std::setw(22) << c.name << std::setw(9)
            << status_name(c.status) << std::setw(26) << format_double(c.worst_residual)
            << c.detail << std::right << '\n';
      }
      if (rep.marginal_transparency) out << "  marginal transparency flagged\n";
    }
    break;
  }
  out.flush();
}

} // namespace casimir::cli
