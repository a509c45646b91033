#include "cli/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace casimir;
using namespace casimir::cli;
using std::numbers::pi;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "casimir");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  RunConfig config;
  std::ostringstream out;
  std::ostringstream err;
  Outcome result;
  if (const auto code = parse_command_line(static_cast<int>(argv.size()), argv.data(), config, out, err)) {
    result.code = *code;
  } else {
    result.code = run(config, out, err);
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

} // namespace

TEST_CASE("perfect-mirror closed forms") {
  const auto f2 = invoke({"force2d", "--model", "perfect", "--q", "1", "--output", "json"});
  REQUIRE(f2.code == exit_code::ok);
  const auto j2 = nlohmann::json::parse(f2.out);
  REQUIRE(j2.size() == 1);
  CHECK(std::abs(j2[0]["value"].get<double>() - pi / 24.0) < 1e-9);
  CHECK(j2[0]["method"] == "closed-form");
  CHECK(j2[0]["converged"] == true);

  const auto f4 = invoke({"force4d", "--model", "perfect", "--q", "1", "--output", "json"});
  REQUIRE(f4.code == exit_code::ok);
  CHECK(std::abs(nlohmann::json::parse(f4.out)[0]["value"].get<double>() - pi * pi / 240.0) < 1e-12);

  const auto forced = invoke({"force2d", "--model", "perfect", "--method", "imag-axis", "--output", "json"});
  CHECK(nlohmann::json::parse(forced.out)[0]["method"] == "imag-axis");
}

TEST_CASE("lorentzian commands") {
  const auto f = invoke({"force2d", "--model", "lorentzian", "--omega", "1", "--output", "csv"});
  REQUIRE(f.code == exit_code::ok);
  const auto rows = lines(f.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "param,q,T,value,error,method,converged,roundtrips");
  const auto cells = split(rows[1]);
  REQUIRE(cells.size() == 8);
  CHECK(cells[0] == "none");
  CHECK(cells[5] == "imag-axis");
  CHECK(cells[6] == "true");

  const auto rt = invoke({"force2d", "--model", "lorentzian", "--omega", "1", "--method", "roundtrip",
                          "--output", "csv"});
  REQUIRE(rt.code == exit_code::ok);
  const auto rt_cells = split(lines(rt.out)[1]);
  CHECK(std::abs(std::stod(rt_cells[3]) - std::stod(cells[3])) < 1e-9);
  CHECK_FALSE(rt_cells[7].empty());

  for (const char* cmd : {"force4d", "energy2d", "energy4d", "free-energy2d"}) {
    CHECK(invoke({cmd, "--model", "lorentzian", "--omega1", "1", "--omega2", "2"}).code == exit_code::ok);
  }
  CHECK(invoke({"free-energy2d", "--model", "lorentzian", "--T", "0.3"}).code == exit_code::ok);
  CHECK(invoke({"force4d", "--model", "perfect", "--T", "2", "--method", "high-T"}).code == exit_code::ok);
  CHECK(invoke({"force2d", "--r0", "-0.5", "--output", "csv"}).out.find(",-") != std::string::npos);
}

TEST_CASE("oracle command") {
  const auto o = invoke({"oracle", "--dim", "4", "--output", "json"});
  REQUIRE(o.code == exit_code::ok);
  CHECK(nlohmann::json::parse(o.out)[0]["value"].get<double>() == pi * pi / 240.0);
  CHECK(invoke({"oracle", "--dim", "3"}).code == exit_code::usage);
}

TEST_CASE("sweep: ordering, monotone saturation and determinism") {
  const std::vector<std::string> args{"sweep", "--command", "force2d", "--model", "lorentzian",
                                      "--omega1", "1", "--omega2", "1", "--param", "q", "--from", "0.1",
                                      "--to", "10", "--points", "25", "--spacing", "log", "--output",
                                      "csv", "--jobs", "4"};
  const auto s = invoke(args);
  REQUIRE(s.code == exit_code::ok);
  const auto rows = lines(s.out);
  REQUIRE(rows.size() == 26);
  double previous_q = 0.0;
  double previous_fq2 = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    const double q = std::stod(cells[1]);
    const double fq2 = std::stod(cells[3]) * q * q;
    CHECK(q > previous_q);
    CHECK(fq2 > previous_fq2);
    CHECK(fq2 < pi / 24.0);
    CHECK(cells[0].rfind("q=", 0) == 0);
    previous_q = q;
    previous_fq2 = fq2;
  }
  CHECK(std::stod(split(rows[1])[1]) == 0.1);
  CHECK(std::stod(split(rows.back())[1]) == 10.0);

  auto serial = args;
  serial.back() = "1";
  CHECK(invoke(serial).out == s.out);
  CHECK(invoke(args).out == s.out);
}

TEST_CASE("sweep values") {
  SweepConfig lin{Command::Force2d, "q", 1.0, 2.0, 5, Spacing::Linear};
  CHECK(sweep_values(lin) == std::vector<double>{1.0, 1.25, 1.5, 1.75, 2.0});
  SweepConfig log{Command::Force2d, "q", 0.1, 10.0, 3, Spacing::Log};
  const auto v = sweep_values(log);
  CHECK(v[0] == 0.1);
  CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v[2] == 10.0);
}

TEST_CASE("emit formats") {
  std::ostringstream csv;
  emit({}, OutputFormat::Csv, csv);
  CHECK(csv.str() == "param,q,T,value,error,method,converged,roundtrips\n");

  const Record r{"none", 1.0, 0.0, pi / 24.0, 1e-16, "closed-form", true, std::nullopt};
  std::ostringstream json;
  emit(std::span(&r, 1), OutputFormat::Json, json);
  const auto parsed = nlohmann::json::parse(json.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  for (const char* key : {"param", "q", "T", "value", "error", "method", "converged", "roundtrips"}) {
    CHECK(parsed[0].contains(key));
  }
  CHECK(parsed[0]["roundtrips"].is_null());

  std::ostringstream plain;
  emit(std::span(&r, 1), OutputFormat::Plain, plain);
  CHECK(plain.str().find("0.1308996938") != std::string::npos);
}

TEST_CASE("json round trip is bit exact") {
  std::vector<Record> records;
  for (double v : {pi / 24.0, 1.0 / 3.0, 1e-300, 6.02214076e23, -0.1, std::nextafter(1.0, 2.0)}) {
    records.push_back({"none", v, v / 7.0, v * v, v / 3.0, "imag-axis", true, 12});
  }
  std::ostringstream json;
  emit(records, OutputFormat::Json, json);
  const auto parsed = nlohmann::json::parse(json.str());
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(parsed[i]["q"].get<double>() == records[i].q);
    CHECK(parsed[i]["T"].get<double>() == records[i].T);
    CHECK(parsed[i]["value"].get<double>() == records[i].value);
    CHECK(parsed[i]["error"].get<double>() == records[i].error);
    CHECK(parsed[i]["roundtrips"].get<int>() == 12);
  }
  for (double v : {pi, 0.1, 1e-17, 5e-324}) {
    const std::string text = format_double(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(back == v);
  }
}

TEST_CASE("validate-model") {
  const auto lor = invoke({"validate-model", "--model", "lorentzian", "--omega", "2", "--output", "json"});
  CHECK(lor.code == exit_code::ok);
  CHECK(lor.err.find("warning") != std::string::npos);
  const auto reports = nlohmann::json::parse(lor.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["marginal_transparency"] == true);

  const auto two = invoke({"validate-model", "--model", "lorentzian", "--omega1", "1", "--omega2", "3",
                           "--output", "json"});
  CHECK(nlohmann::json::parse(two.out).size() == 2);
  CHECK(invoke({"validate-model", "--model", "perfect"}).code == exit_code::ok);
}

TEST_CASE("tabulated models from files") {
  const auto path = std::filesystem::temp_directory_path() / "casimir_cli_table.txt";
  {
    std::ofstream f(path);
    f << "# r[i xi] of a lorentzian mirror with unit cutoff\nunits: q-relative\n";
    for (int i = 0; i <= 4000; ++i) f << 0.01 * i << ' ' << -1.0 / (1.0 + 0.01 * i) << '\n';
  }
  const auto t = invoke({"force2d", "--model", "tabulated", "--table", path.string(), "--output", "json"});
  REQUIRE(t.code == exit_code::ok);
  const auto l = invoke({"force2d", "--model", "lorentzian", "--omega", "1", "--output", "json"});
  const double tv = nlohmann::json::parse(t.out)[0]["value"].get<double>();
  const double lv = nlohmann::json::parse(l.out)[0]["value"].get<double>();
  CHECK(std::abs(tv - lv) < 1e-6 * lv);

  CHECK(invoke({"force2d", "--model", "tabulated", "--table", path.string(), "--method", "roundtrip"}).code ==
        exit_code::capability);
  std::filesystem::remove(path);
  CHECK(invoke({"force2d", "--model", "tabulated", "--table", path.string()}).code == exit_code::io);
}

TEST_CASE("config file with flag override") {
  const auto path = std::filesystem::temp_directory_path() / "casimir_cli_config.ini";
  {
    std::ofstream f(path);
    f << "model = lorentzian\nomega = 1\nq = 3\noutput = csv\n";
  }
  const auto r = invoke({"force2d", "--config", path.string(), "--q", "2"});
  REQUIRE(r.code == exit_code::ok);
  const auto cells = split(lines(r.out)[1]);
  CHECK(cells[1] == "2");
  CHECK(cells[5] == "imag-axis");
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"force2d", "--q", "-1"}).code == exit_code::usage);
  CHECK(invoke({"force2d", "--model", "nonsense"}).code == exit_code::usage);
  CHECK(invoke({"teleport"}).code == exit_code::usage);
  CHECK(invoke({"force2d", "--model", "lorentzian", "--T", "0.1", "--method", "imag-axis"}).code ==
        exit_code::usage);
  CHECK(invoke({"sweep", "--param", "q", "--from", "1", "--to", "2", "--points", "3"}).code ==
        exit_code::usage);
  CHECK(invoke({"force2d", "--model", "perfect", "--T", "0.1", "--method", "high-T"})
            .code == exit_code::capability);
  CHECK(invoke({"--help"}).code == exit_code::ok);

  const auto partial = invoke({"force2d", "--model", "lorentzian", "--method", "roundtrip", "--max-roundtrips",
                               "3", "--output", "csv"});
  CHECK(partial.code == exit_code::not_converged);
  CHECK(lines(partial.out).size() == 2);
  CHECK(split(lines(partial.out)[1])[6] == "false");

  RunConfig config;
  config.command = Command::Oracle;
  std::ostringstream broken;
  broken.setstate(std::ios_base::badbit);
  std::ostringstream err;
  CHECK(run(config, broken, err) == exit_code::io);
}
