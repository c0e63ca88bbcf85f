#include "solfold_cli/app.hpp"

#include "solfold_cli/config.hpp"
#include "solfold_cli/exporters.hpp"
#include "solfold_cli/json_out.hpp"
#include "solfold_cli/suites.hpp"

#include <solfold/quotient.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace solfold::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfig = 2;

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void error_record(std::ostream& err, const std::string& kind, const std::string& field, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["field"] = field;
  j["message"] = message;
  err << j.dump() << "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open '" + cfg.out + "' for writing");
  file << text;
  file.close();
  if (!file) throw OutputError("failed writing '" + cfg.out + "'");
}

Json read_json_file(const std::string& path) {
  if (path.empty()) throw ConfigError("in", "report render needs --in PATH");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("in", "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError("in", std::string("not valid JSON: ") + e.what());
  }
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SuiteReport report = run_suite(cfg);
  emit(cfg, cfg.format == "csv" ? report_to_csv(report) : dump_json(report_to_json(report)), out);
  if (report.all_pass()) return kExitOk;
  Json j;
  j["error"] = "check_failure";
  j["failed"] = Json::array();
  for (const auto& c : report.checks) {
    if (!c.pass) j["failed"].push_back(c.name);
  }
  err << j.dump() << "\n";
  return kExitCheckFailure;
}

int run_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "render") {
    const SuiteReport report = report_from_json(read_json_file(cfg.in));
    emit(cfg, cfg.format == "csv" ? report_to_csv(report) : dump_json(report_to_json(report)), out);
    return kExitOk;
  }
  if (cfg.format == "csv") throw ConfigError("format", "report notes is only available as json");
  Json j;
  j["seed"] = cfg.seed;
  j["notes"] = Json::array();
  for (const auto& note : structural_notes(ToralGroupSpec(cfg.A))) {
    j["notes"].push_back({{"topic", note.topic},
                          {"claim", note.claim},
                          {"reference", note.reference},
                          {"verified", note.verified},
                          {"status", note.status}});
  }
  emit(cfg, dump_json(j), out);
  return kExitOk;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sol and Heisenberg foliations, toral Kleinian groups: verification and export"};
  app.require_subcommand(1);

  RawValues flags;
  std::map<std::string, CLI::Option*> options;
  for (const char* key : config_keys()) {
    options[key] = app.add_option(std::string("--") + key, flags[key]);
  }
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value file; flags override it");

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites and write a report");
  CLI::App* export_cmd = app.add_subcommand("export", "export curves, orbits and limit-set data");
  CLI::App* report = app.add_subcommand("report", "render reports and structural notes");
  std::vector<CLI::App*> leaves{verify};
  for (const char* name : {"flow", "leaf-metric", "limit-set", "orbit", "domain"}) {
    leaves.push_back(export_cmd->add_subcommand(name));
  }
  leaves.push_back(report->add_subcommand("render", "re-emit a report file given by --in"));
  leaves.push_back(report->add_subcommand("notes", "statements about the quotient that are not checked"));
  export_cmd->require_subcommand(1);
  report->require_subcommand(1);
  for (CLI::App* sub : {verify, export_cmd, report}) sub->fallthrough();
  for (CLI::App* sub : leaves) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_record(err, "invalid_config", "arguments", e.what());
    return kExitConfig;
  }

  try {
    RawValues values;
    if (!config_path.empty()) values = read_config_file(config_path);
    for (const auto& [key, option] : options) {
      if (option->count() > 0) values[key] = flags[key];
    }
    std::string command;
    std::string subcommand;
    for (CLI::App* sub : {verify, export_cmd, report}) {
      if (sub->parsed()) command = sub->get_name();
    }
    for (CLI::App* sub : leaves) {
      if (sub != verify && sub->parsed()) subcommand = sub->get_name();
    }
    const RunConfig cfg = build_config(command, subcommand, values);
    if (command == "verify") return run_verify(cfg, out, err);
    if (command == "export") {
      emit(cfg, render_export(cfg), out);
      return kExitOk;
    }
    return run_report(cfg, out);
  } catch (const ConfigError& e) {
    error_record(err, "invalid_config", e.field(), e.what());
    return kExitConfig;
  } catch (const OutputError& e) {
    error_record(err, "unwritable_output", "out", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    error_record(err, "invalid_config", "parameters", e.what());
    return kExitConfig;
  } catch (const std::domain_error& e) {
    error_record(err, "invalid_config", "A", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    error_record(err, "runtime_failure", "", e.what());
    return kExitCheckFailure;
  }
}

}  // namespace solfold::cli
