// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Links only the C API.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "adiabat/adiabat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int report_error() {
  char* text = adb_last_error_json();
  std::fprintf(stderr, "%s\n", text ? text : "{\"error\":{\"code\":\"internal\",\"message\":\"\"}}");
  adb_string_free(text);
  return kExitUsage;
}

void usage_error(const std::string& code, const std::string& message) {
  std::string escaped;
  for (char c : message) {
    if (c == '"' || c == '\\') escaped += '\\';
    if (c == '\n') {
      escaped += "\\n";
      continue;
    }
    escaped += c;
  }
  std::fprintf(stderr, "{\"error\":{\"code\":\"%s\",\"message\":\"%s\"}}\n", code.c_str(), escaped.c_str());
}

struct Options {
  std::string instance;
  std::string fixture;
  std::string alpha;
  int grid = 1001;
  double refine = 1e-10;
  int levels = 6;
  std::string out = "out";
  std::string checks;
  int window = 2000;
};

void add_run_options(CLI::App* cmd, Options& o) {
  auto* inst = cmd->add_option("--instance", o.instance, "Instance file (JSON)");
  auto* fix = cmd->add_option("--fixture", o.fixture, "Builtin fixture: toy1, toy2, random:n=..,k=..,p=..,seed=..");
  inst->excludes(fix);
  cmd->add_option("--alpha", o.alpha, "Comma-separated alpha values (decimal or p/q)");
  cmd->add_option("--grid", o.grid, "Uniform grid points on [0, 1]")->check(CLI::Range(51, 1000000));
  cmd->add_option("--refine", o.refine, "Min-gap refinement tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--levels", o.levels, "Levels exported per series")->check(CLI::Range(1, 1000000));
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--checks", o.checks, "Comma-separated checks to run");
  cmd->add_option("--window", o.window, "Points per side of the anti-crossing window")->check(CLI::Range(1, 10000000));
}

// Loads the instance and fills the configuration; returns false after
// printing the error object.
bool prepare(const Options& o, adb_instance** instance, adb_config** config) {
  if (o.instance.empty() == o.fixture.empty()) {
    usage_error("invalid_argument", "exactly one of --instance or --fixture is required");
    return false;
  }
  const adb_status st = o.instance.empty() ? adb_instance_from_fixture(o.fixture.c_str(), instance)
                                           : adb_instance_from_file(o.instance.c_str(), instance);
  if (st != ADB_OK) {
    report_error();
    return false;
  }
  const std::string source = o.instance.empty() ? "fixture:" + o.fixture : o.instance;
  if (adb_config_new(config) != ADB_OK || adb_config_set_source(*config, source.c_str()) != ADB_OK ||
      (!o.alpha.empty() && adb_config_set_alpha_list(*config, o.alpha.c_str()) != ADB_OK) ||
      adb_config_set_grid(*config, o.grid) != ADB_OK || adb_config_set_refine(*config, o.refine) != ADB_OK ||
      adb_config_set_levels(*config, o.levels) != ADB_OK || adb_config_set_output_dir(*config, o.out.c_str()) != ADB_OK ||
      (!o.checks.empty() && adb_config_set_checks(*config, o.checks.c_str()) != ADB_OK) ||
      adb_config_set_window(*config, o.window) != ADB_OK) {
    report_error();
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for adiabatic interpolations"};
  app.set_version_flag("--version", std::string(adb_version()));
  app.require_subcommand(1);

  Options scan_opts;
  Options verify_opts;
  std::string fixture_name;
  auto* scan = app.add_subcommand("scan", "Write energies, gaps, overlaps and a report per alpha");
  add_run_options(scan, scan_opts);
  auto* verify = app.add_subcommand("verify", "Run the verification suite and print a JSON summary");
  add_run_options(verify, verify_opts);
  auto* fixtures = app.add_subcommand("fixtures", "Print a builtin fixture as an instance document");
  fixtures->add_option("name", fixture_name, "Fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    usage_error("usage", e.what());
    return kExitUsage;
  }

  if (fixtures->parsed()) {
    char* doc = nullptr;
    if (adb_cmd_fixture(fixture_name.c_str(), &doc) != ADB_OK) return report_error();
    std::fputs(doc, stdout);
    adb_string_free(doc);
    return kExitOk;
  }

  const bool is_scan = scan->parsed();
  adb_instance* instance = nullptr;
  adb_config* config = nullptr;
  int code = kExitOk;
  if (!prepare(is_scan ? scan_opts : verify_opts, &instance, &config)) {
    code = kExitUsage;
  } else {
    char* summary = nullptr;
    int passed = 0;
    const adb_status st = is_scan ? adb_cmd_scan(instance, config, &summary)
                                  : adb_cmd_verify(instance, config, &summary, &passed);
    if (st != ADB_OK) {
      code = report_error();
    } else {
      std::fputs(summary, stdout);
      if (!is_scan && !passed) code = kExitCheckFailure;
    }
    adb_string_free(summary);
  }
  adb_config_free(config);
  adb_instance_free(instance);
  return code;
}
