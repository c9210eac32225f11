#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwa/scenario.hpp"

#ifndef GWA_SCENARIO_DIR
#define GWA_SCENARIO_DIR "scenarios"
#endif

namespace fs = std::filesystem;

namespace {

struct RunOptions {
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  int radius = 0;
  int bound = 0;
  std::string format = "text";
  bool strict = false;
};

gwa::ScenarioOverrides overrides(const RunOptions& o, const CLI::App& cmd) {
  gwa::ScenarioOverrides ov;
  ov.only = o.checks;
  if (cmd.count("--seed")) ov.seed = o.seed;
  if (cmd.count("--radius")) ov.radius = o.radius;
  if (cmd.count("--bound")) ov.bound = o.bound;
  return ov;
}

// Returns the exit code for one scenario; usage and validation problems give 2.
int run_one(const std::string& path, const gwa::ScenarioOverrides& ov, const RunOptions& o, nlohmann::json* collected) {
  nlohmann::json report;
  try {
    report = gwa::run_scenario(gwa::load_scenario(path), ov, path);
  } catch (const gwa::ScenarioParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gwa::ScenarioValidationError& e) {
    std::cerr << "validation error: " << path << ": " << e.what() << "\n";
    return 2;
  }
  if (collected) collected->push_back(report);
  else if (o.format == "json") std::cout << report.dump(2) << "\n";
  else std::cout << gwa::render_text(report);
  return gwa::exit_code(report, o.strict);
}

void add_run_flags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--check", o.checks, "Run only this check (repeatable; tableaux checks as tableaux.NAME)");
  cmd->add_option("--seed", o.seed, "Random seed, overriding the scenario");
  cmd->add_option("--radius", o.radius, "Tableaux window radius");
  cmd->add_option("--bound", o.bound, "Membership search bound");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--strict", o.strict, "Exit with 3 when a check is inconclusive");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for generalized Weyl algebras, their invariants and weight modules"};
  app.require_subcommand(1);

  RunOptions run_opts;
  std::string file;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("file", file, "Scenario file")->required();
  add_run_flags(run, run_opts);

  auto* list = app.add_subcommand("list-catalog", "List catalog algebras, automorphisms, groups and checks");

  RunOptions all_opts;
  std::string dir = GWA_SCENARIO_DIR;
  auto* all = app.add_subcommand("verify-all", "Run every bundled scenario");
  all->add_option("--dir", dir, "Scenario directory");
  add_run_flags(all, all_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    std::cout << gwa::catalog_listing();
    return 0;
  }
  if (run->parsed()) return run_one(file, overrides(run_opts, *run), run_opts, nullptr);

  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.path().extension() == ".scenario") files.push_back(entry.path().string());
  if (ec || files.empty()) {
    std::cerr << "no scenarios found in " << dir << "\n";
    return 2;
  }
  std::sort(files.begin(), files.end());
  const auto ov = overrides(all_opts, *all);
  int worst = 0;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& f : files) {
    const int rc = run_one(f, ov, all_opts, all_opts.format == "json" ? &reports : nullptr);
    if (all_opts.format == "text") std::cout << "\n";
    // Precedence: usage error, failure, inconclusive.
    const auto rank = [](int c) { return c == 2 ? 3 : c == 1 ? 2 : c == 3 ? 1 : 0; };
    if (rank(rc) > rank(worst)) worst = rc;
  }
  if (all_opts.format == "json") std::cout << reports.dump(2) << "\n";
  return worst;
}
