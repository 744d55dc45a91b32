#include <fnmatch.h>

#include <filesystem>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "verify/runner.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".scn") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the elliptic K3 constructions"};
  bool all = false;
  std::vector<std::string> paths;
  std::string filter, format = "text", dir = K3DUAL_SCENARIO_DIR;
  uint64_t seed = 0;
  std::optional<int> trials;
  int threads = 0;
  auto* g = app.add_option_group("selection");
  g->add_flag("--all", all, "run every bundled scenario");
  g->add_option("--scenario", paths, "scenario file (repeatable)");
  g->add_option("--filter", filter, "glob over bundled scenario names");
  g->require_option(1);
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--trials", trials, "trials per randomized suite")->check(CLI::PositiveNumber);
  app.add_option("--scenario-dir", dir, "bundled corpus directory");
  app.add_option("--threads", threads, "worker threads, 0 = auto")->check(CLI::NonNegativeNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::vector<verify::Scenario> scenarios;
  try {
    std::vector<std::string> files = paths;
    if (all || !filter.empty()) {
      if (!fs::is_directory(dir)) throw std::runtime_error("no scenario directory " + dir);
      files = corpus_files(dir);
    }
    std::set<std::string> names;
    for (const auto& f : files) {
      verify::Scenario sc = verify::parse_scenario(f);
      if (!filter.empty() && fnmatch(filter.c_str(), sc.name.c_str(), 0) != 0) continue;
      if (!names.insert(sc.name).second) throw std::runtime_error("duplicate scenario name " + sc.name);
      scenarios.push_back(std::move(sc));
    }
    if (scenarios.empty() && !filter.empty()) throw std::runtime_error("filter matched no scenario");
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  verify::RunOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  auto reports = verify::run_all(scenarios, opt, static_cast<unsigned>(threads));
  verify::ReportMeta meta{seed, trials};
  std::cout << (format == "json" ? verify::emit_json(reports, meta) : verify::emit_text(reports, meta));
  for (const auto& r : reports)
    if (r.status != verify::Status::Pass) return 1;
  return 0;
}
