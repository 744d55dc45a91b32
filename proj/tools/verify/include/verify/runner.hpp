#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "verify/scenario.hpp"

namespace verify {

enum class Status { Pass, Fail, Error };
std::string to_string(Status s);

struct ScenarioReport {
  std::string name, kind, procedure, model, path;
  Status status = Status::Pass;
  std::vector<std::string> messages;
  bool random = false;
  uint64_t seed = 0;  // per-scenario stream seed, random scenarios only
  int trials = 0;
  int resamples = 0;
  nlohmann::ordered_json artifacts;
  double wall_ms = 0;  // text output only
};

struct RunOptions {
  uint64_t seed = 0;
  std::optional<int> trials;  // overrides the scenario default
  int max_draws_per_trial = 2000;
};

inline constexpr int kDefaultTrials = 100;

// Per-scenario seed derived from the global seed and the scenario name.
uint64_t scenario_seed(uint64_t seed, const std::string& name);

ScenarioReport run(const Scenario& sc, const RunOptions& opt);
// Runs independent scenarios on a small thread pool; result ordered by name.
std::vector<ScenarioReport> run_all(const std::vector<Scenario>& scenarios, const RunOptions& opt,
                                    unsigned threads = 0);

struct ReportMeta {
  uint64_t seed = 0;
  std::optional<int> trials;
};

std::string emit_json(const std::vector<ScenarioReport>& reports, const ReportMeta& meta);
std::string emit_text(const std::vector<ScenarioReport>& reports, const ReportMeta& meta);

}  // namespace verify
