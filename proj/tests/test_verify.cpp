#include <algorithm>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "k3dual/error.hpp"
#include "verify/procedures.hpp"
#include "verify/runner.hpp"

using namespace verify;
using nlohmann::json;

namespace {

std::vector<Scenario> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(K3DUAL_SCENARIO_DIR))
    if (e.path().extension() == ".scn") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Scenario> out;
  for (const auto& f : files) out.push_back(parse_scenario(f.string()));
  return out;
}

Scenario find(const std::vector<Scenario>& all, const std::string& name) {
  for (const auto& s : all)
    if (s.name == name) return s;
  FAIL("missing scenario " << name);
  return {};
}

}  // namespace

TEST_CASE("scenario parser") {
  Scenario s = parse_scenario_text(
      "scenario alt\nkind fiber-config\nfamily alternate\nmodel X\n"
      "poly A 4 = s^4\npoly B 8 = s^8 - t^8\nexpect fibers 8*I2 + 8*I1\n");
  CHECK(s.name == "alt");
  CHECK(s.kind == ScenarioKind::FiberConfig);
  CHECK(s.procedure == "alternate");
  CHECK(s.model == "X");
  CHECK(s.inputs.at("B").poly.degree() == 8);
  REQUIRE(s.expect.size() == 1);
  CHECK(s.expect[0].key == "fibers");
  CHECK(s.expect[0].raw == "8*I2 + 8*I1");
  CHECK_FALSE(s.random);

  Scenario l = parse_scenario_text("scenario l\nkind lattice-identity\nlattice H + E8(-2)\nlattice H(2) + N\n"
                                   "expect equivalent\n");
  CHECK(l.lattices == std::vector<std::string>{"H + E8(-2)", "H(2) + N"});

  CHECK_THROWS_AS(parse_scenario_text("scenario x\nkind fiber-config\nfamily alternate\npoly A 4 = s^4 + t^3\n"),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("scenario x\nkind nonsense\n"), ScenarioError);
  try {
    parse_scenario_text("scenario x\nkind fiber-config\nbogus line\n");
    FAIL("accepted");
  } catch (const ScenarioError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("the whole corpus parses and every scenario names a known procedure") {
  auto all = corpus();
  CHECK(all.size() >= 60);
  std::set<std::string> names;
  for (const auto& s : all) {
    CAPTURE(s.name);
    CHECK(names.insert(s.name).second);
    if (s.kind != ScenarioKind::LatticeIdentity) CHECK(find_procedure(s.kind, s.procedure) != nullptr);
  }
}

TEST_CASE("fixed scenario report") {
  auto all = corpus();
  ScenarioReport r = run(find(all, "alternate-fibration-fixed"), {});
  CHECK(r.status == Status::Pass);
  CHECK_FALSE(r.random);
  json doc = json::parse(emit_json({r}, {}));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["summary"]["pass"] == 1);
  const json& sc = doc["scenarios"][0];
  CHECK_FALSE(sc.contains("seed"));
  const json& f = sc["artifacts"]["outcome"]["fibers"];
  CHECK(f["summary"] == "8*I2 + 8*I1");
  CHECK(f["euler"] == 24);
  int count = 0;
  for (const auto& p : f["places"]) {
    CHECK(p.contains("factor"));
    CHECK(p.contains("valuations"));
    CHECK(p.contains("minimal"));
    CHECK(p.contains("type"));
    count += p["count"].get<int>();
  }
  CHECK(count == 16);
}

TEST_CASE("an empty report is valid JSON") {
  json doc = json::parse(emit_json({}, {}));
  CHECK(doc["summary"]["total"] == 0);
  CHECK(doc["scenarios"].empty());
  CHECK(doc["trials"].is_null());
}

TEST_CASE("a wrong expectation fails with a message") {
  Scenario s = parse_scenario_text(
      "scenario w\nkind fiber-config\nfamily alternate\nmodel X\n"
      "poly A 4 = s^4\npoly B 8 = s^8 - t^8\nexpect fibers 24*I1\n");
  ScenarioReport r = run(s, {});
  CHECK(r.status == Status::Fail);
  CHECK_FALSE(r.messages.empty());
}

TEST_CASE("scenario seeds mix the global seed and the name") {
  CHECK(scenario_seed(7, "a") == scenario_seed(7, "a"));
  CHECK(scenario_seed(7, "a") != scenario_seed(7, "b"));
  CHECK(scenario_seed(7, "a") != scenario_seed(8, "a"));
}

TEST_CASE("reports do not depend on the thread count") {
  auto all = corpus();
  std::vector<Scenario> pick;
  for (const char* n : {"alternate-fibration", "base-change-generic", "moduli-involution-twice", "e8-nikulin-exchange",
                        "twist-generic", "section-shadow"})
    pick.push_back(find(all, n));
  RunOptions opt;
  opt.seed = 7;
  opt.trials = 5;
  ReportMeta meta{7, 5};
  std::string one = emit_json(run_all(pick, opt, 1), meta);
  std::string four = emit_json(run_all(pick, opt, 4), meta);
  CHECK(one == four);
  json doc = json::parse(one);
  CHECK(doc["summary"]["pass"] == 6);
  for (const auto& s : doc["scenarios"])
    if (s.contains("trials")) CHECK(s["trials"] == 5);
}
