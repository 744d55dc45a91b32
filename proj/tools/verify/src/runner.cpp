#include "verify/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "k3dual/error.hpp"
#include "k3dual/lattice.hpp"
#include "verify/procedures.hpp"

namespace verify {

using namespace k3dual;
using json = nlohmann::ordered_json;
using k3dual::to_string;
using verify::to_string;

namespace {

json valuation(int v) { return v == kInfiniteValuation ? json(nullptr) : json(v); }

json valuations(const LocalValuations& v) {
  return json{{"c4", valuation(v.v4)}, {"c6", valuation(v.v6)}, {"delta", valuation(v.vdelta)}};
}

json fiber_json(const FiberConfiguration& c) {
  json places = json::array();
  for (const auto& p : c.places)
    places.push_back({{"factor", to_string(p.place)},
                      {"valuations", valuations(p.raw)},
                      {"minimal", valuations(p.minimal)},
                      {"type", p.type.name()},
                      {"count", p.root_count}});
  return {{"summary", c.summary()}, {"euler", c.euler_sum}, {"places", places}};
}

json inputs_json(const Instance& in) {
  json j = json::object();
  for (const auto& [k, v] : in) j[k] = v.text;
  return j;
}

json outcome_json(const Outcome& o) {
  json j = json::object();
  if (o.fibers) j["fibers"] = fiber_json(*o.fibers);
  if (o.torsion) j["two_torsion_sections"] = *o.torsion;
  if (o.holds) j["holds"] = *o.holds;
  if (!o.values.empty()) j["values"] = o.values;
  if (!o.failures.empty()) j["failed_identities"] = o.failures;
  return j;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& w : v) s += (s.empty() ? "" : " ") + w;
  return s;
}

// Empty string means the expectation holds.
std::string check(const Expectation& e, const Outcome& o) {
  auto bad = [&](const std::string& got) { return "expect " + e.key + " " + e.raw + ": got " + got; };
  if (e.key == "fibers") {
    if (!o.fibers) return bad("no fiber table");
    std::map<KodairaType, int> want;
    try {
      want = parse_fiber_multiset(e.raw);
    } catch (const Error& err) {
      return bad(err.what());
    }
    return want == o.fibers->counts ? "" : bad(o.fibers->summary());
  }
  if (e.key == "euler") {
    if (!o.fibers) return bad("no fiber table");
    return std::to_string(o.fibers->euler_sum) == e.raw ? "" : bad(std::to_string(o.fibers->euler_sum));
  }
  if (e.key == "torsion") {
    if (!o.torsion) return bad("no torsion count");
    return std::to_string(*o.torsion) == e.raw ? "" : bad(std::to_string(*o.torsion));
  }
  if (e.key == "holds") {
    if (!o.holds) return bad("no identity evaluated");
    return *o.holds ? "" : bad("failed: " + [&] {
      std::string s;
      for (const auto& f : o.failures) s += (s.empty() ? "" : "; ") + f;
      return s;
    }());
  }
  auto it = o.values.find(e.key);
  if (it == o.values.end()) return bad("no such value");
  return it->second == e.raw ? "" : bad(it->second);
}

std::optional<ErrorCode> expected_error(const Scenario& sc) {
  for (const auto& e : sc.expect)
    if (e.key == "error") {
      ErrorCode c;
      if (e.args.size() == 1 && parse_error_code(e.args[0], c)) return c;
    }
  return std::nullopt;
}

void run_lattices(const Scenario& sc, ScenarioReport& r) {
  std::vector<GramLattice> ls;
  json arr = json::array();
  for (const auto& expr : sc.lattices) {
    GramLattice l = parse_lattice(expr);
    TwoElemInvariants inv = two_elementary_invariants(l);
    DiscriminantGroup g = discriminant_group(l);
    json div = json::array();
    for (const auto& d : g.divisors) div.push_back(d.get_str());
    arr.push_back({{"lattice", expr},
                   {"rank", l.rank()},
                   {"det", determinant(l.gram()).get_str()},
                   {"signature", {inv.sig.n_plus, inv.sig.n_minus}},
                   {"discriminant_group", div},
                   {"invariants", to_string(inv)}});
    ls.push_back(std::move(l));
  }
  r.artifacts["lattices"] = arr;
  auto fail_msg = [&](const Expectation& e, const std::string& got) {
    r.messages.push_back("expect " + e.key + " " + e.raw + ": got " + got);
  };
  for (const auto& e : sc.expect) {
    if (e.key == "equivalent" || e.key == "not-equivalent") {
      bool all = true;
      for (size_t i = 1; i < ls.size(); ++i) all = all && nikulin_equivalent(ls[0], ls[i]);
      if (all != (e.key == "equivalent")) fail_msg(e, all ? "equivalent" : "not equivalent");
      continue;
    }
    for (size_t i = 0; i < ls.size(); ++i) {
      const auto& l = ls[i];
      const json& a = arr[i];
      std::string got;
      if (e.key == "det") {
        got = a["det"].get<std::string>();
      } else if (e.key == "rank") {
        got = std::to_string(l.rank());
      } else if (e.key == "signature") {
        Signature s = signature(l);
        got = std::to_string(s.n_plus) + " " + std::to_string(s.n_minus);
      } else if (e.key == "invariants") {
        got = a["invariants"].get<std::string>();
      } else if (e.key == "parity") {
        got = std::to_string(parity(l));
      } else if (e.key == "negative-definite") {
        Signature s = signature(l);
        got = s.n_plus == 0 && s.n_zero == 0 ? "" : "signature " + std::to_string(s.n_plus) + " " +
                                                        std::to_string(s.n_minus);
        if (!got.empty()) fail_msg(e, got);
        continue;
      } else if (e.key == "even") {
        if (!l.is_even()) fail_msg(e, "odd");
        continue;
      } else {
        fail_msg(e, "unknown lattice expectation");
        break;
      }
      if (got != join(e.args)) fail_msg(e, got + " for " + sc.lattices[i]);
    }
  }
  r.status = r.messages.empty() ? Status::Pass : Status::Fail;
}

void run_procedure(const Scenario& sc, const RunOptions& opt, ScenarioReport& r) {
  const Procedure* p = find_procedure(sc.kind, sc.procedure);
  auto want_error = expected_error(sc);
  Rng rng(r.seed);
  r.trials = sc.random ? opt.trials.value_or(sc.trials.value_or(kDefaultTrials)) : 1;
  bool recorded = false;
  int failed_trials = 0;
  for (int t = 0; t < r.trials; ++t) {
    Instance in = sc.inputs;
    Outcome o;
    std::optional<ErrorCode> raised;
    std::string raised_msg;
    for (int draw = 0;; ++draw) {
      if (draw == opt.max_draws_per_trial) {
        r.status = Status::Error;
        r.messages.push_back("no admissible draw after " + std::to_string(draw) + " attempts");
        return;
      }
      if (sc.random) in = sample_instance(*p, sc.inputs, rng);
      raised.reset();
      try {
        if (sc.random && p->general && !want_error && !p->general(in, sc.inputs)) {
          ++r.resamples;
          continue;
        }
        o = p->run(in, sc.model);
      } catch (const Error& e) {
        if (sc.random && !want_error) {
          ++r.resamples;
          continue;
        }
        raised = e.code();
        raised_msg = e.what();
      }
      break;
    }
    std::vector<std::string> msgs;
    if (raised) {
      if (!want_error) {
        r.status = Status::Error;
        r.messages.push_back(raised_msg);
        r.artifacts["inputs"] = inputs_json(in);
        return;
      }
      if (*raised != *want_error) msgs.push_back("expect error " + std::string(to_string(*want_error)) +
                                                 ": got " + raised_msg);
    } else if (want_error) {
      msgs.push_back("expect error " + std::string(to_string(*want_error)) + ": no error raised");
    } else {
      for (const auto& e : sc.expect) {
        if (e.key == "error") continue;
        std::string m = check(e, o);
        if (!m.empty()) msgs.push_back(m);
      }
    }
    if (!msgs.empty()) {
      ++failed_trials;
      if (r.messages.empty())
        for (auto& m : msgs) r.messages.push_back("trial " + std::to_string(t) + ": " + m);
    }
    if (!recorded || (!msgs.empty() && failed_trials == 1)) {
      r.artifacts["inputs"] = inputs_json(in);
      if (raised) r.artifacts["error"] = raised_msg;
      else r.artifacts["outcome"] = outcome_json(o);
      if (!msgs.empty()) r.artifacts["failing_trial"] = t;
      recorded = true;
    }
  }
  if (failed_trials) {
    r.status = Status::Fail;
    r.messages.push_back(std::to_string(failed_trials) + " of " + std::to_string(r.trials) + " trials failed");
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

uint64_t scenario_seed(uint64_t seed, const std::string& name) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  uint64_t z = seed ^ h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ScenarioReport run(const Scenario& sc, const RunOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ScenarioReport r;
  r.name = sc.name;
  r.kind = to_string(sc.kind);
  r.procedure = sc.procedure;
  r.model = sc.model;
  r.path = sc.path;
  r.random = sc.random;
  r.artifacts = json::object();
  if (sc.random) r.seed = scenario_seed(opt.seed, sc.name);
  try {
    if (sc.kind == ScenarioKind::LatticeIdentity) run_lattices(sc, r);
    else run_procedure(sc, opt, r);
  } catch (const Error& e) {
    r.status = Status::Error;
    r.messages.push_back(e.what());
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.messages.push_back(std::string("internal: ") + e.what());
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<ScenarioReport> run_all(const std::vector<Scenario>& scenarios, const RunOptions& opt,
                                    unsigned threads) {
  std::vector<ScenarioReport> out(scenarios.size());
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i)
    pool.emplace_back([&] {
      for (size_t k; (k = next++) < scenarios.size();) out[k] = run(scenarios[k], opt);
    });
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::string emit_json(const std::vector<ScenarioReport>& reports, const ReportMeta& meta) {
  json doc;
  doc["schema_version"] = 1;
  doc["seed"] = meta.seed;
  if (meta.trials) doc["trials"] = *meta.trials;
  else doc["trials"] = nullptr;
  int pass = 0, fail = 0, err = 0;
  json arr = json::array();
  for (const auto& r : reports) {
    json s;
    s["name"] = r.name;
    s["kind"] = r.kind;
    if (!r.procedure.empty()) s["procedure"] = r.procedure;
    if (!r.model.empty()) s["model"] = r.model;
    s["status"] = to_string(r.status);
    if (r.random) {
      s["seed"] = r.seed;
      s["trials"] = r.trials;
      s["resamples"] = r.resamples;
    }
    s["messages"] = r.messages;
    s["artifacts"] = r.artifacts;
    arr.push_back(std::move(s));
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : err)++;
  }
  doc["summary"] = {{"total", reports.size()}, {"pass", pass}, {"fail", fail}, {"error", err}};
  doc["scenarios"] = arr;
  return doc.dump(2) + "\n";
}

namespace {

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string val_text(const json& v) {
  auto one = [](const json& x) { return x.is_null() ? std::string("inf") : std::to_string(x.get<int>()); };
  return "(" + one(v["c4"]) + "," + one(v["c6"]) + "," + one(v["delta"]) + ")";
}

}  // namespace

std::string emit_text(const std::vector<ScenarioReport>& reports, const ReportMeta& meta) {
  std::string out;
  int pass = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Pass) ++pass;
    std::string head = pad(to_string(r.status), 6) + r.name + "  [" + r.kind;
    if (!r.procedure.empty()) head += " " + r.procedure;
    if (!r.model.empty()) head += " " + r.model;
    head += "]";
    if (r.random)
      head += "  trials=" + std::to_string(r.trials) + " resamples=" + std::to_string(r.resamples) +
              " seed=" + std::to_string(r.seed);
    char ms[32];
    std::snprintf(ms, sizeof ms, "  %.1f ms", r.wall_ms);
    out += head + ms + "\n";
    for (const auto& m : r.messages) out += "      " + m + "\n";
    const json& a = r.artifacts;
    if (a.contains("outcome") && a["outcome"].contains("fibers")) {
      const json& f = a["outcome"]["fibers"];
      size_t w = 6;
      for (const auto& p : f["places"]) w = std::max(w, p["factor"].get<std::string>().size());
      out += "      " + pad("factor", w) + "  " + pad("v(c4,c6,D)", 14) + pad("type", 6) + "count\n";
      for (const auto& p : f["places"])
        out += "      " + pad(p["factor"].get<std::string>(), w) + "  " + pad(val_text(p["valuations"]), 14) +
               pad(p["type"].get<std::string>(), 6) + std::to_string(p["count"].get<int>()) + "\n";
      out += "      total " + f["summary"].get<std::string>() + ", euler " + std::to_string(f["euler"].get<int>()) +
             "\n";
    }
    if (a.contains("lattices"))
      for (const auto& l : a["lattices"])
        out += "      " + l["lattice"].get<std::string>() + "  " + l["invariants"].get<std::string>() + "\n";
  }
  out += std::to_string(pass) + "/" + std::to_string(reports.size()) + " scenarios passed (seed " +
         std::to_string(meta.seed) + ")\n";
  return out;
}

}  // namespace verify
