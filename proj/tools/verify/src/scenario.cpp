#include "verify/scenario.hpp"

#include <fstream>
#include <sstream>

#include "k3dual/error.hpp"
#include "k3dual/parse.hpp"
#include "verify/procedures.hpp"

namespace verify {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool parse_kind(const std::string& s, ScenarioKind& k) {
  static const std::pair<const char*, ScenarioKind> kinds[] = {
      {"fiber-config", ScenarioKind::FiberConfig},
      {"lattice-identity", ScenarioKind::LatticeIdentity},
      {"hermite-identity", ScenarioKind::HermiteIdentity},
      {"construction-roundtrip", ScenarioKind::ConstructionRoundtrip},
      {"table-consistency", ScenarioKind::TableConsistency},
  };
  for (const auto& [name, kind] : kinds)
    if (s == name) {
      k = kind;
      return true;
    }
  return false;
}

class Parser {
 public:
  Parser(const std::string& origin) : origin_(origin) {}

  [[noreturn]] void error(const std::string& what, int column = 1) {
    throw ScenarioError(origin_, line_, column, what);
  }

  Scenario run(const std::string& text) {
    Scenario sc;
    sc.path = origin_;
    std::istringstream is(text);
    bool have_kind = false;
    for (std::string raw; std::getline(is, raw);) {
      ++line_;
      std::string l = trim(raw.substr(0, raw.find('#')));
      if (l.empty()) continue;
      size_t sp = l.find_first_of(" \t");
      std::string key = l.substr(0, sp);
      std::string rest = sp == std::string::npos ? "" : trim(l.substr(sp));
      int rest_col = static_cast<int>(raw.find(rest)) + 1;

      if (key == "scenario") {
        if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) error("scenario needs one name");
        sc.name = rest;
      } else if (key == "kind") {
        if (!parse_kind(rest, sc.kind)) error("unknown kind '" + rest + "'", rest_col);
        have_kind = true;
      } else if (key == "family" || key == "check") {
        if (!have_kind) error("kind must precede " + key);
        if (sc.kind == ScenarioKind::LatticeIdentity) error("lattice scenarios take no " + key);
        if ((key == "family") != (sc.kind == ScenarioKind::FiberConfig))
          error(key == "family" ? "family is only valid for fiber-config" : "fiber-config uses family, not check");
        proc_ = find_procedure(sc.kind, rest);
        if (!proc_) error("unknown " + key + " '" + rest + "'", rest_col);
        sc.procedure = rest;
      } else if (key == "model") {
        if (!proc_) error("model before family");
        bool ok = false;
        for (const auto& m : proc_->models) ok = ok || m == rest;
        if (!ok) error("family '" + proc_->name + "' has no model '" + rest + "'", rest_col);
        sc.model = rest;
      } else if (key == "random") {
        if (!rest.empty()) error("random takes no argument");
        sc.random = true;
      } else if (key == "trials") {
        int n = 0;
        try {
          n = std::stoi(rest);
        } catch (const std::exception&) {
          error("trials needs a positive integer", rest_col);
        }
        if (n <= 0) error("trials needs a positive integer", rest_col);
        sc.trials = n;
      } else if (key == "poly" || key == "rational" || key == "list") {
        input(sc, key, rest, rest_col);
      } else if (key == "lattice") {
        if (sc.kind != ScenarioKind::LatticeIdentity) error("lattice lines need kind lattice-identity");
        if (rest.empty()) error("empty lattice expression");
        sc.lattices.push_back(rest);
      } else if (key == "expect") {
        auto words = split_ws(rest);
        if (words.empty()) error("expect needs a key");
        Expectation e;
        e.key = words[0];
        e.args.assign(words.begin() + 1, words.end());
        e.raw = trim(rest.substr(e.key.size()));
        e.line = line_;
        k3dual::ErrorCode code;
        if (e.key == "error" && (e.args.size() != 1 || !k3dual::parse_error_code(e.args[0], code)))
          error("expect error needs one known error code", rest_col);
        sc.expect.push_back(std::move(e));
      } else {
        error("unknown keyword '" + key + "'");
      }
    }
    if (sc.name.empty()) error("missing scenario name");
    if (!have_kind) error("missing kind");
    if (sc.kind != ScenarioKind::LatticeIdentity && !proc_) error("missing family or check");
    if (sc.kind == ScenarioKind::LatticeIdentity && sc.lattices.empty()) error("no lattice given");
    if (proc_ && !proc_->models.empty() && sc.model.empty()) error("family '" + proc_->name + "' needs a model");
    if (sc.expect.empty()) error("no expectation");
    if (proc_ && !sc.random)
      for (const auto& s : proc_->inputs)
        if (!sc.inputs.count(s.name)) error("input '" + s.name + "' missing and scenario is not random");
    return sc;
  }

 private:
  void input(Scenario& sc, const std::string& key, const std::string& rest, int col) {
    if (!proc_) error("inputs must follow family or check");
    size_t eq = rest.find('=');
    if (eq == std::string::npos) error("expected '=' in " + key + " line", col);
    auto head = split_ws(rest.substr(0, eq));
    std::string body = trim(rest.substr(eq + 1));
    int body_col = col + static_cast<int>(rest.find(body, eq + 1));
    if (head.empty()) error("missing input name", col);
    const InputSpec* spec = nullptr;
    for (const auto& s : proc_->inputs)
      if (s.name == head[0]) spec = &s;
    if (!spec) error("'" + proc_->name + "' has no input '" + head[0] + "'", col);
    if (sc.inputs.count(head[0])) error("input '" + head[0] + "' given twice", col);
    try {
      if (key == "poly") {
        if (spec->type != InputValue::Type::Poly) error("input '" + head[0] + "' is not a polynomial", col);
        if (head.size() != 2) error("poly line needs NAME DEGREE", col);
        int d = std::stoi(head[1]);
        if (d != spec->size)
          error("DegreeMismatch: input '" + head[0] + "' has degree " + std::to_string(spec->size), col);
        HomPoly p = k3dual::parse_hompoly(body, spec->vars, d);
        InputValue v = make_value(*spec, p);
        v.text = body;
        sc.inputs[head[0]] = v;
      } else if (key == "rational") {
        if (spec->type != InputValue::Type::Rational) error("input '" + head[0] + "' is not a rational", col);
        InputValue v = make_value(k3dual::parse_rational(body));
        v.text = body;
        sc.inputs[head[0]] = v;
      } else {
        if (spec->type != InputValue::Type::List) error("input '" + head[0] + "' is not a list", col);
        std::vector<Rational> xs;
        for (const auto& w : split_ws(body)) xs.push_back(k3dual::parse_rational(w));
        if (static_cast<int>(xs.size()) != spec->size)
          error("list '" + head[0] + "' needs " + std::to_string(spec->size) + " entries", body_col);
        sc.inputs[head[0]] = make_value(std::move(xs));
      }
    } catch (const k3dual::Error& e) {
      error(e.what(), body_col);
    } catch (const std::invalid_argument&) {
      error("bad degree", col);
    }
  }

  std::string origin_;
  int line_ = 0;
  const Procedure* proc_ = nullptr;
};

}  // namespace

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::FiberConfig: return "fiber-config";
    case ScenarioKind::LatticeIdentity: return "lattice-identity";
    case ScenarioKind::HermiteIdentity: return "hermite-identity";
    case ScenarioKind::ConstructionRoundtrip: return "construction-roundtrip";
    case ScenarioKind::TableConsistency: return "table-consistency";
  }
  return "?";
}

ScenarioError::ScenarioError(const std::string& origin, int line, int column, const std::string& what)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line) {}

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
  return Parser(origin).run(text);
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path, 0, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str(), path);
}

}  // namespace verify
