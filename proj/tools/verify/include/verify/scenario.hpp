#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3dual/hompoly.hpp"

namespace verify {

using k3dual::HomPoly;
using k3dual::Rational;

enum class ScenarioKind {
  FiberConfig,
  LatticeIdentity,
  HermiteIdentity,
  ConstructionRoundtrip,
  TableConsistency,
};

std::string to_string(ScenarioKind k);

struct InputValue {
  enum class Type { Poly, Rational, List } type = Type::Rational;
  HomPoly poly;
  Rational scalar;
  std::vector<Rational> list;
  std::string text;  // as written, for reports
};

struct Expectation {
  std::string key;                 // fibers, euler, error, holds, equivalent, ...
  std::vector<std::string> args;   // whitespace-split remainder
  std::string raw;                 // remainder as written
  int line = 0;
};

struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::FiberConfig;
  std::string procedure;  // family for fiber-config, check name otherwise
  std::string model;      // optional model selector inside a family
  std::map<std::string, InputValue> inputs;
  std::vector<std::string> lattices;  // lattice expressions, in order
  std::vector<Expectation> expect;
  bool random = false;
  std::optional<int> trials;
  std::string path;
};

// Raised for malformed files; the CLI maps it to exit code 2.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& origin, int line, int column, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<text>");
Scenario parse_scenario(const std::string& path);

}  // namespace verify
