#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "k3dual/weierstrass.hpp"
#include "verify/scenario.hpp"

namespace verify {

using Instance = std::map<std::string, InputValue>;

struct InputSpec {
  std::string name;
  InputValue::Type type = InputValue::Type::Rational;
  int size = 0;  // degree for polys, length for lists
  k3dual::VarPair vars;
};

// Result of running a procedure on one instance.
struct Outcome {
  std::optional<k3dual::FiberConfiguration> fibers;
  std::optional<int> torsion;
  std::optional<bool> holds;
  std::map<std::string, std::string> values;
  std::vector<std::string> failures;  // named sub-identities that did not hold
};

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  Rational coeff() { return Rational(std::uniform_int_distribution<int>(-9, 9)(gen_)); }
  Rational nonzero();
  HomPoly poly(int degree, const k3dual::VarPair& vars);
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct Procedure {
  ScenarioKind kind;
  std::string name;
  std::vector<InputSpec> inputs;
  std::vector<std::string> models;  // empty: no selector
  // Fills inputs the scenario left open; default draws every coefficient from {-9..9}.
  std::function<void(Instance&, Rng&)> sample;
  // General-position gate for random draws; false means re-sample. `pinned` holds the
  // inputs the scenario fixed.
  std::function<bool(const Instance& in, const Instance& pinned)> general;
  std::function<Outcome(const Instance&, const std::string& model)> run;
};

const Procedure* find_procedure(ScenarioKind kind, const std::string& name);
std::vector<const Procedure*> all_procedures();

// Fill every input that `fixed` does not pin down.
Instance sample_instance(const Procedure& p, const Instance& fixed, Rng& rng);
InputValue make_value(const InputSpec& spec, const HomPoly& p);
InputValue make_value(const Rational& q);
InputValue make_value(std::vector<Rational> list);

}  // namespace verify
