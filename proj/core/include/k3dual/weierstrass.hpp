#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3dual/hompoly.hpp"

namespace k3dual {

// y^2 = x^3 + a2 x^2 + a4 x + a6 over P^1 with deg a_i = 2i * weight / 2.
// Weight 0 gives a single curve over Q.
struct WeierstrassModel {
  HomPoly a2, a4, a6;
  int weight = 0;

  static WeierstrassModel make(HomPoly a2, HomPoly a4, HomPoly a6, int weight);
  static WeierstrassModel short_form(const HomPoly& f, const HomPoly& g, int weight);
  VarPair vars() const { return a4.vars(); }
};

struct ModelInvariants {
  HomPoly c4, c6, delta;
};

ModelInvariants invariants(const WeierstrassModel& m);

// j = c4^3 / delta for a constant model; throws SingularCurve when delta = 0.
Rational j_invariant(const WeierstrassModel& m);

enum class KodairaFamily { I, IStar, II, III, IV, IVStar, IIIStar, IIStar };

struct KodairaType {
  KodairaFamily family = KodairaFamily::I;
  int n = 0;

  int euler_number() const;
  std::string name() const;
  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;
};

bool parse_kodaira(std::string_view name, KodairaType& out);

struct LocalValuations {
  int v4 = 0, v6 = 0, vdelta = 0;  // kInfiniteValuation for identically zero
  friend bool operator==(const LocalValuations&, const LocalValuations&) = default;
};

// Throws InconsistentValuations or NonMinimal outside the minimal table.
KodairaType kodaira_from_valuations(const LocalValuations& v);

LocalValuations valuations_at(const WeierstrassModel& m, const HomPoly& place);
// Valuations after repeatedly removing (4, 6, 12).
LocalValuations minimalize_at(const WeierstrassModel& m, const HomPoly& place);

struct FiberPlace {
  HomPoly place;  // squarefree form; all its roots carry the same data
  int root_count = 0;
  LocalValuations raw;
  LocalValuations minimal;
  KodairaType type;
};

struct FiberConfiguration {
  std::vector<FiberPlace> places;
  std::map<KodairaType, int> counts;  // fibers counted with multiplicity over Qbar
  int euler_sum = 0;
  int delta_degree = 0;

  bool is_k3() const;
  // e.g. "8*I2 + 8*I1"
  std::string summary() const;
};

// Throws DegenerateModel when the discriminant vanishes identically.
FiberConfiguration fiber_configuration(const WeierstrassModel& m);

std::map<KodairaType, int> parse_fiber_multiset(std::string_view text);
std::string format_fiber_multiset(const std::map<KodairaType, int>& counts);

// Forms X of degree 2w with X^3 + a2 X^2 + a4 X + a6 = 0.
std::vector<HomPoly> two_torsion_sections(const WeierstrassModel& m);

// (d a2, d^2 a4, d^3 a6); deg d must be even.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const HomPoly& d);
// x -> -x, i.e. (-a2, a4, -a6).
WeierstrassModel negate_x(const WeierstrassModel& m);

}  // namespace k3dual
