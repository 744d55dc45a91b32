#include "k3dual/weierstrass.hpp"

#include "k3dual/error.hpp"

namespace k3dual {

namespace {

void check_degree(const HomPoly& p, int expected, const char* name) {
  if (p.degree() != expected)
    fail(ErrorCode::DegreeMismatch, std::string(name) + " has degree " + std::to_string(p.degree()) +
                                        ", expected " + std::to_string(expected));
}

}  // namespace

WeierstrassModel WeierstrassModel::make(HomPoly a2, HomPoly a4, HomPoly a6, int weight) {
  if (weight < 0) fail(ErrorCode::DegreeTooLow, "negative weight");
  check_degree(a2, 2 * weight, "a2");
  check_degree(a4, 4 * weight, "a4");
  check_degree(a6, 6 * weight, "a6");
  VarPair v = a4.vars();
  return {a2.with_vars(v), std::move(a4), a6.with_vars(v), weight};
}

WeierstrassModel WeierstrassModel::short_form(const HomPoly& f, const HomPoly& g, int weight) {
  return make(HomPoly::zero(2 * weight, f.vars()), f, g, weight);
}

ModelInvariants invariants(const WeierstrassModel& m) {
  HomPoly a2sq = m.a2 * m.a2;
  HomPoly c4 = Rational(16) * (a2sq - Rational(3) * m.a4);
  HomPoly c6 = Rational(-32) * (Rational(2) * (a2sq * m.a2) - Rational(9) * (m.a2 * m.a4) +
                                Rational(27) * m.a6);
  HomPoly delta = (c4 * c4 * c4 - c6 * c6) * Rational(1, 1728);
  return {c4, c6, delta};
}

Rational j_invariant(const WeierstrassModel& m) {
  if (m.weight != 0) fail(ErrorCode::DegreeMismatch, "j-invariant needs a constant model");
  auto inv = invariants(m);
  Rational d = inv.delta.coeff(0);
  if (sgn(d) == 0) fail(ErrorCode::SingularCurve, "discriminant vanishes");
  Rational c4 = inv.c4.coeff(0);
  return c4 * c4 * c4 / d;
}

int KodairaType::euler_number() const {
  switch (family) {
    case KodairaFamily::I: return n;
    case KodairaFamily::IStar: return n + 6;
    case KodairaFamily::II: return 2;
    case KodairaFamily::III: return 3;
    case KodairaFamily::IV: return 4;
    case KodairaFamily::IVStar: return 8;
    case KodairaFamily::IIIStar: return 9;
    case KodairaFamily::IIStar: return 10;
  }
  return 0;
}

std::string KodairaType::name() const {
  switch (family) {
    case KodairaFamily::I: return "I" + std::to_string(n);
    case KodairaFamily::IStar: return "I" + std::to_string(n) + "*";
    case KodairaFamily::II: return "II";
    case KodairaFamily::III: return "III";
    case KodairaFamily::IV: return "IV";
    case KodairaFamily::IVStar: return "IV*";
    case KodairaFamily::IIIStar: return "III*";
    case KodairaFamily::IIStar: return "II*";
  }
  return "?";
}

bool parse_kodaira(std::string_view s, KodairaType& out) {
  static const std::pair<std::string_view, KodairaFamily> fixed[] = {
      {"II*", KodairaFamily::IIStar}, {"III*", KodairaFamily::IIIStar},
      {"IV*", KodairaFamily::IVStar}, {"II", KodairaFamily::II},
      {"III", KodairaFamily::III},    {"IV", KodairaFamily::IV}};
  for (const auto& [name, fam] : fixed) {
    if (s == name) {
      out = {fam, 0};
      return true;
    }
  }
  if (s.size() < 2 || s[0] != 'I') return false;
  bool star = s.back() == '*';
  std::string_view digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
  if (digits.empty()) return false;
  int n = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
    n = n * 10 + (c - '0');
  }
  out = {star ? KodairaFamily::IStar : KodairaFamily::I, n};
  return true;
}

KodairaType kodaira_from_valuations(const LocalValuations& v) {
  constexpr long long inf = kInfiniteValuation;
  auto scaled = [&](int x, long long k) { return x == kInfiniteValuation ? inf * 4 : k * x; };
  long long a = scaled(v.v4, 3), b = scaled(v.v6, 2);
  long long m = std::min(a, b);
  auto tuple = "(" + std::to_string(v.v4) + ", " + std::to_string(v.v6) + ", " +
               std::to_string(v.vdelta) + ")";
  if (v.vdelta < 0 || v.v4 < 0 || v.v6 < 0 || v.vdelta == kInfiniteValuation)
    fail(ErrorCode::InconsistentValuations, "valuations " + tuple);
  if (a != b ? v.vdelta != m : v.vdelta < m)
    fail(ErrorCode::InconsistentValuations, "valuations " + tuple);
  if (v.v4 >= 4 && v.v6 >= 6 && v.vdelta >= 12)
    fail(ErrorCode::NonMinimal, "valuations " + tuple);
  int d = v.vdelta;
  if (d == 0) return {KodairaFamily::I, 0};
  if (v.v4 == 0) return {KodairaFamily::I, d};
  if (v.v6 == 1 && d == 2) return {KodairaFamily::II, 0};
  if (v.v4 == 1 && v.v6 >= 2 && d == 3) return {KodairaFamily::III, 0};
  if (v.v4 >= 2 && v.v6 == 2 && d == 4) return {KodairaFamily::IV, 0};
  if (v.v4 == 2 && v.v6 == 3 && d >= 6) return {KodairaFamily::IStar, d - 6};
  if (v.v4 >= 2 && v.v6 >= 3 && d == 6) return {KodairaFamily::IStar, 0};
  if (v.v4 >= 3 && v.v6 == 4 && d == 8) return {KodairaFamily::IVStar, 0};
  if (v.v4 == 3 && v.v6 >= 5 && d == 9) return {KodairaFamily::IIIStar, 0};
  if (v.v4 >= 4 && v.v6 == 5 && d == 10) return {KodairaFamily::IIStar, 0};
  fail(ErrorCode::InconsistentValuations, "valuations " + tuple);
}

LocalValuations valuations_at(const WeierstrassModel& m, const HomPoly& place) {
  auto inv = invariants(m);
  return {valuation(inv.c4, place), valuation(inv.c6, place), valuation(inv.delta, place)};
}

LocalValuations minimalize_at(const WeierstrassModel& m, const HomPoly& place) {
  LocalValuations v = valuations_at(m, place);
  auto dec = [](int& x, int by) {
    if (x != kInfiniteValuation) x -= by;
  };
  while (v.v4 >= 4 && v.v6 >= 6 && v.vdelta >= 12) {
    if (v.vdelta == kInfiniteValuation) break;
    dec(v.v4, 4);
    dec(v.v6, 6);
    dec(v.vdelta, 12);
  }
  return v;
}

bool FiberConfiguration::is_k3() const { return euler_sum == 24 && delta_degree == 24; }

std::string FiberConfiguration::summary() const { return format_fiber_multiset(counts); }

FiberConfiguration fiber_configuration(const WeierstrassModel& m) {
  auto inv = invariants(m);
  if (inv.delta.is_zero()) fail(ErrorCode::DegenerateModel, "discriminant vanishes identically");
  FiberConfiguration out;
  out.delta_degree = inv.delta.degree();
  SquarefreeSplit split = squarefree_split(inv.delta);
  split = refine_against(refine_against(split, inv.c4), inv.c6);
  for (const auto& [f, mult] : split.factors) {
    FiberPlace p;
    p.place = f;
    p.root_count = f.degree();
    p.raw = {valuation(inv.c4, f), valuation(inv.c6, f), mult};
    p.minimal = p.raw;
    while (p.minimal.v4 >= 4 && p.minimal.v6 >= 6 && p.minimal.vdelta >= 12) {
      if (p.minimal.v4 != kInfiniteValuation) p.minimal.v4 -= 4;
      if (p.minimal.v6 != kInfiniteValuation) p.minimal.v6 -= 6;
      p.minimal.vdelta -= 12;
    }
    p.type = kodaira_from_valuations(p.minimal);
    if (p.type.family == KodairaFamily::I && p.type.n == 0) continue;
    out.counts[p.type] += p.root_count;
    out.euler_sum += p.root_count * p.type.euler_number();
    out.places.push_back(std::move(p));
  }
  return out;
}

std::string format_fiber_multiset(const std::map<KodairaType, int>& counts) {
  std::vector<std::pair<KodairaType, int>> v(counts.begin(), counts.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first.euler_number() != y.first.euler_number())
      return x.first.euler_number() > y.first.euler_number();
    return x.first.family < y.first.family;
  });
  std::string s;
  for (const auto& [t, c] : v) {
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += t.name();
  }
  return s.empty() ? "none" : s;
}

std::map<KodairaType, int> parse_fiber_multiset(std::string_view text) {
  std::map<KodairaType, int> out;
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s == "none") return out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    int count = 1;
    size_t star = term.find('*');
    if (star != std::string::npos && star > 0 && std::isdigit(static_cast<unsigned char>(term[0]))) {
      count = std::stoi(term.substr(0, star));
      term = term.substr(star + 1);
    }
    KodairaType t;
    if (!parse_kodaira(term, t)) fail(ErrorCode::ParseError, "unknown fiber type '" + term + "'");
    out[t] += count;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<HomPoly> two_torsion_sections(const WeierstrassModel& m) {
  auto inv = invariants(m);
  if (inv.delta.is_zero()) fail(ErrorCode::DegenerateModel, "discriminant vanishes identically");
  UniPoly dd = inv.delta.dehomogenize();
  Rational s0 = 0;
  for (int k = 1; sgn(dd.eval(s0)) == 0; ++k) s0 = (k % 2 ? 1 : -1) * Rational((k + 1) / 2);
  int N = 2 * m.weight;
  UniPoly shift({s0, 1});
  UniPoly A2 = m.a2.dehomogenize().compose(shift);
  UniPoly A4 = m.a4.dehomogenize().compose(shift);
  UniPoly A6 = m.a6.dehomogenize().compose(shift);
  auto F = [&](const UniPoly& X) { return ((X + A2) * X + A4) * X + A6; };
  UniPoly cubic({A6.coeff(0), A4.coeff(0), A2.coeff(0), 1});
  std::vector<HomPoly> out;
  for (const auto& r : rational_roots(cubic)) {
    Rational deriv = 3 * r * r + 2 * A2.coeff(0) * r + A4.coeff(0);
    std::vector<Rational> xs{r};
    for (int j = 1; j <= N; ++j) {
      xs.push_back(0);
      Rational cj = F(UniPoly(xs)).coeff(j);
      xs.back() = -cj / deriv;
    }
    UniPoly X = UniPoly(xs).compose(UniPoly({-s0, 1}));
    if (X.degree() > N) continue;
    HomPoly h = HomPoly::homogenize(X, N, m.vars());
    HomPoly val = ((h + m.a2) * h + m.a4) * h + m.a6;
    if (val.is_zero()) out.push_back(h);
  }
  return out;
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const HomPoly& d) {
  if (d.degree() % 2 != 0) fail(ErrorCode::DegreeMismatch, "twisting form must have even degree");
  HomPoly dv = d.with_vars(m.vars());
  HomPoly d2 = dv * dv;
  return WeierstrassModel::make(dv * m.a2, d2 * m.a4, d2 * dv * m.a6, m.weight + d.degree() / 2);
}

WeierstrassModel negate_x(const WeierstrassModel& m) {
  return WeierstrassModel::make(-m.a2, m.a4, -m.a6, m.weight);
}

}  // namespace k3dual
