#include "k3dual/duality.hpp"

#include "k3dual/error.hpp"

namespace k3dual {

namespace {

const VarPair kUV{"U", "V"};
const VarPair kLowerUV{"u", "v"};

void check_units(const Rational& d0, const Rational& dinf) {
  if (d0 * dinf == 1) fail(ErrorCode::UnitViolation, "d0 * d_inf = 1");
}

void check_branch_fibers(const WeierstrassModel& m, const Rational& d0, const Rational& dinf) {
  HomPoly disc = invariants(m).delta;
  if (disc.is_zero()) fail(ErrorCode::DegenerateModel, "discriminant vanishes identically");
  const std::pair<Rational, Rational> pts[] = {{d0, 1}, {1, dinf}, {1, 1}};
  const char* names[] = {"[d0:1]", "[1:d_inf]", "[1:1]"};
  for (int i = 0; i < 3; ++i)
    if (disc.eval(pts[i].first, pts[i].second) == 0)
      fail(ErrorCode::SingularBranchFiber, std::string("singular fiber over ") + names[i]);
}

WeierstrassModel in_uv(const WeierstrassModel& m) {
  if (m.weight != 1) fail(ErrorCode::DegreeMismatch, "expected a rational elliptic surface");
  return {m.a2.with_vars(kUV), m.a4.with_vars(kUV), m.a6.with_vars(kUV), 1};
}

HomPoly form2(const Rational& a, const Rational& b, const Rational& c, const VarPair& v) {
  return HomPoly(2, {a, b, c}, v);
}

std::optional<Rational> rational_cbrt(const Rational& q) {
  Integer n = q.get_num(), d = q.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3))
    return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// Ratio of the first nonzero coefficient of b to the matching one of a.
std::optional<Rational> lead_ratio(const HomPoly& a, const HomPoly& b) {
  int k = a.ord_second();
  if (k == kInfiniteValuation) return std::nullopt;
  return b.coeff(k) / a.coeff(k);
}

}  // namespace

WeierstrassModel RESData::model() const { return WeierstrassModel::short_form(f, g, 1); }

WeierstrassModel base_change_k3(const WeierstrassModel& r0, const Rational& d0, const Rational& dinf) {
  check_units(d0, dinf);
  if ((1 - d0) * (1 - dinf) == 0)
    fail(ErrorCode::UnitViolation, "branch point image coincides with [1:1]");
  WeierstrassModel r = in_uv(r0);
  check_branch_fibers(r, d0, dinf);
  HomPoly U = form2(1 - d0, 0, d0 * (1 - dinf), kLowerUV);
  HomPoly V = form2(dinf * (1 - d0), 0, 1 - dinf, kLowerUV);
  return WeierstrassModel::make(r.a2.substitute(U, V), r.a4.substitute(U, V), r.a6.substitute(U, V), 2);
}

WeierstrassModel base_change_k3(const RESData& r, const Rational& d0, const Rational& dinf) {
  return base_change_k3(r.model(), d0, dinf);
}

WeierstrassModel twist_model(const WeierstrassModel& r0, const Rational& d0, const Rational& dinf) {
  check_units(d0, dinf);
  WeierstrassModel r = in_uv(r0);
  check_branch_fibers(r, d0, dinf);
  HomPoly d = HomPoly::linear(1, -d0, kUV) * HomPoly::linear(dinf, -1, kUV);
  return quadratic_twist(r, d);
}

WeierstrassModel twist_model(const RESData& r, const Rational& d0, const Rational& dinf) {
  return twist_model(r.model(), d0, dinf);
}

AlternatePair AlternatePair::with_factors(const HomPoly& A, const HomPoly& C, const HomPoly& D) {
  return {A, C * D, std::make_pair(C, D)};
}

WeierstrassModel AlternatePair::model() const {
  return WeierstrassModel::make(-A, B, HomPoly::zero(12, A.vars()), 2);
}

AlternatePair vgs_dual(const AlternatePair& p) {
  return {Rational(-2) * p.A, p.A * p.A - Rational(4) * p.B, std::nullopt};
}

RulingSwapData ruling_swap(const HomPoly& C, const HomPoly& A, const HomPoly& D) {
  RulingSwapData r{C, A, D, {}, {}, {}, {}};
  for (int i = 0; i <= 4; ++i)
    r.a[i] = form2(C.coeff(4 - i), -A.coeff(4 - i), D.coeff(4 - i), kUV);
  r.f = hermite_f(r.a[0], r.a[1], r.a[2], r.a[3], r.a[4]);
  r.g = hermite_g(r.a[0], r.a[1], r.a[2], r.a[3], r.a[4]);
  HomPoly uv = HomPoly::monomial(1, 1, 1, kUV);
  r.model = WeierstrassModel::short_form(uv.pow(2) * r.f, uv.pow(3) * r.g, 2);
  return r;
}

GSurface g_surface(const AlternatePair& p) {
  if (!p.factors) fail(ErrorCode::MissingFactorization, "no factorization B = C D attached");
  const auto& [C, D] = *p.factors;
  HomPoly z = HomPoly::zero(C.degree(), C.vars());
  BiHomPoly branch = BiHomPoly::from_rows({C, z, -p.A, z, D}, kLowerUV);
  RulingSwapData rs = ruling_swap(C, p.A, D);
  HomPoly u2 = HomPoly::monomial(1, 2, 0, kLowerUV), v2 = HomPoly::monomial(1, 0, 2, kLowerUV);
  return {branch, WeierstrassModel::short_form(rs.f.substitute(u2, v2), rs.g.substitute(u2, v2), 2)};
}

TwoParamFamily two_param_family(const HomPoly& C, const HomPoly& A, const HomPoly& D,
                                const Rational& d0, const Rational& dinf) {
  check_units(d0, dinf);
  HomPoly lines = HomPoly::linear(1, -d0, kUV) * HomPoly::linear(dinf, -1, kUV);
  BiHomPoly quad = BiHomPoly::from_rows({C, -A, D}, kUV);
  BiHomPoly branch = BiHomPoly::outer(HomPoly::constant(1, C.vars()), lines) * quad;
  ModuliTriple m = moduli_involution({A, C, D}, d0, dinf);
  WeierstrassModel x =
      WeierstrassModel::make(-m.A, m.C * m.D, HomPoly::zero(12, C.vars()), 2);
  return {branch, x};
}

ModuliTriple moduli_involution(const ModuliTriple& m, const Rational& d0, const Rational& dinf) {
  check_units(d0, dinf);
  return {Rational(2) * d0 * m.C + Rational(2) * dinf * m.D - (1 + d0 * dinf) * m.A,
          m.C + dinf * dinf * m.D - dinf * m.A, d0 * d0 * m.C + m.D - d0 * m.A};
}

Rational moduli_involution_square_scalar(const Rational& d0, const Rational& dinf) {
  check_units(d0, dinf);
  Rational k = d0 * dinf - 1;
  return k * k;
}

BiHomPoly section_shadow_residual(const HomPoly& C, const HomPoly& A, const HomPoly& D) {
  HomPoly z = HomPoly::zero(C.degree(), C.vars());
  BiHomPoly quartic = BiHomPoly::from_rows({C, z, -A, z, D}, kLowerUV);
  BiHomPoly lin = BiHomPoly::from_rows({Rational(2) * C, z, -A}, kLowerUV);
  BiHomPoly fourC = BiHomPoly::outer(Rational(4) * C, HomPoly::constant(1, kLowerUV));
  return fourC * quartic - lin * lin;
}

std::optional<Rational> x_scaling_between(const WeierstrassModel& a, const WeierstrassModel& b) {
  if (a.weight != b.weight) return std::nullopt;
  std::vector<Rational> cands;
  if (auto r = lead_ratio(a.a2, b.a2)) cands.push_back(*r);
  if (auto r = lead_ratio(a.a4, b.a4))
    if (auto s = rational_sqrt(*r)) {
      cands.push_back(*s);
      cands.push_back(-*s);
    }
  if (auto r = lead_ratio(a.a6, b.a6))
    if (auto c = rational_cbrt(*r)) cands.push_back(*c);
  for (const Rational& u : cands) {
    if (u == 0) continue;
    if (u * a.a2 == b.a2 && (u * u) * a.a4 == b.a4 && (u * u * u) * a.a6 == b.a6) return u;
  }
  if (cands.empty() && a.a2 == b.a2 && a.a4 == b.a4 && a.a6 == b.a6) return Rational(1);
  return std::nullopt;
}

WeierstrassModel subfamily_model(Subfamily kind, const HomPoly& f0, const HomPoly& g0) {
  VarPair vars = kind == Subfamily::Z || kind == Subfamily::YSub ? kLowerUV : kUV;
  HomPoly f = f0.with_vars(vars), g = g0.with_vars(vars);
  WeierstrassModel m;
  switch (kind) {
    case Subfamily::Z: {
      HomPoly u2 = HomPoly::monomial(1, 2, 0, vars), v2 = HomPoly::monomial(1, 0, 2, vars);
      HomPoly X = (u2 - v2).pow(2), Y = (u2 + v2).pow(2);
      m = WeierstrassModel::short_form(f.substitute(X, Y), g.substitute(X, Y), 2);
      break;
    }
    case Subfamily::YSub: {
      HomPoly u2 = HomPoly::monomial(1, 2, 0, vars), v2 = HomPoly::monomial(1, 0, 2, vars);
      HomPoly e = u2 - v2;
      m = WeierstrassModel::short_form(e.pow(2) * f.substitute(u2, v2),
                                       e.pow(3) * g.substitute(u2, v2), 2);
      break;
    }
    case Subfamily::YTildeSub: {
      HomPoly k = HomPoly::monomial(1, 1, 1, vars) * HomPoly::linear(1, -1, vars);
      m = WeierstrassModel::short_form(k.pow(2) * f, k.pow(3) * g, 2);
      break;
    }
    case Subfamily::RES: {
      HomPoly e = HomPoly::linear(1, -1, vars);
      m = WeierstrassModel::short_form(e.pow(2) * f, e.pow(3) * g, 1);
      break;
    }
  }
  if (invariants(m).delta.is_zero()) fail(ErrorCode::DegenerateModel, "discriminant vanishes identically");
  return m;
}

}  // namespace k3dual
