#include "verify/procedures.hpp"

#include <algorithm>

#include "k3dual/duality.hpp"
#include "k3dual/error.hpp"
#include "k3dual/hermite.hpp"

namespace verify {

using namespace k3dual;
using Type = InputValue::Type;
using k3dual::to_string;

namespace {

const VarPair kST{"s", "t"};
const VarPair kBigST{"S", "T"};
const VarPair kUV{"U", "V"};

const HomPoly& P(const Instance& in, const std::string& k) { return in.at(k).poly; }
const Rational& Q(const Instance& in, const std::string& k) { return in.at(k).scalar; }
const std::vector<Rational>& L(const Instance& in, const std::string& k) { return in.at(k).list; }

InputSpec poly(const std::string& name, int degree, VarPair vars) {
  return {name, Type::Poly, degree, std::move(vars)};
}
InputSpec rat(const std::string& name) { return {name, Type::Rational, 0, {}}; }
InputSpec list(const std::string& name, int n) { return {name, Type::List, n, {}}; }

// Product squarefree: each form squarefree and pairwise coprime.
bool sqfree(const std::vector<HomPoly>& forms) {
  HomPoly acc = HomPoly::constant(1, forms.front().vars());
  for (const auto& f : forms) acc = acc * f.with_vars(acc.vars());
  return is_squarefree(acc);
}

HomPoly disc_fg(const HomPoly& f, const HomPoly& g) {
  return Rational(4) * f.pow(3) + Rational(27) * g.pow(2);
}

HomPoly lin(const Rational& a, const Rational& b, const VarPair& v) { return HomPoly::linear(a, b, v); }

Outcome fibers_of(const WeierstrassModel& m) {
  Outcome o;
  o.fibers = fiber_configuration(m);
  o.torsion = static_cast<int>(two_torsion_sections(m).size());
  return o;
}

RESData res_of(const Instance& in) { return {P(in, "f"), P(in, "g")}; }

WeierstrassModel res2t_of(const Instance& in) {
  return WeierstrassModel::make(P(in, "a2"), P(in, "a4"), HomPoly::zero(6, kUV), 1);
}

bool res_general(const Instance& in, const Instance& = {}) {
  return sqfree({disc_fg(P(in, "f"), P(in, "g"))});
}

bool res2t_general(const Instance& in, const Instance& = {}) {
  const HomPoly& a2 = P(in, "a2");
  const HomPoly& a4 = P(in, "a4");
  return sqfree({a4, a2 * a2 - Rational(4) * a4});
}

// Hermite discriminant of the ruling swap, clear of the two I0* places.
bool swap_general(const Instance& in, const Instance& = {}) {
  RulingSwapData r = ruling_swap(P(in, "C"), P(in, "A"), P(in, "D"));
  return sqfree({disc_fg(r.f, r.g), lin(1, 0, kUV), lin(0, 1, kUV)});
}

// f, g of degree 2 and 3 in (U,V) away from the branch values 0, 1, infinity.
bool fg_general(const HomPoly& f, const HomPoly& g) {
  return sqfree({disc_fg(f, g), lin(1, 0, kUV), lin(0, 1, kUV), lin(1, -1, kUV)});
}

WeierstrassModel pick(const SurfaceTable& t, const std::string& model) { return t.models.at(model); }

bool branches_equal(const SurfaceTable& t, Outcome& o, const std::map<std::string, bool>& negated = {}) {
  bool ok = true;
  for (const auto& [name, pair] : t.branches) {
    bool neg = negated.count(name) && negated.at(name);
    bool eq = neg ? pair.first == -pair.second : pair.first == pair.second;
    if (!eq) {
      o.failures.push_back("branch " + name);
      ok = false;
    }
  }
  return ok;
}

QuadricTable quadric_table_of(const Instance& in) { return quadric_table(P(in, "alpha"), P(in, "gamma"), P(in, "delta")); }

void quadric_table_sample(Instance& in, Rng& rng) {
  if (in.count("alpha") && in.count("gamma") && in.count("delta")) return;
  Rational a0 = rng.coeff(), a1 = rng.coeff(), a2 = rng.coeff();
  Rational g0 = rng.coeff(), g2 = rng.coeff(), d2 = rng.coeff();
  in["alpha"] = make_value(InputSpec{"alpha", Type::Poly, 2, kBigST}, HomPoly(2, {a0, a1, a2}, kBigST));
  in["gamma"] = make_value(InputSpec{"gamma", Type::Poly, 2, kBigST}, HomPoly(2, {g0, a0, g2}, kBigST));
  in["delta"] = make_value(InputSpec{"delta", Type::Poly, 2, kBigST}, HomPoly(2, {g2, a2, d2}, kBigST));
}

bool quadric_table_general(const Instance& in, const Instance& = {}) {
  QuadricTable t = quadric_table_of(in);
  const HomPoly &al = P(in, "alpha"), &ga = P(in, "gamma"), &de = P(in, "delta");
  return sqfree({ga * de, al * al - Rational(4) * ga * de, lin(1, 0, kBigST), lin(0, 1, kBigST)}) &&
         sqfree({t.c * t.d, t.a * t.a - Rational(4) * t.c * t.d, lin(1, 0, kUV), lin(0, 1, kUV)});
}

bool four_curve_table_general(const Instance& in, const Instance& = {}) {
  const HomPoly &A = P(in, "A"), &C = P(in, "C");
  if (!sqfree({A - C, A + C, C})) return false;
  FourCurveTable t = four_curve_table(A, C);
  return sqfree({disc_fg(t.f, t.g), lin(1, 0, kUV), lin(0, 1, kUV), lin(1, -1, kUV), lin(1, 1, kUV)});
}

FourHData four_h_of(const Instance& in) {
  FourHData d;
  const auto& r = L(in, "rho");
  for (int k = 0; k < 16; ++k) d.rho[k / 4][k % 4] = r[k];
  return d;
}

// Conditions (1)-(3) leave the complementary pairs free; they must not meet either.
bool four_h_general(const Instance& in, const Instance& = {}) {
  FourHSurface s = four_h_surface(four_h_of(in));
  auto p = [&](int i, int j) { return s.P.at({i, j}); };
  return resultant(p(1, 2), p(3, 4)) != 0 && resultant(p(1, 3), p(2, 4)) != 0 &&
         resultant(p(1, 4), p(2, 3)) != 0;
}

ThreeLinesParams three_lines_of(const Instance& in) {
  return {Q(in, "mu"), Q(in, "nu"), Q(in, "c0"), Q(in, "c1"), Q(in, "d0"),
          Q(in, "d1"), Q(in, "d2"), Q(in, "e0"), Q(in, "e1"), Q(in, "e2")};
}

// Parameters the scenario leaves open avoid zero, which is where the degenerations live;
// the cubic meets the two moving lines transversally and the rest of the discriminant is
// squarefree.
bool three_lines_general(const Instance& in, const Instance& pinned) {
  for (const auto& [k, v] : in)
    if (!pinned.count(k) && v.scalar == 0) return false;
  ThreeLinesParams p = three_lines_of(in);
  ThreeI0StarForm f = three_lines_form(p);
  for (const Rational& t : {Rational(-p.mu), Rational(-p.nu)}) {
    UniPoly cubic{f.e3 * t * t * t + f.e2 * t * t + f.e1 * t + f.e0, f.d2 * t * t + f.d1 * t + f.d0,
                  f.c1 * t + f.c0, Rational(1)};
    if (discriminant(cubic) == 0) return false;
  }
  HomPoly delta = invariants(f.model()).delta;
  const VarPair tz{"t", "z"};
  HomPoly rest = delta;
  for (const HomPoly& l : {lin(0, 1, tz), lin(1, p.mu, tz), lin(1, p.nu, tz)})
    while (auto q = divide_exact(rest, l)) rest = *q;
  return rest.degree() == 0 || sqfree({rest});
}

QuarticCurve quartic_of(const Instance& in, const std::string& key = "H") {
  QuarticCurve h;
  std::copy_n(L(in, key).begin(), 5, h.a.begin());
  return h;
}

Rational diag(const Biquad& b, int k) {
  Rational s;
  for (int i = 0; i <= 2; ++i)
    if (k - i >= 0 && k - i <= 2) s += b[i][k - i];
  return s;
}

std::string point_text(const JacobianPoint& p) {
  return p.infinity ? "infinity" : to_string(p.xi) + " " + to_string(p.eta);
}

SymmetricSurfaceParams theorem_of(const Instance& in) {
  return {Q(in, "a0"), Q(in, "a1"), Q(in, "a2"), Q(in, "xi"), Q(in, "c0"), Q(in, "cinf")};
}

SymmetricParams sym_of(const Instance& in) {
  const auto& v = L(in, "params");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) o.failures.push_back(what);
}

Outcome finish(Outcome o) {
  o.holds = o.failures.empty();
  return o;
}

std::vector<Procedure> build_registry() {
  std::vector<Procedure> r;
  const auto FC = ScenarioKind::FiberConfig;
  const auto HI = ScenarioKind::HermiteIdentity;
  const auto CR = ScenarioKind::ConstructionRoundtrip;
  const auto TC = ScenarioKind::TableConsistency;

  std::vector<InputSpec> res_in{poly("f", 4, kUV), poly("g", 6, kUV)};
  std::vector<InputSpec> res_bc = res_in;
  res_bc.push_back(rat("d0"));
  res_bc.push_back(rat("dinf"));
  std::vector<InputSpec> r2_in{poly("a2", 2, kUV), poly("a4", 4, kUV)};
  std::vector<InputSpec> r2_bc = r2_in;
  r2_bc.push_back(rat("d0"));
  r2_bc.push_back(rat("dinf"));
  std::vector<InputSpec> cad{poly("C", 4, kST), poly("A", 4, kST), poly("D", 4, kST)};
  std::vector<InputSpec> cad_d = cad;
  cad_d.push_back(rat("d0"));
  cad_d.push_back(rat("dinf"));
  std::vector<InputSpec> qt_in{poly("alpha", 2, kBigST), poly("gamma", 2, kBigST), poly("delta", 2, kBigST)};
  std::vector<InputSpec> fc_in{poly("A", 4, kST), poly("C", 4, kST)};
  std::vector<InputSpec> tl_in;
  for (const char* k : {"mu", "nu", "c0", "c1", "d0", "d1", "d2", "e0", "e1", "e2"}) tl_in.push_back(rat(k));
  std::vector<InputSpec> th_in;
  for (const char* k : {"a0", "a1", "a2", "xi", "c0", "cinf"}) th_in.push_back(rat(k));

  r.push_back({FC, "res", res_in, {}, nullptr, res_general,
               [](const Instance& in, const std::string&) { return fibers_of(res_of(in).model()); }});
  r.push_back({FC, "res-base-change", res_bc, {}, nullptr, res_general,
               [](const Instance& in, const std::string&) {
                 return fibers_of(base_change_k3(res_of(in), Q(in, "d0"), Q(in, "dinf")));
               }});
  r.push_back({FC, "res-twist", res_bc, {}, nullptr, res_general,
               [](const Instance& in, const std::string&) {
                 return fibers_of(twist_model(res_of(in), Q(in, "d0"), Q(in, "dinf")));
               }});
  r.push_back({FC, "res-two-torsion", r2_in, {}, nullptr, res2t_general,
               [](const Instance& in, const std::string&) { return fibers_of(res2t_of(in)); }});
  r.push_back({FC, "res-two-torsion-base-change", r2_bc, {}, nullptr, res2t_general,
               [](const Instance& in, const std::string&) {
                 return fibers_of(base_change_k3(res2t_of(in), Q(in, "d0"), Q(in, "dinf")));
               }});
  r.push_back({FC, "res-two-torsion-twist", r2_bc, {}, nullptr, res2t_general,
               [](const Instance& in, const std::string&) {
                 return fibers_of(twist_model(res2t_of(in), Q(in, "d0"), Q(in, "dinf")));
               }});
  r.push_back({FC, "alternate", {poly("A", 4, kST), poly("B", 8, kST)}, {"X", "X'"}, nullptr,
               [](const Instance& in, const Instance&) {
                 const HomPoly &A = P(in, "A"), &B = P(in, "B");
                 return sqfree({B, A * A - Rational(4) * B});
               },
               [](const Instance& in, const std::string& model) {
                 AlternatePair p{P(in, "A"), P(in, "B"), std::nullopt};
                 Outcome o = fibers_of(model == "X'" ? vgs_dual(p).model() : p.model());
                 // I2 places of one model are the I1 places of the other.
                 auto places = [](const FiberConfiguration& c, const std::string& type) {
                   HomPoly acc = HomPoly::constant(1, kST);
                   for (const auto& pl : c.places)
                     if (pl.type.name() == type) acc = acc * pl.place.with_vars(kST);
                   return acc.normalized();
                 };
                 FiberConfiguration x = fiber_configuration(p.model());
                 FiberConfiguration y = fiber_configuration(vgs_dual(p).model());
                 bool swap = places(x, "I2") == places(y, "I1") && places(x, "I1") == places(y, "I2");
                 o.values["places-swap"] = swap ? "yes" : "no";
                 return o;
               }});
  r.push_back({FC, "ruling-swap", cad, {}, nullptr, swap_general,
               [](const Instance& in, const std::string&) {
                 return fibers_of(ruling_swap(P(in, "C"), P(in, "A"), P(in, "D")).model);
               }});
  r.push_back({FC, "g-surface", cad, {}, nullptr, swap_general,
               [](const Instance& in, const std::string&) {
                 AlternatePair p = AlternatePair::with_factors(P(in, "A"), P(in, "C"), P(in, "D"));
                 return fibers_of(g_surface(p).model);
               }});
  r.push_back({FC, "two-param", cad_d, {}, nullptr,
               [](const Instance& in, const Instance&) {
                 const HomPoly &C = P(in, "C"), &A = P(in, "A"), &D = P(in, "D");
                 ModuliTriple m = moduli_involution({A, C, D}, Q(in, "d0"), Q(in, "dinf"));
                 return sqfree({m.C, m.D, A * A - Rational(4) * C * D});
               },
               [](const Instance& in, const std::string&) {
                 return fibers_of(
                     two_param_family(P(in, "C"), P(in, "A"), P(in, "D"), Q(in, "d0"), Q(in, "dinf")).model);
               }});
  r.push_back({FC, "quadric-table", qt_in, {"X", "X'", "Y", "Y'", "X~", "X~'", "Y~", "Y~'", "R~", "R~'", "R", "R'"},
               quadric_table_sample, quadric_table_general,
               [](const Instance& in, const std::string& model) { return fibers_of(pick(quadric_table_of(in), model)); }});
  r.push_back({FC, "four-curve-table", fc_in, {"X", "X'", "Y", "Y'", "Y~", "R", "R'"}, nullptr, four_curve_table_general,
               [](const Instance& in, const std::string& model) {
                 return fibers_of(pick(four_curve_table(P(in, "A"), P(in, "C")), model));
               }});
  r.push_back({FC, "four-h", {list("rho", 16)}, {}, nullptr, four_h_general,
               [](const Instance& in, const std::string&) { return fibers_of(four_h_surface(four_h_of(in)).model); }});
  r.push_back({FC, "four-h-jacobian", {list("rho", 16), rat("mu"), rat("nu")}, {}, nullptr, four_h_general,
               [](const Instance& in, const std::string&) {
                 return fibers_of(relative_jacobian_4h(four_h_of(in), Q(in, "mu"), Q(in, "nu")).model);
               }});
  r.push_back({FC, "three-lines", tl_in, {}, nullptr, three_lines_general,
               [](const Instance& in, const std::string&) {
                 return fibers_of(three_lines_cubic_model(three_lines_of(in)));
               }});
  r.push_back({FC, "subfamily", {poly("f", 2, kUV), poly("g", 3, kUV)}, {"Z", "Y", "Y~", "R"}, nullptr,
               [](const Instance& in, const Instance&) { return fg_general(P(in, "f"), P(in, "g")); },
               [](const Instance& in, const std::string& model) {
                 Subfamily k = model == "Z"    ? Subfamily::Z
                               : model == "Y"  ? Subfamily::YSub
                               : model == "Y~" ? Subfamily::YTildeSub
                                               : Subfamily::RES;
                 return fibers_of(subfamily_model(k, P(in, "f"), P(in, "g")));
               }});

  // Hermite identities.
  r.push_back({HI, "quartic-correspondence", {list("H", 5)}, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 QuarticCurve h = quartic_of(in);
                 CorrespondencePolys c = correspondence_polys(h);
                 UniPoly p = h.P();
                 require(o, correspondence_residual(h).is_zero(), "R^2 + R1 (x - x0)^2 = P(x) P(x0)");
                 bool rdiag = true, r1diag = true;
                 for (int k = 0; k <= 4; ++k) {
                   rdiag = rdiag && diag(c.R, k) == p.coeff(k);
                   r1diag = r1diag && diag(c.R1, k) == c.Q.coeff(k);
                 }
                 require(o, rdiag, "R(x, x) = P(x)");
                 require(o, r1diag, "R1(x, x) = Q(x)");
                 UniPoly d1 = p.derivative();
                 require(o, c.Q == Rational(1, 3) * p * d1.derivative() - Rational(1, 4) * d1 * d1,
                         "Q = P P''/3 - P'^2/4");
                 return finish(o);
               }});
  r.push_back({HI, "quartic-discriminants", {list("H", 5)}, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 QuarticCurve h = quartic_of(in);
                 DiscriminantRelation d = discr_relation_check(h);
                 require(o, d.disc_P == jacobian_quartic(h).discriminant(), "disc P = -4 f^3 - 27 g^2");
                 require(o, d.holds(), "disc Q = g^2 disc P");
                 return finish(o);
               }});
  r.push_back({HI, "abel-jacobi-functional", {list("H", 5), rat("x0"), rat("w0")},
               {},
               [](Instance& in, Rng& rng) {
                 if (in.count("H")) return;
                 if (!in.count("x0")) in["x0"] = make_value(rng.coeff());
                 if (!in.count("w0")) in["w0"] = make_value(rng.nonzero());
                 std::vector<Rational> a;
                 for (int i = 0; i < 5; ++i) a.push_back(rng.coeff());
                 // Put (x0, w0) on the curve by adjusting the constant term.
                 Rational x0 = Q(in, "x0"), w0 = Q(in, "w0"), px;
                 for (int i = 4; i >= 1; --i) px = (px + a[i]) * x0;
                 a[0] = w0 * w0 - px;
                 in["H"] = make_value(a);
               },
               nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 QuarticCurve h = quartic_of(in);
                 require(o, h.P().eval(Q(in, "x0")) == Q(in, "w0") * Q(in, "w0"), "base point on curve");
                 require(o, aj_functional_residual(h, Q(in, "x0"), Q(in, "w0")).is_zero(),
                         "eta^2 = xi^3 + f xi + g in Q(x)[w]");
                 return finish(o);
               }});
  r.push_back({HI, "abel-jacobi-point", {list("H", 5), list("base", 2), list("point", 2)}, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 QuarticCurve h = quartic_of(in);
                 const auto &b = L(in, "base"), &p = L(in, "point");
                 JacobianPoint j = abel_jacobi(h, {b[0], b[1]}, {p[0], p[1]});
                 o.values["point"] = point_text(j);
                 ShortCubic e = jacobian_quartic(h);
                 require(o, j.infinity || j.eta * j.eta == j.xi * j.xi * j.xi + e.f * j.xi + e.g,
                         "image on the Jacobian cubic");
                 return finish(o);
               }});
  r.push_back({HI, "j-equality", {list("H", 5), rat("xi")}, {}, nullptr,
               [](const Instance& in, const Instance&) { return quartic_of(in).discriminant() != 0; },
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 QuarticCurve h = quartic_of(in);
                 Biquadratic22 c = correspondence_22(h, Q(in, "xi"));
                 require(o, c.is_symmetric(), "correspondence symmetric");
                 ShortCubic a = jacobian_quartic(h), b = jacobian_quartic(branch_quartic_22(c));
                 require(o, b.discriminant() != 0, "branch quartic smooth");
                 require(o, same_j(a, b), "j equal (cross-multiplied)");
                 return finish(o);
               }});
  r.push_back({HI, "theorem-surface", th_in, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 SymmetricSurface s = build_symmetric_surface(theorem_of(in));
                 require(o, s.phi.is_symmetric(), "correspondence symmetric");
                 SymmetricParams sp = params_from_phi(s.phi, Q(in, "c0"), Q(in, "cinf"));
                 require(o, symmetric_branch(sp) == s.branch, "branch in symmetric form");
                 QuadricTable t = quadric_table_from_correspondence(s.phi);
                 branches_equal(t, o);
                 return finish(o);
               }});

  // Construction round trips.
  r.push_back({CR, "vgs-square", {poly("A", 4, kST), poly("B", 8, kST)}, {}, nullptr,
               [](const Instance& in, const Instance&) { return !P(in, "B").is_zero(); },
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 AlternatePair p{P(in, "A"), P(in, "B"), std::nullopt};
                 AlternatePair q = vgs_dual(vgs_dual(p));
                 require(o, q.A == Rational(4) * p.A && q.B == Rational(16) * p.B, "dual twice = (4A, 16B)");
                 auto u = x_scaling_between(p.model(), q.model());
                 o.values["scaling"] = u ? to_string(*u) : "none";
                 return finish(o);
               }});
  r.push_back({CR, "involution-square", cad_d, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &A = P(in, "A"), &C = P(in, "C"), &D = P(in, "D");
                 Rational d0 = Q(in, "d0"), di = Q(in, "dinf");
                 ModuliTriple m{A, C, D};
                 ModuliTriple once = moduli_involution(m, d0, di);
                 ModuliTriple twice = moduli_involution(once, d0, di);
                 Rational k = (d0 * di - 1) * (d0 * di - 1);
                 require(o, moduli_involution_square_scalar(d0, di) == k, "scalar = (d0 dinf - 1)^2");
                 require(o, twice == ModuliTriple{k * A, k * C, k * D}, "involution twice = scalar");
                 require(o,
                         once.A * once.A - Rational(4) * once.C * once.D == k * (A * A - Rational(4) * C * D),
                         "A^2 - 4CD scaled by the same scalar");
                 return finish(o);
               }});
  r.push_back({CR, "three-lines-normalize", [&] {
                 auto v = tl_in;
                 v.push_back(rat("shift"));
                 return v;
               }(),
               {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 ThreeLinesParams p = three_lines_of(in);
                 ThreeI0StarForm f = three_lines_form(p);
                 ThreeI0StarForm shifted = rho_shift(f, Q(in, "shift"));
                 NormalizeOptions opt;
                 opt.branch = p.c1 > 0 ? RootBranch::Positive : RootBranch::Negative;
                 NormalizedThreeLines n = normalize_three_i0star(shifted, opt);
                 ThreeI0StarForm back = three_lines_form(n.params);
                 require(o, back == rho_shift(shifted, n.rho), "normalized form reproduced");
                 if (n.rho == -Q(in, "shift")) require(o, n.params == p, "parameters recovered");
                 o.values["rho"] = to_string(n.rho);
                 return finish(o);
               }});
  r.push_back({CR, "ruling-coefficients", cad, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &C = P(in, "C"), &A = P(in, "A"), &D = P(in, "D");
                 RulingSwapData rs = ruling_swap(C, A, D);
                 BiHomPoly lhs = BiHomPoly::from_rows({C, -A, D}, kUV);
                 BiHomPoly rhs = BiHomPoly::outer(HomPoly::monomial(1, 0, 4, kST), rs.a[0]);
                 for (int i = 1; i <= 4; ++i) rhs += BiHomPoly::outer(HomPoly::monomial(1, i, 4 - i, kST), rs.a[i]);
                 require(o, lhs == rhs, "C U^2 - A U V + D V^2 = sum a_i s^i t^(4-i)");
                 for (int i = 0; i <= 4; ++i) o.values["a" + std::to_string(i)] = to_string(rs.a[i]);
                 o.values["f"] = to_string(rs.f);
                 o.values["g"] = to_string(rs.g);
                 return finish(o);
               }});
  r.push_back({CR, "section-shadow", cad, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &C = P(in, "C"), &A = P(in, "A"), &D = P(in, "D");
                 BiHomPoly res = section_shadow_residual(C, A, D);
                 BiHomPoly want = BiHomPoly::outer(-(A * A - Rational(4) * C * D), HomPoly::monomial(1, 0, 4, {"u", "v"}));
                 require(o, res == want, "4C quartic - (2Cu^2 - Av^2)^2 = -(A^2 - 4CD) v^4");
                 return finish(o);
               }});
  r.push_back({CR, "g-surface-base-change", cad, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &C = P(in, "C"), &A = P(in, "A"), &D = P(in, "D");
                 GSurface g = g_surface(AlternatePair::with_factors(A, C, D));
                 RulingSwapData rs = ruling_swap(C, A, D);
                 WeierstrassModel bc = base_change_k3(RESData{rs.f, rs.g}, 0, 0);
                 require(o, g.model.a4 == bc.a4 && g.model.a6 == bc.a6 && g.model.a2 == bc.a2,
                         "model = base change at d0 = d_inf = 0");
                 GSurface h = g_surface(AlternatePair::with_factors(A, D, C));
                 bool swapped = true;
                 for (int j = 0; j <= 4; ++j) swapped = swapped && g.branch.column(j) == h.branch.column(4 - j);
                 require(o, swapped, "exchanging C and D swaps u and v");
                 return finish(o);
               }});
  r.push_back({CR, "two-param-origin", cad, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &C = P(in, "C"), &A = P(in, "A"), &D = P(in, "D");
                 WeierstrassModel x = two_param_family(C, A, D, 0, 0).model;
                 WeierstrassModel alt = negate_x(AlternatePair{A, C * D, std::nullopt}.model());
                 require(o, x.a2 == alt.a2 && x.a4 == alt.a4 && x.a6 == alt.a6, "origin = alternate model, x -> -x");
                 return finish(o);
               }});
  r.push_back({CR, "two-param-discriminant", cad_d, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &C = P(in, "C"), &A = P(in, "A"), &D = P(in, "D");
                 Rational d0 = Q(in, "d0"), di = Q(in, "dinf");
                 WeierstrassModel x = two_param_family(C, A, D, d0, di).model;
                 ModuliTriple m = moduli_involution({A, C, D}, d0, di);
                 Rational k = (d0 * di - 1) * (d0 * di - 1);
                 HomPoly want = Rational(16) * k * (m.C * m.D).pow(2) * (A * A - Rational(4) * C * D);
                 require(o, invariants(x).delta == want, "delta = 16 (d0 dinf - 1)^2 (C'D')^2 (A^2 - 4CD)");
                 return finish(o);
               }});
  r.push_back({CR, "symmetry-moves", {list("params", 8), rat("lambda")}, {}, nullptr,
               [](const Instance& in, const Instance&) { return Q(in, "lambda") != 0; },
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 SymmetricParams p = sym_of(in);
                 Rational l = Q(in, "lambda");
                 require(o, apply_symmetry(p, SymmetryMove::Scale, 1) == p, "scale by 1 is the identity");
                 require(o, apply_symmetry(apply_symmetry(p, SymmetryMove::Swap), SymmetryMove::Swap) == p,
                         "swap twice is the identity");
                 SymmetricParams q = p;
                 q.c0 = 0;
                 q.cinf = 0;
                 require(o, apply_symmetry(q, SymmetryMove::Shear, l) == q, "shear fixes c0 = c_inf = 0");
                 require(o,
                         apply_symmetry(apply_symmetry(p, SymmetryMove::Scale, l), SymmetryMove::Weight, l + 1) ==
                             apply_symmetry(apply_symmetry(p, SymmetryMove::Weight, l + 1), SymmetryMove::Scale, l),
                         "scale and weight commute");
                 return finish(o);
               }});

  // Table consistency.
  r.push_back({TC, "quadric-table-rows", qt_in, {}, quadric_table_sample, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &al = P(in, "alpha"), &ga = P(in, "gamma"), &de = P(in, "delta");
                 QuadricTable t = quadric_table_of(in);
                 branches_equal(t, o);
                 BiHomPoly lhs = BiHomPoly::from_rows({ga, al, de}, kUV);
                 // c, a, d are the columns of the same (2,2) form read in the other ruling.
                 BiHomPoly swapped = BiHomPoly::from_rows({t.c, t.a, t.d}, kBigST).swap_factors();
                 require(o, lhs == swapped, "gamma U^2 + alpha UV + delta V^2 = c S^2 + a ST + d T^2");
                 require(o, t.models.at("X").a6.is_zero(), "X has 2-torsion at x = 0");
                 auto dual = [&](const std::string& a, const std::string& b) {
                   const WeierstrassModel &m = t.models.at(a), &n = t.models.at(b);
                   AlternatePair p{-m.a2, m.a4, std::nullopt};
                   AlternatePair q = vgs_dual(p);
                   require(o, -q.A == n.a2 && q.B == n.a4, a + " and " + b + " are a dual pair");
                 };
                 dual("X", "X'");
                 dual("Y'", "Y");
                 dual("X~", "X~'");
                 dual("Y~'", "Y~");
                 dual("R~", "R~'");
                 dual("R'", "R");
                 return finish(o);
               }});
  r.push_back({TC, "quadric-table-from-surface", th_in, {}, nullptr, nullptr,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 SymmetricSurface s = build_symmetric_surface(theorem_of(in));
                 QuadricTable t = quadric_table_from_correspondence(s.phi);
                 branches_equal(t, o);
                 return finish(o);
               }});
  r.push_back({TC, "four-curve-table-rows", fc_in, {}, nullptr,
               [](const Instance& in, const Instance&) { return !(P(in, "A") * P(in, "A") - P(in, "C") * P(in, "C")).is_zero(); },
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 const HomPoly &A = P(in, "A"), &C = P(in, "C");
                 FourCurveTable t = four_curve_table(A, C);
                 branches_equal(t, o, {{"G'", true}});
                 BiHomPoly lhs = BiHomPoly::outer(A, lin(Rational(1, 2), Rational(-1, 2), kUV)) -
                                 BiHomPoly::outer(C, lin(Rational(1, 2), Rational(1, 2), kUV));
                 BiHomPoly rhs = BiHomPoly::outer(HomPoly::monomial(1, 4, 0, kST), t.a[0]);
                 for (int i = 1; i <= 4; ++i) rhs += BiHomPoly::outer(HomPoly::monomial(1, 4 - i, i, kST), t.a[i]);
                 require(o, lhs == rhs, "A (U - V)/2 - C (U + V)/2 = sum a_i s^(4-i) t^i");
                 const WeierstrassModel &x = t.models.at("X"), &xd = t.models.at("X'");
                 AlternatePair q = vgs_dual({-x.a2, x.a4, std::nullopt});
                 require(o, -q.A == xd.a2 && q.B == xd.a4, "X and X' are a dual pair");
                 o.torsion = static_cast<int>(two_torsion_sections(x).size());
                 return finish(o);
               }});
  r.push_back({TC, "four-h-reconstruction", {list("rho", 16), rat("mu"), rat("nu")}, {}, nullptr, four_h_general,
               [](const Instance& in, const std::string&) {
                 Outcome o;
                 Rational mu = Q(in, "mu"), nu = Q(in, "nu");
                 RelativeJacobian4H rj = relative_jacobian_4h(four_h_of(in), mu, nu);
                 FourCurveTable t = four_curve_table(rj.surface.A, rj.surface.C);
                 require(o, rj.F == compose_with_lines(t.f, mu, nu), "F matches the Hermite f");
                 require(o, rj.G == compose_with_lines(t.g, mu, nu), "G matches the Hermite g");
                 require(o, three_lines_form(rj.normalized.params) == rho_shift(rj.form, rj.normalized.rho),
                         "normalized parameters reproduce the model");
                 return finish(o);
               }});
  return r;
}

}  // namespace

Rational Rng::nonzero() {
  for (;;) {
    Rational q = coeff();
    if (q != 0) return q;
  }
}

HomPoly Rng::poly(int degree, const VarPair& vars) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(coeff());
  return HomPoly(degree, std::move(c), vars);
}

InputValue make_value(const InputSpec& spec, const HomPoly& p) {
  InputValue v;
  v.type = Type::Poly;
  v.poly = p.with_vars(spec.vars);
  v.text = to_string(v.poly);
  return v;
}

InputValue make_value(const Rational& q) {
  InputValue v;
  v.type = Type::Rational;
  v.scalar = q;
  v.text = to_string(q);
  return v;
}

InputValue make_value(std::vector<Rational> list) {
  InputValue v;
  v.type = Type::List;
  for (const auto& q : list) v.text += (v.text.empty() ? "" : " ") + to_string(q);
  v.list = std::move(list);
  return v;
}

const std::vector<Procedure>& registry() {
  static const std::vector<Procedure> r = build_registry();
  return r;
}

const Procedure* find_procedure(ScenarioKind kind, const std::string& name) {
  for (const auto& p : registry())
    if (p.kind == kind && p.name == name) return &p;
  return nullptr;
}

std::vector<const Procedure*> all_procedures() {
  std::vector<const Procedure*> out;
  for (const auto& p : registry()) out.push_back(&p);
  return out;
}

Instance sample_instance(const Procedure& p, const Instance& fixed, Rng& rng) {
  Instance in = fixed;
  if (p.sample) p.sample(in, rng);
  for (const auto& s : p.inputs) {
    if (in.count(s.name)) continue;
    switch (s.type) {
      case Type::Poly: in[s.name] = make_value(s, rng.poly(s.size, s.vars)); break;
      case Type::Rational: in[s.name] = make_value(rng.coeff()); break;
      case Type::List: {
        std::vector<Rational> v;
        for (int i = 0; i < s.size; ++i) v.push_back(rng.coeff());
        in[s.name] = make_value(std::move(v));
        break;
      }
    }
  }
  return in;
}

}  // namespace verify
