#include <random>

#include "doctest.h"
#include "k3dual/duality.hpp"
#include "k3dual/error.hpp"

using namespace k3dual;

namespace {

const VarPair kST{"s", "t"}, kUV{"U", "V"}, kuv{"u", "v"};

struct Gen {
  std::mt19937_64 g;
  explicit Gen(uint64_t seed) : g(seed) {}
  Rational q() { return std::uniform_int_distribution<int>(-9, 9)(g); }
  Rational nonzero() {
    for (;;)
      if (Rational r = q(); r != 0) return r;
  }
  HomPoly hom(int deg, VarPair vars) {
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = q();
    return HomPoly(deg, c, vars);
  }
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ZeroPolynomial;
}

// Product of the places carrying a given fiber type, normalized.
HomPoly places_of(const FiberConfiguration& fc, const std::string& type) {
  HomPoly out = HomPoly::constant(1, fc.places.empty() ? VarPair{} : fc.places[0].place.vars());
  for (const auto& p : fc.places)
    if (p.type.name() == type) out = out * p.place;
  return out.normalized();
}

RESData random_res(Gen& g) { return {g.hom(4, kUV), g.hom(6, kUV)}; }

}  // namespace

TEST_CASE("isogeny dual applied twice rescales by 4") {
  Gen g(1);
  for (int i = 0; i < 10; ++i) {
    AlternatePair p{g.hom(4, kST), g.hom(8, kST), std::nullopt};
    AlternatePair q = vgs_dual(vgs_dual(p));
    CHECK(q.A == p.A * Rational(4));
    CHECK(q.B == p.B * Rational(16));
    CHECK(x_scaling_between(p.model(), q.model()) == Rational(4));
    CHECK_FALSE(x_scaling_between(p.model(), vgs_dual(p).model()).has_value());
  }
}

TEST_CASE("alternate fibration and its dual exchange the I2 and I1 places") {
  Gen g(2);
  AlternatePair p{g.hom(4, kST), g.hom(8, kST), std::nullopt};
  auto x = fiber_configuration(p.model()), xd = fiber_configuration(vgs_dual(p).model());
  CHECK(x.summary() == "8*I2 + 8*I1");
  CHECK(xd.summary() == "8*I2 + 8*I1");
  CHECK(places_of(x, "I2") == places_of(xd, "I1"));
  CHECK(places_of(x, "I1") == places_of(xd, "I2"));
  CHECK(places_of(x, "I2") == p.B.normalized());
}

TEST_CASE("base change along the double cover branched at two points") {
  Gen g(3);
  for (int i = 0; i < 10; ++i) {
    RESData r = random_res(g);
    Rational d0 = g.q(), di = g.q();
    if (d0 * di == 1 || d0 == 1 || di == 1) continue;
    WeierstrassModel m = base_change_k3(r, d0, di);
    CHECK(m.weight == 2);
    CHECK(m.vars() == kuv);
    // (U, V) = ((1 - d0) u^2 + d0 (1 - di) v^2, di (1 - d0) u^2 + (1 - di) v^2)
    Rational u = g.q(), v = g.q();
    Rational U = (1 - d0) * u * u + d0 * (1 - di) * v * v, V = di * (1 - d0) * u * u + (1 - di) * v * v;
    CHECK(m.a4.eval(u, v) == r.f.eval(U, V));
    CHECK(m.a6.eval(u, v) == r.g.eval(U, V));
    // U - d0 V and di U - V are squares: the cover branches over [d0:1] and [1:di]
    CHECK(U - d0 * V == (1 - d0) * (1 - d0 * di) * u * u);
    CHECK(di * U - V == -(1 - di) * (1 - d0 * di) * v * v);
    CHECK(fiber_configuration(m).summary() == "24*I1");
  }
}

TEST_CASE("base change and twist reject degenerate parameters") {
  Gen g(4);
  RESData r = random_res(g);
  CHECK(code_of([&] { base_change_k3(r, 2, Rational(1, 2)); }) == ErrorCode::UnitViolation);
  CHECK(code_of([&] { base_change_k3(r, 1, 3); }) == ErrorCode::UnitViolation);
  CHECK(code_of([&] { twist_model(r, 2, Rational(1, 2)); }) == ErrorCode::UnitViolation);
  // delta vanishes at U = 0: 4 (-3)^3 + 27 (2)^2 = 0
  HomPoly U = HomPoly::linear(1, 0, kUV), V = HomPoly::linear(0, 1, kUV);
  RESData bad{Rational(-3) * V.pow(4) + U * g.hom(3, kUV), Rational(2) * V.pow(6) + U * g.hom(5, kUV)};
  CHECK(code_of([&] { base_change_k3(bad, 0, 5); }) == ErrorCode::SingularBranchFiber);
  WeierstrassModel k3 = base_change_k3(r, 2, 3);
  CHECK(code_of([&] { base_change_k3(k3, 2, 3); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("quadratic twist of a rational surface") {
  Gen g(5);
  RESData r = random_res(g);
  Rational d0 = 3, di = -2;
  WeierstrassModel m = twist_model(r, d0, di);
  Rational U = g.q(), V = g.q();
  Rational k = (U - d0 * V) * (di * U - V);
  CHECK(m.a4.eval(U, V) == k * k * r.f.eval(U, V));
  CHECK(m.a6.eval(U, V) == k * k * k * r.g.eval(U, V));
  CHECK(fiber_configuration(m).summary() == "2*I0* + 12*I1");
}

TEST_CASE("moduli involution") {
  Gen g(6);
  for (int i = 0; i < 20; ++i) {
    ModuliTriple m{g.hom(4, kST), g.hom(4, kST), g.hom(4, kST)};
    Rational d0 = g.q(), di = g.q();
    ModuliTriple once = moduli_involution(m, d0, di), twice = moduli_involution(once, d0, di);
    Rational k = (d0 * di - 1) * (d0 * di - 1);
    CHECK(moduli_involution_square_scalar(d0, di) == k);
    CHECK(twice == ModuliTriple{m.A * k, m.C * k, m.D * k});
    CHECK(once.A * once.A - Rational(4) * once.C * once.D == k * (m.A * m.A - Rational(4) * m.C * m.D));
  }
}

TEST_CASE("ruling swap coefficients and Jacobian") {
  Gen g(7);
  for (int i = 0; i < 10; ++i) {
    HomPoly C = g.hom(4, kST), A = g.hom(4, kST), D = g.hom(4, kST);
    RulingSwapData rs = ruling_swap(C, A, D);
    Rational s = g.q(), t = g.q(), U = g.q(), V = g.q();
    Rational lhs = C.eval(s, t) * U * U - A.eval(s, t) * U * V + D.eval(s, t) * V * V;
    Rational rhs = 0;
    for (int k = 0; k <= 4; ++k) rhs += rs.a[k].eval(U, V) * rational_pow(s, k) * rational_pow(t, 4 - k);
    CHECK(lhs == rhs);
    CHECK(rs.f == hermite_f(rs.a[0], rs.a[1], rs.a[2], rs.a[3], rs.a[4]));
    CHECK(rs.g == hermite_g(rs.a[0], rs.a[1], rs.a[2], rs.a[3], rs.a[4]));
    HomPoly uv = HomPoly::monomial(1, 1, 1, kUV);
    CHECK(rs.model.a4 == uv.pow(2) * rs.f);
    CHECK(rs.model.a6 == uv.pow(3) * rs.g);
  }
}

TEST_CASE("section shadow") {
  Gen g(8);
  HomPoly C = g.hom(4, kST), A = g.hom(4, kST), D = g.hom(4, kST);
  BiHomPoly res = section_shadow_residual(C, A, D);
  Rational s = g.q(), t = g.q(), u = g.q(), v = g.q();
  Rational c = C.eval(s, t), a = A.eval(s, t), d = D.eval(s, t);
  Rational quartic = c * rational_pow(u, 4) - a * u * u * v * v + d * rational_pow(v, 4);
  Rational expect = 4 * c * quartic - (2 * c * u * u - a * v * v) * (2 * c * u * u - a * v * v);
  CHECK(res.eval(s, t, u, v) == expect);
  CHECK(expect == -(a * a - 4 * c * d) * rational_pow(v, 4));
}

TEST_CASE("quadric cover equals the base change of the ruling-swap surface") {
  Gen g(9);
  int checked = 0;
  for (int i = 0; i < 10; ++i) {
    HomPoly C = g.hom(4, kST), A = g.hom(4, kST), D = g.hom(4, kST);
    RulingSwapData rs = ruling_swap(C, A, D);
    // the fibers over U = 0, V = 0 and U = V see the quartics D, C and C - A + D
    if (discriminant(C) == 0 || discriminant(D) == 0 || discriminant(C - A + D) == 0) continue;
    GSurface gs = g_surface(AlternatePair::with_factors(A, C, D));
    WeierstrassModel bc = base_change_k3(RESData{rs.f, rs.g}, 0, 0);
    CHECK(gs.model.a2 == bc.a2);
    CHECK(gs.model.a4 == bc.a4);
    CHECK(gs.model.a6 == bc.a6);
    Rational s = g.q(), t = g.q(), u = g.q(), v = g.q();
    CHECK(gs.branch.eval(s, t, u, v) ==
          C.eval(s, t) * rational_pow(u, 4) - A.eval(s, t) * u * u * v * v + D.eval(s, t) * rational_pow(v, 4));
    ++checked;
  }
  CHECK(checked >= 5);
  HomPoly C = g.hom(4, kST), A = g.hom(4, kST), D = g.hom(4, kST);
  CHECK(code_of([&] { g_surface(AlternatePair{A, C * D, std::nullopt}); }) == ErrorCode::MissingFactorization);
}

TEST_CASE("two-parameter family") {
  Gen g(10);
  HomPoly C = g.hom(4, kST), A = g.hom(4, kST), D = g.hom(4, kST);
  WeierstrassModel origin = two_param_family(C, A, D, 0, 0).model;
  WeierstrassModel alt = negate_x(AlternatePair{A, C * D, std::nullopt}.model());
  CHECK(origin.a2 == alt.a2);
  CHECK(origin.a4 == alt.a4);
  Rational d0 = 2, di = -3;
  TwoParamFamily fam = two_param_family(C, A, D, d0, di);
  ModuliTriple m = moduli_involution({A, C, D}, d0, di);
  Rational k = (d0 * di - 1) * (d0 * di - 1);
  CHECK(invariants(fam.model).delta == Rational(16) * k * (m.C * m.D).pow(2) * (A * A - Rational(4) * C * D));
  Rational s = g.q(), t = g.q(), U = g.q(), V = g.q();
  CHECK(fam.branch.eval(s, t, U, V) == (U - d0 * V) * (di * U - V) *
                                           (C.eval(s, t) * U * U - A.eval(s, t) * U * V + D.eval(s, t) * V * V));
  CHECK(fiber_configuration(fam.model).summary() == "8*I2 + 8*I1");
}

TEST_CASE("symmetric double quadric table") {
  Gen g(11);
  // normalized form: alpha = (a0, a1, a2), gamma = (g0, a0, g2), delta = (g2, a2, d2)
  Rational a0 = g.q(), a1 = g.q(), a2 = g.q(), g0 = g.q(), g2 = g.q(), d2 = g.q();
  HomPoly alpha(2, {a0, a1, a2}, {"S", "T"}), gamma(2, {g0, a0, g2}, {"S", "T"}),
      delta(2, {g2, a2, d2}, {"S", "T"});
  QuadricTable t = quadric_table(alpha, gamma, delta);
  CHECK(t.models.size() == 12);
  for (const auto& [name, forms] : t.branches) {
    CAPTURE(name);
    CHECK(forms.first == forms.second);
  }
  auto dual = [&](const char* a, const char* b) {
    const WeierstrassModel &m = t.models.at(a), &n = t.models.at(b);
    AlternatePair q = vgs_dual({-m.a2, m.a4, std::nullopt});
    CHECK(-q.A == n.a2);
    CHECK(q.B == n.a4);
  };
  dual("X", "X'");
  dual("R'", "R");
  dual("Y'", "Y");
  CHECK(t.models.at("R").weight == 1);
}

TEST_CASE("four-curve table: coefficient identity and dual pair") {
  Gen g(12);
  HomPoly A = g.hom(4, kST), C = g.hom(4, kST);
  FourCurveTable t = four_curve_table(A, C);
  Rational s = g.q(), tt = g.q(), U = g.q(), V = g.q();
  Rational lhs = A.eval(s, tt) * (U - V) / 2 - C.eval(s, tt) * (U + V) / 2, rhs = 0;
  for (int i = 0; i <= 4; ++i) rhs += t.a[i].eval(U, V) * rational_pow(s, 4 - i) * rational_pow(tt, i);
  CHECK(lhs == rhs);
  CHECK(t.branches.at("G'").second == -t.branches.at("G'").first);
  const WeierstrassModel &x = t.models.at("X"), &xd = t.models.at("X'");
  CHECK(x.a4 == Rational(1, 4) * (A * A - C * C));
  AlternatePair q = vgs_dual({-x.a2, x.a4, std::nullopt});
  CHECK(-q.A == xd.a2);
  CHECK(q.B == xd.a4);
}

TEST_CASE("sub-families over the rational surface") {
  Gen g(13);
  HomPoly f = g.hom(2, kUV), gg = g.hom(3, kUV);
  CHECK(fiber_configuration(subfamily_model(Subfamily::Z, f, gg)).summary() == "24*I1");
  CHECK(fiber_configuration(subfamily_model(Subfamily::YSub, f, gg)).summary() == "2*I0* + 12*I1");
  CHECK(fiber_configuration(subfamily_model(Subfamily::YTildeSub, f, gg)).summary() == "3*I0* + 6*I1");
  CHECK(fiber_configuration(subfamily_model(Subfamily::RES, f, gg)).summary() == "I0* + 6*I1");
}

TEST_CASE("four lines in the plane: Pluecker relation") {
  Gen g(14);
  for (int i = 0; i < 10; ++i) {
    FourHData d;
    for (auto& row : d.rho)
      for (auto& x : row) x = g.q();
    FourHSurface s;
    try {
      s = four_h_surface(d);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GenericityViolated);
      continue;
    }
    // P^{ij} = m_i n_j - m_j n_i with m_k = r1 s + r2 t, n_k = r3 s + r4 t
    for (const auto& [ij, p] : s.P) {
      const auto &ri = d.rho[ij.first - 1], &rj = d.rho[ij.second - 1];
      HomPoly mi = HomPoly::linear(ri[0], ri[1]), ni = HomPoly::linear(ri[2], ri[3]);
      HomPoly mj = HomPoly::linear(rj[0], rj[1]), nj = HomPoly::linear(rj[2], rj[3]);
      CHECK(p == mi * nj - mj * ni);
    }
    auto P = [&](int i, int j) { return s.P.at({i, j}); };
    CHECK((P(1, 2) * P(3, 4) - P(1, 3) * P(2, 4) + P(1, 4) * P(2, 3)).is_zero());
  }
  FourHData same;
  for (auto& row : same.rho) row = {1, 2, 3, 5};
  CHECK(code_of([&] { four_h_surface(same); }) == ErrorCode::GenericityViolated);
}

TEST_CASE("three lines: cubic model, shifts and normalization") {
  Gen g(15);
  int normalized = 0;
  for (int i = 0; i < 40; ++i) {
    ThreeLinesParams p{g.q(), g.q(), g.q(), g.nonzero(), g.q(), 0, g.q(), g.q(), g.q(), g.q()};
    if (p.mu == p.nu || p.c1 + p.d2 == 0) continue;
    ThreeI0StarForm f = three_lines_form(p);
    WeierstrassModel a = f.model(), b = three_lines_cubic_model(p);
    CHECK(a.a2 == b.a2);
    CHECK(a.a4 == b.a4);
    CHECK(a.a6 == b.a6);
    Rational r1 = g.q(), r2 = g.q();
    CHECK(rho_shift(rho_shift(f, r1), r2) == rho_shift(f, r1 + r2));
    CHECK(invariants(rho_shift(f, r1).model()).delta == invariants(a).delta);
    NormalizeOptions opt;
    opt.branch = p.c1 > 0 ? RootBranch::Positive : RootBranch::Negative;
    ThreeI0StarForm shifted = rho_shift(f, r1);
    try {
      NormalizedThreeLines n = normalize_three_i0star(shifted, opt);
      CHECK(three_lines_form(n.params) == rho_shift(shifted, n.rho));
      if (n.rho == -r1) CHECK(n.params == p);
      ++normalized;
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::NoRationalCubicRoot || e.code() == ErrorCode::NonSquareDiscriminant ||
             e.code() == ErrorCode::DivisionGuard || e.code() == ErrorCode::ParameterConstraintViolated));
    }
  }
  CHECK(normalized > 10);
}

TEST_CASE("composition with the lines U = -(t + nu z), V = -(t + mu z)") {
  Gen g(16);
  HomPoly p = g.hom(3, kUV);
  Rational mu = 2, nu = -5, t = g.q(), z = g.q();
  CHECK(compose_with_lines(p, mu, nu).eval(t, z) == p.eval(-(t + nu * z), -(t + mu * z)));
}
