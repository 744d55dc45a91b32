#include <random>

#include "doctest.h"
#include "k3dual/error.hpp"
#include "k3dual/weierstrass.hpp"
#include "oracles.hpp"

using namespace k3dual;

namespace {

struct Gen {
  std::mt19937_64 g;
  explicit Gen(uint64_t seed) : g(seed) {}
  Rational q() { return std::uniform_int_distribution<int>(-9, 9)(g); }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }
  HomPoly hom(int deg) {
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = q();
    return HomPoly(deg, c);
  }
};

// Expansion of a form around the place `second = 0` (root == nullopt) or `first = root * second`.
oracle::Poly local(const HomPoly& p, std::optional<Rational> root) {
  oracle::Poly out;
  int d = p.degree();
  if (!root) {
    for (int k = 0; k <= d; ++k) out.push_back(p.coeff(k));
    oracle::trim(out);
    return out;
  }
  oracle::Poly shift{*root, 1};
  for (int k = 0; k <= d; ++k) {
    oracle::Poly term = oracle::constant(p.coeff(k));
    for (int e = 0; e < d - k; ++e) term = oracle::mul(term, shift);
    out = oracle::add(out, term);
  }
  return out;
}

// Tate's algorithm on the local model, after removing (x, y) -> (t^2 x, t^3 y) scalings.
std::string tate_at(const WeierstrassModel& m, std::optional<Rational> root) {
  oracle::Model lm{{}, local(m.a2, root), {}, local(m.a4, root), local(m.a6, root)};
  for (;;) {
    std::string s = oracle::tate(lm);
    if (s != "non-minimal") return s;
    auto drop = [](oracle::Poly p, int k) {
      if (!p.empty()) p.erase(p.begin(), p.begin() + k);
      return p;
    };
    lm = {{}, drop(lm.a2, 2), {}, drop(lm.a4, 4), drop(lm.a6, 6)};
  }
}

std::optional<std::optional<Rational>> linear_root(const HomPoly& place) {
  if (place.degree() != 1) return std::nullopt;
  if (place.coeff(0) == 0) return std::optional<Rational>{};  // the place second = 0
  return std::optional<Rational>(-place.coeff(1) / place.coeff(0));
}

}  // namespace

TEST_CASE("c4, c6 and delta agree with the b-invariant formulas") {
  Gen g(1);
  for (int i = 0; i < 50; ++i) {
    WeierstrassModel m = WeierstrassModel::make(g.hom(2), g.hom(4), g.hom(6), 1);
    auto inv = invariants(m);
    Rational s = g.q(), t = g.q();
    oracle::Model pt{{}, oracle::constant(m.a2.eval(s, t)), {}, oracle::constant(m.a4.eval(s, t)),
                     oracle::constant(m.a6.eval(s, t))};
    auto ref = oracle::invariants(pt);
    CHECK(inv.c4.eval(s, t) == oracle::eval(ref.c4, 0));
    CHECK(inv.c6.eval(s, t) == oracle::eval(ref.c6, 0));
    CHECK(inv.delta.eval(s, t) == oracle::eval(ref.delta, 0));
    CHECK(inv.delta.degree() == 12);
  }
}

TEST_CASE("j-invariants of constant curves") {
  auto curve = [](Rational a2, Rational a4, Rational a6) {
    return WeierstrassModel::make(HomPoly::constant(a2), HomPoly::constant(a4), HomPoly::constant(a6), 0);
  };
  CHECK(j_invariant(curve(0, 1, 0)) == 1728);
  CHECK(j_invariant(curve(0, 0, 1)) == 0);
  CHECK_THROWS_AS(j_invariant(curve(0, 0, 0)), Error);
  CHECK_THROWS_AS(j_invariant(curve(1, 0, 0)), Error);
}

TEST_CASE("model construction rejects wrong degrees") {
  try {
    WeierstrassModel::make(HomPoly::zero(2), HomPoly::zero(3), HomPoly::zero(6), 1);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("valuation example: a non-minimal place reduces to type II") {
  HomPoly t = HomPoly::linear(0, 1), s = HomPoly::linear(1, 0);
  // f = s^3 t^5, g = s^5 t^7 at weight 2: (5, 7, 14) at t = 0
  WeierstrassModel m = WeierstrassModel::short_form(s.pow(3) * t.pow(5), s.pow(5) * t.pow(7), 2);
  CHECK(valuations_at(m, t) == LocalValuations{5, 7, 14});
  CHECK(minimalize_at(m, t) == LocalValuations{1, 1, 2});
  CHECK(kodaira_from_valuations(minimalize_at(m, t)).name() == "II");
  CHECK(tate_at(m, std::nullopt) == "II");
}

TEST_CASE("(4, 6, 12) minimalizes to a smooth fiber") {
  HomPoly t = HomPoly::linear(0, 1), s = HomPoly::linear(1, 0);
  WeierstrassModel m = WeierstrassModel::short_form(s.pow(4) * t.pow(4), (s.pow(6) + t.pow(6)) * t.pow(6), 2);
  CHECK(valuations_at(m, t) == LocalValuations{4, 6, 12});
  CHECK(minimalize_at(m, t) == LocalValuations{0, 0, 0});
}

TEST_CASE("identically singular models are rejected") {
  WeierstrassModel m = WeierstrassModel::make(HomPoly::zero(2), HomPoly::zero(4), HomPoly::zero(6), 1);
  try {
    fiber_configuration(m);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateModel);
  }
}

TEST_CASE("generic models: 12 I1 at weight 1, 24 I1 at weight 2") {
  Gen g(2);
  for (int w = 1; w <= 2; ++w) {
    WeierstrassModel m = WeierstrassModel::short_form(g.hom(4 * w), g.hom(6 * w), w);
    auto fc = fiber_configuration(m);
    CHECK(fc.summary() == std::to_string(12 * w) + "*I1");
    CHECK(fc.euler_sum == 12 * w);
    CHECK(fc.is_k3() == (w == 2));
  }
}

TEST_CASE("fiber types at rational places match Tate's algorithm") {
  Gen g(3);
  HomPoly t = HomPoly::linear(0, 1), l = HomPoly::linear(1, -2), k = HomPoly::linear(1, 1);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int p2 = g.pick(0, 2), p4 = g.pick(0, 4), p6 = g.pick(0, 6);
    int q2 = g.pick(0, 1), q4 = g.pick(0, 3), q6 = g.pick(0, 5);
    HomPoly a2 = t.pow(p2) * l.pow(q2) * g.hom(4 - p2 - q2);
    HomPoly a4 = t.pow(p4) * l.pow(q4) * g.hom(8 - p4 - q4);
    int r6 = g.pick(0, 1);
    HomPoly a6 = t.pow(p6) * l.pow(q6) * k.pow(r6) * g.hom(12 - p6 - q6 - r6);
    WeierstrassModel m = WeierstrassModel::make(a2, a4, a6, 2);
    if (invariants(m).delta.is_zero()) continue;
    auto fc = fiber_configuration(m);
    int euler = 0;
    for (const auto& place : fc.places) {
      euler += place.root_count * place.type.euler_number();
      CHECK(place.root_count == place.place.degree());
      auto root = linear_root(place.place);
      if (!root) continue;
      CAPTURE(to_string(m.a2));
      CAPTURE(to_string(m.a4));
      CAPTURE(to_string(m.a6));
      CAPTURE(to_string(place.place));
      CHECK(place.type.name() == tate_at(m, *root));
      ++checked;
    }
    CHECK(euler == fc.euler_sum);
    // a place off the discriminant is smooth
    CHECK(tate_at(m, Rational(1, 7)) == "I0");
  }
  CHECK(checked > 150);
}

TEST_CASE("fiber multiset strings") {
  auto counts = parse_fiber_multiset("8*I2 + 8*I1");
  KodairaType i1{KodairaFamily::I, 1}, i2{KodairaFamily::I, 2};
  CHECK(counts.at(i1) == 8);
  CHECK(counts.at(i2) == 8);
  CHECK(format_fiber_multiset(parse_fiber_multiset("I0* + 6*I1")) == "I0* + 6*I1");
  CHECK(format_fiber_multiset(parse_fiber_multiset("6*I1 + I0*")) == "I0* + 6*I1");
  CHECK_THROWS_AS(parse_fiber_multiset("8*J2"), Error);
  KodairaType x;
  CHECK(parse_kodaira("I3*", x));
  CHECK(x == KodairaType{KodairaFamily::IStar, 3});
  CHECK_FALSE(parse_kodaira("V", x));
}

TEST_CASE("two-torsion sections of x (x - C)(x - D)") {
  Gen g(4);
  for (int i = 0; i < 10; ++i) {
    HomPoly C = g.hom(4), D = g.hom(4);
    if (C.is_zero() || D.is_zero() || C == D) continue;
    WeierstrassModel m = WeierstrassModel::make(-(C + D), C * D, HomPoly::zero(12), 2);
    auto secs = two_torsion_sections(m);
    CHECK(secs.size() == 3);
    for (const auto& X : secs) CHECK((X * X * X + m.a2 * X * X + m.a4 * X + m.a6).is_zero());
  }
  // x^3 + x + 1 over P^1 has no rational root
  WeierstrassModel m = WeierstrassModel::short_form(HomPoly::monomial(1, 8, 0), HomPoly::monomial(1, 12, 0), 2);
  CHECK(two_torsion_sections(m).empty());
}

TEST_CASE("twisting by a quadric turns two smooth fibers into I0*") {
  Gen g(5);
  WeierstrassModel r = WeierstrassModel::short_form(g.hom(4), g.hom(6), 1);
  HomPoly d = HomPoly::linear(1, -3) * HomPoly::linear(1, 5);
  auto base = fiber_configuration(r);
  auto tw = fiber_configuration(quadratic_twist(r, d));
  KodairaType i0s{KodairaFamily::IStar, 0};
  CHECK(tw.counts.at(i0s) == 2);
  CHECK(tw.euler_sum == base.euler_sum + 12);
  CHECK(fiber_configuration(negate_x(r)).summary() == base.summary());
  CHECK(invariants(negate_x(r)).delta == invariants(r).delta);
}
