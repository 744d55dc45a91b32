#include "k3dual/duality.hpp"

#include "k3dual/error.hpp"

namespace k3dual {

namespace {

const VarPair kST{"s", "t"};
const VarPair kBigST{"S", "T"};
const VarPair kUV{"u", "v"};
const VarPair kBigUV{"U", "V"};
const VarPair kTildeUV{"ut", "vt"};

HomPoly squares(const HomPoly& p, const VarPair& v) {
  return p.with_vars(v).substitute(HomPoly::monomial(1, 2, 0, v), HomPoly::monomial(1, 0, 2, v));
}

HomPoly one(const VarPair& v) { return HomPoly::constant(1, v); }

WeierstrassModel two_isogenous(const HomPoly& a, const HomPoly& b, bool dual, int weight) {
  HomPoly a2 = dual ? Rational(-2) * a : a;
  HomPoly a4 = dual ? a * a - Rational(4) * b : b;
  return WeierstrassModel::make(a2, a4, HomPoly::zero(6 * weight, a.vars()), weight);
}

// sum_k monos[k] * coeffs[k]; monos live in the first pair, coeffs in the second.
BiHomPoly expand_in_first(const std::vector<HomPoly>& coeffs, const std::vector<HomPoly>& monos) {
  BiHomPoly acc = BiHomPoly::outer(monos[0], coeffs[0]);
  for (size_t k = 1; k < coeffs.size(); ++k) acc += BiHomPoly::outer(monos[k], coeffs[k]);
  return acc;
}

}  // namespace

QuadricTable quadric_table(const HomPoly& alpha, const HomPoly& gamma, const HomPoly& delta) {
  if (alpha.degree() != 2 || gamma.degree() != 2 || delta.degree() != 2)
    fail(ErrorCode::DegreeMismatch, "alpha, gamma, delta must be quadratic");
  if (gamma.coeff(1) != alpha.coeff(0) || delta.coeff(0) != gamma.coeff(2) ||
      delta.coeff(1) != alpha.coeff(2))
    fail(ErrorCode::NormalizationViolated, "gamma, alpha, delta are not in symmetric normal form");
  QuadricTable t;
  t.c = HomPoly(2, {gamma.coeff(0), alpha.coeff(0), delta.coeff(0)}, kBigUV);
  t.a = HomPoly(2, {gamma.coeff(1), alpha.coeff(1), delta.coeff(1)}, kBigUV);
  t.d = HomPoly(2, {gamma.coeff(2), alpha.coeff(2), delta.coeff(2)}, kBigUV);

  HomPoly al = alpha.with_vars(kBigST), ga = gamma.with_vars(kBigST), de = delta.with_vars(kBigST);
  HomPoly st = HomPoly::monomial(1, 1, 1, kBigST), uv = HomPoly::monomial(1, 1, 1, kBigUV);

  t.models["X"] = two_isogenous(squares(al, kST), squares(ga * de, kST), false, 2);
  t.models["X'"] = two_isogenous(squares(al, kST), squares(ga * de, kST), true, 2);
  t.models["Y"] = two_isogenous(squares(t.a, kUV), squares(t.c * t.d, kUV), true, 2);
  t.models["Y'"] = two_isogenous(squares(t.a, kUV), squares(t.c * t.d, kUV), false, 2);
  t.models["X~"] = two_isogenous(st * al, st.pow(2) * ga * de, false, 2);
  t.models["X~'"] = two_isogenous(st * al, st.pow(2) * ga * de, true, 2);
  t.models["Y~"] = two_isogenous(uv * t.a, uv.pow(2) * t.c * t.d, true, 2);
  t.models["Y~'"] = two_isogenous(uv * t.a, uv.pow(2) * t.c * t.d, false, 2);
  t.models["R~"] = two_isogenous(al, ga * de, false, 1);
  t.models["R~'"] = two_isogenous(al, ga * de, true, 1);
  t.models["R"] = two_isogenous(t.a, t.c * t.d, true, 1);
  t.models["R'"] = two_isogenous(t.a, t.c * t.d, false, 1);

  auto even4 = [](const VarPair& v) {
    return std::vector<HomPoly>{HomPoly::monomial(1, 4, 0, v), HomPoly::monomial(1, 2, 2, v),
                                HomPoly::monomial(1, 0, 4, v)};
  };
  auto quad2 = [](const VarPair& v) {
    return std::vector<HomPoly>{HomPoly::monomial(1, 2, 0, v), HomPoly::monomial(1, 1, 1, v),
                                HomPoly::monomial(1, 0, 2, v)};
  };

  // G over (s,t) x (u,v)
  {
    BiHomPoly lhs = BiHomPoly::outer(squares(ga, kST), HomPoly::monomial(1, 4, 0, kUV)) +
                    BiHomPoly::outer(squares(al, kST), HomPoly::monomial(1, 2, 2, kUV)) +
                    BiHomPoly::outer(squares(de, kST), HomPoly::monomial(1, 0, 4, kUV));
    BiHomPoly rhs = expand_in_first({squares(t.c, kUV), squares(t.a, kUV), squares(t.d, kUV)},
                                    even4(kST));
    t.branches["G"] = {lhs, rhs};
  }
  // F over (s,t) x (U,V)
  {
    BiHomPoly pref = BiHomPoly::outer(one(kST), uv);
    BiHomPoly lhs = BiHomPoly::outer(squares(ga, kST), HomPoly::monomial(1, 2, 0, kBigUV)) +
                    BiHomPoly::outer(squares(al, kST), HomPoly::monomial(1, 1, 1, kBigUV)) +
                    BiHomPoly::outer(squares(de, kST), HomPoly::monomial(1, 0, 2, kBigUV));
    BiHomPoly rhs = expand_in_first({t.c, t.a, t.d}, even4(kST));
    t.branches["F"] = {pref * lhs, pref * rhs};
  }
  // G~ over (S,T) x (u,v)
  {
    BiHomPoly pref = BiHomPoly::outer(st, one(kUV));
    BiHomPoly lhs = BiHomPoly::outer(ga, HomPoly::monomial(1, 4, 0, kUV)) +
                    BiHomPoly::outer(al, HomPoly::monomial(1, 2, 2, kUV)) +
                    BiHomPoly::outer(de, HomPoly::monomial(1, 0, 4, kUV));
    BiHomPoly rhs = expand_in_first({squares(t.c, kUV), squares(t.a, kUV), squares(t.d, kUV)},
                                    quad2(kBigST));
    t.branches["G~"] = {pref * lhs, pref * rhs};
  }
  // F~ over (S,T) x (U,V)
  {
    BiHomPoly pref = BiHomPoly::outer(st, uv);
    BiHomPoly lhs = BiHomPoly::outer(ga, HomPoly::monomial(1, 2, 0, kBigUV)) +
                    BiHomPoly::outer(al, HomPoly::monomial(1, 1, 1, kBigUV)) +
                    BiHomPoly::outer(de, HomPoly::monomial(1, 0, 2, kBigUV));
    BiHomPoly rhs = expand_in_first({t.c, t.a, t.d}, quad2(kBigST));
    t.branches["F~"] = {pref * lhs, pref * rhs};
  }
  return t;
}

QuadricTable quadric_table_from_correspondence(const Biquadratic22& phi) {
  return quadric_table(phi.alpha.with_vars(kBigST), phi.gamma.with_vars(kBigST),
                         phi.delta.with_vars(kBigST));
}

FourCurveTable four_curve_table(const HomPoly& A0, const HomPoly& C0) {
  if (A0.degree() != 4 || C0.degree() != 4) fail(ErrorCode::DegreeMismatch, "A and C must be quartic");
  HomPoly A = A0.with_vars(kST), C = C0.with_vars(kST);
  HomPoly B4 = A * A - C * C;
  if (B4.is_zero()) fail(ErrorCode::DegenerateInput, "A^2 - C^2 vanishes identically");
  FourCurveTable t;
  for (int i = 0; i <= 4; ++i) {
    Rational ai = A.coeff(i), ci = C.coeff(i);
    t.a[i] = HomPoly::linear((ai - ci) / 2, -(ai + ci) / 2, kBigUV);
  }
  t.f = hermite_f(t.a[0], t.a[1], t.a[2], t.a[3], t.a[4]);
  t.g = hermite_g(t.a[0], t.a[1], t.a[2], t.a[3], t.a[4]);

  t.models["X"] = WeierstrassModel::make(-A, Rational(1, 4) * B4, HomPoly::zero(12, kST), 2);
  t.models["X'"] = WeierstrassModel::make(Rational(2) * A, C * C, HomPoly::zero(12, kST), 2);

  auto u2 = [](const VarPair& v) { return HomPoly::monomial(1, 2, 0, v); };
  auto v2 = [](const VarPair& v) { return HomPoly::monomial(1, 0, 2, v); };
  HomPoly zX = (u2(kTildeUV) - v2(kTildeUV)).pow(2), zY = (u2(kTildeUV) + v2(kTildeUV)).pow(2);
  HomPoly fT = t.f.with_vars(kTildeUV), gT = t.g.with_vars(kTildeUV);
  t.models["Y'"] = WeierstrassModel::short_form(fT.substitute(zX, zY), gT.substitute(zX, zY), 2);
  t.models["Y"] = subfamily_model(Subfamily::YSub, t.f, t.g);
  t.models["Y~"] = subfamily_model(Subfamily::YTildeSub, t.f, t.g);
  HomPoly fu = t.f.with_vars(kUV), gu = t.g.with_vars(kUV);
  t.models["R'"] = WeierstrassModel::short_form(fu.substitute(u2(kUV), v2(kUV)),
                                                gu.substitute(u2(kUV), v2(kUV)), 1);
  t.models["R"] = subfamily_model(Subfamily::RES, t.f, t.g);

  std::vector<HomPoly> quartic_monos;
  for (int i = 0; i <= 4; ++i) quartic_monos.push_back(HomPoly::monomial(1, 4 - i, i, kST));
  HomPoly halfAmC = Rational(1, 2) * (A - C), halfApC = Rational(1, 2) * (A + C);

  // G' over (s,t) x (ut,vt)
  {
    BiHomPoly lhs = BiHomPoly::outer(C, HomPoly::monomial(1, 4, 0, kTildeUV)) +
                    BiHomPoly::outer(Rational(2) * A, HomPoly::monomial(1, 2, 2, kTildeUV)) +
                    BiHomPoly::outer(C, HomPoly::monomial(1, 0, 4, kTildeUV));
    std::vector<HomPoly> rows;
    for (int i = 0; i <= 4; ++i) rows.push_back(t.a[i].with_vars(kTildeUV).substitute(zX, zY));
    t.branches["G'"] = {lhs, expand_in_first(rows, quartic_monos)};
  }
  // G over (s,t) x (u,v)
  {
    BiHomPoly pref = BiHomPoly::outer(one(kST), u2(kUV) - v2(kUV));
    BiHomPoly lhs = BiHomPoly::outer(halfAmC, u2(kUV)) - BiHomPoly::outer(halfApC, v2(kUV));
    std::vector<HomPoly> rows;
    for (int i = 0; i <= 4; ++i) rows.push_back(t.a[i].with_vars(kUV).substitute(u2(kUV), v2(kUV)));
    t.branches["G"] = {pref * lhs, pref * expand_in_first(rows, quartic_monos)};
  }
  // F over (s,t) x (U,V)
  {
    HomPoly k = HomPoly::monomial(1, 1, 1, kBigUV) * HomPoly::linear(1, -1, kBigUV);
    BiHomPoly pref = BiHomPoly::outer(one(kST), k);
    BiHomPoly lhs = BiHomPoly::outer(halfAmC, HomPoly::linear(1, 0, kBigUV)) -
                    BiHomPoly::outer(halfApC, HomPoly::linear(0, 1, kBigUV));
    std::vector<HomPoly> rows(t.a.begin(), t.a.end());
    t.branches["F"] = {pref * lhs, pref * expand_in_first(rows, quartic_monos)};
  }
  return t;
}

}  // namespace k3dual
