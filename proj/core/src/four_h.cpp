#include <algorithm>

#include "k3dual/duality.hpp"
#include "k3dual/error.hpp"

namespace k3dual {

namespace {

const VarPair kST{"s", "t"};
const VarPair kTZ{"t", "z"};

HomPoly line_factor(const Rational& mu, const Rational& nu) {
  return HomPoly::linear(1, mu, kTZ) * HomPoly::linear(1, nu, kTZ);
}

}  // namespace

FourHSurface four_h_surface(const FourHData& d) {
  const auto& r = d.rho;
  for (int k = 0; k < 4; ++k)
    if (r[k][0] * r[k][3] - r[k][1] * r[k][2] == 0)
      fail(ErrorCode::GenericityViolated,
           "condition (1): curve H" + std::to_string(k + 1) + " is reducible");
  FourHSurface out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      HomPoly mi = HomPoly::linear(r[i][0], r[i][1], kST), ni = HomPoly::linear(r[i][2], r[i][3], kST);
      HomPoly mj = HomPoly::linear(r[j][0], r[j][1], kST), nj = HomPoly::linear(r[j][2], r[j][3], kST);
      HomPoly p = mi * nj - ni * mj;
      if (p.is_zero() || discriminant(p) == 0)
        fail(ErrorCode::GenericityViolated, "condition (2): H" + std::to_string(i + 1) + " and H" +
                                                std::to_string(j + 1) +
                                                " do not meet in two distinct points");
      out.P[{i + 1, j + 1}] = p;
    }
  auto P = [&](int i, int j) -> const HomPoly& { return out.P.at({std::min(i, j), std::max(i, j)}); };
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) {
        if (i == j || i == k) continue;
        if (resultant(P(i, j), P(i, k)) == 0)
          fail(ErrorCode::GenericityViolated, "condition (3): H" + std::to_string(i) + ", H" +
                                                  std::to_string(j) + ", H" + std::to_string(k) +
                                                  " share a point");
      }
  HomPoly p1234 = P(1, 2) * P(3, 4), p1324 = P(1, 3) * P(2, 4);
  out.A = p1234 + p1324;
  out.C = p1234 - p1324;
  out.model = WeierstrassModel::make(-out.A, p1234 * p1324, HomPoly::zero(12, kST), 2);
  for (int i = 0; i <= 4; ++i)
    out.a[i] = {out.C.coeff(4 - i), p1234.coeff(4 - i), -p1324.coeff(4 - i)};
  return out;
}

WeierstrassModel ThreeI0StarForm::model() const {
  HomPoly z = HomPoly::linear(0, 1, kTZ);
  HomPoly k = z * line_factor(mu, nu);
  HomPoly a = HomPoly::linear(c1, c0, kTZ);
  HomPoly b(2, {d2, d1, d0}, kTZ);
  HomPoly c(3, {e3, e2, e1, e0}, kTZ);
  return WeierstrassModel::make(k * a, k.pow(2) * b, k.pow(3) * c, 2);
}

ThreeI0StarForm three_lines_form(const ThreeLinesParams& p) {
  if (p.c1 == 0) fail(ErrorCode::ParameterConstraintViolated, "c1 = 0");
  Rational kappa = p.c1 + p.d2;
  if (kappa == 0) fail(ErrorCode::ParameterConstraintViolated, "c1 + d2 = 0");
  if (p.mu == p.nu) fail(ErrorCode::ParameterConstraintViolated, "mu = nu");
  Rational k2 = kappa * kappa;
  return {p.mu,
          p.nu,
          -(p.c1 + 2 * p.d2),
          p.c0 + p.d1 + p.e2,
          kappa * p.d2,
          -kappa * (p.d1 + 2 * p.e2),
          kappa * (p.d0 + p.e1),
          0,
          k2 * p.e2,
          -k2 * p.e1,
          k2 * p.e0};
}

WeierstrassModel three_lines_cubic_model(const ThreeLinesParams& p) { return three_lines_form(p).model(); }

ThreeI0StarForm rho_shift(const ThreeI0StarForm& f, const Rational& rho) {
  // X' = X + rho t in the reduced cubic X^3 + a X^2 + b X + c.
  HomPoly a = HomPoly::linear(f.c1, f.c0, kTZ);
  HomPoly b(2, {f.d2, f.d1, f.d0}, kTZ);
  HomPoly c(3, {f.e3, f.e2, f.e1, f.e0}, kTZ);
  HomPoly rt = HomPoly::linear(rho, 0, kTZ);
  HomPoly a2 = a + Rational(3) * rt;
  HomPoly b2 = b + Rational(2) * rt * a + Rational(3) * rt * rt;
  HomPoly c2 = c + b * rt + a * rt * rt + rt.pow(3);
  ThreeI0StarForm r = f;
  r.c1 = a2.coeff(0), r.c0 = a2.coeff(1);
  r.d2 = b2.coeff(0), r.d1 = b2.coeff(1), r.d0 = b2.coeff(2);
  r.e3 = c2.coeff(0), r.e2 = c2.coeff(1), r.e1 = c2.coeff(2), r.e0 = c2.coeff(3);
  return r;
}

NormalizedThreeLines normalize_three_i0star(const ThreeI0StarForm& f, const NormalizeOptions& opt) {
  if (f.mu == f.nu) fail(ErrorCode::ParameterConstraintViolated, "mu = nu");
  // Candidate shifts; the first one leaving a square discriminant is used.
  std::vector<Rational> rhos;
  if (opt.rho) {
    rhos.push_back(*opt.rho);
  } else if (f.e3 == 0) {
    rhos.push_back(0);
  } else {
    rhos = rational_roots(UniPoly({f.e3, f.d2, f.c1, Rational(1)}));
    if (rhos.empty())
      fail(ErrorCode::NoRationalCubicRoot, "rho^3 + c1 rho^2 + d2 rho + e3 has no rational root");
  }
  Rational rho;
  ThreeI0StarForm g;
  std::optional<Rational> root;
  bool zero_root = false;
  for (const Rational& cand : rhos) {
    g = rho_shift(f, cand);
    if (g.e3 != 0) fail(ErrorCode::NoRationalCubicRoot, "supplied rho does not clear e3");
    rho = cand;
    root = rational_sqrt(g.c1 * g.c1 - 4 * g.d2);
    // a zero root would give c1 = 0
    if (root && *root == 0) {
      zero_root = true;
      root.reset();
    }
    if (root) break;
  }
  if (!root && zero_root) fail(ErrorCode::ParameterConstraintViolated, "normalized c1 = 0");
  if (!root) fail(ErrorCode::NonSquareDiscriminant, "c1^2 - 4 d2 is not a rational square");
  Rational c1 = opt.branch == RootBranch::Positive ? *root : -*root;
  Rational kappa = (c1 - g.c1) / 2;
  if (kappa == 0) fail(ErrorCode::DivisionGuard, "c1 equals the shifted linear coefficient");
  Rational k2 = kappa * kappa;
  ThreeLinesParams p;
  p.mu = f.mu;
  p.nu = f.nu;
  p.c1 = c1;
  p.d2 = -(c1 + g.c1) / 2;
  p.e2 = g.e2 / k2;
  p.e1 = -g.e1 / k2;
  p.e0 = g.e0 / k2;
  p.d1 = -g.d1 / kappa - 2 * p.e2;
  p.d0 = g.d0 / kappa - p.e1;
  p.c0 = g.c0 - p.d1 - p.e2;
  return {rho, p};
}

RelativeJacobian4H relative_jacobian_4h(const FourHData& d, const Rational& mu, const Rational& nu,
                                        const NormalizeOptions& opt) {
  if (mu == nu) fail(ErrorCode::ParameterConstraintViolated, "mu = nu");
  FourHSurface s = four_h_surface(d);
  std::array<HomPoly, 5> A;
  for (int i = 0; i <= 4; ++i)
    A[i] = HomPoly::linear(s.a[i][0], s.a[i][1] * mu + s.a[i][2] * nu, kTZ);
  HomPoly b = A[1] * A[3] - Rational(4) * A[0] * A[4];
  HomPoly c = A[1] * A[1] * A[4] + A[0] * A[3] * A[3] - Rational(4) * A[0] * A[2] * A[4];
  ThreeI0StarForm form{mu,          nu,          A[2].coeff(0), A[2].coeff(1), b.coeff(0), b.coeff(1),
                       b.coeff(2),  c.coeff(0),  c.coeff(1),    c.coeff(2),    c.coeff(3)};
  NormalizedThreeLines norm = normalize_three_i0star(form, opt);
  // Depressed cubic of X^3 + a X^2 + b X + c; invariant under the shift by rho t.
  HomPoly a = A[2];
  HomPoly F = b - Rational(1, 3) * a * a;
  HomPoly G = c - Rational(1, 3) * a * b + Rational(2, 27) * a.pow(3);
  return {s, form, norm, three_lines_cubic_model(norm.params), F, G};
}

HomPoly compose_with_lines(const HomPoly& p, const Rational& mu, const Rational& nu) {
  return p.substitute(HomPoly::linear(-1, -nu, kTZ), HomPoly::linear(-1, -mu, kTZ));
}

}  // namespace k3dual
