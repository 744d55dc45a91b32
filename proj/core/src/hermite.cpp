#include "k3dual/hermite.hpp"

#include "k3dual/error.hpp"

namespace k3dual {

UniPoly QuarticCurve::P() const { return UniPoly({a[0], a[1], a[2], a[3], a[4]}); }

Rational QuarticCurve::discriminant() const { return formal_discriminant(P(), 4); }

Rational ShortCubic::discriminant() const { return -4 * f * f * f - 27 * g * g; }

ShortCubic jacobian_quartic(const QuarticCurve& h) {
  const auto& a = h.a;
  return {hermite_f(a[0], a[1], a[2], a[3], a[4]), hermite_g(a[0], a[1], a[2], a[3], a[4])};
}

CorrespondencePolys correspondence_polys(const QuarticCurve& h) {
  const auto& [a0, a1, a2, a3, a4] = h.a;
  CorrespondencePolys out;
  Biquad& R = out.R;
  R[0][0] = a0;
  R[1][0] = R[0][1] = a1 / 2;
  R[2][0] = R[0][2] = a2 / 6;
  R[1][1] = 2 * a2 / 3;
  R[2][1] = R[1][2] = a3 / 2;
  R[2][2] = a4;
  Biquad& R1 = out.R1;
  R1[0][0] = (8 * a0 * a2 - 3 * a1 * a1) / 12;
  R1[1][0] = R1[0][1] = (6 * a0 * a3 - a1 * a2) / 6;
  R1[2][0] = R1[0][2] = (36 * a0 * a4 - a2 * a2) / 36;
  R1[1][1] = (36 * a0 * a4 + 9 * a1 * a3 - 5 * a2 * a2) / 18;
  R1[2][1] = R1[1][2] = (6 * a1 * a4 - a2 * a3) / 6;
  R1[2][2] = (8 * a2 * a4 - 3 * a3 * a3) / 12;
  std::vector<Rational> q(5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[i + j] += R1[i][j];
  out.Q = UniPoly(std::move(q));
  return out;
}

BivariatePoly BivariatePoly::from(const Biquad& b) {
  BivariatePoly p;
  p.c.assign(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.c[i][j] = b[i][j];
  return p;
}

BivariatePoly BivariatePoly::from_x(const UniPoly& u) {
  BivariatePoly p;
  for (int i = 0; i <= u.degree(); ++i) p.c.push_back({u.coeff(i)});
  return p;
}

BivariatePoly BivariatePoly::from_x0(const UniPoly& u) {
  BivariatePoly p;
  p.c.emplace_back();
  for (int j = 0; j <= u.degree(); ++j) p.c[0].push_back(u.coeff(j));
  return p;
}

bool BivariatePoly::is_zero() const {
  for (const auto& row : c)
    for (const auto& x : row)
      if (sgn(x) != 0) return false;
  return true;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& x0) const {
  Rational acc = 0, xp = 1;
  for (const auto& row : c) {
    Rational yp = 1;
    for (const auto& v : row) {
      acc += v * xp * yp;
      yp *= x0;
    }
    xp *= x;
  }
  return acc;
}

namespace {

BivariatePoly combine(const BivariatePoly& a, const BivariatePoly& b, int sign) {
  BivariatePoly r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n);
  for (size_t i = 0; i < n; ++i) {
    size_t m = std::max(i < a.c.size() ? a.c[i].size() : 0, i < b.c.size() ? b.c[i].size() : 0);
    r.c[i].assign(m, Rational(0));
    if (i < a.c.size())
      for (size_t j = 0; j < a.c[i].size(); ++j) r.c[i][j] += a.c[i][j];
    if (i < b.c.size())
      for (size_t j = 0; j < b.c[i].size(); ++j) r.c[i][j] += sign * b.c[i][j];
  }
  return r;
}

}  // namespace

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const { return combine(*this, o, 1); }
BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const { return combine(*this, o, -1); }

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly r;
  if (c.empty() || o.c.empty()) return r;
  size_t mj = 0, nj = 0;
  for (const auto& row : c) mj = std::max(mj, row.size());
  for (const auto& row : o.c) nj = std::max(nj, row.size());
  if (mj == 0 || nj == 0) return r;
  r.c.assign(c.size() + o.c.size() - 1, std::vector<Rational>(mj + nj - 1));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j) {
      if (sgn(c[i][j]) == 0) continue;
      for (size_t k = 0; k < o.c.size(); ++k)
        for (size_t l = 0; l < o.c[k].size(); ++l) r.c[i + k][j + l] += c[i][j] * o.c[k][l];
    }
  return r;
}

BivariatePoly correspondence_residual(const QuarticCurve& h) {
  auto cp = correspondence_polys(h);
  BivariatePoly R = BivariatePoly::from(cp.R), R1 = BivariatePoly::from(cp.R1);
  BivariatePoly diff = BivariatePoly::from_x(UniPoly::x()) - BivariatePoly::from_x0(UniPoly::x());
  BivariatePoly PP = BivariatePoly::from_x(h.P()) * BivariatePoly::from_x0(h.P());
  return R * R + R1 * diff * diff - PP;
}

DiscriminantRelation discr_relation_check(const QuarticCurve& h) {
  auto cp = correspondence_polys(h);
  return {h.discriminant(), formal_discriminant(cp.Q, 4), jacobian_quartic(h).g};
}

namespace {

void require_on_curve(const QuarticCurve& h, const CurvePoint& p, const char* which) {
  if (p.w * p.w != h.P().eval(p.x))
    fail(ErrorCode::NotOnCurve, std::string(which) + " (" + p.x.get_str() + ", " + p.w.get_str() +
                                    ") is not on w^2 = P(x)");
}

Rational eval_biquad(const Biquad& b, const Rational& x, const Rational& x0) {
  Rational acc = 0;
  Rational xp[3] = {1, x, x * x}, yp[3] = {1, x0, x0 * x0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += b[i][j] * xp[i] * yp[j];
  return acc;
}

}  // namespace

JacobianPoint abel_jacobi(const QuarticCurve& h, const CurvePoint& base, const CurvePoint& p) {
  require_on_curve(h, base, "base point");
  require_on_curve(h, p, "point");
  const Rational x0 = base.x, w0 = -base.w;
  UniPoly P = h.P(), dP = P.derivative();
  if (p.x == x0) {
    if (sgn(w0) == 0) fail(ErrorCode::BasePointRamified, "base point is a branch point");
    if (p.w == -w0) return {true, 0, 0};
    auto cp = correspondence_polys(h);
    Rational Px0 = P.eval(x0), Qx0 = cp.Q.eval(x0);
    Rational bracket = dP.eval(x0) * Qx0 - Px0 * cp.Q.derivative().eval(x0);
    return {false, -Qx0 / Px0, bracket / (2 * w0 * w0 * w0)};
  }
  auto cp = correspondence_polys(h);
  Rational d = p.x - x0;
  Rational R = eval_biquad(cp.R, p.x, x0);
  Rational xi = 2 * (R - p.w * w0) / (d * d);
  Rational eta = 4 * p.w * w0 * (p.w - w0) / (d * d * d) -
                 (dP.eval(p.x) * w0 + dP.eval(x0) * p.w) / (d * d);
  return {false, xi, eta};
}

namespace {

QuadraticExt qmul(const QuadraticExt& a, const QuadraticExt& b, const UniPoly& P) {
  return {a.p0 * b.p0 + a.p1 * b.p1 * P, a.p0 * b.p1 + a.p1 * b.p0};
}

QuadraticExt qsub(const QuadraticExt& a, const QuadraticExt& b) { return {a.p0 - b.p0, a.p1 - b.p1}; }

QuadraticExt qscale(const QuadraticExt& a, const UniPoly& s) { return {a.p0 * s, a.p1 * s}; }

}  // namespace

QuadraticExt aj_functional_residual(const QuarticCurve& h, const Rational& x0, const Rational& w0) {
  auto cp = correspondence_polys(h);
  UniPoly P = h.P(), dP = P.derivative();
  std::vector<Rational> rx(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rx[i] += cp.R[i][j] * rational_pow(x0, j);
  UniPoly R(std::move(rx));
  UniPoly lin({-x0, 1});
  QuadraticExt nxi{R * Rational(2), UniPoly::constant(-2 * w0)};
  QuadraticExt neta{P * (4 * w0) - lin * dP * w0, UniPoly::constant(-4 * w0 * w0) - lin * dP.eval(x0)};
  ShortCubic fg = jacobian_quartic(h);
  QuadraticExt lhs = qmul(neta, neta, P);
  QuadraticExt cube = qmul(qmul(nxi, nxi, P), nxi, P);
  QuadraticExt lin_term = qscale(nxi, lin.pow(4) * fg.f);
  QuadraticExt const_term{lin.pow(6) * fg.g, {}};
  return qsub(qsub(qsub(lhs, cube), lin_term), const_term);
}

bool Biquadratic22::is_symmetric() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (phi[i][j] != phi[j][i]) return false;
  return true;
}

Biquadratic22 biquadratic_from_phi(const Biquad& phi, const VarPair& vars) {
  Biquadratic22 out;
  out.phi = phi;
  out.gamma = HomPoly(2, {phi[2][2], phi[1][2], phi[0][2]}, vars);
  out.alpha = HomPoly(2, {phi[2][1], phi[1][1], phi[0][1]}, vars);
  out.delta = HomPoly(2, {phi[2][0], phi[1][0], phi[0][0]}, vars);
  return out;
}

Biquadratic22 correspondence_22(const QuarticCurve& h, const Rational& xi) {
  auto cp = correspondence_polys(h);
  Biquad phi{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) phi[i][j] = -4 * xi * cp.R[i][j] - 4 * cp.R1[i][j];
  Rational xi2 = xi * xi;
  phi[2][0] += xi2;
  phi[0][2] += xi2;
  phi[1][1] -= 2 * xi2;
  return biquadratic_from_phi(phi);
}

Rational j_invariant_quartic(const QuarticCurve& h) {
  ShortCubic fg = jacobian_quartic(h);
  Rational den = 4 * fg.f * fg.f * fg.f + 27 * fg.g * fg.g;
  if (sgn(den) == 0) fail(ErrorCode::SingularCurve, "quartic has a repeated root");
  return 6912 * fg.f * fg.f * fg.f / den;
}

QuarticCurve branch_quartic_22(const Biquadratic22& c) {
  HomPoly d = c.alpha * c.alpha - Rational(4) * (c.gamma * c.delta);
  UniPoly u = d.dehomogenize();
  QuarticCurve q;
  for (int i = 0; i < 5; ++i) q.a[i] = u.coeff(i);
  return q;
}

Rational j_invariant_22(const Biquadratic22& c) { return j_invariant_quartic(branch_quartic_22(c)); }

bool same_j(const ShortCubic& a, const ShortCubic& b) {
  return a.f * a.f * a.f * b.g * b.g == b.f * b.f * b.f * a.g * a.g;
}

Rational smoothness_discriminant(const Rational& a0, const Rational& a1, const Rational& a2) {
  return 16 * a0 * a2 * a2 * a2 * a2 - 4 * a1 * a1 * a2 * a2 * a2 - 128 * a0 * a0 * a2 * a2 +
         144 * a0 * a1 * a1 * a2 - 27 * a1 * a1 * a1 * a1 + 256 * a0 * a0 * a0;
}

namespace {

BiHomPoly branch_from(const HomPoly& gamma, const HomPoly& alpha, const HomPoly& delta,
                      const Rational& c0, const Rational& cinf) {
  VarPair st{"S", "T"}, uv{"U", "V"};
  BiHomPoly phi = BiHomPoly::from_rows({gamma.with_vars(uv), alpha.with_vars(uv), delta.with_vars(uv)}, st)
                      .swap_factors();
  HomPoly lines = HomPoly(1, {1, -c0}, st) * HomPoly(1, {-cinf, 1}, st);
  HomPoly uvp = HomPoly::monomial(1, 1, 1, uv);
  return BiHomPoly::outer(lines, uvp) * phi;
}

}  // namespace

SymmetricSurface build_symmetric_surface(const SymmetricSurfaceParams& p) {
  if (sgn(smoothness_discriminant(p.a0, p.a1, p.a2)) == 0)
    fail(ErrorCode::SingularH, "x^4 + a2 x^2 + a1 x + a0 has a repeated root");
  if (p.c0 * p.cinf == 1) fail(ErrorCode::UnitViolation, "c0 * cinf = 1");
  SymmetricSurface out;
  out.curve.a = {p.a0, p.a1, p.a2, 0, 1};
  out.phi = correspondence_22(out.curve, p.xi);
  out.branch = branch_from(out.phi.gamma, out.phi.alpha, out.phi.delta, p.c0, p.cinf);
  return out;
}

SymmetricParams params_from_phi(const Biquadratic22& c, const Rational& c0, const Rational& cinf) {
  if (!c.is_symmetric()) fail(ErrorCode::NormalizationViolated, "correspondence is not symmetric");
  const Biquad& f = c.phi;
  return {f[0][0], f[0][1], f[0][2], f[1][1], f[1][2], f[2][2], c0, cinf};
}

BiHomPoly symmetric_branch(const SymmetricParams& p) {
  VarPair uv{"U", "V"};
  HomPoly gamma(2, {p.gamma2, p.alpha2, p.gamma0}, uv);
  HomPoly alpha(2, {p.alpha2, p.alpha1, p.alpha0}, uv);
  HomPoly delta(2, {p.gamma0, p.alpha0, p.delta0}, uv);
  return branch_from(gamma, alpha, delta, p.c0, p.cinf);
}

Rational normalization_constraint(const SymmetricParams& p) {
  return 2 * p.alpha0 * p.gamma2 - p.alpha1 * p.alpha2 + 2 * p.alpha2 * p.gamma0;
}

SymmetricParams apply_symmetry(const SymmetricParams& p, SymmetryMove move, const Rational& k) {
  switch (move) {
    case SymmetryMove::Scale: {
      if (sgn(k) == 0) fail(ErrorCode::ZeroScale, "scale factor is zero");
      return {k * p.delta0, k * p.alpha0, k * p.gamma0, k * p.alpha1,
              k * p.alpha2, k * p.gamma2, p.c0,         p.cinf};
    }
    case SymmetryMove::Weight: {
      if (sgn(k) == 0) fail(ErrorCode::ZeroScale, "weight factor is zero");
      Rational k2 = k * k;
      return {k2 * k2 * p.delta0, k2 * k * p.alpha0, k2 * p.gamma0, k2 * p.alpha1,
              k * p.alpha2,       p.gamma2,          k * p.c0,      p.cinf / k};
    }
    case SymmetryMove::Swap: {
      if (sgn(p.c0) == 0 || sgn(p.cinf) == 0)
        fail(ErrorCode::ZeroScale, "swap needs nonzero c0 and cinf");
      return {p.gamma2, p.alpha2, p.gamma0, p.alpha1, p.alpha0, p.delta0, 1 / p.c0, 1 / p.cinf};
    }
    case SymmetryMove::Shear: {
      const Rational &c = p.c0, &e = p.cinf;
      const Rational &d0 = p.delta0, &a0 = p.alpha0, &g0 = p.gamma0, &a1 = p.alpha1,
                     &a2 = p.alpha2, &g2 = p.gamma2;
      Rational c2 = c * c, c3 = c2 * c, c4 = c3 * c, e2 = e * e, e3 = e2 * e, e4 = e3 * e;
      SymmetricParams r;
      r.delta0 = g2 * c4 + 2 * a2 * c3 + (a1 + 2 * g0) * c2 + 2 * a0 * c + d0;
      r.alpha0 = (a2 * e + 2 * g2) * c3 + ((a1 + 2 * g0) * e + 3 * a2) * c2 +
                 (3 * a0 * e + a1 + 2 * g0) * c + 2 * d0 * e + a0;
      r.gamma0 = (g0 * e2 + a2 * e + g2) * c2 + (a0 * e2 + a1 * e + a2) * c + d0 * e2 + a0 * e + g0;
      r.alpha1 = (a1 * e2 + 4 * a2 * e + 4 * g2) * c2 +
                 (4 * a0 * e2 + 2 * (a1 + 4 * g0) * e + 4 * a2) * c + 4 * d0 * e2 + 4 * a0 * e + a1;
      r.alpha2 = (a0 * c + 2 * d0) * e3 + ((a1 + 2 * g0) * c + 3 * a0) * e2 +
                 (3 * a2 * c + a1 + 2 * g0) * e + 2 * g2 * c + a2;
      r.gamma2 = d0 * e4 + 2 * a0 * e3 + (a1 + 2 * g0) * e2 + 2 * a2 * e + g2;
      r.c0 = -c;
      r.cinf = -e;
      return r;
    }
  }
  return p;
}

}  // namespace k3dual
