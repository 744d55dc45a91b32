#pragma once

#include <array>
#include <optional>

#include "k3dual/hompoly.hpp"
#include "k3dual/unipoly.hpp"

namespace k3dual {

// w^2 = P(x) = a0 + a1 x + a2 x^2 + a3 x^3 + a4 x^4.
struct QuarticCurve {
  std::array<Rational, 5> a;
  UniPoly P() const;
  // Discriminant of P at formal degree 4.
  Rational discriminant() const;
};

// Y^2 = X^3 + f X + g
struct ShortCubic {
  Rational f, g;
  Rational discriminant() const;  // -4 f^3 - 27 g^2
  friend bool operator==(const ShortCubic&, const ShortCubic&) = default;
};

// The pair (f, g) attached to a binary quartic; the same formulas work over any ring.
ShortCubic jacobian_quartic(const QuarticCurve& h);
template <class T>
T hermite_f(const T& a0, const T& a1, const T& a2, const T& a3, const T& a4) {
  return Rational(-4) * (a0 * a4) + a1 * a3 - Rational(1, 3) * (a2 * a2);
}
template <class T>
T hermite_g(const T& a0, const T& a1, const T& a2, const T& a3, const T& a4) {
  return Rational(-8, 3) * (a0 * a2 * a4) + a0 * a3 * a3 + a1 * a1 * a4 -
         Rational(1, 3) * (a1 * a2 * a3) + Rational(2, 27) * (a2 * a2 * a2);
}

// Coefficient [i][j] multiplies x^i x0^j.
using Biquad = std::array<std::array<Rational, 3>, 3>;

struct CorrespondencePolys {
  Biquad R, R1;
  UniPoly Q;
};

CorrespondencePolys correspondence_polys(const QuarticCurve& h);

// Dense polynomial in (x, x0); c[i][j] multiplies x^i x0^j.
struct BivariatePoly {
  std::vector<std::vector<Rational>> c;
  static BivariatePoly from(const Biquad& b);
  static BivariatePoly from_x(const UniPoly& p);
  static BivariatePoly from_x0(const UniPoly& p);
  bool is_zero() const;
  Rational eval(const Rational& x, const Rational& x0) const;
  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
};

// R^2 + R1 (x - x0)^2 - P(x) P(x0), expanded.
BivariatePoly correspondence_residual(const QuarticCurve& h);

struct DiscriminantRelation {
  Rational disc_P, disc_Q, g;
  bool holds() const { return disc_Q == g * g * disc_P; }
};

DiscriminantRelation discr_relation_check(const QuarticCurve& h);

struct CurvePoint {
  Rational x, w;
};

struct JacobianPoint {
  bool infinity = false;
  Rational xi, eta;
  friend bool operator==(const JacobianPoint&, const JacobianPoint&) = default;
};

// `base` is the point sent to infinity; w0 below is -base.w.
JacobianPoint abel_jacobi(const QuarticCurve& h, const CurvePoint& base, const CurvePoint& p);

// Element p0(x) + p1(x) w of Q[x][w] / (w^2 - P(x)).
struct QuadraticExt {
  UniPoly p0, p1;
  bool is_zero() const { return p0.is_zero() && p1.is_zero(); }
};

// Numerator of eta^2 - xi^3 - f xi - g after clearing (x - x0)^6, for the map with base (x0, -w0).
QuadraticExt aj_functional_residual(const QuarticCurve& h, const Rational& x0, const Rational& w0);

// gamma(x,1) x0^2 + alpha(x,1) x0 + delta(x,1) = phi(x, x0).
struct Biquadratic22 {
  Biquad phi;
  HomPoly gamma, alpha, delta;
  bool is_symmetric() const;
};

Biquadratic22 biquadratic_from_phi(const Biquad& phi, const VarPair& vars = {"U", "V"});
Biquadratic22 correspondence_22(const QuarticCurve& h, const Rational& xi);

// 6912 f^3 / (4 f^3 + 27 g^2); throws SingularCurve on a vanishing discriminant.
Rational j_invariant_quartic(const QuarticCurve& h);
// Binary quartic alpha^2 - 4 gamma delta cut out by the branch points over the x-line.
QuarticCurve branch_quartic_22(const Biquadratic22& c);
Rational j_invariant_22(const Biquadratic22& c);
// j(C1) = j(C2) compared without division: f1^3 g2^2 = f2^3 g1^2.
bool same_j(const ShortCubic& a, const ShortCubic& b);

struct SymmetricSurfaceParams {
  Rational a0, a1, a2, xi, c0, cinf;
};

struct SymmetricSurface {
  QuarticCurve curve;
  Biquadratic22 phi;
  BiHomPoly branch;  // (S,T) x (U,V) of bidegree (4,4)
};

Rational smoothness_discriminant(const Rational& a0, const Rational& a1, const Rational& a2);
SymmetricSurface build_symmetric_surface(const SymmetricSurfaceParams& p);

// (delta0, alpha0, gamma0, alpha1, alpha2, gamma2, c0, cinf)
struct SymmetricParams {
  Rational delta0, alpha0, gamma0, alpha1, alpha2, gamma2, c0, cinf;
  friend bool operator==(const SymmetricParams&, const SymmetricParams&) = default;
};

SymmetricParams params_from_phi(const Biquadratic22& phi, const Rational& c0, const Rational& cinf);
// (S - c0 T)(T - cinf S) U V (gamma(U,V) S^2 + alpha(U,V) S T + delta(U,V) T^2)
BiHomPoly symmetric_branch(const SymmetricParams& p);
// 2 alpha0 gamma2 - alpha1 alpha2 + 2 alpha2 gamma0
Rational normalization_constraint(const SymmetricParams& p);

enum class SymmetryMove { Scale, Weight, Swap, Shear };
SymmetricParams apply_symmetry(const SymmetricParams& p, SymmetryMove move,
                               const Rational& scalar = 1);

}  // namespace k3dual
