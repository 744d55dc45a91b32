#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "k3dual/hermite.hpp"
#include "k3dual/weierstrass.hpp"

namespace k3dual {

// Rational elliptic surface y^2 = x^3 + f x + g, f and g of degree 4 and 6 in (U,V).
struct RESData {
  HomPoly f, g;
  WeierstrassModel model() const;
};

// Pull back along the double cover branched over [d0:1] and [1:d_inf]; result lives in (u,v).
WeierstrassModel base_change_k3(const RESData& r, const Rational& d0, const Rational& dinf);
// Twist by (U - d0 V)(d_inf U - V).
WeierstrassModel twist_model(const RESData& r, const Rational& d0, const Rational& dinf);
// Same constructions for any weight-1 model, e.g. one carrying 2-torsion.
WeierstrassModel base_change_k3(const WeierstrassModel& r, const Rational& d0, const Rational& dinf);
WeierstrassModel twist_model(const WeierstrassModel& r, const Rational& d0, const Rational& dinf);

// y^2 = x (x^2 - A x + B); A, B of degree 4 and 8 in (s,t).
struct AlternatePair {
  HomPoly A, B;
  std::optional<std::pair<HomPoly, HomPoly>> factors;  // (C, D) with C D = B

  static AlternatePair with_factors(const HomPoly& A, const HomPoly& C, const HomPoly& D);
  WeierstrassModel model() const;
};

// (A, B) -> (-2A, A^2 - 4B)
AlternatePair vgs_dual(const AlternatePair& p);

struct RulingSwapData {
  HomPoly C, A, D;
  std::array<HomPoly, 5> a;  // a[i] multiplies s^i t^{4-i}; degree 2 in (U,V)
  HomPoly f, g;              // degree 4 and 6 in (U,V)
  WeierstrassModel model;    // x^3 + U^2V^2 f x + U^3V^3 g
};

RulingSwapData ruling_swap(const HomPoly& C, const HomPoly& A, const HomPoly& D);

struct GSurface {
  BiHomPoly branch;  // C u^4 - A u^2 v^2 + D v^4 over (s,t) x (u,v)
  WeierstrassModel model;
};

GSurface g_surface(const AlternatePair& p);

struct TwoParamFamily {
  BiHomPoly branch;  // (U - d0 V)(d_inf U - V)(C U^2 - A U V + D V^2)
  WeierstrassModel model;
};

TwoParamFamily two_param_family(const HomPoly& C, const HomPoly& A, const HomPoly& D,
                                const Rational& d0, const Rational& dinf);

struct ModuliTriple {
  HomPoly A, C, D;
  friend bool operator==(const ModuliTriple&, const ModuliTriple&) = default;
};

ModuliTriple moduli_involution(const ModuliTriple& m, const Rational& d0, const Rational& dinf);
// Scalar k with the involution applied twice equal to k times the identity.
Rational moduli_involution_square_scalar(const Rational& d0, const Rational& dinf);

// 4 C (C u^4 - A u^2 v^2 + D v^4) - (2 C u^2 - A v^2)^2, which equals -(A^2 - 4CD) v^4.
BiHomPoly section_shadow_residual(const HomPoly& C, const HomPoly& A, const HomPoly& D);

// Exists u != 0 with (a2, a4, a6) of `b` equal to (u a2, u^2 a4, u^3 a6) of `a`.
std::optional<Rational> x_scaling_between(const WeierstrassModel& a, const WeierstrassModel& b);

struct SurfaceTable {
  std::map<std::string, WeierstrassModel> models;
  std::map<std::string, std::pair<BiHomPoly, BiHomPoly>> branches;  // two printed forms each
};

// gamma, alpha, delta of degree 2 in (S,T) under the symmetric normalization.
struct QuadricTable : SurfaceTable {
  HomPoly c, a, d;  // degree 2 in (U,V)
};

QuadricTable quadric_table(const HomPoly& alpha, const HomPoly& gamma, const HomPoly& delta);
QuadricTable quadric_table_from_correspondence(const Biquadratic22& phi);

struct FourCurveTable : SurfaceTable {
  std::array<HomPoly, 5> a;  // a[i] multiplies s^{4-i} t^i; degree 1 in (U,V)
  HomPoly f, g;              // degree 2 and 3 in (U,V)
};

FourCurveTable four_curve_table(const HomPoly& A, const HomPoly& C);

enum class Subfamily { Z, YSub, YTildeSub, RES };
WeierstrassModel subfamily_model(Subfamily kind, const HomPoly& f, const HomPoly& g);

// Curves H_k: U m_k(s) + n_k(s) = 0 with m_k = r1 s + r2, n_k = r3 s + r4.
struct FourHData {
  std::array<std::array<Rational, 4>, 4> rho;
};

struct FourHSurface {
  std::map<std::pair<int, int>, HomPoly> P;  // P^{ij}, 1 <= i < j <= 4, degree 2 in (s,t)
  HomPoly A, C;                              // P12 P34 +- P13 P24
  WeierstrassModel model;
  // a[i][k]: coefficient of xi, mu, nu in A_i
  std::array<std::array<Rational, 3>, 5> a;
};

// Throws GenericityViolated naming the failed condition.
FourHSurface four_h_surface(const FourHData& d);

// a2 = z k (c1 t + c0 z), a4 = z^2 k^2 d(t,z), a6 = z^3 k^3 e(t,z), k = (t + mu z)(t + nu z).
struct ThreeI0StarForm {
  Rational mu, nu;
  Rational c1, c0;
  Rational d2, d1, d0;
  Rational e3, e2, e1, e0;
  WeierstrassModel model() const;
  friend bool operator==(const ThreeI0StarForm&, const ThreeI0StarForm&) = default;
};

struct ThreeLinesParams {
  Rational mu, nu, c0, c1, d0, d1, d2, e0, e1, e2;
  friend bool operator==(const ThreeLinesParams&, const ThreeLinesParams&) = default;
};

ThreeI0StarForm three_lines_form(const ThreeLinesParams& p);
WeierstrassModel three_lines_cubic_model(const ThreeLinesParams& p);
// X -> X + rho t k(t,z)
ThreeI0StarForm rho_shift(const ThreeI0StarForm& f, const Rational& rho);

enum class RootBranch { Positive, Negative };

struct NormalizeOptions {
  std::optional<Rational> rho;
  RootBranch branch = RootBranch::Positive;
};

struct NormalizedThreeLines {
  Rational rho;
  ThreeLinesParams params;
};

NormalizedThreeLines normalize_three_i0star(const ThreeI0StarForm& f, const NormalizeOptions& opt = {});

struct RelativeJacobian4H {
  FourHSurface surface;
  ThreeI0StarForm form;
  NormalizedThreeLines normalized;
  WeierstrassModel model;
  HomPoly F, G;  // Z1^3 + F(Z2,Z3) Z1 + G(Z2,Z3) = 0
};

RelativeJacobian4H relative_jacobian_4h(const FourHData& d, const Rational& mu, const Rational& nu,
                                        const NormalizeOptions& opt = {});
// p(U, V) with U = -(t + nu z), V = -(t + mu z); result in (t, z).
HomPoly compose_with_lines(const HomPoly& p, const Rational& mu, const Rational& nu);

}  // namespace k3dual
