#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "k3dual/unipoly.hpp"

namespace k3dual {

struct VarPair {
  std::string first = "s";
  std::string second = "t";
  friend bool operator==(const VarPair&, const VarPair&) = default;
};

inline constexpr int kInfiniteValuation = INT_MAX;

// Binary form of fixed degree d; coeff(k) multiplies first^{d-k} second^k.
class HomPoly {
 public:
  HomPoly() = default;
  HomPoly(int degree, std::vector<Rational> coeffs, VarPair vars = {});
  static HomPoly zero(int degree, VarPair vars = {});
  static HomPoly constant(const Rational& c, VarPair vars = {});
  // a * first + b * second
  static HomPoly linear(const Rational& a, const Rational& b, VarPair vars = {});
  static HomPoly monomial(const Rational& c, int i, int j, VarPair vars = {});
  static HomPoly homogenize(const UniPoly& p, int degree, VarPair vars = {});

  int degree() const { return degree_; }
  const VarPair& vars() const { return vars_; }
  HomPoly with_vars(VarPair vars) const;
  const Rational& coeff(int k) const { return c_.at(k); }
  Rational& coeff(int k) { return c_.at(k); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  Rational eval(const Rational& a, const Rational& b) const;
  // Set second = 1; result has degree <= d in the first variable.
  UniPoly dehomogenize() const;
  // Multiplicity of the factor `second`; infinite for the zero form.
  int ord_second() const;
  HomPoly swap() const;
  // p(X, Y) for forms X, Y of a common degree e.
  HomPoly substitute(const HomPoly& X, const HomPoly& Y) const;
  HomPoly pow(unsigned e) const;
  // Scale so the first nonzero coefficient is 1.
  HomPoly normalized() const;

  HomPoly operator-() const;
  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Rational& s);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(HomPoly a, const Rational& s) { return a *= s; }
  friend HomPoly operator*(const Rational& s, HomPoly a) { return a *= s; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

 private:
  int degree_ = 0;
  std::vector<Rational> c_{Rational(0)};
  VarPair vars_;
};

std::optional<HomPoly> divide_exact(const HomPoly& a, const HomPoly& b);
// Normalized gcd; the second variable is a genuine factor.
HomPoly gcd(const HomPoly& a, const HomPoly& b);
// Largest m with place^m | q, or kInfiniteValuation when q == 0.
int valuation(const HomPoly& q, const HomPoly& place);
Rational resultant(const HomPoly& a, const HomPoly& b);
// Discriminant of the form, counting a root at first = 0 honestly.
Rational discriminant(const HomPoly& p);
bool is_squarefree(const HomPoly& p);

struct SquarefreeFactor {
  HomPoly factor;
  int multiplicity = 0;
};

struct SquarefreeSplit {
  Rational unit;
  std::vector<SquarefreeFactor> factors;
  HomPoly expand(VarPair vars = {}) const;
};

SquarefreeSplit squarefree_split(const HomPoly& p);
// Split each factor so that q has uniform valuation at all of its roots.
SquarefreeSplit refine_against(const SquarefreeSplit& split, const HomPoly& q);

std::string to_string(const HomPoly& p);

// Bihomogeneous form; coeff(i, j) multiplies a^{d1-i} b^i c^{d2-j} d^j.
class BiHomPoly {
 public:
  BiHomPoly() = default;
  BiHomPoly(int d1, int d2, VarPair first = {}, VarPair second = {"u", "v"});
  // sum_k p_k(first) * second-monomial k of degree d2.
  static BiHomPoly from_rows(const std::vector<HomPoly>& rows, VarPair second);
  static BiHomPoly outer(const HomPoly& a, const HomPoly& b);

  int degree1() const { return d1_; }
  int degree2() const { return d2_; }
  const VarPair& first_vars() const { return first_; }
  const VarPair& second_vars() const { return second_; }
  const Rational& coeff(int i, int j) const { return c_.at(i).at(j); }
  Rational& coeff(int i, int j) { return c_.at(i).at(j); }
  bool is_zero() const;
  Rational eval(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;
  // Coefficient of the j-th monomial of the second pair, as a form in the first pair.
  HomPoly column(int j) const;
  BiHomPoly swap_factors() const;

  BiHomPoly operator-() const;
  BiHomPoly& operator+=(const BiHomPoly& o);
  BiHomPoly& operator*=(const Rational& s);
  friend BiHomPoly operator+(BiHomPoly a, const BiHomPoly& b) { return a += b; }
  friend BiHomPoly operator-(BiHomPoly a, const BiHomPoly& b) { return a += -b; }
  friend BiHomPoly operator*(const BiHomPoly& a, const BiHomPoly& b);
  friend BiHomPoly operator*(BiHomPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const BiHomPoly& a, const BiHomPoly& b) {
    return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.c_ == b.c_;
  }

 private:
  int d1_ = 0, d2_ = 0;
  VarPair first_, second_{"u", "v"};
  std::vector<std::vector<Rational>> c_{{Rational(0)}};
};

std::string to_string(const BiHomPoly& p);

}  // namespace k3dual
