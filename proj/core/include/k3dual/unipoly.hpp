#pragma once

#include <utility>
#include <vector>

#include "k3dual/rational.hpp"

namespace k3dual {

// Dense univariate polynomial over Q; coefficient k multiplies x^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int k);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lc() const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned e) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws ZeroPolynomial for b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd, gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
Rational resultant(const UniPoly& p, const UniPoly& q);
// disc = (-1)^{n(n-1)/2} res(p, p') / lc(p); throws DegreeTooLow below degree 1.
Rational discriminant(const UniPoly& p);
// Discriminant of p read as a polynomial of formal degree n >= deg p.
Rational formal_discriminant(const UniPoly& p, int n);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);
// Number of distinct real roots in (lo, hi].
int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi);
// Factors f_i with p = lc * prod f_i^i, each f_i monic squarefree, pairwise coprime.
std::vector<std::pair<UniPoly, int>> yun_squarefree(const UniPoly& p);

std::string to_string(const UniPoly& p, const char* var = "x");

}  // namespace k3dual
