#include "k3dual/hompoly.hpp"

#include <algorithm>
#include <sstream>

#include "k3dual/error.hpp"

namespace k3dual {

namespace {

void require_same_degree(const HomPoly& a, const HomPoly& b, const char* op) {
  if (a.degree() != b.degree())
    fail(ErrorCode::DegreeMismatch, std::string(op) + " of forms of degree " +
                                        std::to_string(a.degree()) + " and " +
                                        std::to_string(b.degree()));
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

HomPoly::HomPoly(int degree, std::vector<Rational> coeffs, VarPair vars)
    : degree_(degree), c_(std::move(coeffs)), vars_(std::move(vars)) {
  if (degree_ < 0) fail(ErrorCode::DegreeTooLow, "negative form degree");
  if (static_cast<int>(c_.size()) != degree_ + 1)
    fail(ErrorCode::DegreeMismatch, "coefficient count does not match degree");
}

HomPoly HomPoly::zero(int degree, VarPair vars) {
  return HomPoly(degree, std::vector<Rational>(degree + 1), std::move(vars));
}

HomPoly HomPoly::constant(const Rational& c, VarPair vars) {
  return HomPoly(0, {c}, std::move(vars));
}

HomPoly HomPoly::linear(const Rational& a, const Rational& b, VarPair vars) {
  return HomPoly(1, {a, b}, std::move(vars));
}

HomPoly HomPoly::monomial(const Rational& c, int i, int j, VarPair vars) {
  HomPoly p = zero(i + j, std::move(vars));
  p.c_[j] = c;
  return p;
}

HomPoly HomPoly::homogenize(const UniPoly& p, int degree, VarPair vars) {
  if (p.degree() > degree) fail(ErrorCode::DegreeMismatch, "homogenizing below polynomial degree");
  HomPoly h = zero(degree, std::move(vars));
  for (int k = 0; k <= degree; ++k) h.c_[k] = p.coeff(degree - k);
  return h;
}

HomPoly HomPoly::with_vars(VarPair vars) const {
  HomPoly r = *this;
  r.vars_ = std::move(vars);
  return r;
}

bool HomPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational HomPoly::eval(const Rational& a, const Rational& b) const {
  Rational acc = 0, bp = 1;
  std::vector<Rational> apow(degree_ + 1);
  apow[0] = 1;
  for (int k = 1; k <= degree_; ++k) apow[k] = apow[k - 1] * a;
  for (int k = 0; k <= degree_; ++k) {
    acc += c_[k] * apow[degree_ - k] * bp;
    bp *= b;
  }
  return acc;
}

UniPoly HomPoly::dehomogenize() const {
  std::vector<Rational> u(degree_ + 1);
  for (int k = 0; k <= degree_; ++k) u[degree_ - k] = c_[k];
  return UniPoly(std::move(u));
}

int HomPoly::ord_second() const {
  for (int k = 0; k <= degree_; ++k)
    if (sgn(c_[k]) != 0) return k;
  return kInfiniteValuation;
}

HomPoly HomPoly::swap() const {
  HomPoly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  return r;
}

HomPoly HomPoly::substitute(const HomPoly& X, const HomPoly& Y) const {
  require_same_degree(X, Y, "substitution");
  int e = X.degree();
  HomPoly acc = zero(degree_ * e, X.vars());
  std::vector<HomPoly> xp{constant(1, X.vars())}, yp{constant(1, X.vars())};
  for (int k = 1; k <= degree_; ++k) {
    xp.push_back(xp.back() * X);
    yp.push_back(yp.back() * Y);
  }
  for (int k = 0; k <= degree_; ++k) {
    if (sgn(c_[k]) == 0) continue;
    acc += c_[k] * (xp[degree_ - k] * yp[k]);
  }
  return acc;
}

HomPoly HomPoly::pow(unsigned e) const {
  HomPoly r = constant(1, vars_), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

HomPoly HomPoly::normalized() const {
  int k = ord_second();
  if (k == kInfiniteValuation) return *this;
  return *this * (1 / c_[k]);
}

HomPoly HomPoly::operator-() const {
  HomPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  require_same_degree(*this, o, "sum");
  for (int k = 0; k <= degree_; ++k) c_[k] += o.c_[k];
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  require_same_degree(*this, o, "difference");
  for (int k = 0; k <= degree_; ++k) c_[k] -= o.c_[k];
  return *this;
}

HomPoly& HomPoly::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  HomPoly r = HomPoly::zero(a.degree_ + b.degree_, a.vars_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j <= b.degree_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

std::optional<HomPoly> divide_exact(const HomPoly& a, const HomPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero form");
  int d = a.degree() - b.degree();
  if (d < 0) return std::nullopt;
  if (a.is_zero()) return HomPoly::zero(d, a.vars());
  if (a.ord_second() < b.ord_second()) return std::nullopt;
  auto [q, r] = divmod(a.dehomogenize(), b.dehomogenize());
  if (!r.is_zero()) return std::nullopt;
  return HomPoly::homogenize(q, d, a.vars());
}

HomPoly gcd(const HomPoly& a, const HomPoly& b) {
  if (a.is_zero() && b.is_zero()) return HomPoly::zero(0, a.vars());
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  int k = std::min(a.ord_second(), b.ord_second());
  UniPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  HomPoly h = HomPoly::homogenize(g, g.degree(), a.vars());
  if (k > 0) h = h * HomPoly::monomial(1, 0, k, a.vars());
  return h;
}

int valuation(const HomPoly& q, const HomPoly& place) {
  if (place.degree() < 1) fail(ErrorCode::DegreeTooLow, "valuation at a constant");
  if (q.is_zero()) return kInfiniteValuation;
  int v = 0;
  HomPoly cur = q;
  for (;;) {
    auto next = divide_exact(cur, place);
    if (!next) return v;
    cur = std::move(*next);
    ++v;
  }
}

Rational resultant(const HomPoly& a, const HomPoly& b) {
  int m = a.degree(), n = b.degree();
  if (m + n == 0) return 1;
  std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = a.coeff(k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(k);
  return determinant(std::move(s));
}

Rational discriminant(const HomPoly& p) {
  return formal_discriminant(p.dehomogenize(), p.degree());
}

bool is_squarefree(const HomPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return sgn(discriminant(p)) != 0;
}

HomPoly SquarefreeSplit::expand(VarPair vars) const {
  HomPoly r = HomPoly::constant(unit, vars);
  for (const auto& f : factors) r = r * f.factor.pow(f.multiplicity);
  return r.with_vars(vars);
}

SquarefreeSplit squarefree_split(const HomPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree split of zero form");
  SquarefreeSplit out;
  int k = p.ord_second();
  UniPoly u = p.dehomogenize();
  out.unit = u.lc();
  for (auto& [f, m] : yun_squarefree(u))
    out.factors.push_back({HomPoly::homogenize(f, f.degree(), p.vars()), m});
  if (k > 0) out.factors.push_back({HomPoly::monomial(1, 0, 1, p.vars()), k});
  return out;
}

SquarefreeSplit refine_against(const SquarefreeSplit& split, const HomPoly& q) {
  SquarefreeSplit out;
  out.unit = split.unit;
  for (const auto& [f, m] : split.factors) {
    if (q.is_zero()) {
      out.factors.push_back({f, m});
      continue;
    }
    HomPoly h = gcd(f, q);
    if (h.degree() == 0) {
      out.factors.push_back({f, m});
      continue;
    }
    HomPoly rest = *divide_exact(f, h);
    if (rest.degree() > 0) out.factors.push_back({rest.normalized(), m});
    HomPoly r = q, g = h;
    while (g.degree() > 0) {
      r = *divide_exact(r, g);
      HomPoly next = gcd(g, r);
      HomPoly part = *divide_exact(g, next);
      if (part.degree() > 0) out.factors.push_back({part.normalized(), m});
      g = next;
    }
  }
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, const std::string& var, int e, bool& need_star) {
  if (e == 0) return;
  if (need_star) os << "*";
  os << var;
  if (e > 1) os << "^" << e;
  need_star = true;
}

void append_term(std::ostringstream& os, bool& first, const Rational& c,
                 const std::vector<std::pair<std::string, int>>& mono) {
  if (sgn(c) == 0) return;
  if (!first) os << (sgn(c) < 0 ? " - " : " + ");
  else if (sgn(c) < 0) os << "-";
  Rational a = abs(c);
  bool has_var = false;
  for (const auto& [v, e] : mono) has_var = has_var || e > 0;
  bool need_star = false;
  if (a != 1 || !has_var) {
    os << a.get_str();
    need_star = true;
  }
  for (const auto& [v, e] : mono) append_monomial(os, v, e, need_star);
  first = false;
}

}  // namespace

std::string to_string(const HomPoly& p) {
  std::ostringstream os;
  bool first = true;
  int d = p.degree();
  for (int k = 0; k <= d; ++k)
    append_term(os, first, p.coeff(k), {{p.vars().first, d - k}, {p.vars().second, k}});
  if (first) return "0";
  return os.str();
}

BiHomPoly::BiHomPoly(int d1, int d2, VarPair first, VarPair second)
    : d1_(d1), d2_(d2), first_(std::move(first)), second_(std::move(second)),
      c_(d1 + 1, std::vector<Rational>(d2 + 1)) {
  if (d1 < 0 || d2 < 0) fail(ErrorCode::DegreeTooLow, "negative bidegree");
}

BiHomPoly BiHomPoly::from_rows(const std::vector<HomPoly>& rows, VarPair second) {
  if (rows.empty()) fail(ErrorCode::DegreeTooLow, "no rows");
  int d1 = rows[0].degree();
  int d2 = static_cast<int>(rows.size()) - 1;
  BiHomPoly r(d1, d2, rows[0].vars(), std::move(second));
  for (int j = 0; j <= d2; ++j) {
    if (rows[j].degree() != d1) fail(ErrorCode::DegreeMismatch, "rows of unequal degree");
    for (int i = 0; i <= d1; ++i) r.c_[i][j] = rows[j].coeff(i);
  }
  return r;
}

BiHomPoly BiHomPoly::outer(const HomPoly& a, const HomPoly& b) {
  BiHomPoly r(a.degree(), b.degree(), a.vars(), b.vars());
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) r.c_[i][j] = a.coeff(i) * b.coeff(j);
  return r;
}

bool BiHomPoly::is_zero() const {
  for (const auto& row : c_)
    for (const auto& x : row)
      if (sgn(x) != 0) return false;
  return true;
}

Rational BiHomPoly::eval(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d) const {
  Rational acc = 0;
  for (int j = 0; j <= d2_; ++j) acc += column(j).eval(a, b) * rational_pow(c, d2_ - j) * rational_pow(d, j);
  return acc;
}

HomPoly BiHomPoly::column(int j) const {
  std::vector<Rational> v(d1_ + 1);
  for (int i = 0; i <= d1_; ++i) v[i] = c_[i][j];
  return HomPoly(d1_, std::move(v), first_);
}

BiHomPoly BiHomPoly::swap_factors() const {
  BiHomPoly r(d2_, d1_, second_, first_);
  for (int i = 0; i <= d1_; ++i)
    for (int j = 0; j <= d2_; ++j) r.c_[j][i] = c_[i][j];
  return r;
}

BiHomPoly BiHomPoly::operator-() const {
  BiHomPoly r = *this;
  for (auto& row : r.c_)
    for (auto& x : row) x = -x;
  return r;
}

BiHomPoly& BiHomPoly::operator+=(const BiHomPoly& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_) fail(ErrorCode::DegreeMismatch, "sum of unequal bidegrees");
  for (int i = 0; i <= d1_; ++i)
    for (int j = 0; j <= d2_; ++j) c_[i][j] += o.c_[i][j];
  return *this;
}

BiHomPoly& BiHomPoly::operator*=(const Rational& s) {
  for (auto& row : c_)
    for (auto& x : row) x *= s;
  return *this;
}

BiHomPoly operator*(const BiHomPoly& a, const BiHomPoly& b) {
  BiHomPoly r(a.d1_ + b.d1_, a.d2_ + b.d2_, a.first_, a.second_);
  for (int i = 0; i <= a.d1_; ++i)
    for (int j = 0; j <= a.d2_; ++j) {
      if (sgn(a.c_[i][j]) == 0) continue;
      for (int k = 0; k <= b.d1_; ++k)
        for (int l = 0; l <= b.d2_; ++l) r.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
    }
  return r;
}

std::string to_string(const BiHomPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree1(); ++i)
    for (int j = 0; j <= p.degree2(); ++j)
      append_term(os, first, p.coeff(i, j),
                  {{p.first_vars().first, p.degree1() - i},
                   {p.first_vars().second, i},
                   {p.second_vars().first, p.degree2() - j},
                   {p.second_vars().second, j}});
  if (first) return "0";
  return os.str();
}

}  // namespace k3dual
