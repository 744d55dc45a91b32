#include "k3dual/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "k3dual/error.hpp"

namespace k3dual {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational r = 1, b = base;
  while (exponent) {
    if (exponent & 1u) r *= b;
    b *= b;
    exponent >>= 1u;
  }
  return r;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[k];
}

const Rational& UniPoly::lc() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  Rational inv = 1 / lc();
  return r *= inv;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = constant(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = 1 / b.lc();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Rational resultant(const UniPoly& p0, const UniPoly& q0) {
  if (p0.is_zero() || q0.is_zero()) return 0;
  UniPoly p = p0, q = q0;
  Rational acc = 1;
  for (;;) {
    int m = p.degree(), n = q.degree();
    if (m == 0) return acc * rational_pow(p.lc(), n);
    if (n == 0) return acc * rational_pow(q.lc(), m);
    // res(p, q) = (-1)^{mn} lc(q)^{m-k} res(q, p mod q)
    UniPoly r = divmod(p, q).second;
    if (r.is_zero()) return 0;
    int k = r.degree();
    if ((m * n) % 2 == 1) acc = -acc;
    acc *= rational_pow(q.lc(), m - k);
    p = std::move(q);
    q = std::move(r);
  }
}

Rational discriminant(const UniPoly& p) {
  int n = p.degree();
  if (n < 1) fail(ErrorCode::DegreeTooLow, "discriminant needs degree >= 1");
  if (n == 1) return 1;
  Rational r = resultant(p, p.derivative()) / p.lc();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

Rational formal_discriminant(const UniPoly& p, int n) {
  if (n < 1) fail(ErrorCode::DegreeTooLow, "formal discriminant needs degree >= 1");
  if (p.degree() > n) fail(ErrorCode::DegreeMismatch, "polynomial exceeds formal degree");
  if (p.degree() == n) return discriminant(p);
  if (p.degree() == n - 1 && n >= 2) {
    if (p.degree() == 0) return p.lc() * p.lc();
    return p.lc() * p.lc() * discriminant(p);
  }
  return 0;
}

namespace {

int sign_changes(const std::vector<UniPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& f : seq) {
    int s = sgn(f.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

void integer_roots(const std::vector<UniPoly>& seq, const UniPoly& q, Integer lo, Integer hi,
                   std::vector<Integer>& out) {
  int count = sign_changes(seq, Rational(lo)) - sign_changes(seq, Rational(hi));
  if (count == 0) return;
  if (hi - lo <= 1) {
    if (sgn(q.eval(Rational(hi))) == 0) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  integer_roots(seq, q, lo, mid, out);
  integer_roots(seq, q, mid, hi, out);
}

}  // namespace

int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  auto seq = sturm_sequence(p);
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of zero polynomial");
  if (p.degree() == 0) return {};
  UniPoly s = divmod(p, gcd(p, p.derivative())).first;
  // Clear denominators, then substitute y = a_n x to get a monic integer polynomial.
  Integer den = 1;
  for (const auto& c : s.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto& c : s.coeffs()) a.push_back(Integer(c * den));
  int n = s.degree();
  Integer an = a[n];
  std::vector<Rational> m(n + 1);
  Integer power = 1;
  for (int i = n - 1; i >= 0; --i) {
    m[i] = a[i] * power;
    power *= an;
  }
  m[n] = 1;
  UniPoly q(std::move(m));
  Integer bound = 1;
  for (const auto& c : q.coeffs()) {
    Integer v = abs(c.get_num());
    if (v > bound) bound = v;
  }
  bound += 1;
  std::vector<Integer> ys;
  auto seq = sturm_sequence(q);
  integer_roots(seq, q, -bound - 1, bound, ys);
  std::vector<Rational> roots;
  for (const auto& y : ys) {
    Rational r(y, an);
    r.canonicalize();
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<UniPoly, int>> yun_squarefree(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree split of zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  UniPoly a = p.monic();
  UniPoly b = a.derivative();
  UniPoly c = gcd(a, b);
  UniPoly w = divmod(a, c).first;
  UniPoly y = divmod(b, c).first;
  UniPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::string to_string(const UniPoly& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    bool unit = (a == 1);
    if (!unit || k == 0) os << a.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace k3dual
