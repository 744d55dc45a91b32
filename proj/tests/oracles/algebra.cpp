#include <stdexcept>

#include "oracles.hpp"

namespace oracle {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, -1)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Q& s) {
  Poly r = a;
  for (auto& c : r) c *= s;
  trim(r);
  return r;
}

Poly constant(const Q& c) { return monomial(c, 0); }

Poly monomial(const Q& c, int k) {
  if (c == 0) return {};
  Poly r(k + 1);
  r[k] = c;
  return r;
}

Q eval(const Poly& p, const Q& x) {
  Q r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Poly derivative(const Poly& p) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
  trim(r);
  return r;
}

int val(const Poly& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

Q det(std::vector<std::vector<Q>> m) {
  size_t n = m.size();
  Q d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Q f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

namespace {

template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& p, const std::vector<T>& q, const T& zero) {
  size_t m = p.size() - 1, n = q.size() - 1, N = m + n;
  std::vector<std::vector<T>> s(N, std::vector<T>(N, zero));
  // rows hold descending coefficients
  for (size_t r = 0; r < n; ++r)
    for (size_t k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  for (size_t r = 0; r < m; ++r)
    for (size_t k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  return s;
}

}  // namespace

Q sylvester_resultant(const std::vector<Q>& p, const std::vector<Q>& q) {
  if (p.size() < 2 && q.size() < 2) return 1;
  return det(sylvester(p, q, Q(0)));
}

Q discriminant(const std::vector<Q>& p) {
  size_t n = p.size() - 1;
  if (n < 1 || p[n] == 0) throw std::invalid_argument("discriminant needs a leading coefficient");
  std::vector<Q> dp(n);
  for (size_t i = 1; i <= n; ++i) dp[i - 1] = p[i] * static_cast<long>(i);
  Q r = sylvester_resultant(p, dp) / p[n];
  return (n * (n - 1) / 2) % 2 ? Q(-r) : r;
}

MPoly MPoly::var(size_t n, size_t i) {
  MPoly p;
  p.n_ = n;
  std::vector<int> e(n, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

MPoly MPoly::constant(size_t n, const Q& c) {
  MPoly p;
  p.n_ = n;
  if (c != 0) p.terms_[std::vector<int>(n, 0)] = c;
  return p;
}

void MPoly::add_term(const std::vector<int>& e, const Q& c) {
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r.n_ = std::max(n_, o.n_);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  r.n_ = std::max(n_, o.n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(e1);
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly operator*(const Q& s, const MPoly& p) {
  MPoly r;
  r.n_ = p.n_;
  if (s == 0) return r;
  for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
  return r;
}

MPoly MPoly::divide_by_var(size_t i) const {
  MPoly r;
  r.n_ = n_;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) throw std::domain_error("term not divisible");
    std::vector<int> d(e);
    --d[i];
    r.terms_[d] = c;
  }
  return r;
}

MPoly det(const std::vector<std::vector<MPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  MPoly sum = MPoly::constant(m[0][0].nvars(), 0);
  for (size_t r = 0; r < n; ++r) {
    if (m[r][0].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (size_t i = 0; i < n; ++i)
      if (i != r) minor.emplace_back(m[i].begin() + 1, m[i].end());
    MPoly term = m[r][0] * det(minor);
    sum = r % 2 ? sum - term : sum + term;
  }
  return sum;
}

QuadField QuadField::inverse() const {
  Q n = a * a - b * b * c;
  if (n == 0) throw std::domain_error("zero divisor");
  return {a / n, -b / n, c};
}

}  // namespace oracle
