#include "k3dual/lattice.hpp"

#include <cctype>
#include <sstream>

#include "k3dual/error.hpp"

namespace k3dual {

IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r(n, std::vector<Integer>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix r(a[0].size(), std::vector<Integer>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

Integer determinant(const IntMatrix& m0) {
  size_t n = m0.size();
  if (n == 0) return 1;
  IntMatrix m = m0;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  for (size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != gram_.size())
      fail(ErrorCode::DegenerateLattice, "Gram matrix is not square");
    for (size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) fail(ErrorCode::DegenerateLattice, "Gram matrix is not symmetric");
  }
}

bool GramLattice::is_even() const {
  for (size_t i = 0; i < gram_.size(); ++i)
    if (mpz_odd_p(gram_[i][i].get_mpz_t())) return false;
  return true;
}

GramLattice GramLattice::transformed(const IntMatrix& U) const {
  return GramLattice(multiply(transpose(U), multiply(gram_, U)));
}

namespace {

IntMatrix cartan_from_edges(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 2;
  for (auto [a, b] : edges) m[a][b] = m[b][a] = -1;
  return m;
}

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (int x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

GramLattice standard_lattice(std::string_view name) {
  if (name == "H") return GramLattice(from_rows({{0, 1}, {1, 0}}));
  if (name == "<2>") return GramLattice(from_rows({{2}}));
  if (name == "<-2>") return GramLattice(from_rows({{-2}}));
  if (name == "E8") {
    std::vector<std::pair<size_t, size_t>> e;
    for (size_t i = 0; i + 1 < 7; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(2, 7);
    return GramLattice(cartan_from_edges(8, e));
  }
  if (name == "N") {
    IntMatrix m(8, std::vector<Integer>(8, 0));
    m[0][0] = -4;
    for (size_t i = 1; i < 8; ++i) {
      m[i][i] = -2;
      m[0][i] = m[i][0] = -1;
    }
    return GramLattice(m);
  }
  if (name == "K0") {
    return GramLattice(from_rows({
        {4, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1},
        {-1, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0, 0},
        {-1, 0, 0, -1, 2, -1, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0},
        {-1, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, -1, 2, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 2, -1, 0},
        {-1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, -1},
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2},
    }));
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D')) {
    size_t n = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorCode::UnknownLattice, std::string(name));
      n = n * 10 + static_cast<size_t>(c - '0');
    }
    std::vector<std::pair<size_t, size_t>> e;
    if (name[0] == 'A') {
      if (n < 1) fail(ErrorCode::UnknownLattice, std::string(name));
      for (size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    } else {
      if (n < 4) fail(ErrorCode::UnknownLattice, std::string(name));
      for (size_t i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 1);
    }
    return GramLattice(cartan_from_edges(n, e));
  }
  fail(ErrorCode::UnknownLattice, std::string(name));
}

GramLattice lambda_bc(const Integer& b, const Integer& c) {
  return GramLattice({{0, b}, {b, 2 * c}});
}

GramLattice gamma_2c(const Integer& c) {
  GramLattice d4m = rescale(standard_lattice("D4"), -1);
  return direct_sum(direct_sum(lambda_bc(2, c), standard_lattice("H")), direct_sum(d4m, d4m));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, std::vector<Integer>(n + m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = a(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) g[n + i][n + j] = b(i, j);
  return GramLattice(std::move(g));
}

GramLattice rescale(const GramLattice& l, const Integer& lambda) {
  if (sgn(lambda) == 0) fail(ErrorCode::ZeroScale, "lattice rescaled by 0");
  IntMatrix g = l.gram();
  for (auto& row : g)
    for (auto& x : row) x *= lambda;
  return GramLattice(std::move(g));
}

namespace {

class LatticeParser {
 public:
  explicit LatticeParser(std::string_view s) : s_(s) {}

  GramLattice run() {
    GramLattice acc;
    skip();
    if (pos_ == s_.size()) return acc;
    acc = term();
    for (;;) {
      skip();
      if (pos_ == s_.size()) return acc;
      if (s_[pos_] != '+') error("expected '+'");
      ++pos_;
      acc = direct_sum(acc, term());
    }
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Integer integer() {
    skip();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") error("expected integer");
    if (digits[0] == '+') digits.erase(0, 1);
    return Integer(digits);
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  GramLattice term() {
    skip();
    size_t start = pos_;
    GramLattice base;
    if (pos_ < s_.size() && s_[pos_] == '<') {
      ++pos_;
      Integer v = integer();
      expect('>');
      base = GramLattice({{v}});
    } else {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name.empty()) error("expected lattice name");
      if (name == "Lambda") {
        expect('(');
        Integer b = integer();
        expect(',');
        Integer c = integer();
        expect(')');
        base = lambda_bc(b, c);
      } else if (name == "Gamma") {
        expect('(');
        Integer c = integer();
        expect(')');
        base = gamma_2c(c);
      } else {
        base = standard_lattice(name);
      }
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Integer k = integer();
      expect(')');
      base = rescale(base, k);
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      Integer m = integer();
      if (m < 1) error("exponent must be positive");
      GramLattice r = base;
      for (Integer i = 1; i < m; ++i) r = direct_sum(r, base);
      base = r;
    }
    return base;
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

GramLattice parse_lattice(std::string_view expr) { return LatticeParser(expr).run(); }

Signature signature(const GramLattice& l) {
  size_t n = l.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = l(i, j);
  Signature sig;
  auto swap_index = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && sgn(a[piv][piv]) == 0) ++piv;
    if (piv == n) {
      // All remaining diagonal entries vanish; use e_i + e_j on a nonzero off-diagonal entry.
      size_t bi = n, bj = n;
      for (size_t i = k; i < n && bi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (sgn(a[i][j]) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) {
        sig.n_zero += static_cast<int>(n - k);
        return sig;
      }
      for (size_t c = 0; c < n; ++c) a[bi][c] += a[bj][c];
      for (size_t r = 0; r < n; ++r) a[r][bi] += a[r][bj];
      piv = bi;
    }
    if (piv != k) swap_index(piv, k);
    const Rational p = a[k][k];
    (sgn(p) > 0 ? sig.n_plus : sig.n_minus)++;
    for (size_t r = k + 1; r < n; ++r) {
      if (sgn(a[r][k]) == 0) continue;
      Rational f = a[r][k] / p;
      for (size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (size_t c = k + 1; c < n; ++c) a[k][c] = 0;
    for (size_t r = k + 1; r < n; ++r) a[r][k] = 0;
  }
  return sig;
}

SmithForm smith_normal_form(const IntMatrix& m0) {
  size_t rows = m0.size(), cols = rows ? m0[0].size() : 0;
  IntMatrix A = m0;
  IntMatrix U = identity_matrix(rows), V = identity_matrix(cols);
  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (auto& r : A) std::swap(r[i], r[j]);
    for (auto& r : V) std::swap(r[i], r[j]);
  };
  // row_i -= q * row_j
  auto row_op = [&](size_t i, size_t j, const Integer& q) {
    for (size_t c = 0; c < cols; ++c) A[i][c] -= q * A[j][c];
    for (size_t c = 0; c < rows; ++c) U[i][c] -= q * U[j][c];
  };
  auto col_op = [&](size_t i, size_t j, const Integer& q) {
    for (size_t r = 0; r < rows; ++r) A[r][i] -= q * A[r][j];
    for (size_t r = 0; r < cols; ++r) V[r][i] -= q * V[r][j];
  };
  size_t diag = std::min(rows, cols);
  for (size_t k = 0; k < diag; ++k) {
    for (;;) {
      size_t pi = rows, pj = cols;
      for (size_t i = k; i < rows; ++i)
        for (size_t j = k; j < cols; ++j)
          if (sgn(A[i][j]) != 0 && (pi == rows || abs(A[i][j]) < abs(A[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      if (pi != k) swap_rows(pi, k);
      if (pj != k) swap_cols(pj, k);
      bool clean = true;
      for (size_t i = k + 1; i < rows; ++i) {
        if (sgn(A[i][k]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][k].get_mpz_t(), A[k][k].get_mpz_t());
        row_op(i, k, q);
        if (sgn(A[i][k]) != 0) clean = false;
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (sgn(A[k][j]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A[k][j].get_mpz_t(), A[k][k].get_mpz_t());
        col_op(j, k, q);
        if (sgn(A[k][j]) != 0) clean = false;
      }
      if (!clean) continue;
      size_t bad = rows;
      for (size_t i = k + 1; i < rows && bad == rows; ++i)
        for (size_t j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(A[i][j].get_mpz_t(), A[k][k].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_op(k, bad, Integer(-1));
    }
    if (sgn(A[k][k]) < 0) {
      for (size_t c = 0; c < cols; ++c) A[k][c] = -A[k][c];
      for (size_t c = 0; c < rows; ++c) U[k][c] = -U[k][c];
    }
  }
  SmithForm out{U, V, {}};
  for (size_t k = 0; k < diag; ++k) out.divisors.push_back(A[k][k]);
  return out;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
  if (sgn(determinant(l.gram())) == 0) fail(ErrorCode::DegenerateLattice, "determinant is zero");
  SmithForm snf = smith_normal_form(l.gram());
  DiscriminantGroup out;
  size_t n = l.rank();
  for (size_t i = 0; i < n; ++i) {
    const Integer& d = snf.divisors[i];
    if (d == 1) continue;
    std::vector<Rational> x(n);
    for (size_t r = 0; r < n; ++r) {
      x[r] = Rational(snf.V[r][i], d);
      x[r].canonicalize();
    }
    Rational q = 0;
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) q += x[r] * l(r, c) * x[c];
    out.divisors.push_back(d);
    out.generators.push_back(std::move(x));
    out.q_values.push_back(q);
  }
  return out;
}

TwoElemInvariants two_elementary_invariants(const GramLattice& l) {
  if (!l.is_even()) fail(ErrorCode::NotApplicable, "lattice is not even");
  DiscriminantGroup dg = discriminant_group(l);
  TwoElemInvariants inv;
  inv.rank = static_cast<int>(l.rank());
  inv.sig = signature(l);
  inv.is_two_elementary = true;
  for (const auto& d : dg.divisors) {
    if (d == 2) ++inv.length;
    else inv.is_two_elementary = false;
  }
  if (inv.is_two_elementary) {
    int delta = 0;
    for (const auto& q : dg.q_values)
      if (q.get_den() != 1) delta = 1;
    inv.parity = delta;
  }
  return inv;
}

int parity(const GramLattice& l) {
  TwoElemInvariants inv = two_elementary_invariants(l);
  if (!inv.is_two_elementary) fail(ErrorCode::NotTwoElementary, "discriminant group is not 2-elementary");
  return *inv.parity;
}

bool nikulin_equivalent(const GramLattice& a, const GramLattice& b) {
  TwoElemInvariants ia = two_elementary_invariants(a), ib = two_elementary_invariants(b);
  for (const auto* inv : {&ia, &ib}) {
    if (!inv->is_two_elementary) fail(ErrorCode::NotApplicable, "lattice is not 2-elementary");
    if (inv->sig.n_plus == 0 || inv->sig.n_minus == 0)
      fail(ErrorCode::NotApplicable, "lattice is definite");
  }
  return ia == ib;
}

std::string to_string(const TwoElemInvariants& inv) {
  std::ostringstream os;
  os << "(rank " << inv.rank << ", sig (" << inv.sig.n_plus << "," << inv.sig.n_minus << "), l "
     << inv.length << ", delta ";
  if (inv.parity) os << *inv.parity;
  else os << "-";
  os << ")";
  return os.str();
}

}  // namespace k3dual
