#include "k3dual/parse.hpp"

#include <cctype>
#include <map>
#include <string>

#include "k3dual/error.hpp"

namespace k3dual {

namespace {

// Sparse bivariate polynomial keyed by (exponent of first, exponent of second).
using Sparse = std::map<std::pair<int, int>, Rational>;

void clean(Sparse& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (sgn(it->second) == 0) it = p.erase(it);
    else ++it;
  }
}

Sparse add(Sparse a, const Sparse& b, int sign) {
  for (const auto& [k, v] : b) a[k] += sign > 0 ? v : Rational(-v);
  clean(a);
  return a;
}

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  clean(r);
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, const VarPair& vars) : s_(text), vars_(vars) {}

  Sparse parse_all(std::vector<std::pair<size_t, Sparse>>& terms) {
    skip();
    Sparse acc = parse_sum(&terms);
    skip();
    if (pos_ != s_.size()) error("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return acc;
  }

  Rational parse_number_only() {
    skip();
    Sparse v = parse_sum(nullptr);
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    if (v.empty()) return 0;
    if (v.size() != 1 || v.begin()->first != std::pair<int, int>{0, 0}) error("not a constant");
    return v.begin()->second;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1));
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Sparse parse_sum(std::vector<std::pair<size_t, Sparse>>* terms) {
    skip();
    int sign = 1;
    if (peek('+')) ++pos_;
    else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    size_t start = pos_;
    Sparse t = parse_product();
    if (terms) terms->emplace_back(start, t);
    Sparse acc = add({}, t, sign);
    for (;;) {
      if (peek('+')) sign = 1;
      else if (peek('-')) sign = -1;
      else break;
      ++pos_;
      skip();
      start = pos_;
      t = parse_product();
      if (terms) terms->emplace_back(start, t);
      acc = add(acc, t, sign);
    }
    return acc;
  }

  Sparse parse_product() {
    Sparse acc = parse_power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, parse_power());
      } else if (peek('/')) {
        ++pos_;
        size_t at = pos_;
        Sparse d = parse_power();
        if (d.size() != 1 || d.begin()->first != std::pair<int, int>{0, 0}) {
          pos_ = at;
          error("division by a non-constant");
        }
        Rational inv = 1 / d.begin()->second;
        for (auto& [k, v] : acc) v *= inv;
      } else {
        return acc;
      }
    }
  }

  Sparse parse_power() {
    Sparse base = parse_atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    Sparse r{{{0, 0}, Rational(1)}};
    for (int k = 0; k < e; ++k) r = mul(r, base);
    return r;
  }

  Sparse parse_atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse inner = parse_sum(nullptr);
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return add({}, parse_power(), -1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational v(std::string(s_.substr(start, pos_ - start)));
      Sparse r;
      if (sgn(v) != 0) r[{0, 0}] = v;
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == vars_.first) return {{{1, 0}, Rational(1)}};
      if (name == vars_.second) return {{{0, 1}, Rational(1)}};
      pos_ = start;
      error("unknown variable '" + name + "'");
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  VarPair vars_;
  size_t pos_ = 0;
};

}  // namespace

HomPoly parse_hompoly(std::string_view text, const VarPair& vars, std::optional<int> degree) {
  Parser parser(text, vars);
  std::vector<std::pair<size_t, Sparse>> terms;
  Sparse p = parser.parse_all(terms);
  int d = 0;
  if (degree) d = *degree;
  else if (!p.empty()) d = p.begin()->first.first + p.begin()->first.second;
  for (const auto& [k, v] : p) {
    if (k.first + k.second == d) continue;
    size_t col = 0;
    for (const auto& [start, t] : terms) {
      for (const auto& [tk, tv] : t)
        if (tk.first + tk.second != d) col = start + 1;
      if (col) break;
    }
    if (col == 0) col = 1;
    fail(ErrorCode::DegreeMismatch, "term of degree " + std::to_string(k.first + k.second) +
                                        " in a form of degree " + std::to_string(d) +
                                        " at column " + std::to_string(col));
  }
  HomPoly h = HomPoly::zero(d, vars);
  for (const auto& [k, v] : p) h.coeff(k.second) = v;
  return h;
}

Rational parse_rational(std::string_view text) {
  Parser parser(text, VarPair{"\x01", "\x02"});
  return parser.parse_number_only();
}

}  // namespace k3dual
