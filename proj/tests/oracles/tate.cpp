#include <stdexcept>

#include "oracles.hpp"

namespace oracle {

namespace {

// Coefficient of t^k, i.e. the residue of p / t^k when t^k divides p.
Q res(const Poly& p, int k = 0) {
  for (int i = 0; i < k && i < static_cast<int>(p.size()); ++i)
    if (p[i] != 0) throw std::logic_error("tate: expected divisibility failed");
  return k < static_cast<int>(p.size()) ? p[k] : Q(0);
}

bool divisible(const Poly& p, int k) {
  int v = val(p);
  return v < 0 || v >= k;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("tate: ") + what);
}

}  // namespace

Invariants invariants(const Model& m) {
  const auto &a1 = m.a1, &a2 = m.a2, &a3 = m.a3, &a4 = m.a4, &a6 = m.a6;
  Invariants v;
  v.b2 = add(mul(a1, a1), scale(a2, 4));
  v.b4 = add(scale(a4, 2), mul(a1, a3));
  v.b6 = add(mul(a3, a3), scale(a6, 4));
  v.b8 = sub(add(add(mul(mul(a1, a1), a6), scale(mul(a2, a6), 4)), mul(mul(a2, a3), a3)),
             add(mul(mul(a1, a3), a4), mul(a4, a4)));
  v.c4 = sub(mul(v.b2, v.b2), scale(v.b4, 24));
  v.c6 = add(add(scale(mul(mul(v.b2, v.b2), v.b2), -1), scale(mul(v.b2, v.b4), 36)), scale(v.b6, -216));
  v.delta = add(add(scale(mul(mul(v.b2, v.b2), v.b8), -1), scale(mul(mul(v.b4, v.b4), v.b4), -8)),
                add(scale(mul(v.b6, v.b6), -27), scale(mul(mul(v.b2, v.b4), v.b6), 9)));
  return v;
}

Model change_coords(const Model& m, const Poly& r, const Poly& s, const Poly& t) {
  Model o;
  o.a1 = add(m.a1, scale(s, 2));
  o.a2 = sub(add(sub(m.a2, mul(s, m.a1)), scale(r, 3)), mul(s, s));
  o.a3 = add(add(m.a3, mul(r, m.a1)), scale(t, 2));
  o.a4 = sub(add(add(sub(m.a4, mul(s, m.a3)), scale(mul(r, m.a2), 2)), scale(mul(r, r), 3)),
             add(mul(add(t, mul(r, s)), m.a1), scale(mul(s, t), 2)));
  o.a6 = sub(add(add(add(m.a6, mul(r, m.a4)), mul(mul(r, r), m.a2)), mul(mul(r, r), r)),
             add(add(mul(t, m.a3), mul(t, t)), mul(mul(r, t), m.a1)));
  return o;
}

std::string tate(Model m) {
  auto x_shift = [&](const Q& c, int k) { m = change_coords(m, monomial(c, k), {}, {}); };
  auto y_shift = [&](const Q& s, const Q& c, int k) {
    m = change_coords(m, {}, constant(s), monomial(c, k));
  };

  Invariants inv = invariants(m);
  int vd = val(inv.delta);
  if (vd < 0) throw std::invalid_argument("tate: singular generic fiber");
  if (vd == 0) return "I0";
  if (val(inv.c4) == 0) return "I" + std::to_string(vd);

  // Additive: move the singular point to the origin.
  Q r = -res(inv.b2) / 12;
  Q t = -(res(m.a1) * r + res(m.a3)) / 2;
  x_shift(r, 0);
  y_shift(0, t, 0);
  require(divisible(m.a3, 1) && divisible(m.a4, 1) && divisible(m.a6, 1), "singular point");

  if (!divisible(m.a6, 2)) return "II";
  if (!divisible(invariants(m).b8, 3)) return "III";
  if (!divisible(invariants(m).b6, 3)) return "IV";

  y_shift(-res(m.a1) / 2, -res(m.a3, 1) / 2, 1);
  require(divisible(m.a1, 1) && divisible(m.a2, 1) && divisible(m.a3, 2) && divisible(m.a4, 2) &&
              divisible(m.a6, 3),
          "step 6 normalization");

  Q b = res(m.a2, 1), c = res(m.a4, 2), d = res(m.a6, 3);
  Q disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
  if (disc != 0) return "I0*";

  Q x = b * b - 3 * c;
  if (x != 0) {
    x_shift((9 * d - b * c) / (2 * x), 1);
    require(divisible(m.a4, 3) && divisible(m.a6, 4), "double root");
    for (int n = 1;; ++n) {
      if (n % 2) {
        int k = (n + 3) / 2;
        Q p = res(m.a3, k), q = res(m.a6, 2 * k);
        if (p * p + 4 * q != 0) return "I" + std::to_string(n) + "*";
        y_shift(0, -p / 2, k);
      } else {
        int k = (n + 2) / 2;
        Q a = res(m.a2, 1), p = res(m.a4, k + 1), q = res(m.a6, 2 * k + 1);
        if (p * p - 4 * a * q != 0) return "I" + std::to_string(n) + "*";
        x_shift(-p / (2 * a), k);
      }
      if (n > 64) throw std::logic_error("tate: runaway I_n* loop");
    }
  }

  x_shift(-b / 3, 1);
  require(divisible(m.a2, 2) && divisible(m.a4, 3) && divisible(m.a6, 4), "triple root");
  Q p = res(m.a3, 2), q = res(m.a6, 4);
  if (p * p + 4 * q != 0) return "IV*";
  y_shift(0, -p / 2, 2);
  require(divisible(m.a3, 3) && divisible(m.a6, 5), "IV* normalization");
  if (!divisible(m.a4, 4)) return "III*";
  if (!divisible(m.a6, 6)) return "II*";
  return "non-minimal";
}

std::optional<Model> realize(int v4, int v6, int vd) {
  std::vector<Poly> As{{}}, Bs{{}};
  if (v4 >= 0) {
    As.push_back(monomial(1, v4));
    As.push_back(monomial(-3, v4));
  }
  if (v6 >= 0) {
    Bs.push_back(monomial(1, v6));
    for (int m = 1; m <= 16; ++m) Bs.push_back(mul(monomial(1, v6), add(constant(2), monomial(1, m))));
  }
  for (const auto& A : As)
    for (const auto& B : Bs) {
      if (val(A) != v4 || val(B) != v6) continue;
      // short-model screen: delta = -16 (4 A^3 + 27 B^2)
      if (val(add(scale(mul(mul(A, A), A), 4), scale(mul(B, B), 27))) != vd) continue;
      Model mod{{}, {}, {}, A, B};
      Invariants inv = invariants(mod);
      if (val(inv.c4) == v4 && val(inv.c6) == v6 && val(inv.delta) == vd) return mod;
    }
  return std::nullopt;
}

}  // namespace oracle
