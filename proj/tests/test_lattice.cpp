#include <numeric>
#include <random>

#include "doctest.h"
#include "k3dual/error.hpp"
#include "k3dual/lattice.hpp"
#include "oracles.hpp"

using namespace k3dual;

namespace {

Integer minor_det(const IntMatrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  std::vector<std::vector<oracle::Q>> sub;
  for (size_t r : rows) {
    sub.emplace_back();
    for (size_t c : cols) sub.back().emplace_back(m[r][c]);
  }
  oracle::Q d = oracle::det(sub);
  return d.get_num();
}

void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Elementary divisors as quotients of gcds of k x k minors.
std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  size_t n = m.size();
  std::vector<Integer> d{1}, out;
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<size_t>> idx;
    std::vector<size_t> cur;
    subsets(n, k, 0, cur, idx);
    Integer g = 0;
    for (const auto& r : idx)
      for (const auto& c : idx) {
        Integer x = minor_det(m, r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
    if (g == 0) break;
    d.push_back(g);
    out.push_back(d[k] / d[k - 1]);
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& g, size_t n) {
  std::uniform_int_distribution<int> d(-6, 6);
  IntMatrix m(n, std::vector<Integer>(n));
  for (auto& row : m)
    for (auto& x : row) x = d(g);
  return m;
}

}  // namespace

TEST_CASE("standard lattices: rank, determinant, signature") {
  struct Row {
    const char* name;
    int rank;
    long det;
    Signature sig;
  };
  const Row rows[] = {
      {"H", 2, -1, {1, 1, 0}},   {"A1", 1, 2, {1, 0, 0}},  {"A2", 2, 3, {2, 0, 0}},
      {"A5", 5, 6, {5, 0, 0}},   {"D4", 4, 4, {4, 0, 0}},  {"D6", 6, 4, {6, 0, 0}},
      {"E8", 8, 1, {8, 0, 0}},   {"<2>", 1, 2, {1, 0, 0}}, {"<-2>", 1, -2, {0, 1, 0}},
      {"N", 8, 64, {0, 8, 0}},   {"K0", 12, 64, {}},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    GramLattice l = standard_lattice(r.name);
    CHECK(l.rank() == static_cast<size_t>(r.rank));
    CHECK(l.is_even());
    if (std::string(r.name) == "K0") {
      CHECK(abs(determinant(l.gram())) == 64);
      continue;
    }
    CHECK(determinant(l.gram()) == r.det);
    CHECK(signature(l) == r.sig);
  }
  CHECK_THROWS_AS(standard_lattice("Z7"), Error);
}

TEST_CASE("Smith normal form matches determinantal divisors") {
  std::mt19937_64 g(1);
  for (int i = 0; i < 60; ++i) {
    IntMatrix m = random_matrix(g, 2 + i % 3);
    SmithForm s = smith_normal_form(m);
    IntMatrix d = multiply(multiply(s.U, m), s.V);
    for (size_t r = 0; r < d.size(); ++r)
      for (size_t c = 0; c < d.size(); ++c) CHECK(d[r][c] == (r == c ? s.divisors[r] : Integer(0)));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    auto ref = determinantal_divisors(m);
    for (size_t k = 0; k < ref.size(); ++k) CHECK(abs(s.divisors[k]) == ref[k]);
    for (size_t k = ref.size(); k < s.divisors.size(); ++k) CHECK(s.divisors[k] == 0);
  }
}

TEST_CASE("determinant agrees with rational elimination") {
  std::mt19937_64 g(2);
  for (int i = 0; i < 40; ++i) {
    IntMatrix m = random_matrix(g, 1 + i % 6);
    std::vector<std::vector<oracle::Q>> q;
    for (const auto& row : m) q.emplace_back(row.begin(), row.end());
    CHECK(oracle::Q(determinant(m)) == oracle::det(q));
  }
}

TEST_CASE("discriminant groups and forms") {
  auto dg = discriminant_group(standard_lattice("D4"));
  CHECK(dg.divisors == std::vector<Integer>{2, 2});
  for (const auto& q : dg.q_values) {
    Rational r = q;
    // D4 discriminant form takes the value 1 mod 2 on every nonzero class
    CHECK(r.get_den() == 1);
    CHECK(r.get_num() % 2 != 0);
  }
  auto a2 = discriminant_group(standard_lattice("A2"));
  CHECK(a2.divisors == std::vector<Integer>{3});
  // generators lie in the dual: G x is integral
  GramLattice l = parse_lattice("H(2) + A1(-1)^3");
  auto d = discriminant_group(l);
  Integer order = 1;
  for (const auto& e : d.divisors) order *= e;
  CHECK(order == abs(determinant(l.gram())));
  for (const auto& x : d.generators)
    for (size_t r = 0; r < l.rank(); ++r) {
      Rational s = 0;
      for (size_t c = 0; c < l.rank(); ++c) s += Rational(l(r, c)) * x[c];
      CHECK(s.get_den() == 1);
    }
}

TEST_CASE("two-elementary invariants of small lattices") {
  auto inv = [](const char* e) { return two_elementary_invariants(parse_lattice(e)); };
  auto h2 = inv("H(2)");
  CHECK(h2.rank == 2);
  CHECK(h2.length == 2);
  CHECK(h2.parity == 0);
  CHECK(inv("<2>").parity == 1);
  CHECK(inv("H").length == 0);
  CHECK(inv("E8(2)").length == 8);
  CHECK(inv("D4").parity == 0);
  CHECK_FALSE(inv("A2").is_two_elementary);
  CHECK_THROWS_AS(parity(parse_lattice("A2")), Error);
  CHECK(to_string(inv("H + E8(-2)")) == "(rank 10, sig (1,9), l 8, delta 0)");
}

TEST_CASE("lattice expressions") {
  GramLattice a = parse_lattice("H + D4(-1)^2");
  CHECK(a.rank() == 10);
  CHECK(a == direct_sum(standard_lattice("H"),
                        direct_sum(rescale(standard_lattice("D4"), -1), rescale(standard_lattice("D4"), -1))));
  CHECK(parse_lattice("Lambda(2, 3)") == lambda_bc(2, 3));
  CHECK(determinant(lambda_bc(2, 3).gram()) == -4);
  CHECK(gamma_2c(1).rank() == 12);
  try {
    parse_lattice("H + Q8");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownLattice);
  }
  CHECK_THROWS_AS(parse_lattice("H +"), Error);
}

TEST_CASE("isometric change of basis keeps the invariants") {
  std::mt19937_64 g(3);
  GramLattice l = parse_lattice("H(2) + D4(-1)");
  for (int i = 0; i < 20; ++i) {
    // product of elementary column operations
    IntMatrix U = identity_matrix(l.rank());
    for (int k = 0; k < 6; ++k) {
      size_t a = g() % l.rank(), b = g() % l.rank();
      if (a == b) continue;
      Integer f = static_cast<int>(g() % 5) - 2;
      for (size_t r = 0; r < l.rank(); ++r) U[r][a] += f * U[r][b];
    }
    REQUIRE(abs(determinant(U)) == 1);
    GramLattice t = l.transformed(U);
    CHECK(two_elementary_invariants(t) == two_elementary_invariants(l));
    CHECK(nikulin_equivalent(t, l));
  }
}

TEST_CASE("lattice identities used by the constructions") {
  CHECK(nikulin_equivalent(parse_lattice("H + E8(-2)"), parse_lattice("H(2) + N")));
  CHECK(nikulin_equivalent(parse_lattice("H + N"), parse_lattice("H(2) + D4(-1)^2")));
  GramLattice a = parse_lattice("H + D4(-1)^2 + A1(-1)^4");
  GramLattice b = parse_lattice("H + D6(-1) + A1(-1)^6");
  GramLattice c = parse_lattice("<2> + <-2> + D4(-1)^3");
  CHECK(nikulin_equivalent(a, b));
  CHECK(nikulin_equivalent(b, c));
  CHECK_FALSE(nikulin_equivalent(parse_lattice("H"), parse_lattice("H(2)")));
  CHECK_FALSE(nikulin_equivalent(parse_lattice("H + E8(-2)"), parse_lattice("H + E8(-1)")));
  GramLattice n = standard_lattice("N");
  CHECK(determinant(n.gram()) == 64);
  CHECK(signature(n) == Signature{0, 8, 0});
  CHECK(parity(n) == 0);
}
