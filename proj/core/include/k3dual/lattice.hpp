#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3dual/rational.hpp"

namespace k3dual {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix identity_matrix(size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& m);

class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(IntMatrix gram);

  size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& operator()(size_t i, size_t j) const { return gram_[i][j]; }
  bool is_even() const;
  // U^T G U
  GramLattice transformed(const IntMatrix& U) const;
  friend bool operator==(const GramLattice&, const GramLattice&) = default;

 private:
  IntMatrix gram_;
};

// Names: H, A<n>, D<n>, E8, N, K0, <2>, <-2>.
GramLattice standard_lattice(std::string_view name);
// [[0, b], [b, 2c]]
GramLattice lambda_bc(const Integer& b, const Integer& c);
// Lambda_{2,c} + H + D4(-1)^2
GramLattice gamma_2c(const Integer& c);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice rescale(const GramLattice& l, const Integer& lambda);

// Sum of terms `NAME[(k)][^m]`, e.g. "H(2) + D4(-1)^2 + <-2>"; also "Lambda(b,c)".
GramLattice parse_lattice(std::string_view expr);

struct Signature {
  int n_plus = 0, n_minus = 0, n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const GramLattice& l);

struct SmithForm {
  IntMatrix U, V;  // unimodular, U * M * V = diag(divisors)
  std::vector<Integer> divisors;
};

SmithForm smith_normal_form(const IntMatrix& m);

struct DiscriminantGroup {
  std::vector<Integer> divisors;                 // elementary divisors > 1
  std::vector<std::vector<Rational>> generators; // lifts to the dual, lattice coordinates
  std::vector<Rational> q_values;                // x^T G x for each generator
};

DiscriminantGroup discriminant_group(const GramLattice& l);

struct TwoElemInvariants {
  int rank = 0;
  Signature sig;
  int length = 0;
  std::optional<int> parity;
  bool is_two_elementary = false;
  friend bool operator==(const TwoElemInvariants&, const TwoElemInvariants&) = default;
};

TwoElemInvariants two_elementary_invariants(const GramLattice& l);
// Throws NotTwoElementary when the discriminant group has an entry other than 2.
int parity(const GramLattice& l);
bool nikulin_equivalent(const GramLattice& a, const GramLattice& b);

std::string to_string(const TwoElemInvariants& inv);

}  // namespace k3dual
