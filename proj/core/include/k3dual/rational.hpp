#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace k3dual {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Exact square root in Q, if one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace k3dual
