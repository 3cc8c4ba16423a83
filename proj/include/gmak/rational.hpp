#ifndef GMAK_RATIONAL_HPP
#define GMAK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gmak {

// Exact arbitrary-precision rational. All structural computations (ranks,
// kernels, signs, lattices) run on this type; doubles appear only in the
// numerical solvers.
using Rational = mpq_class;

Rational make_rational(long num, long den);

// Accepts "p", "-p", "p/q" with arbitrary-precision integers.
Rational parse_rational(const std::string& text);

// As parse_rational, but also accepts plain decimals like "0.25" or "-1.5e-3"
// (converted exactly). Used for CLI inputs.
Rational parse_rational_flexible(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

std::vector<double> to_double_vec(const std::vector<Rational>& v);

// Scales a rational vector to the unique primitive integer vector with the
// same direction (clears denominators, divides by the gcd). Zero stays zero.
std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace gmak

#endif
