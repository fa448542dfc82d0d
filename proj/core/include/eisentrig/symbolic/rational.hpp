#ifndef EISENTRIG_SYMBOLIC_RATIONAL_HPP
#define EISENTRIG_SYMBOLIC_RATIONAL_HPP

#include <string>

#include <gmpxx.h>

namespace eisentrig::symbolic
{

// Exact rational coefficient. GMP keeps results of arithmetic in lowest
// terms with a positive denominator; values built from a numerator and
// denominator go through make_rational, which canonicalizes.
using Rational = mpq_class;

[[nodiscard]] inline Rational make_rational(long numerator, long denominator = 1)
{
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise.
[[nodiscard]] inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

} // namespace eisentrig::symbolic

#endif
