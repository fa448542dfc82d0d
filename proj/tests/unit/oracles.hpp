#ifndef EISENTRIG_TESTS_ORACLES_HPP
#define EISENTRIG_TESTS_ORACLES_HPP

// Reference values from MPFR's own special functions. Test code only: the
// library never calls these.

#include <mpfr.h>

#include "eisentrig/complex.hpp"
#include "eisentrig/real.hpp"

namespace oracle
{

using eisentrig::Complex;
using eisentrig::Real;

inline Real pi(mpfr_prec_t bits)
{
    Real out(bits);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

inline Real zeta(unsigned long s, mpfr_prec_t bits)
{
    Real out(bits);
    mpfr_zeta_ui(out.get(), s, MPFR_RNDN);
    return out;
}

template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Real apply(const Real &x)
{
    Real out(x.bits());
    Fn(out.get(), x.get(), MPFR_RNDN);
    return out;
}

inline Complex sin(const Complex &z)
{
    return {apply<mpfr_sin>(z.re) * apply<mpfr_cosh>(z.im), apply<mpfr_cos>(z.re) * apply<mpfr_sinh>(z.im)};
}

inline Complex cos(const Complex &z)
{
    return {apply<mpfr_cos>(z.re) * apply<mpfr_cosh>(z.im), -(apply<mpfr_sin>(z.re) * apply<mpfr_sinh>(z.im))};
}

// pi^2 / sin^2(pi z), computed with extra bits.
inline Complex f(const Complex &z, mpfr_prec_t bits = 256)
{
    const Real p = pi(bits);
    const Complex s = sin(z.rounded(bits) * p);
    return Complex(p * p) / (s * s);
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239), both series summed until the
// terms drop below 2^-(bits + 8).
inline Real machin_pi(mpfr_prec_t bits)
{
    auto atan_inv = [bits](long q) {
        Real total(bits);
        Real power = Real(1L, bits) / Real(q, bits);
        const Real q2(q * q, bits);
        const Real eps = Real::pow2(-(static_cast<long>(bits) + 8), 64);
        for (long k = 0; abs(power) > eps; ++k) {
            const Real term = power / (2 * k + 1);
            total = (k % 2 == 0) ? total + term : total - term;
            power = power / q2;
        }
        return total;
    };
    return atan_inv(5) * 16L - atan_inv(239) * 4L;
}

} // namespace oracle

#endif
