#include "eisentrig/bounded_value.hpp"

#include <cstdlib>

#include "eisentrig/errors.hpp"

namespace eisentrig
{

namespace
{

// Allowance for one rounded arithmetic step whose exact result is bounded
// in magnitude by `scale`: 4 ulp of scale.
Real rounding_allowance(const Real &scale, mpfr_prec_t bits)
{
    return mul_up(scale, Real::pow2(3 - static_cast<long>(bits), 64));
}

Real radius_bits(mpfr_prec_t bits)
{
    return Real(bits);
}

} // namespace

BoundedValue BoundedValue::exact(Complex v)
{
    const mpfr_prec_t b = v.bits();
    return {std::move(v), radius_bits(b)};
}

BoundedValue BoundedValue::exact(Real v)
{
    const mpfr_prec_t b = v.bits();
    return {Complex(std::move(v)), radius_bits(b)};
}

bool BoundedValue::consistent_with_zero() const
{
    return abs_down(value) <= radius;
}

bool BoundedValue::excludes_zero() const
{
    return abs_down(value) > radius;
}

bool BoundedValue::overlaps(const BoundedValue &other) const
{
    return abs_down(value - other.value) <= add_up(radius, other.radius);
}

bool BoundedValue::contains(const BoundedValue &other) const
{
    return add_up(abs_up(value - other.value), other.radius) <= radius;
}

Real BoundedValue::magnitude_upper() const
{
    return add_up(abs_up(value), radius);
}

Real BoundedValue::magnitude_lower() const
{
    Real m = sub_down(abs_down(value), radius);
    return m.sign() < 0 ? Real(m.bits()) : m;
}

std::string BoundedValue::to_string(std::size_t digits) const
{
    return value.to_string(digits) + " +/- " + radius.to_sci(3);
}

BoundedValue operator-(const BoundedValue &a)
{
    return {-a.value, a.radius};
}

BoundedValue operator+(const BoundedValue &a, const BoundedValue &b)
{
    Complex v = a.value + b.value;
    Real r = add_up(a.radius, b.radius);
    r = add_up(r, rounding_allowance(add_up(abs_upper(a.value), abs_upper(b.value)), v.bits()));
    return {std::move(v), std::move(r)};
}

BoundedValue operator-(const BoundedValue &a, const BoundedValue &b)
{
    return a + (-b);
}

BoundedValue operator*(const BoundedValue &a, const BoundedValue &b)
{
    Complex v = a.value * b.value;
    const Real ma = abs_upper(a.value);
    const Real mb = abs_upper(b.value);
    // |xy - x~y~| <= |x~| rb + |y~| ra + ra rb
    Real r = add_up(mul_up(ma, b.radius), mul_up(mb, a.radius));
    r = add_up(r, mul_up(a.radius, b.radius));
    r = add_up(r, rounding_allowance(mul_up(ma, mb), v.bits()));
    return {std::move(v), std::move(r)};
}

BoundedValue operator/(const BoundedValue &a, const BoundedValue &b)
{
    return a * reciprocal(b);
}

BoundedValue operator*(const BoundedValue &a, long k)
{
    Complex v = a.value * k;
    const Real mk(std::labs(k), 64);
    Real r = mul_up(a.radius, mk);
    r = add_up(r, rounding_allowance(abs_upper(v), v.bits()));
    return {std::move(v), std::move(r)};
}

BoundedValue operator*(long k, const BoundedValue &a)
{
    return a * k;
}

BoundedValue operator+(const BoundedValue &a, long k)
{
    return a + BoundedValue::exact(Real(k, a.bits()));
}

BoundedValue operator-(long k, const BoundedValue &a)
{
    return BoundedValue::exact(Real(k, a.bits())) - a;
}

BoundedValue operator/(const BoundedValue &a, long k)
{
    if (k == 0) {
        throw DomainError("division of a bounded value by zero");
    }
    Complex v{a.value.re / k, a.value.im / k};
    const Real mk(std::labs(k), 64);
    Real r = div_up(a.radius, mk);
    r = add_up(r, rounding_allowance(abs_upper(v), v.bits()));
    return {std::move(v), std::move(r)};
}

BoundedValue reciprocal(const BoundedValue &a)
{
    const Real lower = abs_down(a.value);
    if (!(lower > a.radius)) {
        throw InconclusiveNonvanishingError("reciprocal of a bounded value whose disk contains zero ("
                                            + a.to_string(12) + ")");
    }
    Complex v = reciprocal(a.value);
    // |1/x - 1/x~| = |x - x~| / (|x| |x~|) <= r / (|x~| (|x~| - r))
    const Real gap = sub_down(lower, a.radius);
    Real denom(a.bits());
    mpfr_mul(denom.get(), lower.get(), gap.get(), MPFR_RNDD);
    Real r = div_up(a.radius, denom);
    r = add_up(r, rounding_allowance(abs_upper(v), v.bits()));
    return {std::move(v), std::move(r)};
}

BoundedValue square(const BoundedValue &a)
{
    return a * a;
}

BoundedValue sqrt_positive(const BoundedValue &a)
{
    if (!a.is_real()) {
        throw DomainError("sqrt_positive of a complex value");
    }
    const Real lower = sub_down(a.value.re, a.radius);
    if (!(lower > 0L)) {
        throw DomainError("sqrt_positive of a ball that is not strictly positive");
    }
    Real v = sqrt(a.value.re);
    // |sqrt x - sqrt x~| = |x - x~| / (sqrt x + sqrt x~) <= r / (2 sqrt(x~ - r))
    Real r = div_up(a.radius, ldexp(sqrt_down(lower), 1));
    r = add_up(r, rounding_allowance(abs(v), v.bits()));
    return {Complex(std::move(v)), std::move(r)};
}

BoundedValue magnitude(const BoundedValue &a)
{
    Real v = abs(a.value);
    Real r = add_up(a.radius, rounding_allowance(v, v.bits()));
    return {Complex(std::move(v)), std::move(r)};
}

BoundedValue real_part(const BoundedValue &a)
{
    return {Complex(a.value.re), a.radius};
}

BoundedValue imag_part(const BoundedValue &a)
{
    return {Complex(a.value.im), a.radius};
}

BoundedValue inflate(BoundedValue a, const Real &extra)
{
    a.radius = add_up(a.radius, extra);
    return a;
}

} // namespace eisentrig
