#ifndef EISENTRIG_BOUNDED_VALUE_HPP
#define EISENTRIG_BOUNDED_VALUE_HPP

#include <cstdint>
#include <string>

#include "eisentrig/complex.hpp"

namespace eisentrig
{

// A complex (or real, im == 0) midpoint with an absolute error radius: the
// true quantity lies in the closed disk |x - value| <= radius.
//
// Radii produced by the arithmetic here add a rounding allowance of a few
// units in the last place of the operand magnitudes on top of the
// propagated input radii. The allowance is empirical, not a proof: MPFR
// rounds each step to nearest, and the constants below comfortably dominate
// the per-step error of the complex formulas used.
struct BoundedValue {
    Complex value;
    Real radius;
    // Number of summation terms behind the value (0 when not a sum).
    std::uint64_t terms = 0;

    explicit BoundedValue(mpfr_prec_t bits = Real::default_bits) : value(bits), radius(bits) {}
    BoundedValue(Complex v, Real r, std::uint64_t n = 0) : value(std::move(v)), radius(std::move(r)), terms(n) {}

    static BoundedValue exact(Complex v);
    static BoundedValue exact(Real v);

    [[nodiscard]] mpfr_prec_t bits() const noexcept
    {
        return value.bits();
    }
    [[nodiscard]] const Real &re() const noexcept
    {
        return value.re;
    }
    [[nodiscard]] bool is_real() const noexcept
    {
        return value.is_real();
    }
    [[nodiscard]] bool is_exact() const noexcept
    {
        return radius.is_zero();
    }

    // |value| <= radius.
    [[nodiscard]] bool consistent_with_zero() const;
    // |value| > radius: the quantity is demonstrably nonzero.
    [[nodiscard]] bool excludes_zero() const;
    // The disks of *this and other intersect.
    [[nodiscard]] bool overlaps(const BoundedValue &other) const;
    // other's disk lies inside *this one's.
    [[nodiscard]] bool contains(const BoundedValue &other) const;

    // Upper bound on |x| over the disk.
    [[nodiscard]] Real magnitude_upper() const;
    // Lower bound on |x| over the disk (0 when the disk holds 0).
    [[nodiscard]] Real magnitude_lower() const;

    [[nodiscard]] std::string to_string(std::size_t digits = 0) const;
};

[[nodiscard]] BoundedValue operator-(const BoundedValue &a);
[[nodiscard]] BoundedValue operator+(const BoundedValue &a, const BoundedValue &b);
[[nodiscard]] BoundedValue operator-(const BoundedValue &a, const BoundedValue &b);
[[nodiscard]] BoundedValue operator*(const BoundedValue &a, const BoundedValue &b);
[[nodiscard]] BoundedValue operator/(const BoundedValue &a, const BoundedValue &b);
// Scaling by an exact integer.
[[nodiscard]] BoundedValue operator*(const BoundedValue &a, long k);
[[nodiscard]] BoundedValue operator*(long k, const BoundedValue &a);
[[nodiscard]] BoundedValue operator+(const BoundedValue &a, long k);
[[nodiscard]] BoundedValue operator-(long k, const BoundedValue &a);
// Division by an exact nonzero integer.
[[nodiscard]] BoundedValue operator/(const BoundedValue &a, long k);

// 1/a; throws InconclusiveNonvanishingError when the disk contains 0.
[[nodiscard]] BoundedValue reciprocal(const BoundedValue &a);
[[nodiscard]] BoundedValue square(const BoundedValue &a);
// Square root of a real ball lying strictly inside (0, inf); throws
// DomainError otherwise.
[[nodiscard]] BoundedValue sqrt_positive(const BoundedValue &a);
// |a| as a real ball.
[[nodiscard]] BoundedValue magnitude(const BoundedValue &a);
// Re a and Im a as real balls.
[[nodiscard]] BoundedValue real_part(const BoundedValue &a);
[[nodiscard]] BoundedValue imag_part(const BoundedValue &a);

// Adds `extra` to the radius, rounding up.
[[nodiscard]] BoundedValue inflate(BoundedValue a, const Real &extra);

} // namespace eisentrig

#endif
