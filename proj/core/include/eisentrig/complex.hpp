#ifndef EISENTRIG_COMPLEX_HPP
#define EISENTRIG_COMPLEX_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>

#include "eisentrig/real.hpp"

namespace eisentrig
{

// A point of the complex plane at working precision. Plain aggregate of two
// Reals; there is deliberately no implicit conversion from double.
struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t bits = Real::default_bits) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(re.bits()) {}

    // Accepts "re", "re+imi", "re-imi", "imi" (also with "j"), decimal
    // components, surrounding whitespace ignored.
    static Complex parse(std::string_view text, mpfr_prec_t bits);

    [[nodiscard]] mpfr_prec_t bits() const noexcept
    {
        return std::max(re.bits(), im.bits());
    }
    [[nodiscard]] bool is_finite() const noexcept
    {
        return re.is_finite() && im.is_finite();
    }
    [[nodiscard]] bool is_real() const noexcept
    {
        return im.is_zero();
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return re.is_zero() && im.is_zero();
    }
    [[nodiscard]] Complex rounded(mpfr_prec_t bits) const
    {
        return {re.rounded(bits), im.rounded(bits)};
    }
    [[nodiscard]] std::string to_string(std::size_t digits = 0) const;

    Complex &operator+=(const Complex &rhs);
    Complex &operator-=(const Complex &rhs);
    Complex &operator*=(const Complex &rhs);
    Complex &operator*=(const Real &rhs);
    Complex &operator*=(long rhs);
};

[[nodiscard]] Complex operator-(const Complex &z);
[[nodiscard]] Complex operator+(const Complex &a, const Complex &b);
[[nodiscard]] Complex operator-(const Complex &a, const Complex &b);
[[nodiscard]] Complex operator*(const Complex &a, const Complex &b);
[[nodiscard]] Complex operator/(const Complex &a, const Complex &b);
[[nodiscard]] Complex operator*(const Complex &a, const Real &b);
[[nodiscard]] Complex operator*(const Complex &a, long b);
[[nodiscard]] Complex operator/(const Complex &a, const Real &b);
[[nodiscard]] Complex operator-(const Complex &a, const Real &b);
[[nodiscard]] Complex operator+(const Complex &a, const Real &b);
[[nodiscard]] bool operator==(const Complex &a, const Complex &b) noexcept;

[[nodiscard]] Complex conj(const Complex &z);
[[nodiscard]] Complex reciprocal(const Complex &z);
// z^n for n >= 0 by repeated squaring.
[[nodiscard]] Complex pow(const Complex &z, unsigned long n);
// |z| rounded to nearest.
[[nodiscard]] Real abs(const Complex &z);
// |re| + |im|, rounded up: a cheap upper bound on |z|.
[[nodiscard]] Real abs_upper(const Complex &z);
// An upward-rounded |z|.
[[nodiscard]] Real abs_up(const Complex &z);
// A downward-rounded |z|.
[[nodiscard]] Real abs_down(const Complex &z);

} // namespace eisentrig

#endif
