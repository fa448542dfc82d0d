#ifndef EISENTRIG_REAL_HPP
#define EISENTRIG_REAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace eisentrig
{

// Owning wrapper around an mpfr_t. Every value carries its own precision in
// bits; binary operations produce a result at the larger of the two operand
// precisions. All arithmetic rounds to nearest unless a function name says
// otherwise (the *_up helpers round toward +inf and are meant for error
// radii).
class Real
{
public:
    static constexpr mpfr_prec_t default_bits = 128;

    explicit Real(mpfr_prec_t bits = default_bits);
    Real(long value, mpfr_prec_t bits);
    Real(double value, mpfr_prec_t bits);
    Real(const mpq_class &value, mpfr_prec_t bits);
    Real(const mpz_class &value, mpfr_prec_t bits);

    // Parses a decimal (or "inf"/"nan") string, rounding to nearest.
    // Throws std::invalid_argument when the text is not a number.
    static Real parse(std::string_view text, mpfr_prec_t bits);

    // 2^exponent, exact.
    static Real pow2(long exponent, mpfr_prec_t bits);

    Real(const Real &other);
    Real(Real &&other) noexcept;
    Real &operator=(const Real &other);
    Real &operator=(Real &&other) noexcept;
    ~Real();

    [[nodiscard]] mpfr_prec_t bits() const noexcept
    {
        return mpfr_get_prec(value_);
    }
    // Value rounded to a new precision.
    [[nodiscard]] Real rounded(mpfr_prec_t bits) const;

    [[nodiscard]] mpfr_srcptr get() const noexcept
    {
        return value_;
    }
    [[nodiscard]] mpfr_ptr get() noexcept
    {
        return value_;
    }

    [[nodiscard]] bool is_zero() const noexcept
    {
        return mpfr_zero_p(value_) != 0;
    }
    [[nodiscard]] bool is_finite() const noexcept
    {
        return mpfr_number_p(value_) != 0;
    }
    [[nodiscard]] bool is_integer() const noexcept
    {
        return mpfr_integer_p(value_) != 0;
    }
    [[nodiscard]] int sign() const noexcept
    {
        return mpfr_sgn(value_);
    }
    // Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
    [[nodiscard]] long exponent() const noexcept
    {
        return mpfr_get_exp(value_);
    }

    [[nodiscard]] double to_double() const noexcept
    {
        return mpfr_get_d(value_, MPFR_RNDN);
    }
    // Nearest integer, ties away from zero. Precondition: finite.
    [[nodiscard]] mpz_class to_integer() const;
    [[nodiscard]] long to_long() const noexcept
    {
        return mpfr_get_si(value_, MPFR_RNDN);
    }

    // Decimal rendering with `digits` significant digits (0 means enough
    // digits to round-trip at this precision).
    [[nodiscard]] std::string to_string(std::size_t digits = 0) const;
    // Short scientific rendering, for diagnostics.
    [[nodiscard]] std::string to_sci(int digits = 6) const;

    Real &operator+=(const Real &rhs);
    Real &operator-=(const Real &rhs);
    Real &operator*=(const Real &rhs);
    Real &operator/=(const Real &rhs);
    Real &operator*=(long rhs);
    Real &operator/=(long rhs);

    friend Real operator-(const Real &x);
    friend Real operator+(const Real &a, const Real &b);
    friend Real operator-(const Real &a, const Real &b);
    friend Real operator*(const Real &a, const Real &b);
    friend Real operator/(const Real &a, const Real &b);
    friend Real operator*(const Real &a, long b);
    friend Real operator*(long a, const Real &b);
    friend Real operator/(const Real &a, long b);
    friend Real operator+(const Real &a, long b);
    friend Real operator-(const Real &a, long b);

    friend bool operator==(const Real &a, const Real &b) noexcept
    {
        return mpfr_equal_p(a.value_, b.value_) != 0;
    }
    friend std::partial_ordering operator<=>(const Real &a, const Real &b) noexcept;
    friend bool operator==(const Real &a, long b) noexcept
    {
        return mpfr_cmp_si(a.value_, b) == 0;
    }
    friend std::partial_ordering operator<=>(const Real &a, long b) noexcept;

    friend std::ostream &operator<<(std::ostream &os, const Real &x);

private:
    mpfr_t value_;
};

[[nodiscard]] Real abs(const Real &x);
[[nodiscard]] Real sqrt(const Real &x);
[[nodiscard]] Real hypot(const Real &a, const Real &b);
// x * 2^e, exact.
[[nodiscard]] Real ldexp(const Real &x, long e);
// Nearest integer value (ties away from zero), as a Real of the same precision.
[[nodiscard]] Real round(const Real &x);
// x^n for integer n (n may be negative).
[[nodiscard]] Real pow(const Real &x, long n);
// k-th root of a nonnegative x.
[[nodiscard]] Real root(const Real &x, unsigned long k);
[[nodiscard]] const Real &max(const Real &a, const Real &b);
[[nodiscard]] const Real &min(const Real &a, const Real &b);

// Upward-rounded helpers for error radii. Results carry the larger operand
// precision.
[[nodiscard]] Real add_up(const Real &a, const Real &b);
[[nodiscard]] Real mul_up(const Real &a, const Real &b);
[[nodiscard]] Real div_up(const Real &a, const Real &b);
[[nodiscard]] Real sqrt_up(const Real &x);
[[nodiscard]] Real pow_up(const Real &x, long n);
// Downward-rounded counterparts, used for denominators of radius bounds.
[[nodiscard]] Real sub_down(const Real &a, const Real &b);
[[nodiscard]] Real div_down(const Real &a, const Real &b);
[[nodiscard]] Real sqrt_down(const Real &x);

} // namespace eisentrig

#endif
