#include "eisentrig/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace eisentrig
{

namespace
{

mpfr_prec_t joint_bits(const Real &a, const Real &b)
{
    return std::max(a.bits(), b.bits());
}

} // namespace

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class &value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class &value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, mpfr_prec_t bits)
{
    Real out(bits);
    const std::string owned(text);
    char *end = nullptr;
    mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
    if (owned.empty() || end == owned.c_str() || *end != '\0') {
        throw std::invalid_argument("not a decimal number: '" + owned + "'");
    }
    return out;
}

Real Real::pow2(long exponent, mpfr_prec_t bits)
{
    Real out(bits);
    mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
    return out;
}

Real::Real(const Real &other)
{
    mpfr_init2(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real &&other) noexcept
{
    // Leave the source valid (and cheap) so it can still be destroyed or
    // assigned to.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real &Real::operator=(const Real &other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.bits());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(value_);
}

Real Real::rounded(mpfr_prec_t bits) const
{
    Real out(bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

mpz_class Real::to_integer() const
{
    mpz_class out;
    Real r = round(*this);
    mpfr_get_z(out.get_mpz_t(), r.value_, MPFR_RNDN);
    return out;
}

std::string Real::to_string(std::size_t digits) const
{
    if (mpfr_nan_p(value_)) {
        return "nan";
    }
    if (mpfr_inf_p(value_)) {
        return sign() < 0 ? "-inf" : "inf";
    }
    if (is_zero()) {
        return "0";
    }
    if (digits == 0) {
        digits = mpfr_get_str_ndigits(10, bits());
    }
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char *)> raw(mpfr_get_str(nullptr, &exp10, 10, digits, value_, MPFR_RNDN),
                                                 mpfr_free_str);
    std::string mant(raw.get());
    std::string sign_str;
    if (!mant.empty() && mant.front() == '-') {
        sign_str = "-";
        mant.erase(0, 1);
    }
    while (mant.size() > 1 && mant.back() == '0') {
        mant.pop_back();
    }
    // value = 0.mant * 10^exp10
    const long e = static_cast<long>(exp10);
    std::string body;
    if (e > -6 && e <= 21) {
        if (e <= 0) {
            body = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
        } else if (static_cast<std::size_t>(e) >= mant.size()) {
            body = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
        } else {
            body = mant.substr(0, static_cast<std::size_t>(e)) + "." + mant.substr(static_cast<std::size_t>(e));
        }
    } else {
        body = mant.substr(0, 1);
        if (mant.size() > 1) {
            body += "." + mant.substr(1);
        }
        body += "e" + std::to_string(e - 1);
    }
    return sign_str + body;
}

std::string Real::to_sci(int digits) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Real &Real::operator+=(const Real &rhs)
{
    if (rhs.bits() > bits()) {
        mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    }
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator-=(const Real &rhs)
{
    if (rhs.bits() > bits()) {
        mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    }
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(const Real &rhs)
{
    if (rhs.bits() > bits()) {
        mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    }
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(const Real &rhs)
{
    if (rhs.bits() > bits()) {
        mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    }
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(long rhs)
{
    mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(long rhs)
{
    mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

Real operator-(const Real &x)
{
    Real out(x.bits());
    mpfr_neg(out.value_, x.value_, MPFR_RNDN);
    return out;
}

Real operator+(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

Real operator-(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

Real operator*(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

Real operator/(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

Real operator*(const Real &a, long b)
{
    Real out(a.bits());
    mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
    return out;
}

Real operator*(long a, const Real &b)
{
    return b * a;
}

Real operator/(const Real &a, long b)
{
    Real out(a.bits());
    mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
    return out;
}

Real operator+(const Real &a, long b)
{
    Real out(a.bits());
    mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
    return out;
}

Real operator-(const Real &a, long b)
{
    Real out(a.bits());
    mpfr_sub_si(out.value_, a.value_, b, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const Real &a, const Real &b) noexcept
{
    if (mpfr_unordered_p(a.value_, b.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real &a, long b) noexcept
{
    if (mpfr_nan_p(a.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream &operator<<(std::ostream &os, const Real &x)
{
    return os << x.to_string();
}

Real abs(const Real &x)
{
    Real out(x.bits());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real sqrt(const Real &x)
{
    Real out(x.bits());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real hypot(const Real &a, const Real &b)
{
    Real out(std::max(a.bits(), b.bits()));
    mpfr_hypot(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

Real ldexp(const Real &x, long e)
{
    Real out(x.bits());
    mpfr_mul_2si(out.get(), x.get(), e, MPFR_RNDN);
    return out;
}

Real round(const Real &x)
{
    Real out(x.bits());
    mpfr_round(out.get(), x.get());
    return out;
}

Real pow(const Real &x, long n)
{
    Real out(x.bits());
    mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
    return out;
}

Real root(const Real &x, unsigned long k)
{
    Real out(x.bits());
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(out.get(), x.get(), k, MPFR_RNDN);
#else
    mpfr_root(out.get(), x.get(), k, MPFR_RNDN);
#endif
    return out;
}

const Real &max(const Real &a, const Real &b)
{
    return (a < b) ? b : a;
}

const Real &min(const Real &a, const Real &b)
{
    return (b < a) ? b : a;
}

Real add_up(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDU);
    return out;
}

Real mul_up(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDU);
    return out;
}

Real div_up(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDU);
    return out;
}

Real sqrt_up(const Real &x)
{
    Real out(x.bits());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDU);
    return out;
}

Real pow_up(const Real &x, long n)
{
    // Only used with nonnegative bases; directed rounding of x^n with n < 0
    // goes through the reciprocal so the direction is preserved.
    Real out(x.bits());
    if (n >= 0) {
        mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDU);
    } else {
        Real denom(x.bits());
        mpfr_pow_si(denom.get(), x.get(), -n, MPFR_RNDD);
        mpfr_ui_div(out.get(), 1, denom.get(), MPFR_RNDU);
    }
    return out;
}

Real sub_down(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDD);
    return out;
}

Real div_down(const Real &a, const Real &b)
{
    Real out(joint_bits(a, b));
    mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDD);
    return out;
}

Real sqrt_down(const Real &x)
{
    Real out(x.bits());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDD);
    return out;
}

} // namespace eisentrig
