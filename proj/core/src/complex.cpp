#include "eisentrig/complex.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace eisentrig
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Complex Complex::parse(std::string_view text, mpfr_prec_t bits)
{
    std::string s;
    for (char c : trim(text)) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty complex point");
    }
    const bool imaginary = s.back() == 'i' || s.back() == 'j';
    if (!imaginary) {
        return Complex(Real::parse(s, bits));
    }
    s.pop_back();
    // Split at the last sign that is not the leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_im = [bits](std::string part) {
        if (part.empty() || part == "+") {
            return Real(1L, bits);
        }
        if (part == "-") {
            return Real(-1L, bits);
        }
        return Real::parse(part, bits);
    };
    if (split == std::string::npos) {
        return {Real(bits), parse_im(s)};
    }
    return {Real::parse(s.substr(0, split), bits), parse_im(s.substr(split))};
}

std::string Complex::to_string(std::size_t digits) const
{
    if (im.is_zero()) {
        return re.to_string(digits);
    }
    std::string out = re.to_string(digits);
    std::string ims = im.to_string(digits);
    if (ims.front() != '-') {
        out += "+";
    }
    return out + ims + "i";
}

Complex &Complex::operator+=(const Complex &rhs)
{
    re += rhs.re;
    im += rhs.im;
    return *this;
}

Complex &Complex::operator-=(const Complex &rhs)
{
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

Complex &Complex::operator*=(const Complex &rhs)
{
    *this = *this * rhs;
    return *this;
}

Complex &Complex::operator*=(const Real &rhs)
{
    re *= rhs;
    im *= rhs;
    return *this;
}

Complex &Complex::operator*=(long rhs)
{
    re *= rhs;
    im *= rhs;
    return *this;
}

Complex operator-(const Complex &z)
{
    return {-z.re, -z.im};
}

Complex operator+(const Complex &a, const Complex &b)
{
    return {a.re + b.re, a.im + b.im};
}

Complex operator-(const Complex &a, const Complex &b)
{
    return {a.re - b.re, a.im - b.im};
}

Complex operator*(const Complex &a, const Complex &b)
{
    if (a.im.is_zero() && b.im.is_zero()) {
        return {a.re * b.re, Real(std::max(a.bits(), b.bits()))};
    }
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex &a, const Complex &b)
{
    if (b.im.is_zero()) {
        return {a.re / b.re, a.im / b.re};
    }
    const Real denom = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

Complex operator*(const Complex &a, const Real &b)
{
    return {a.re * b, a.im * b};
}

Complex operator*(const Complex &a, long b)
{
    return {a.re * b, a.im * b};
}

Complex operator/(const Complex &a, const Real &b)
{
    return {a.re / b, a.im / b};
}

Complex operator-(const Complex &a, const Real &b)
{
    return {a.re - b, a.im};
}

Complex operator+(const Complex &a, const Real &b)
{
    return {a.re + b, a.im};
}

bool operator==(const Complex &a, const Complex &b) noexcept
{
    return a.re == b.re && a.im == b.im;
}

Complex conj(const Complex &z)
{
    return {z.re, -z.im};
}

Complex reciprocal(const Complex &z)
{
    if (z.im.is_zero()) {
        return Complex(Real(1L, z.bits()) / z.re);
    }
    const Real denom = z.re * z.re + z.im * z.im;
    return {z.re / denom, -z.im / denom};
}

Complex pow(const Complex &z, unsigned long n)
{
    Complex result(Real(1L, z.bits()));
    Complex base = z;
    while (n > 0) {
        if (n & 1UL) {
            result *= base;
        }
        n >>= 1U;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

Real abs(const Complex &z)
{
    if (z.im.is_zero()) {
        return abs(z.re);
    }
    return hypot(z.re, z.im);
}

Real abs_upper(const Complex &z)
{
    return add_up(abs(z.re), abs(z.im));
}

Real abs_up(const Complex &z)
{
    Real out(z.bits());
    mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDU);
    return out;
}

Real abs_down(const Complex &z)
{
    Real out(z.bits());
    mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDD);
    return out;
}

} // namespace eisentrig
