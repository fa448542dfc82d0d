#include "eisentrig/symbolic/fpolynomial.hpp"

#include <algorithm>

namespace eisentrig::symbolic
{

namespace
{

const SymbolPoly &zero_poly()
{
    static const SymbolPoly zero;
    return zero;
}

} // namespace

FPolynomial::FPolynomial(std::vector<SymbolPoly> coefficients) : coefficients_(std::move(coefficients))
{
    trim();
}

FPolynomial FPolynomial::monomial(const SymbolPoly &c, std::size_t power)
{
    std::vector<SymbolPoly> coeffs(power + 1);
    coeffs[power] = c;
    return FPolynomial(std::move(coeffs));
}

void FPolynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

const SymbolPoly &FPolynomial::coefficient(std::size_t power) const
{
    return power < coefficients_.size() ? coefficients_[power] : zero_poly();
}

const SymbolPoly &FPolynomial::leading_coefficient() const
{
    return coefficients_.empty() ? zero_poly() : coefficients_.back();
}

FPolynomial FPolynomial::derivative() const
{
    if (coefficients_.size() <= 1) {
        return {};
    }
    std::vector<SymbolPoly> out(coefficients_.size() - 1);
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        out[i - 1] = coefficients_[i] * make_rational(static_cast<long>(i));
    }
    return FPolynomial(std::move(out));
}

FPolynomial operator+(const FPolynomial &a, const FPolynomial &b)
{
    std::vector<SymbolPoly> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coefficient(i) + b.coefficient(i);
    }
    return FPolynomial(std::move(out));
}

FPolynomial operator*(const FPolynomial &a, const FPolynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<SymbolPoly> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            out[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return FPolynomial(std::move(out));
}

FPolynomial operator*(const FPolynomial &a, const Rational &c)
{
    std::vector<SymbolPoly> out = a.coefficients_;
    for (auto &p : out) {
        p *= c;
    }
    return FPolynomial(std::move(out));
}

std::string FPolynomial::to_string(const std::string &var) const
{
    if (coefficients_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        const SymbolPoly &c = coefficients_[i];
        if (c.is_zero()) {
            continue;
        }
        const std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string text;
        bool negative = false;
        if (c.size() == 1) {
            const auto &[mono, q] = *c.terms().begin();
            negative = q < 0;
            const Rational mag = abs(q);
            std::string coeff;
            if (mono.is_one()) {
                coeff = (mag == 1 && i != 0) ? "" : symbolic::to_string(mag);
            } else {
                coeff = (mag == 1) ? mono.to_string() : symbolic::to_string(mag) + " " + mono.to_string();
            }
            text = coeff.empty() ? power : (power.empty() ? coeff : coeff + " " + power);
        } else {
            text = "(" + c.to_string() + ")";
            if (!power.empty()) {
                text += " " + power;
            }
        }
        if (out.empty()) {
            out = negative ? "-" + text : text;
        } else {
            out += negative ? " - " : " + ";
            out += text;
        }
    }
    return out;
}

} // namespace eisentrig::symbolic
