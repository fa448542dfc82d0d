#ifndef EISENTRIG_SYMBOLIC_FPOLYNOMIAL_HPP
#define EISENTRIG_SYMBOLIC_FPOLYNOMIAL_HPP

#include <string>
#include <vector>

#include "eisentrig/symbolic/symbol_poly.hpp"

namespace eisentrig::symbolic
{

// Polynomial in one indeterminate w (standing for the value of f) with
// SymbolPoly coefficients; coefficients_[i] multiplies w^i. Trailing zero
// coefficients are trimmed, so the zero polynomial has no coefficients and
// degree -1.
class FPolynomial
{
public:
    FPolynomial() = default;
    explicit FPolynomial(std::vector<SymbolPoly> coefficients);

    // c w^power
    static FPolynomial monomial(const SymbolPoly &c, std::size_t power);

    [[nodiscard]] int degree() const noexcept
    {
        return static_cast<int>(coefficients_.size()) - 1;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return coefficients_.empty();
    }
    [[nodiscard]] const SymbolPoly &coefficient(std::size_t power) const;
    [[nodiscard]] const std::vector<SymbolPoly> &coefficients() const noexcept
    {
        return coefficients_;
    }
    // Coefficient of the highest power; zero polynomial for the zero FPolynomial.
    [[nodiscard]] const SymbolPoly &leading_coefficient() const;
    [[nodiscard]] const SymbolPoly &constant_term() const
    {
        return coefficient(0);
    }

    [[nodiscard]] FPolynomial derivative() const;

    friend FPolynomial operator+(const FPolynomial &a, const FPolynomial &b);
    friend FPolynomial operator*(const FPolynomial &a, const FPolynomial &b);
    friend FPolynomial operator*(const FPolynomial &a, const Rational &c);
    friend bool operator==(const FPolynomial &a, const FPolynomial &b)
    {
        return a.coefficients_ == b.coefficients_;
    }

    // Descending powers: "120 w^3 - 360 a0 w^2 + 144 a0^2 w".
    [[nodiscard]] std::string to_string(const std::string &var = "w") const;

private:
    void trim();

    std::vector<SymbolPoly> coefficients_;
};

} // namespace eisentrig::symbolic

#endif
