#ifndef EISENTRIG_SYMBOLIC_LAURENT_SERIES_HPP
#define EISENTRIG_SYMBOLIC_LAURENT_SERIES_HPP

#include <climits>
#include <map>
#include <optional>
#include <string>

#include "eisentrig/symbolic/symbol_poly.hpp"

namespace eisentrig::symbolic
{

// Truncated Laurent series in z with SymbolPoly coefficients.
//
// Coefficients are known for degrees in [min_degree, max_degree]; those
// below min_degree are zero, those above max_degree are unknown (not zero),
// and asking for one throws. max_degree == exact_order marks a Laurent
// polynomial known to every degree. Absent map entries inside the known
// window are zero.
class LaurentSeries
{
public:
    static constexpr int exact_order = INT_MAX / 4;

    // The zero series known on [min_degree, max_degree].
    LaurentSeries(int min_degree, int max_degree);

    // c z^degree, known exactly unless max_degree is given.
    static LaurentSeries monomial(const SymbolPoly &c, int degree, int max_degree = exact_order);
    static LaurentSeries constant(const SymbolPoly &c, int max_degree = exact_order)
    {
        return monomial(c, 0, max_degree);
    }

    [[nodiscard]] int min_degree() const noexcept
    {
        return min_degree_;
    }
    [[nodiscard]] int max_degree() const noexcept
    {
        return max_degree_;
    }
    [[nodiscard]] bool is_exact() const noexcept
    {
        return max_degree_ >= exact_order;
    }
    // Lowest degree with a nonzero coefficient, if any.
    [[nodiscard]] std::optional<int> valuation() const;
    // Zero on the whole known window.
    [[nodiscard]] bool is_zero() const noexcept
    {
        return coefficients_.empty();
    }

    // Throws DomainError for degree > max_degree.
    [[nodiscard]] SymbolPoly coefficient(int degree) const;
    [[nodiscard]] const std::map<int, SymbolPoly> &coefficients() const noexcept
    {
        return coefficients_;
    }

    // Copy known only up to min(max_degree, order).
    [[nodiscard]] LaurentSeries truncated(int order) const;

    // "z^-2 + a0 + a1 z^2"; multi-term coefficients are parenthesized,
    // "0" for the zero series. The truncation order is not rendered.
    [[nodiscard]] std::string to_string() const;

    // Same known window and the same coefficients.
    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b)
    {
        return a.min_degree_ == b.min_degree_ && a.max_degree_ == b.max_degree_
               && a.coefficients_ == b.coefficients_;
    }

    friend LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries scale(const LaurentSeries &a, const SymbolPoly &c);
    friend LaurentSeries differentiate(const LaurentSeries &a);

private:
    void accumulate(int degree, const SymbolPoly &c);

    int min_degree_;
    int max_degree_;
    std::map<int, SymbolPoly> coefficients_;
};

// Coefficientwise sum, known to the smaller of the two orders.
[[nodiscard]] LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b);
[[nodiscard]] LaurentSeries negate(const LaurentSeries &a);
[[nodiscard]] LaurentSeries subtract(const LaurentSeries &a, const LaurentSeries &b);
// Cauchy product. With orders M1, M2 and valuations v1, v2 the product is
// known to order min(M1 + v2, M2 + v1).
[[nodiscard]] LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b);
// Multiplication by an exact coefficient polynomial; the order is kept.
[[nodiscard]] LaurentSeries scale(const LaurentSeries &a, const SymbolPoly &c);
// Termwise d/dz; the order drops by one.
[[nodiscard]] LaurentSeries differentiate(const LaurentSeries &a);

} // namespace eisentrig::symbolic

#endif
