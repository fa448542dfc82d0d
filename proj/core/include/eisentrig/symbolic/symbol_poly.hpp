#ifndef EISENTRIG_SYMBOLIC_SYMBOL_POLY_HPP
#define EISENTRIG_SYMBOLIC_SYMBOL_POLY_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eisentrig/symbolic/rational.hpp"

namespace eisentrig::symbolic
{

// Product a0^e0 a1^e1 ... of the formal Laurent coefficients of f.
// Stored with trailing zero exponents trimmed, so equal monomials compare
// equal regardless of how they were built.
class Monomial
{
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);

    // a_index^power
    static Monomial symbol(std::size_t index, unsigned power = 1);

    [[nodiscard]] bool is_one() const noexcept
    {
        return exponents_.empty();
    }
    [[nodiscard]] unsigned exponent(std::size_t index) const noexcept
    {
        return index < exponents_.size() ? exponents_[index] : 0U;
    }
    // One past the largest symbol index present.
    [[nodiscard]] std::size_t width() const noexcept
    {
        return exponents_.size();
    }
    [[nodiscard]] unsigned total_degree() const noexcept;
    // Sum of e_d (2d + 2): the z-scaling weight. a_d multiplies z^(2d) in f,
    // whose pole term is z^-2, so every coefficient of a pole-balanced
    // combination is homogeneous in this weight.
    [[nodiscard]] unsigned weight() const noexcept;

    [[nodiscard]] bool divides(const Monomial &other) const noexcept;
    // other / *this; precondition: divides(other).
    [[nodiscard]] Monomial quotient_of(const Monomial &other) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;

    [[nodiscard]] const std::vector<unsigned> &exponents() const noexcept
    {
        return exponents_;
    }

    // "a0^2 a1"; empty for the unit monomial.
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<unsigned> exponents_;
};

// Display order: lexicographic on (e0, e1, ...), larger first. Puts a0^2
// before a1 and the constant last.
struct DisplayOrder {
    bool operator()(const Monomial &a, const Monomial &b) const noexcept;
};

// Elimination order used for reducing relations: lexicographic with the
// highest-index symbol most significant, so a relation's leading monomial
// is the a_d of largest d it involves. Returns true when a < b.
[[nodiscard]] bool elimination_less(const Monomial &a, const Monomial &b) noexcept;

// Exact polynomial with Rational coefficients in the symbols a0, a1, ...
// No zero coefficient is ever stored.
class SymbolPoly
{
public:
    using TermMap = std::map<Monomial, Rational, DisplayOrder>;

    SymbolPoly() = default;
    // The constant polynomial c.
    explicit SymbolPoly(const Rational &c);
    explicit SymbolPoly(long c) : SymbolPoly(make_rational(c)) {}

    // c * a_index
    static SymbolPoly symbol(std::size_t index, const Rational &c = Rational(1));
    static SymbolPoly term(const Monomial &m, const Rational &c);

    [[nodiscard]] bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coefficient(const Monomial &m) const;
    [[nodiscard]] const TermMap &terms() const noexcept
    {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const noexcept
    {
        return terms_.size();
    }
    // One past the largest symbol index used (0 for constants).
    [[nodiscard]] std::size_t symbol_width() const noexcept;
    // The common weight of all terms, or -1 if the polynomial is zero or
    // not weight-homogeneous.
    [[nodiscard]] int homogeneous_weight() const noexcept;

    // Leading term under elimination_less. Precondition: !is_zero().
    [[nodiscard]] std::pair<Monomial, Rational> leading_term() const;

    SymbolPoly &operator+=(const SymbolPoly &rhs);
    SymbolPoly &operator-=(const SymbolPoly &rhs);
    SymbolPoly &operator*=(const Rational &rhs);

    friend SymbolPoly operator-(const SymbolPoly &p);
    friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly &b)
    {
        return a += b;
    }
    friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly &b)
    {
        return a -= b;
    }
    friend SymbolPoly operator*(const SymbolPoly &a, const SymbolPoly &b);
    friend SymbolPoly operator*(SymbolPoly a, const Rational &c)
    {
        return a *= c;
    }
    friend SymbolPoly operator*(const Rational &c, SymbolPoly a)
    {
        return a *= c;
    }
    friend bool operator==(const SymbolPoly &a, const SymbolPoly &b)
    {
        return a.terms_ == b.terms_;
    }

    // Canonical text: terms in DisplayOrder, "6 a0^2 - 10 a1", "1/2 a0",
    // "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

    // Evaluates the polynomial with a caller-supplied numeric type.
    // `symbol_value(d)` returns the value of a_d, `from_rational(q)` lifts a
    // coefficient; T needs +, * and copy.
    template <class T, class SymbolValue, class FromRational>
    [[nodiscard]] T evaluate(SymbolValue &&symbol_value, FromRational &&from_rational) const
    {
        std::vector<T> values;
        values.reserve(symbol_width());
        for (std::size_t d = 0; d < symbol_width(); ++d) {
            values.push_back(symbol_value(d));
        }
        T total = from_rational(Rational(0));
        for (const auto &[mono, coeff] : terms_) {
            T term = from_rational(coeff);
            for (std::size_t d = 0; d < mono.width(); ++d) {
                for (unsigned e = 0; e < mono.exponent(d); ++e) {
                    term = term * values[d];
                }
            }
            total = total + term;
        }
        return total;
    }

private:
    void add_term(const Monomial &m, const Rational &c);

    TermMap terms_;
};

// Normal form of p modulo the generators by multivariate division in the
// elimination order, trying generators in the order given. Zero
// generators are skipped.
[[nodiscard]] SymbolPoly reduce(SymbolPoly p, std::span<const SymbolPoly> generators);

} // namespace eisentrig::symbolic

#endif
