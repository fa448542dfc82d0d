#include "eisentrig/symbolic/symbol_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eisentrig::symbolic
{

namespace
{

void trim(std::vector<unsigned> &e)
{
    while (!e.empty() && e.back() == 0) {
        e.pop_back();
    }
}

// Appends "+ text" / "- text" (or the bare first term) to out.
void append_signed(std::string &out, bool negative, const std::string &text)
{
    if (out.empty()) {
        out = negative ? "-" + text : text;
    } else {
        out += negative ? " - " : " + ";
        out += text;
    }
}

} // namespace

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents))
{
    trim(exponents_);
}

Monomial Monomial::symbol(std::size_t index, unsigned power)
{
    std::vector<unsigned> e(index + 1, 0U);
    e[index] = power;
    return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const noexcept
{
    unsigned total = 0;
    for (unsigned e : exponents_) {
        total += e;
    }
    return total;
}

unsigned Monomial::weight() const noexcept
{
    unsigned total = 0;
    for (std::size_t d = 0; d < exponents_.size(); ++d) {
        total += exponents_[d] * static_cast<unsigned>(2 * d + 2);
    }
    return total;
}

bool Monomial::divides(const Monomial &other) const noexcept
{
    if (exponents_.size() > other.exponents_.size()) {
        return false;
    }
    for (std::size_t d = 0; d < exponents_.size(); ++d) {
        if (exponents_[d] > other.exponents_[d]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial &other) const
{
    if (!divides(other)) {
        throw std::logic_error("Monomial::quotient_of: not divisible");
    }
    std::vector<unsigned> e = other.exponents_;
    for (std::size_t d = 0; d < exponents_.size(); ++d) {
        e[d] -= exponents_[d];
    }
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    std::vector<unsigned> e(std::max(a.width(), b.width()), 0U);
    for (std::size_t d = 0; d < e.size(); ++d) {
        e[d] = a.exponent(d) + b.exponent(d);
    }
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t d = 0; d < exponents_.size(); ++d) {
        if (exponents_[d] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += 'a' + std::to_string(d);
        if (exponents_[d] > 1) {
            out += '^' + std::to_string(exponents_[d]);
        }
    }
    return out;
}

bool DisplayOrder::operator()(const Monomial &a, const Monomial &b) const noexcept
{
    const std::size_t n = std::max(a.width(), b.width());
    for (std::size_t d = 0; d < n; ++d) {
        if (a.exponent(d) != b.exponent(d)) {
            return a.exponent(d) > b.exponent(d);
        }
    }
    return false;
}

bool elimination_less(const Monomial &a, const Monomial &b) noexcept
{
    const std::size_t n = std::max(a.width(), b.width());
    for (std::size_t d = n; d-- > 0;) {
        if (a.exponent(d) != b.exponent(d)) {
            return a.exponent(d) < b.exponent(d);
        }
    }
    return false;
}

SymbolPoly::SymbolPoly(const Rational &c)
{
    add_term(Monomial(), c);
}

SymbolPoly SymbolPoly::symbol(std::size_t index, const Rational &c)
{
    return term(Monomial::symbol(index), c);
}

SymbolPoly SymbolPoly::term(const Monomial &m, const Rational &c)
{
    SymbolPoly p;
    p.add_term(m, c);
    return p;
}

bool SymbolPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational SymbolPoly::constant_term() const
{
    return coefficient(Monomial());
}

Rational SymbolPoly::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t SymbolPoly::symbol_width() const noexcept
{
    std::size_t w = 0;
    for (const auto &[m, c] : terms_) {
        w = std::max(w, m.width());
    }
    return w;
}

int SymbolPoly::homogeneous_weight() const noexcept
{
    if (terms_.empty()) {
        return -1;
    }
    const unsigned w = terms_.begin()->first.weight();
    for (const auto &[m, c] : terms_) {
        if (m.weight() != w) {
            return -1;
        }
    }
    return static_cast<int>(w);
}

std::pair<Monomial, Rational> SymbolPoly::leading_term() const
{
    if (terms_.empty()) {
        throw std::logic_error("SymbolPoly::leading_term of zero polynomial");
    }
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (elimination_less(best->first, it->first)) {
            best = it;
        }
    }
    return *best;
}

void SymbolPoly::add_term(const Monomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SymbolPoly &SymbolPoly::operator+=(const SymbolPoly &rhs)
{
    for (const auto &[m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymbolPoly &SymbolPoly::operator-=(const SymbolPoly &rhs)
{
    for (const auto &[m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymbolPoly &SymbolPoly::operator*=(const Rational &rhs)
{
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_) {
        c *= rhs;
    }
    return *this;
}

SymbolPoly operator-(const SymbolPoly &p)
{
    SymbolPoly out = p;
    for (auto &[m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

SymbolPoly operator*(const SymbolPoly &a, const SymbolPoly &b)
{
    SymbolPoly out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

std::string SymbolPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        std::string text;
        if (m.is_one()) {
            text = symbolic::to_string(mag);
        } else if (mag == 1) {
            text = m.to_string();
        } else {
            text = symbolic::to_string(mag) + " " + m.to_string();
        }
        append_signed(out, negative, text);
    }
    return out;
}

SymbolPoly reduce(SymbolPoly p, std::span<const SymbolPoly> generators)
{
    std::vector<std::pair<Monomial, Rational>> leads;
    std::vector<const SymbolPoly *> gens;
    for (const SymbolPoly &g : generators) {
        if (!g.is_zero()) {
            leads.push_back(g.leading_term());
            gens.push_back(&g);
        }
    }
    SymbolPoly remainder;
    while (!p.is_zero()) {
        const auto [lm, lc] = p.leading_term();
        bool divided = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (leads[i].first.divides(lm)) {
                const SymbolPoly factor = SymbolPoly::term(leads[i].first.quotient_of(lm), lc / leads[i].second);
                p -= factor * *gens[i];
                divided = true;
                break;
            }
        }
        if (!divided) {
            const SymbolPoly lead = SymbolPoly::term(lm, lc);
            remainder += lead;
            p -= lead;
        }
    }
    return remainder;
}

} // namespace eisentrig::symbolic
