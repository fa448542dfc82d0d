#include "eisentrig/symbolic/laurent_series.hpp"

#include <algorithm>

#include "eisentrig/errors.hpp"

namespace eisentrig::symbolic
{

namespace
{

int saturating_add(int a, int b)
{
    const long s = static_cast<long>(a) + b;
    return static_cast<int>(std::min<long>(s, LaurentSeries::exact_order));
}

std::string z_power(int degree)
{
    if (degree == 1) {
        return "z";
    }
    return "z^" + std::to_string(degree);
}

} // namespace

LaurentSeries::LaurentSeries(int min_degree, int max_degree)
    : min_degree_(min_degree), max_degree_(std::min(max_degree, exact_order))
{
}

LaurentSeries LaurentSeries::monomial(const SymbolPoly &c, int degree, int max_degree)
{
    LaurentSeries s(degree, max_degree);
    if (degree <= s.max_degree_) {
        s.accumulate(degree, c);
    }
    return s;
}

std::optional<int> LaurentSeries::valuation() const
{
    if (coefficients_.empty()) {
        return std::nullopt;
    }
    return coefficients_.begin()->first;
}

SymbolPoly LaurentSeries::coefficient(int degree) const
{
    if (degree > max_degree_) {
        throw DomainError("coefficient of z^" + std::to_string(degree) + " is beyond the truncation order "
                          + std::to_string(max_degree_));
    }
    auto it = coefficients_.find(degree);
    return it == coefficients_.end() ? SymbolPoly() : it->second;
}

LaurentSeries LaurentSeries::truncated(int order) const
{
    LaurentSeries out(min_degree_, std::min(order, max_degree_));
    for (const auto &[d, c] : coefficients_) {
        if (d <= out.max_degree_) {
            out.coefficients_.emplace(d, c);
        }
    }
    return out;
}

void LaurentSeries::accumulate(int degree, const SymbolPoly &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = coefficients_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coefficients_.erase(it);
        }
    }
}

std::string LaurentSeries::to_string() const
{
    if (coefficients_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[d, c] : coefficients_) {
        std::string text;
        bool negative = false;
        if (c.size() == 1) {
            const auto &[mono, q] = *c.terms().begin();
            negative = q < 0;
            const Rational mag = abs(q);
            std::string coeff;
            if (mono.is_one()) {
                coeff = symbolic::to_string(mag);
            } else {
                coeff = (mag == 1) ? mono.to_string() : symbolic::to_string(mag) + " " + mono.to_string();
            }
            if (d == 0) {
                text = coeff;
            } else if (mono.is_one() && mag == 1) {
                text = z_power(d);
            } else {
                text = coeff + " " + z_power(d);
            }
        } else {
            text = "(" + c.to_string() + ")";
            if (d != 0) {
                text += " " + z_power(d);
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

LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b)
{
    LaurentSeries out(std::min(a.min_degree_, b.min_degree_), std::min(a.max_degree_, b.max_degree_));
    for (const auto &[d, c] : a.coefficients_) {
        if (d <= out.max_degree_) {
            out.accumulate(d, c);
        }
    }
    for (const auto &[d, c] : b.coefficients_) {
        if (d <= out.max_degree_) {
            out.accumulate(d, c);
        }
    }
    return out;
}

LaurentSeries negate(const LaurentSeries &a)
{
    return scale(a, SymbolPoly(-1));
}

LaurentSeries subtract(const LaurentSeries &a, const LaurentSeries &b)
{
    return add(a, negate(b));
}

LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b)
{
    // A series with no nonzero known coefficient has valuation beyond its
    // order; the product is then zero to M1 + M2 + 1 at worst, which the
    // same rule gives with v = M + 1.
    const int va = a.valuation().value_or(saturating_add(a.max_degree_, 1));
    const int vb = b.valuation().value_or(saturating_add(b.max_degree_, 1));
    // An exact factor has no truncation to propagate.
    const int from_a = a.is_exact() ? LaurentSeries::exact_order : saturating_add(a.max_degree_, vb);
    const int from_b = b.is_exact() ? LaurentSeries::exact_order : saturating_add(b.max_degree_, va);
    const int order = std::min(from_a, from_b);
    LaurentSeries out(saturating_add(a.min_degree_, b.min_degree_), order);
    for (const auto &[da, ca] : a.coefficients_) {
        for (const auto &[db, cb] : b.coefficients_) {
            const int d = da + db;
            if (d <= order) {
                out.accumulate(d, ca * cb);
            }
        }
    }
    return out;
}

LaurentSeries scale(const LaurentSeries &a, const SymbolPoly &c)
{
    LaurentSeries out(a.min_degree_, a.max_degree_);
    for (const auto &[d, coeff] : a.coefficients_) {
        out.accumulate(d, coeff * c);
    }
    return out;
}

LaurentSeries differentiate(const LaurentSeries &a)
{
    const int order = a.is_exact() ? LaurentSeries::exact_order : a.max_degree_ - 1;
    LaurentSeries out(a.min_degree_ - 1, order);
    for (const auto &[d, c] : a.coefficients_) {
        if (d != 0 && d - 1 <= order) {
            out.accumulate(d - 1, c * make_rational(d));
        }
    }
    return out;
}

} // namespace eisentrig::symbolic
