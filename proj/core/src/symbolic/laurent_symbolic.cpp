#include "eisentrig/symbolic/laurent_symbolic.hpp"

#include <algorithm>
#include <string>

#include "eisentrig/errors.hpp"

namespace eisentrig::symbolic
{

namespace
{

void require_even(int order, int minimum, const char *what)
{
    if (order < minimum || order % 2 != 0) {
        throw DomainError(std::string(what) + " needs an even order >= " + std::to_string(minimum) + ", got "
                          + std::to_string(order));
    }
}

SymbolPoly a(std::size_t d)
{
    return SymbolPoly::symbol(d);
}

} // namespace

LaurentSeries series_f(int order)
{
    require_even(order, 0, "series_f");
    LaurentSeries f = LaurentSeries::monomial(SymbolPoly(1), -2, order);
    for (int d = 0; 2 * d <= order; ++d) {
        f = add(f, LaurentSeries::monomial(a(static_cast<std::size_t>(d)), 2 * d, order));
    }
    return f;
}

LaurentSeries combination_second_order(int order)
{
    require_even(order, 4, "combination_second_order");
    const LaurentSeries f = series_f(order);
    const LaurentSeries f2 = differentiate(differentiate(f));
    const LaurentSeries sq = mul(f, f);
    LaurentSeries out = add(f2, scale(sq, SymbolPoly(-6)));
    return add(out, scale(f, a(0) * make_rational(12)));
}

LaurentSeries combination_first_order(int order)
{
    require_even(order, 6, "combination_first_order");
    const LaurentSeries f = series_f(order);
    const LaurentSeries f1 = differentiate(f);
    const LaurentSeries sq = mul(f, f);
    const LaurentSeries cube = mul(sq, f);
    LaurentSeries out = add(mul(f1, f1), scale(cube, SymbolPoly(-4)));
    return add(out, scale(sq, a(0) * make_rational(12)));
}

std::vector<ImpliedIdentity> implied_identity_records(int order)
{
    require_even(order, 6, "implied_identities");
    const LaurentSeries second = combination_second_order(order);
    const LaurentSeries first = combination_first_order(order);

    struct Source {
        const LaurentSeries *series;
        int id;
        int weight_offset;
    };
    const Source sources[] = {{&second, 2, 4}, {&first, 1, 6}};

    int min_weight = INT_MAX;
    int max_weight = INT_MIN;
    for (const Source &s : sources) {
        min_weight = std::min(min_weight, s.series->min_degree() + s.weight_offset);
        max_weight = std::max(max_weight, s.series->max_degree() + s.weight_offset);
    }

    std::vector<ImpliedIdentity> found;
    std::vector<SymbolPoly> generators;
    for (int w = min_weight; w <= max_weight; ++w) {
        for (const Source &s : sources) {
            const int degree = w - s.weight_offset;
            if (degree < s.series->min_degree() || degree > s.series->max_degree()) {
                continue;
            }
            SymbolPoly raw = s.series->coefficient(degree);
            if (raw.is_zero()) {
                continue;
            }
            SymbolPoly reduced = reduce(raw, generators);
            if (reduced.is_zero()) {
                continue;
            }
            generators.push_back(reduced);
            found.push_back({std::move(reduced), std::move(raw), s.id, degree});
        }
    }
    return found;
}

std::vector<SymbolPoly> implied_identities(int order)
{
    std::vector<SymbolPoly> out;
    for (auto &rec : implied_identity_records(order)) {
        out.push_back(std::move(rec.relation));
    }
    return out;
}

FPolynomial phi_polynomial()
{
    // 2p(w) = 4w^3 - 12 a0 w^2
    return FPolynomial({SymbolPoly(), SymbolPoly(), a(0) * make_rational(-6), SymbolPoly(2)});
}

std::vector<FPolynomial> derivative_polynomials(int k_max)
{
    if (k_max < 1) {
        throw DomainError("derivative_polynomials needs k_max >= 1, got " + std::to_string(k_max));
    }
    const FPolynomial p = phi_polynomial();
    const FPolynomial dp = p.derivative();
    std::vector<FPolynomial> out;
    out.reserve(static_cast<std::size_t>(k_max));
    out.push_back(dp);
    for (int k = 1; k < k_max; ++k) {
        const FPolynomial &q = out.back();
        const FPolynomial dq = q.derivative();
        out.push_back(dq.derivative() * p * make_rational(2) + dq * dp);
    }
    return out;
}

} // namespace eisentrig::symbolic
