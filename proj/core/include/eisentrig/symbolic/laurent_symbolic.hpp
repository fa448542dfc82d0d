#ifndef EISENTRIG_SYMBOLIC_LAURENT_SYMBOLIC_HPP
#define EISENTRIG_SYMBOLIC_LAURENT_SYMBOLIC_HPP

#include <vector>

#include "eisentrig/symbolic/fpolynomial.hpp"
#include "eisentrig/symbolic/laurent_series.hpp"
#include "eisentrig/symbolic/symbol_poly.hpp"

namespace eisentrig::symbolic
{

// A relation extracted from a pole-balanced combination: the coefficient
// polynomial that must vanish, and where it came from.
struct ImpliedIdentity {
    SymbolPoly relation;     // reduced by all earlier relations
    SymbolPoly raw;          // the coefficient as computed, before reduction
    int source_combination;  // 2 for f'' - 6f^2 + 12a0 f, 1 for (f')^2 - 4f^3 + 12a0 f^2
    int degree;              // power of z it multiplies
};

// z^-2 + sum_{d=0}^{order/2} a_d z^(2d), known to degree `order`. The a_d
// are formal symbols. Throws DomainError for odd or negative order.
[[nodiscard]] LaurentSeries series_f(int order);

// f'' - 6 f^2 + 12 a0 f from series_f(order). Requires even order >= 4.
[[nodiscard]] LaurentSeries combination_second_order(int order);

// (f')^2 - 4 f^3 + 12 a0 f^2 from series_f(order). Requires even order >= 6.
[[nodiscard]] LaurentSeries combination_first_order(int order);

// Every nonzero known coefficient of the two combinations, as polynomial
// relations among the a_d. Candidates are visited by weight (coefficient of
// z^j in the second-order combination has weight j + 4, in the first-order
// one j + 6), second-order first on ties; each is reduced modulo the
// relations already kept and kept only if the remainder is nonzero.
// Requires even order >= 6.
[[nodiscard]] std::vector<ImpliedIdentity> implied_identity_records(int order);
[[nodiscard]] std::vector<SymbolPoly> implied_identities(int order);

// p(w) = 2w^3 - 6 a0 w^2, so that f'' = p'(f) and (f')^2 = 2p(f).
[[nodiscard]] FPolynomial phi_polynomial();

// q_1 = p' and q_{k+1} = 2 q_k'' p + q_k' p', for k = 1..k_max; q_k(f)
// equals the 2k-th derivative of f. Throws DomainError for k_max < 1.
[[nodiscard]] std::vector<FPolynomial> derivative_polynomials(int k_max);

} // namespace eisentrig::symbolic

#endif
