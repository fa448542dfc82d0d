#ifndef EISENTRIG_NUMERIC_EISENSTEIN_HPP
#define EISENTRIG_NUMERIC_EISENSTEIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eisentrig/bounded_value.hpp"
#include "eisentrig/complex.hpp"
#include "eisentrig/precision.hpp"
#include "eisentrig/symbolic/symbol_poly.hpp"

// Bounded evaluation of the lattice sums eps_k(z) = sum_{n in Z} (z - n)^-k,
// the even zeta values, the Laurent coefficients a_d of f = eps_2, and the
// residuals of the differential equations f satisfies.
//
// Every function returning a BoundedValue guarantees radius <=
// ctx.tolerance() or throws. Points are reduced to |Re z| <= 1/2 by an exact
// integer shift before summation, so f(z) and f(z + m) agree bit for bit
// whenever z + m is representable.
namespace eisentrig::numeric
{

using ComplexPoint = Complex;

// sum_{n>=1} n^-2m. Throws DomainError for m == 0.
[[nodiscard]] BoundedValue zeta_even(unsigned m, const PrecisionContext &ctx);

// a_d = 2 (2d + 1) zeta(2d + 2).
[[nodiscard]] BoundedValue coeff_a(unsigned d, const PrecisionContext &ctx);

// The nearest integer to Re z and z minus it (exact). The reduced point has
// |Re| <= 1/2 and the precision of the input.
struct ReducedPoint {
    Complex point;
    long shift = 0;
};
[[nodiscard]] ReducedPoint reduce_argument(const Complex &z);

// 10 ulp at the working precision, scaled by max(1, |n|).
[[nodiscard]] Real pole_guard(long nearest_integer, mpfr_prec_t bits);
// True when z lies within pole_guard of the nearest integer.
[[nodiscard]] bool within_pole_guard(const Complex &z, mpfr_prec_t bits);

// eps_k(z) for k >= 2. Throws PoleProximityError inside the pole guard, and
// ToleranceUnreachableError when the configured term cap is exceeded.
[[nodiscard]] BoundedValue eisenstein_k(unsigned k, const ComplexPoint &z, const PrecisionContext &ctx);
// eps_k over a disk of arguments: the midpoint value plus a Lipschitz bound
// on the disk. The disk must keep clear of the integers.
[[nodiscard]] BoundedValue eisenstein_k(unsigned k, const BoundedValue &z, const PrecisionContext &ctx);

// The symmetric partial sum over |n| <= n_terms, with the integral-test
// tail bound and rounding allowance in the radius (no tolerance check).
[[nodiscard]] BoundedValue lattice_partial_sum(unsigned k, const ComplexPoint &z, std::uint64_t n_terms,
                                               const PrecisionContext &ctx);

// f (order 0), f' = -2 eps_3 (order 1) or f'' = 6 eps_4 (order 2).
[[nodiscard]] BoundedValue f_deriv(unsigned order, const ComplexPoint &z, const PrecisionContext &ctx);
[[nodiscard]] BoundedValue f_deriv(unsigned order, const BoundedValue &z, const PrecisionContext &ctx);

// One row of the strip-decay check at z = x + iy.
struct StripBoundReport {
    Real y;
    BoundedValue f_magnitude;
    // 3/y^2 + 2 sum_{n>=1} 1/(n^2 + y^2), with the truncated tail of the
    // sum enclosed in the radius.
    BoundedValue paper_bound;
    // Working precision finally used: tiny |f| far up the strip needs more
    // bits than ctx provides before its radius drops below its value.
    mpfr_prec_t precision_bits = 0;
    // |f| resolved: radius below |f| / 8.
    bool resolved = false;
    // Upper end of |f| <= lower end of the majorant.
    bool dominated = false;
};

// Requires |x| <= 1 and |y| >= 1 for every y (DomainError otherwise).
[[nodiscard]] std::vector<StripBoundReport> strip_decay(std::span<const Real> y_values, const Real &x,
                                                        const PrecisionContext &ctx);
// Each |f| is demonstrably below the previous one (disjoint balls).
[[nodiscard]] bool strictly_decreasing(std::span<const StripBoundReport> reports);

// f'' - 6 f^2 + 12 a0 f at z. `a0_shift` perturbs a0 (self-test hook).
[[nodiscard]] BoundedValue residual_theorem2(const ComplexPoint &z, const PrecisionContext &ctx,
                                             const std::optional<Real> &a0_shift = std::nullopt);
// (f')^2 - 4 f^3 + 12 a0 f^2 at z.
[[nodiscard]] BoundedValue residual_theorem3(const ComplexPoint &z, const PrecisionContext &ctx,
                                             const std::optional<Real> &a0_shift = std::nullopt);

struct NonvanishingPoint {
    Complex z;
    BoundedValue f;
    bool nonzero = false;
};

struct NonvanishingReport {
    std::vector<NonvanishingPoint> points;
    Real min_modulus;
    std::size_t argmin = 0;
    bool all_nonzero = false;
};

// Evaluates f on the grid and checks |f| > radius at each point. Where the
// requested tolerance is too loose to separate f from 0, the point is
// re-evaluated at tighter tolerances, down to the precision floor.
// Report order follows the grid.
[[nodiscard]] NonvanishingReport nonvanishing_scan(std::span<const ComplexPoint> grid, const PrecisionContext &ctx);

// Substitutes the bounded numeric a_d into a relation among the symbols.
[[nodiscard]] BoundedValue evaluate_relation(const symbolic::SymbolPoly &relation, const PrecisionContext &ctx);

namespace detail
{

// Unchecked building blocks: truncation error <= target / 2, radius not
// compared with any tolerance. Used by composite evaluations that refine
// their own inputs.
[[nodiscard]] BoundedValue zeta_even(unsigned m, const PrecisionContext &ctx);
[[nodiscard]] BoundedValue lattice_sum(unsigned k, const Complex &reduced, const PrecisionContext &ctx);
[[nodiscard]] BoundedValue eisenstein_k(unsigned k, const BoundedValue &z, const PrecisionContext &ctx);

} // namespace detail

} // namespace eisentrig::numeric

#endif
