#include "eisentrig/numeric/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eisentrig/errors.hpp"
#include "eisentrig/numeric/parallel.hpp"
#include "eisentrig/numeric/refine.hpp"
#include "eisentrig/numeric/summation.hpp"

namespace eisentrig::numeric
{

namespace
{

constexpr mpfr_prec_t bound_bits = 64;
constexpr mpfr_prec_t max_strip_bits = 4096;

Real half_tolerance(const PrecisionContext &ctx)
{
    return ldexp(ctx.tolerance(), -1);
}

unsigned auto_telescoping_rounds(const Real &target)
{
    // about one round per decimal digit requested
    const double digits = -static_cast<double>(target.exponent()) * 0.30103;
    return static_cast<unsigned>(std::clamp(std::ceil(digits) + 2.0, 4.0, 60.0));
}

void require_finite(const Complex &z, const char *what)
{
    if (!z.is_finite()) {
        throw DomainError(std::string(what) + ": evaluation point must be finite");
    }
}

void require_order(unsigned k)
{
    if (k < 2) {
        throw DomainError("eisenstein_k needs k >= 2, got " + std::to_string(k));
    }
}

// Reduced point at the working precision, after the pole-guard check.
Complex guarded_reduction(const Complex &z, mpfr_prec_t bits)
{
    ReducedPoint r = reduce_argument(z);
    if (abs_down(r.point) <= pole_guard(r.shift, bits)) {
        throw PoleProximityError("pole proximity: z = " + z.to_string(20) + " is within "
                                 + pole_guard(r.shift, bits).to_sci(3) + " of the integer "
                                 + std::to_string(r.shift));
    }
    return r.point.rounded(bits);
}

BoundedValue rational_ball(const symbolic::Rational &q, mpfr_prec_t bits)
{
    Real v(q, bits);
    Real r = (q.get_den() == 1 && mpz_sizeinbase(q.get_num_mpz_t(), 2) <= static_cast<std::size_t>(bits))
                 ? Real(bits)
                 : rounding_allowance(abs(v), 1, bits);
    return {Complex(std::move(v)), std::move(r)};
}

BoundedValue zeta_direct(unsigned s, const PrecisionContext &ctx)
{
    const Real target = half_tolerance(ctx);
    const std::uint64_t n = zeta_direct_terms(s, target, ctx.max_terms());
    if (n == 0) {
        throw ToleranceUnreachableError("zeta(" + std::to_string(s) + ") by direct summation needs more than "
                                        + std::to_string(ctx.max_terms()) + " terms for " + target.to_sci(3));
    }
    const mpfr_prec_t bits = ctx.bits();
    Real total(bits);
    // smallest terms first
    for (std::uint64_t i = n; i >= 1; --i) {
        total += pow(Real(static_cast<long>(i), bits), -static_cast<long>(s));
    }
    Real radius = add_up(zeta_tail_bound(s, n), rounding_allowance(total, n + 4, bits));
    return {Complex(std::move(total)), std::move(radius), n};
}

BoundedValue zeta_telescoping(const PrecisionContext &ctx)
{
    const Real target = half_tolerance(ctx);
    const unsigned rounds = ctx.telescoping_rounds() != 0 ? ctx.telescoping_rounds() : auto_telescoping_rounds(target);
    const std::uint64_t n = telescoping_terms(rounds, target, ctx.max_terms());
    if (n == 0) {
        throw ToleranceUnreachableError("telescoped zeta(2) needs more than " + std::to_string(ctx.max_terms())
                                        + " terms for " + target.to_sci(3));
    }
    const mpfr_prec_t bits = ctx.bits();
    mpz_class fact = 1;
    for (unsigned i = 2; i <= rounds; ++i) {
        fact *= i;
    }
    const Real fact_r(fact, bits);
    Real total(bits);
    for (std::uint64_t i = n; i >= 1; --i) {
        mpz_class denom = mpz_class(static_cast<unsigned long>(i)) * static_cast<unsigned long>(i);
        for (unsigned j = 1; j <= rounds; ++j) {
            denom *= static_cast<unsigned long>(i + j);
        }
        total += fact_r / Real(denom, bits);
    }
    for (unsigned i = rounds; i >= 1; --i) {
        total += Real(1L, bits) / Real(static_cast<long>(i) * static_cast<long>(i), bits);
    }
    Real radius = add_up(telescoping_tail_bound(rounds, n), rounding_allowance(total, 3 * (n + rounds) + 4, bits));
    return {Complex(std::move(total)), std::move(radius), n + rounds};
}

BoundedValue zeta_euler_maclaurin(unsigned s, const PrecisionContext &ctx)
{
    const mpfr_prec_t bits = ctx.bits();
    const TailPlan plan = plan_em_tail(s, Real(bound_bits), 4, half_tolerance(ctx), ctx);
    Real head(bits);
    for (std::uint64_t i = plan.head; i >= 1; --i) {
        head += pow(Real(static_cast<long>(i), bits), -static_cast<long>(s));
    }
    BoundedValue tail = em_tail(s, Complex(Real(bits)), plan, bits);
    Real total = head + tail.value.re;
    Real radius = add_up(tail.radius, rounding_allowance(total, plan.head + 4, bits));
    return {Complex(std::move(total)), std::move(radius), plan.head + plan.corrections};
}

BoundedValue lattice_head(unsigned k, const Complex &zr, std::uint64_t n, mpfr_prec_t bits)
{
    Complex total = pow(reciprocal(zr), k);
    Real magnitude = abs_upper(total);
    for (std::uint64_t i = n; i >= 1; --i) {
        const Real shift(static_cast<long>(i), bits);
        Complex left = pow(reciprocal(zr - shift), k);
        Complex right = pow(reciprocal(zr + shift), k);
        magnitude = add_up(magnitude, add_up(abs_upper(left), abs_upper(right)));
        total += left;
        total += right;
    }
    Real radius = rounding_allowance(magnitude, 2 * n + k + 8, bits);
    return {std::move(total), std::move(radius), 2 * n + 1};
}

// sup over |w - w~| <= r of |d/dw eps_k(w)|, for reduced w~ at distance
// delta from 0 and r < delta, r < 1/2:
//   k [ (delta - r)^-(k+1) + 2 (1/2 - r)^-(k+1) + 2 (1/2 - r)^-k / k ]
Real lipschitz_bound(unsigned k, const Complex &reduced, const Real &r)
{
    const Real gap = sub_down(abs_down(reduced), r);
    const Real side = sub_down(Real(0.5, bound_bits), r);
    if (!(gap > 0L) || !(side > 0L)) {
        throw PoleProximityError("argument disk of radius " + r.to_sci(3) + " around " + reduced.to_string(20)
                                 + " reaches an integer");
    }
    const long kp = static_cast<long>(k) + 1;
    Real total = pow_up(gap, -kp);
    total = add_up(total, ldexp(pow_up(side, -kp), 1));
    total = add_up(total, div_up(ldexp(pow_up(side, -static_cast<long>(k)), 1), Real(static_cast<long>(k), bound_bits)));
    return mul_up(total, Real(static_cast<long>(k), bound_bits));
}

BoundedValue a0_with_shift(const PrecisionContext &ctx, const std::optional<Real> &shift)
{
    BoundedValue a0 = detail::zeta_even(1, ctx) * 2;
    if (shift) {
        a0.value.re += *shift;
    }
    return a0;
}

} // namespace

namespace detail
{

BoundedValue zeta_even(unsigned m, const PrecisionContext &ctx)
{
    if (m == 0) {
        throw DomainError("zeta_even needs m >= 1");
    }
    const unsigned s = 2 * m;
    if (ctx.method() == SumMethod::direct) {
        return zeta_direct(s, ctx);
    }
    if (m == 1) {
        return zeta_telescoping(ctx);
    }
    return zeta_euler_maclaurin(s, ctx);
}

BoundedValue lattice_sum(unsigned k, const Complex &reduced, const PrecisionContext &ctx)
{
    const mpfr_prec_t bits = ctx.bits();
    const Complex zr = reduced.rounded(bits);
    const Real target = half_tolerance(ctx);
    if (ctx.method() == SumMethod::direct) {
        const std::uint64_t n = lattice_direct_terms(k, target, ctx.max_terms());
        if (n == 0) {
            throw ToleranceUnreachableError("direct lattice sum for k = " + std::to_string(k) + " needs more than "
                                            + std::to_string(ctx.max_terms()) + " terms for " + target.to_sci(3));
        }
        BoundedValue head = lattice_head(k, zr, n, bits);
        head.radius = add_up(head.radius, lattice_tail_bound(k, n));
        return head;
    }
    // Both one-sided tails sum (m + w)^-k over m > N with w = z or w = -z;
    // N + Re w >= N - |Re z|.
    const Real re_lower = -abs(zr.re).rounded(bound_bits);
    const TailPlan plan = plan_em_tail(k, re_lower, 8, ldexp(target, -1), ctx);
    BoundedValue head = lattice_head(k, zr, plan.head, bits);
    // sum_{n<-N} (z - n)^-k = sum_{m>N} (m + z)^-k
    BoundedValue left = em_tail(k, zr, plan, bits);
    // sum_{n>N} (z - n)^-k = (-1)^k sum_{m>N} (m - z)^-k
    BoundedValue right = em_tail(k, -zr, plan, bits);
    if (k % 2 == 1) {
        right = -right;
    }
    BoundedValue total = head + left + right;
    total.terms = head.terms + 2ULL * plan.corrections;
    return total;
}

BoundedValue eisenstein_k(unsigned k, const BoundedValue &z, const PrecisionContext &ctx)
{
    const Complex zr = guarded_reduction(z.value, ctx.bits());
    BoundedValue out = lattice_sum(k, zr, ctx);
    if (!z.radius.is_zero()) {
        out.radius = add_up(out.radius, mul_up(lipschitz_bound(k, zr, z.radius.rounded(bound_bits)), z.radius));
    }
    return out;
}

} // namespace detail

BoundedValue zeta_even(unsigned m, const PrecisionContext &ctx)
{
    if (m == 0) {
        throw DomainError("zeta_even needs m >= 1");
    }
    return refine_to_tolerance(ctx, [m](const PrecisionContext &c) { return detail::zeta_even(m, c); }, "zeta_even");
}

BoundedValue coeff_a(unsigned d, const PrecisionContext &ctx)
{
    const long scale = 2L * (2L * static_cast<long>(d) + 1L);
    return refine_to_tolerance(
        ctx, [d, scale](const PrecisionContext &c) { return detail::zeta_even(d + 1, c) * scale; }, "coeff_a");
}

ReducedPoint reduce_argument(const Complex &z)
{
    // Subtracting the nearest integer is exact: the result needs no more
    // significant bits than z had.
    const Real n = round(z.re);
    ReducedPoint out{Complex(z.re - n, z.im), n.to_long()};
    return out;
}

Real pole_guard(long nearest_integer, mpfr_prec_t bits)
{
    const long scale = std::max(1L, std::labs(nearest_integer));
    return mul_up(Real(10L, bound_bits), mul_up(Real::pow2(1 - static_cast<long>(bits), bound_bits),
                                                Real(scale, bound_bits)));
}

bool within_pole_guard(const Complex &z, mpfr_prec_t bits)
{
    const ReducedPoint r = reduce_argument(z);
    return abs_down(r.point) <= pole_guard(r.shift, bits);
}

BoundedValue eisenstein_k(unsigned k, const ComplexPoint &z, const PrecisionContext &ctx)
{
    require_order(k);
    require_finite(z, "eisenstein_k");
    const Complex zr = guarded_reduction(z, ctx.bits());
    return refine_to_tolerance(
        ctx, [k, &zr](const PrecisionContext &c) { return detail::lattice_sum(k, zr, c); }, "eisenstein_k");
}

BoundedValue eisenstein_k(unsigned k, const BoundedValue &z, const PrecisionContext &ctx)
{
    require_order(k);
    require_finite(z.value, "eisenstein_k");
    return refine_to_tolerance(
        ctx, [k, &z](const PrecisionContext &c) { return detail::eisenstein_k(k, z, c); }, "eisenstein_k");
}

BoundedValue lattice_partial_sum(unsigned k, const ComplexPoint &z, std::uint64_t n_terms, const PrecisionContext &ctx)
{
    require_order(k);
    require_finite(z, "lattice_partial_sum");
    if (n_terms == 0) {
        throw DomainError("lattice_partial_sum needs at least one term on each side");
    }
    const Complex zr = guarded_reduction(z, ctx.bits());
    BoundedValue head = lattice_head(k, zr, n_terms, ctx.bits());
    head.radius = add_up(head.radius, lattice_tail_bound(k, n_terms));
    return head;
}

BoundedValue f_deriv(unsigned order, const BoundedValue &z, const PrecisionContext &ctx)
{
    require_finite(z.value, "f_deriv");
    switch (order) {
    case 0:
        return eisenstein_k(2, z, ctx);
    case 1:
        return refine_to_tolerance(
            ctx, [&z](const PrecisionContext &c) { return detail::eisenstein_k(3, z, c) * -2; }, "f_deriv");
    case 2:
        return refine_to_tolerance(
            ctx, [&z](const PrecisionContext &c) { return detail::eisenstein_k(4, z, c) * 6; }, "f_deriv");
    default:
        throw DomainError("f_deriv supports orders 0, 1 and 2, got " + std::to_string(order));
    }
}

BoundedValue f_deriv(unsigned order, const ComplexPoint &z, const PrecisionContext &ctx)
{
    return f_deriv(order, BoundedValue::exact(z), ctx);
}

std::vector<StripBoundReport> strip_decay(std::span<const Real> y_values, const Real &x, const PrecisionContext &ctx)
{
    if (!(abs(x) <= 1L)) {
        throw DomainError("strip_decay needs |x| <= 1");
    }
    for (const Real &y : y_values) {
        if (!(abs(y) >= 1L)) {
            throw DomainError("strip_decay needs |y| >= 1, got " + y.to_sci(6));
        }
    }
    return parallel_map(y_values, [&x, &ctx](const Real &y) {
        StripBoundReport rep;
        rep.y = y;

        // |f(x + iy)|, raising precision until the radius falls below |f|/8.
        PrecisionContext local = ctx;
        bool tightened = false;
        for (;;) {
            const Complex z(x.rounded(local.bits()), y.rounded(local.bits()));
            rep.f_magnitude = magnitude(eisenstein_k(2, z, local));
            rep.precision_bits = local.bits();
            rep.resolved = ldexp(rep.f_magnitude.radius, 3) < rep.f_magnitude.re();
            if (rep.resolved) {
                break;
            }
            const Real tight = ldexp(local.tolerance_floor(), 8);
            if (!tightened && local.tolerance() > tight) {
                local = local.with_tolerance(tight);
                tightened = true;
            } else if (local.bits() < max_strip_bits) {
                const mpfr_prec_t next = std::min(local.bits() * 2, max_strip_bits);
                local = PrecisionContext(next, Real::pow2(-(next - static_cast<long>(ctx.guard_bits()) - 8), bound_bits),
                                         ctx.guard_bits())
                            .with_max_correction_terms(ctx.max_correction_terms());
                tightened = true;
            } else {
                break;
            }
        }

        // 3/y^2 + 2 S_N + 2 T, T = sum_{n>N} 1/(n^2+y^2) with
        // 1/(N+1) - y^2/(3(N+1)^3) <= T <= 1/N.
        const mpfr_prec_t bits = ctx.bits();
        const Real y2 = y.rounded(bits) * y.rounded(bits);
        const double ymag = std::abs(y.to_double());
        const auto n = static_cast<std::uint64_t>(100.0 * std::ceil(ymag) + 1000.0);
        Real partial(bits);
        for (std::uint64_t i = n; i >= 1; --i) {
            const Real ni(static_cast<long>(i), bits);
            partial += Real(1L, bits) / (ni * ni + y2);
        }
        const Real n1(static_cast<long>(n + 1), bits);
        const Real tail_lo = Real(1L, bits) / n1 - y2 / (n1 * n1 * n1 * 3L);
        const Real tail_hi = Real(1L, bits) / Real(static_cast<long>(n), bits);
        Real value = Real(3L, bits) / y2 + ldexp(partial, 1) + tail_lo + tail_hi;
        Real radius = add_up((tail_hi - tail_lo).rounded(bound_bits), rounding_allowance(value, 3 * n + 16, bits));
        rep.paper_bound = BoundedValue(Complex(std::move(value)), std::move(radius), n);

        const Real majorant_lower = sub_down(rep.paper_bound.re(), rep.paper_bound.radius);
        rep.dominated = rep.f_magnitude.magnitude_upper() <= majorant_lower;
        return rep;
    });
}

bool strictly_decreasing(std::span<const StripBoundReport> reports)
{
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (!(reports[i - 1].f_magnitude.magnitude_lower() > reports[i].f_magnitude.magnitude_upper())) {
            return false;
        }
    }
    return true;
}

BoundedValue residual_theorem2(const ComplexPoint &z, const PrecisionContext &ctx, const std::optional<Real> &a0_shift)
{
    require_finite(z, "residual_theorem2");
    const Complex zr = guarded_reduction(z, ctx.bits());
    return refine_to_tolerance(
        ctx,
        [&zr, &a0_shift](const PrecisionContext &c) {
            const BoundedValue f = detail::lattice_sum(2, zr, c);
            const BoundedValue f2 = detail::lattice_sum(4, zr, c) * 6;
            const BoundedValue a0 = a0_with_shift(c, a0_shift);
            return f2 - square(f) * 6 + a0 * f * 12;
        },
        "residual_theorem2");
}

BoundedValue residual_theorem3(const ComplexPoint &z, const PrecisionContext &ctx, const std::optional<Real> &a0_shift)
{
    require_finite(z, "residual_theorem3");
    const Complex zr = guarded_reduction(z, ctx.bits());
    return refine_to_tolerance(
        ctx,
        [&zr, &a0_shift](const PrecisionContext &c) {
            const BoundedValue f = detail::lattice_sum(2, zr, c);
            const BoundedValue f1 = detail::lattice_sum(3, zr, c) * -2;
            const BoundedValue a0 = a0_with_shift(c, a0_shift);
            const BoundedValue f_sq = square(f);
            return square(f1) - f_sq * f * 4 + a0 * f_sq * 12;
        },
        "residual_theorem3");
}

NonvanishingReport nonvanishing_scan(std::span<const ComplexPoint> grid, const PrecisionContext &ctx)
{
    NonvanishingReport report;
    report.points = parallel_map(grid, [&ctx](const Complex &z) {
        NonvanishingPoint pt{z, eisenstein_k(2, z, ctx), false};
        pt.nonzero = pt.f.excludes_zero();
        // Tighten until f separates from 0 or the precision floor is hit.
        PrecisionContext current = ctx;
        while (!pt.nonzero && current.tolerance() > current.tolerance_floor()) {
            Real tighter = ldexp(current.tolerance(), -4);
            if (!pt.f.value.is_zero()) {
                tighter = min(tighter, ldexp(abs(pt.f.value).rounded(bound_bits), -2));
            }
            current = current.with_tolerance(tighter);
            try {
                pt.f = eisenstein_k(2, z, current);
            } catch (const ToleranceUnreachableError &) {
                break;
            }
            pt.nonzero = pt.f.excludes_zero();
        }
        return pt;
    });
    report.all_nonzero = !report.points.empty();
    report.min_modulus = Real(ctx.bits());
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const Real m = abs(report.points[i].f.value);
        if (i == 0 || m < report.min_modulus) {
            report.min_modulus = m;
            report.argmin = i;
        }
        report.all_nonzero = report.all_nonzero && report.points[i].nonzero;
    }
    return report;
}

BoundedValue evaluate_relation(const symbolic::SymbolPoly &relation, const PrecisionContext &ctx)
{
    return refine_to_tolerance(
        ctx,
        [&relation](const PrecisionContext &c) {
            return relation.evaluate<BoundedValue>(
                [&c](std::size_t d) {
                    const long scale = 2L * (2L * static_cast<long>(d) + 1L);
                    return detail::zeta_even(static_cast<unsigned>(d) + 1, c) * scale;
                },
                [&c](const symbolic::Rational &q) { return rational_ball(q, c.bits()); });
        },
        "evaluate_relation");
}

} // namespace eisentrig::numeric
