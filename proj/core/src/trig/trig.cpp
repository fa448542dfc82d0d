#include "eisentrig/trig/trig.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "eisentrig/errors.hpp"
#include "eisentrig/numeric/eisenstein.hpp"
#include "eisentrig/numeric/refine.hpp"
#include "eisentrig/numeric/summation.hpp"

namespace eisentrig::trig
{

namespace
{

constexpr mpfr_prec_t bound_bits = 64;
// Combined tolerance shortfall allowed for cached pi in composite evaluations.
constexpr long cache_margin_bits = 40;
constexpr unsigned max_taylor_terms = 200;

BoundedValue six_zeta2_root(const PrecisionContext &inner)
{
    return sqrt_positive(numeric::detail::zeta_even(1, inner) * 6);
}

BoundedValue exact_zero(mpfr_prec_t bits)
{
    return BoundedValue(bits);
}

BoundedValue exact_one(mpfr_prec_t bits)
{
    return BoundedValue::exact(Real(1L, bits));
}

bool is_exact_zero(const BoundedValue &v)
{
    return v.value.is_zero() && v.radius.is_zero();
}

void require_finite(const Complex &z, const char *what)
{
    if (!z.is_finite()) {
        throw DomainError(std::string(what) + ": evaluation point must be finite");
    }
}

void require_off_integers(const Complex &z, mpfr_prec_t bits, const char *what)
{
    if (numeric::within_pole_guard(z, bits)) {
        throw DomainError(std::string(what) + ": z = " + z.to_string(20) + " is an integer (pole guard)");
    }
}

// w lies within `reach` of an integer n; g(w) = (w - n)^2 (1 + O((w - n)^2)).
// For reach <= 1/10 the lattice part of f stays below 4, so |f| >= 1/(2 reach^2).
constexpr double near_integer_g_reach = 0.1;
// g'(w) = 2 (w - n) (1 - 3 a0 (w - n)^2 + ...), below 2.02 |w - n| for reach <= 1/100.
constexpr double near_integer_gprime_reach = 0.01;

struct NearInteger {
    bool near = false;
    Real reach;
};

NearInteger classify(const BoundedValue &w, mpfr_prec_t bits)
{
    const numeric::ReducedPoint rp = numeric::reduce_argument(w.value);
    const Real dist = abs_down(rp.point);
    NearInteger out;
    out.reach = add_up(abs_up(rp.point).rounded(bound_bits), w.radius);
    out.near = dist <= numeric::pole_guard(rp.shift, bits) || dist <= ldexp(w.radius, 2);
    return out;
}

Real step_real(double h, mpfr_prec_t bits)
{
    return Real(h, bits);
}

// Values of `fn` at z + k h for k = -2..2.
template <class Fn>
std::array<BoundedValue, 5> stencil(const Complex &z, const Real &h, Fn &&fn)
{
    std::array<BoundedValue, 5> out;
    for (int k = -2; k <= 2; ++k) {
        // The evaluation point carries extra bits so the shift by k h is exact
        // before the reduction inside the lattice sum.
        const mpfr_prec_t wide = std::max(z.bits(), h.bits()) + 64;
        const Complex zk = z.rounded(wide) + h.rounded(wide) * static_cast<long>(k);
        out[static_cast<std::size_t>(k + 2)] = fn(zk);
    }
    return out;
}

struct SecondDifference {
    BoundedValue d2;
    Real discretization;
};

// (v1 - 2 v0 + v-1) / h^2 and h^2/12 * 2 |fourth difference|.
SecondDifference second_difference(const std::array<BoundedValue, 5> &v, const Real &h)
{
    const mpfr_prec_t bits = v[2].bits();
    const BoundedValue h2 = BoundedValue::exact((h * h).rounded(bits));
    const BoundedValue h4 = square(h2);
    SecondDifference out;
    out.d2 = (v[3] + v[1] - v[2] * 2) / h2;
    const BoundedValue d4 = (v[4] + v[0] - (v[3] + v[1]) * 4 + v[2] * 6) / h4;
    const Real m4 = d4.magnitude_upper().rounded(bound_bits);
    out.discretization = div_up(mul_up(mul_up(h, h).rounded(bound_bits), ldexp(m4, 1)), Real(12L, bound_bits));
    return out;
}

} // namespace

PiValue compute_pi(const PrecisionContext &ctx)
{
    return PiValue{numeric::refine_to_tolerance(ctx, six_zeta2_root, "compute_pi")};
}

TrigEvaluator::TrigEvaluator(const PrecisionContext &ctx)
    : ctx_(ctx), pi_(compute_pi(ctx)), a0_(numeric::coeff_a(0, ctx)),
      cache_ctx_(ctx.with_tolerance(ldexp(ctx.tolerance(), -cache_margin_bits))),
      pi_cache_(six_zeta2_root(cache_ctx_))
{
}

BoundedValue TrigEvaluator::pi_at(const PrecisionContext &inner) const
{
    if (inner.tolerance() >= cache_ctx_.tolerance() && inner.bits() <= cache_ctx_.bits()) {
        return pi_cache_;
    }
    return six_zeta2_root(inner);
}

BoundedValue TrigEvaluator::g_ball(const BoundedValue &w, const PrecisionContext &inner) const
{
    const numeric::ReducedPoint rp = numeric::reduce_argument(w.value);
    if (rp.point.is_zero() && w.radius.is_zero()) {
        return exact_zero(inner.bits());
    }
    const NearInteger ni = classify(w, inner.bits());
    if (ni.near) {
        if (!(ni.reach <= Real(near_integer_g_reach, bound_bits))) {
            throw PoleProximityError("g: argument disk around " + w.value.to_string(20) + " is too wide near an integer");
        }
        return {Complex(Real(inner.bits())), ldexp(mul_up(ni.reach, ni.reach), 1)};
    }
    return reciprocal(numeric::detail::eisenstein_k(2, w, inner));
}

BoundedValue TrigEvaluator::g_prime_ball(const BoundedValue &w, const PrecisionContext &inner) const
{
    const numeric::ReducedPoint rp = numeric::reduce_argument(w.value);
    if (rp.point.is_zero() && w.radius.is_zero()) {
        return exact_zero(inner.bits());
    }
    const NearInteger ni = classify(w, inner.bits());
    if (ni.near) {
        if (!(ni.reach <= Real(near_integer_gprime_reach, bound_bits))) {
            throw PoleProximityError("g': argument disk around " + w.value.to_string(20)
                                     + " is too wide near an integer");
        }
        return {Complex(Real(inner.bits())), mul_up(ni.reach, Real(2.02, bound_bits))};
    }
    const BoundedValue f = numeric::detail::eisenstein_k(2, w, inner);
    const BoundedValue f1 = numeric::detail::eisenstein_k(3, w, inner) * -2;
    return -(f1 * reciprocal(square(f)));
}

BoundedValue TrigEvaluator::cosine_ball(const BoundedValue &z, const PrecisionContext &inner) const
{
    const BoundedValue pi = pi_at(inner);
    const BoundedValue w = z / (pi * 2);
    const BoundedValue gv = g_ball(w, inner);
    if (is_exact_zero(gv)) {
        return exact_one(inner.bits());
    }
    return 1L - square(pi) * gv * 2;
}

BoundedValue TrigEvaluator::sine_ball(const BoundedValue &z, const PrecisionContext &inner) const
{
    const BoundedValue pi = pi_at(inner);
    const BoundedValue w = z / (pi * 2);
    const BoundedValue gp = g_prime_ball(w, inner);
    if (is_exact_zero(gp)) {
        return exact_zero(inner.bits());
    }
    return pi * gp;
}

BoundedValue TrigEvaluator::g(const Complex &z) const
{
    require_finite(z, "g");
    const BoundedValue zb = BoundedValue::exact(z);
    return numeric::refine_to_tolerance(
        ctx_, [this, &zb](const PrecisionContext &inner) { return g_ball(zb, inner); }, "g");
}

BoundedValue TrigEvaluator::cosine(const Complex &z) const
{
    require_finite(z, "cosine");
    const BoundedValue zb = BoundedValue::exact(z);
    return numeric::refine_to_tolerance(
        ctx_, [this, &zb](const PrecisionContext &inner) { return cosine_ball(zb, inner); }, "cosine");
}

BoundedValue TrigEvaluator::sine(const Complex &z) const
{
    require_finite(z, "sine");
    const BoundedValue zb = BoundedValue::exact(z);
    return numeric::refine_to_tolerance(
        ctx_, [this, &zb](const PrecisionContext &inner) { return sine_ball(zb, inner); }, "sine");
}

BoundedValue TrigEvaluator::taylor_cosine(const Complex &z) const
{
    require_finite(z, "taylor_cosine");
    if (abs_down(z) > 4L) {
        throw DomainError("taylor_cosine needs |z| <= 4, got |z| = " + abs(z).to_sci(6));
    }
    const mpfr_prec_t bits = std::max(ctx_.bits(), z.bits());
    if (z.is_zero()) {
        return exact_one(bits);
    }
    const Complex zz = z.rounded(bits);
    const Complex minus_z2 = -(zz * zz);
    const Real z2_upper = abs_upper(minus_z2).rounded(bound_bits);
    const Real target = ldexp(ctx_.tolerance(), -1);
    const bool real_axis = z.is_real();

    Complex term(Real(1L, bits));
    Complex total = term;
    Real magnitude_sum(1L, bound_bits);
    Real tail(bound_bits);
    unsigned n = 0;
    bool converged = false;
    while (n < max_taylor_terms) {
        ++n;
        term *= minus_z2;
        term = term / Real(static_cast<long>((2 * n - 1) * (2 * n)), bits);
        total += term;
        const Real mag = abs_upper(term).rounded(bound_bits);
        magnitude_sum = add_up(magnitude_sum, mag);
        // |t_{n+1}| <= |t_n| rho, and every later ratio is smaller still.
        const Real rho = div_up(z2_upper, Real(static_cast<long>((2 * n + 1) * (2 * n + 2)), bound_bits));
        if (!(rho < 1L)) {
            continue;
        }
        if (real_axis) {
            // Alternating with decreasing magnitudes: the first omitted term bounds the tail.
            tail = mul_up(mag, rho);
        } else {
            tail = div_up(mul_up(mag, rho), sub_down(Real(1L, bound_bits), rho));
        }
        if (tail <= target) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw ToleranceUnreachableError("taylor_cosine: tail bound still above " + target.to_sci(3) + " after "
                                        + std::to_string(max_taylor_terms) + " terms");
    }
    Real radius = add_up(tail, numeric::rounding_allowance(magnitude_sum, 3 * n + 8, bits));
    if (radius > ctx_.tolerance()) {
        throw ToleranceUnreachableError("taylor_cosine: cancellation leaves radius " + radius.to_sci(3) + " above "
                                        + ctx_.tolerance().to_sci(3) + " at " + std::to_string(bits) + " bits");
    }
    return {std::move(total), std::move(radius), n + 1};
}

double TrigEvaluator::default_step() const
{
    const double tol = ctx_.tolerance().to_double();
    const double h = tol > 0.0 ? std::pow(tol, 0.25) : 0.0;
    return std::clamp(h, 1e-6, 1e-3);
}

PrecisionContext TrigEvaluator::difference_context(double h) const
{
    // Point values are divided by h^2 (h^4 for the fourth difference).
    return ctx_.with_tolerance(ctx_.tolerance() * Real(h * h / 16.0, bound_bits));
}

BoundedValue TrigEvaluator::residual_theorem5(const Complex &z, std::optional<double> h) const
{
    require_finite(z, "residual_theorem5");
    require_off_integers(z, ctx_.bits(), "residual_theorem5");
    const double step = h.value_or(default_step());
    if (!(step > 0.0)) {
        throw DomainError("residual_theorem5: step must be positive");
    }
    const PrecisionContext inner = difference_context(step);
    const Real hr = step_real(step, inner.bits());
    const auto values = stencil(z, hr, [this, &inner](const Complex &p) {
        const BoundedValue pb = BoundedValue::exact(p);
        return numeric::refine_to_tolerance(
            inner, [this, &pb](const PrecisionContext &c) { return g_ball(pb, c); }, "residual_theorem5");
    });
    const SecondDifference sd = second_difference(values, hr);
    const BoundedValue a0 = numeric::detail::zeta_even(1, inner) * 2;
    BoundedValue res = sd.d2 + a0 * values[2] * 12 + (-2L);
    return inflate(std::move(res), sd.discretization);
}

BoundedValue TrigEvaluator::ivp_residual(const Complex &z, std::optional<double> h) const
{
    require_finite(z, "ivp_residual");
    const double step = h.value_or(default_step());
    if (!(step > 0.0)) {
        throw DomainError("ivp_residual: step must be positive");
    }
    const PrecisionContext inner = difference_context(step);
    const Real hr = step_real(step, inner.bits());
    const auto values = stencil(z, hr, [this, &inner](const Complex &p) {
        const BoundedValue pb = BoundedValue::exact(p);
        return numeric::refine_to_tolerance(
            inner, [this, &pb](const PrecisionContext &c) { return cosine_ball(pb, c); }, "ivp_residual");
    });
    const SecondDifference sd = second_difference(values, hr);
    return inflate(sd.d2 + values[2], sd.discretization);
}

BoundedValue TrigEvaluator::ivp_initial_value() const
{
    return cosine(Complex(Real(ctx_.bits())));
}

BoundedValue TrigEvaluator::ivp_initial_slope(std::optional<double> h) const
{
    const double step = h.value_or(default_step());
    if (!(step > 0.0)) {
        throw DomainError("ivp_initial_slope: step must be positive");
    }
    const PrecisionContext inner = difference_context(step);
    const Real hr = step_real(step, inner.bits());
    const auto v = stencil(Complex(Real(inner.bits())), hr, [this, &inner](const Complex &p) {
        const BoundedValue pb = BoundedValue::exact(p);
        return numeric::refine_to_tolerance(
            inner, [this, &pb](const PrecisionContext &c) { return cosine_ball(pb, c); }, "ivp_initial_slope");
    });
    const mpfr_prec_t bits = v[2].bits();
    const BoundedValue two_h = BoundedValue::exact(ldexp(hr, 1).rounded(bits));
    const BoundedValue h3 = BoundedValue::exact((hr * hr * hr * 2L).rounded(bits));
    BoundedValue slope = (v[3] - v[1]) / two_h;
    // Third difference (v2 - 2 v1 + 2 v-1 - v-2) / 2h^3 estimates c'''.
    const BoundedValue d3 = (v[4] - v[0] - (v[3] - v[1]) * 2) / h3;
    const Real m3 = d3.magnitude_upper().rounded(bound_bits);
    const Real disc = div_up(mul_up(mul_up(hr, hr).rounded(bound_bits), ldexp(m3, 1)), Real(6L, bound_bits));
    return inflate(std::move(slope), disc);
}

BoundedValue TrigEvaluator::cosec_identity_check(const Complex &z) const
{
    require_finite(z, "cosec_identity_check");
    require_off_integers(z, ctx_.bits(), "cosec_identity_check");
    const BoundedValue zb = BoundedValue::exact(z);
    return numeric::refine_to_tolerance(
        ctx_,
        [this, &zb](const PrecisionContext &inner) {
            const BoundedValue f = numeric::detail::eisenstein_k(2, zb, inner);
            const BoundedValue pi = pi_at(inner);
            const BoundedValue s = sine_ball(pi * zb, inner);
            return f * square(s) - square(pi);
        },
        "cosec_identity_check");
}

BoundedValue g_eval(const Complex &z, const PrecisionContext &ctx)
{
    return TrigEvaluator(ctx).g(z);
}

BoundedValue cosine(const Complex &z, const PrecisionContext &ctx)
{
    return TrigEvaluator(ctx).cosine(z);
}

BoundedValue sine(const Complex &z, const PrecisionContext &ctx)
{
    return TrigEvaluator(ctx).sine(z);
}

BoundedValue taylor_cosine(const Complex &z, const PrecisionContext &ctx)
{
    return TrigEvaluator(ctx).taylor_cosine(z);
}

BoundedValue residual_theorem5(const Complex &z, const PrecisionContext &ctx, std::optional<double> h)
{
    return TrigEvaluator(ctx).residual_theorem5(z, h);
}

BoundedValue ivp_residual(const Complex &z, const PrecisionContext &ctx, std::optional<double> h)
{
    return TrigEvaluator(ctx).ivp_residual(z, h);
}

BoundedValue cosec_identity_check(const Complex &z, const PrecisionContext &ctx)
{
    return TrigEvaluator(ctx).cosec_identity_check(z);
}

} // namespace eisentrig::trig
