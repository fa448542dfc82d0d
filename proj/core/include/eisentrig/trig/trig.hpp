#ifndef EISENTRIG_TRIG_TRIG_HPP
#define EISENTRIG_TRIG_TRIG_HPP

#include <optional>
#include <string_view>

#include "eisentrig/bounded_value.hpp"
#include "eisentrig/complex.hpp"
#include "eisentrig/precision.hpp"

// pi, g = 1/f, cosine and sine built from the lattice sums alone. Nothing
// in this module calls a platform trigonometric, exponential or pi routine.
//
//   pi   = sqrt(6 zeta(2))
//   g(z) = 1 / f(z), with g(n) = 0 at the integers
//   c(z) = 1 - 2 pi^2 g(z / 2pi)
//   s(z) = -c'(z) = pi g'(z / 2pi) = -pi f'(w) / f(w)^2,  w = z / 2pi
namespace eisentrig::trig
{

struct PiValue {
    BoundedValue value;
    static constexpr std::string_view provenance = "sqrt(6·ζ(2))";
};

[[nodiscard]] PiValue compute_pi(const PrecisionContext &ctx);

// Holds pi and a0 for one context. Immutable; safe to share across threads.
//
// Every public evaluation returns radius <= ctx.tolerance() or throws
// ToleranceUnreachableError; the finite-difference residuals instead carry
// their discretization estimate in the radius. That estimate comes from the
// fourth difference of the sampled values and is not a rigorous bound; the
// rounding part of the radius is.
class TrigEvaluator
{
public:
    explicit TrigEvaluator(const PrecisionContext &ctx);

    [[nodiscard]] const PrecisionContext &context() const noexcept
    {
        return ctx_;
    }
    [[nodiscard]] const PiValue &pi() const noexcept
    {
        return pi_;
    }
    [[nodiscard]] const BoundedValue &a0() const noexcept
    {
        return a0_;
    }

    // Exactly 0 at integers. InconclusiveNonvanishingError when f(z) cannot
    // be separated from 0 at this tolerance.
    [[nodiscard]] BoundedValue g(const Complex &z) const;
    [[nodiscard]] BoundedValue cosine(const Complex &z) const;
    [[nodiscard]] BoundedValue sine(const Complex &z) const;
    // Partial sums of sum (-1)^n z^2n / (2n)!; DomainError for |z| > 4.
    [[nodiscard]] BoundedValue taylor_cosine(const Complex &z) const;

    // g'' + 12 a0 g - 2 with g'' by a central difference of step h
    // (default: tolerance^(1/4) clamped to [1e-6, 1e-3]). The radius adds
    // h^2/12 * 2 M4 to the propagated bounds, with M4 from the fourth
    // difference. DomainError at integers.
    [[nodiscard]] BoundedValue residual_theorem5(const Complex &z, std::optional<double> h = std::nullopt) const;
    // c'' + c by the same scheme.
    [[nodiscard]] BoundedValue ivp_residual(const Complex &z, std::optional<double> h = std::nullopt) const;
    // c(0), exactly 1.
    [[nodiscard]] BoundedValue ivp_initial_value() const;
    // (c(h) - c(-h)) / 2h with radius h^2/6 * 2 M3 plus the propagated bounds.
    [[nodiscard]] BoundedValue ivp_initial_slope(std::optional<double> h = std::nullopt) const;

    // f(z) s(pi z)^2 - pi^2. DomainError at integers.
    [[nodiscard]] BoundedValue cosec_identity_check(const Complex &z) const;

    // Step used when none is given.
    [[nodiscard]] double default_step() const;

private:
    PrecisionContext ctx_;
    PiValue pi_;
    BoundedValue a0_;
    // pi and a0 cached at this tighter tolerance for composite evaluations.
    PrecisionContext cache_ctx_;
    BoundedValue pi_cache_;

    [[nodiscard]] BoundedValue pi_at(const PrecisionContext &inner) const;
    [[nodiscard]] BoundedValue g_ball(const BoundedValue &w, const PrecisionContext &inner) const;
    [[nodiscard]] BoundedValue g_prime_ball(const BoundedValue &w, const PrecisionContext &inner) const;
    [[nodiscard]] BoundedValue cosine_ball(const BoundedValue &z, const PrecisionContext &inner) const;
    [[nodiscard]] BoundedValue sine_ball(const BoundedValue &z, const PrecisionContext &inner) const;
    [[nodiscard]] PrecisionContext difference_context(double h) const;
};

// One-shot forms of the evaluator members.
[[nodiscard]] BoundedValue g_eval(const Complex &z, const PrecisionContext &ctx);
[[nodiscard]] BoundedValue cosine(const Complex &z, const PrecisionContext &ctx);
[[nodiscard]] BoundedValue sine(const Complex &z, const PrecisionContext &ctx);
[[nodiscard]] BoundedValue taylor_cosine(const Complex &z, const PrecisionContext &ctx);
[[nodiscard]] BoundedValue residual_theorem5(const Complex &z, const PrecisionContext &ctx,
                                             std::optional<double> h = std::nullopt);
[[nodiscard]] BoundedValue ivp_residual(const Complex &z, const PrecisionContext &ctx,
                                        std::optional<double> h = std::nullopt);
[[nodiscard]] BoundedValue cosec_identity_check(const Complex &z, const PrecisionContext &ctx);

} // namespace eisentrig::trig

#endif
