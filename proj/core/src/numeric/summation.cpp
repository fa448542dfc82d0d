#include "eisentrig/numeric/summation.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "eisentrig/errors.hpp"

namespace eisentrig::numeric
{

namespace
{

// Bounds are computed with directed rounding at this precision; they only
// need to be valid upper bounds, not accurate.
constexpr mpfr_prec_t bound_bits = 64;

Real up(const symbolic::Rational &q)
{
    Real out(bound_bits);
    mpfr_set_q(out.get(), q.get_mpq_t(), MPFR_RNDU);
    return out;
}

Real up(std::uint64_t n)
{
    Real out(bound_bits);
    mpfr_set_uj(out.get(), n, MPFR_RNDU);
    return out;
}

Real down(std::uint64_t n)
{
    Real out(bound_bits);
    mpfr_set_uj(out.get(), n, MPFR_RNDD);
    return out;
}

std::vector<symbolic::Rational> compute_bernoulli_even()
{
    // sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_1 = -1/2 and B_odd = 0 beyond.
    const unsigned n_max = 2 * max_bernoulli_index;
    std::vector<symbolic::Rational> b(n_max + 1);
    b[0] = 1;
    b[1] = symbolic::make_rational(-1, 2);
    std::vector<mpz_class> binom(n_max + 2);
    for (unsigned n = 2; n <= n_max; n += 2) {
        // binom[k] = C(n+1, k)
        binom[0] = 1;
        for (unsigned k = 1; k <= n + 1; ++k) {
            binom[k] = binom[k - 1] * (n + 2 - k) / k;
        }
        symbolic::Rational acc = binom[1] * b[1];
        for (unsigned k = 0; k < n; k += 2) {
            acc += binom[k] * b[k];
        }
        b[n] = -acc / mpz_class(n + 1);
        b[n].canonicalize();
    }
    std::vector<symbolic::Rational> even(max_bernoulli_index + 1);
    for (unsigned j = 0; j <= max_bernoulli_index; ++j) {
        even[j] = b[2 * j];
    }
    return even;
}

// |B_2M| / (2M)! * (s)_2M / (s + 2M - 1), exactly.
symbolic::Rational remainder_constant(unsigned s, unsigned m)
{
    mpz_class fact = 1;
    mpz_class rising = 1;
    for (unsigned i = 1; i <= 2 * m; ++i) {
        fact *= i;
        rising *= s + i - 1;
    }
    symbolic::Rational c = abs(bernoulli_even(m)) * symbolic::Rational(rising, fact * (s + 2 * m - 1));
    c.canonicalize();
    return c;
}

} // namespace

const symbolic::Rational &bernoulli_even(unsigned j)
{
    static const std::vector<symbolic::Rational> table = compute_bernoulli_even();
    if (j > max_bernoulli_index) {
        throw DomainError("Bernoulli index " + std::to_string(2 * j) + " beyond the precomputed table");
    }
    return table[j];
}

Real em_remainder_bound(unsigned s, std::uint64_t head, const Real &re_w, unsigned corrections)
{
    if (corrections == 0 || corrections > max_bernoulli_index) {
        throw DomainError("Euler-Maclaurin correction count out of range");
    }
    Real base(bound_bits);
    mpfr_add(base.get(), down(head).get(), re_w.get(), MPFR_RNDD);
    if (!(base > 0L)) {
        throw DomainError("Euler-Maclaurin tail needs N + Re w > 0");
    }
    const long exponent = 1L - static_cast<long>(s) - 2L * corrections;
    return mul_up(up(remainder_constant(s, corrections)), pow_up(base, exponent));
}

TailPlan plan_em_tail(unsigned s, const Real &re_w, std::uint64_t min_head, const Real &target,
                      const PrecisionContext &ctx)
{
    const unsigned max_m = std::min(ctx.max_correction_terms(), max_bernoulli_index);
    std::uint64_t head = std::max<std::uint64_t>(min_head, 4);
    while (head <= ctx.max_terms()) {
        Real base(bound_bits);
        mpfr_add(base.get(), down(head).get(), re_w.get(), MPFR_RNDD);
        if (base > 1L) {
            Real previous(bound_bits);
            for (unsigned m = 1; m <= max_m; ++m) {
                Real bound = em_remainder_bound(s, head, re_w, m);
                if (bound <= target) {
                    return {head, m, std::move(bound)};
                }
                // Past the minimum of the asymptotic bound: a longer head is needed.
                if (m > 1 && bound > previous) {
                    break;
                }
                previous = std::move(bound);
            }
        }
        head *= 2;
    }
    throw ToleranceUnreachableError("Euler-Maclaurin tail cannot reach " + target.to_sci(3) + " within "
                                    + std::to_string(ctx.max_terms()) + " head terms");
}

BoundedValue em_tail(unsigned s, const Complex &w, const TailPlan &plan, mpfr_prec_t bits)
{
    Complex base = w.rounded(bits);
    base.re += Real(static_cast<long>(plan.head), bits);
    const Complex u = reciprocal(base);
    const Complex u2 = u * u;

    // u^(s-1) / (s-1) - u^s / 2 + sum_j B_2j/(2j)! (s)_{2j-1} u^(s+2j-1)
    Complex power = pow(u, s - 1);
    Complex total = power / Real(static_cast<long>(s) - 1, bits);
    Real magnitude = abs_upper(total);
    power *= u;
    {
        Complex half{ldexp(power.re, -1), ldexp(power.im, -1)};
        magnitude = add_up(magnitude, abs_upper(half));
        total -= half;
    }
    // power = u^(s + 2j - 1) at step j
    mpz_class fact = 2;   // (2j)!
    mpz_class rising = s; // (s)_{2j-1}
    for (unsigned j = 1; j <= plan.corrections; ++j) {
        if (j > 1) {
            fact *= (2 * j - 1) * (2 * j);
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2);
        }
        power *= (j == 1) ? u : u2;
        symbolic::Rational c = bernoulli_even(j) * symbolic::Rational(rising, fact);
        c.canonicalize();
        Complex term = power * Real(c, bits);
        magnitude = add_up(magnitude, abs_upper(term));
        total += term;
    }
    Real radius = add_up(plan.remainder_bound.rounded(bits),
                         rounding_allowance(magnitude, 4ULL * plan.corrections + s + 8, bits));
    return {std::move(total), std::move(radius)};
}

Real zeta_tail_bound(unsigned s, std::uint64_t head)
{
    if (head == 0) {
        throw DomainError("zeta tail bound needs N >= 1");
    }
    return div_up(pow_up(down(head), 1L - static_cast<long>(s)), down(s - 1));
}

std::uint64_t zeta_direct_terms(unsigned s, const Real &target, std::uint64_t cap)
{
    // N >= ((s-1) target)^(-1/(s-1)), then step to the smallest valid N.
    Real guess = root(Real(1L, bound_bits) / (Real(static_cast<long>(s) - 1, bound_bits) * target), s - 1);
    if (!(guess < Real(static_cast<double>(cap), bound_bits))) {
        return 0;
    }
    auto n = static_cast<std::uint64_t>(std::max(1.0, guess.to_double() - 2.0));
    while (zeta_tail_bound(s, n) > target) {
        if (++n > cap) {
            return 0;
        }
    }
    while (n > 1 && zeta_tail_bound(s, n - 1) <= target) {
        --n;
    }
    return n;
}

Real lattice_tail_bound(unsigned k, std::uint64_t head)
{
    if (head == 0 || k < 2) {
        throw DomainError("lattice tail bound needs N >= 1 and k >= 2");
    }
    Real base = sub_down(down(head), Real(0.5, bound_bits));
    return div_up(ldexp(pow_up(base, 1L - static_cast<long>(k)), 1), down(k - 1));
}

std::uint64_t lattice_direct_terms(unsigned k, const Real &target, std::uint64_t cap)
{
    Real guess = root(Real(2L, bound_bits) / (Real(static_cast<long>(k) - 1, bound_bits) * target), k - 1);
    if (!(guess < Real(static_cast<double>(cap), bound_bits))) {
        return 0;
    }
    auto n = static_cast<std::uint64_t>(std::max(1.0, guess.to_double() - 2.0));
    while (lattice_tail_bound(k, n) > target) {
        if (++n > cap) {
            return 0;
        }
    }
    while (n > 1 && lattice_tail_bound(k, n - 1) <= target) {
        --n;
    }
    return n;
}

Real telescoping_tail_bound(unsigned rounds, std::uint64_t head)
{
    mpz_class fact = 1;
    for (unsigned i = 2; i <= rounds; ++i) {
        fact *= i;
    }
    Real f(bound_bits);
    mpfr_set_z(f.get(), fact.get_mpz_t(), MPFR_RNDU);
    return div_up(mul_up(f, pow_up(down(head), -static_cast<long>(rounds) - 1)), down(rounds + 1));
}

std::uint64_t telescoping_terms(unsigned rounds, const Real &target, std::uint64_t cap)
{
    std::uint64_t n = 1;
    while (telescoping_tail_bound(rounds, n) > target) {
        if (n > cap / 2) {
            return 0;
        }
        n *= 2;
    }
    // Bisect down to the smallest valid N.
    std::uint64_t lo = n / 2;
    while (lo + 1 < n) {
        const std::uint64_t mid = lo + (n - lo) / 2;
        if (telescoping_tail_bound(rounds, mid) <= target) {
            n = mid;
        } else {
            lo = mid;
        }
    }
    return n;
}

Real rounding_allowance(const Real &scale, std::uint64_t steps, mpfr_prec_t bits)
{
    Real s(bound_bits);
    mpfr_set(s.get(), scale.get(), MPFR_RNDU);
    return mul_up(mul_up(s, up(steps)), Real::pow2(3 - static_cast<long>(bits), bound_bits));
}

} // namespace eisentrig::numeric
