#include <doctest.h>

#include <random>
#include <vector>

#include "eisentrig/errors.hpp"
#include "eisentrig/numeric/eisenstein.hpp"
#include "eisentrig/numeric/summation.hpp"
#include "oracles.hpp"

using namespace eisentrig;
using namespace eisentrig::numeric;

namespace
{

const PrecisionContext standard = PrecisionContext::standard();

Complex pt(const char *text, mpfr_prec_t bits = 128)
{
    return Complex::parse(text, bits);
}

bool encloses(const BoundedValue &v, const Complex &reference)
{
    return abs_down(v.value - reference.rounded(v.bits())) <= v.radius;
}

} // namespace

TEST_CASE("Bernoulli numbers")
{
    using symbolic::make_rational;
    CHECK(bernoulli_even(0) == 1);
    CHECK(bernoulli_even(1) == make_rational(1, 6));
    CHECK(bernoulli_even(2) == make_rational(-1, 30));
    CHECK(bernoulli_even(3) == make_rational(1, 42));
    CHECK(bernoulli_even(5) == make_rational(5, 66));
    CHECK(bernoulli_even(6) == make_rational(-691, 2730));
    CHECK(bernoulli_even(7) == make_rational(7, 6));
    CHECK_THROWS_AS(static_cast<void>(bernoulli_even(max_bernoulli_index + 1)), DomainError);
}

TEST_CASE("integral-test tail bounds")
{
    CHECK(zeta_tail_bound(2, 10) >= Real::parse("0.1", 128));
    CHECK(zeta_tail_bound(2, 10) <= Real::parse("0.1000000000000000001", 128));
    // Tail after N terms is below 1/N; the decimal 1e-3 rounds below 1/1000.
    const std::uint64_t n = zeta_direct_terms(2, Real::parse("1e-3", 64), 100'000'000);
    CHECK(n >= 1000);
    CHECK(n <= 1001);
    CHECK(zeta_tail_bound(2, n) <= Real::parse("1e-3", 64));
    CHECK(zeta_direct_terms(2, Real::parse("1e-12", 64), 100'000'000) == 0);
    // 2 (N - 1/2)^-1 at N = 10.
    CHECK(abs(lattice_tail_bound(2, 10) - Real(2L, 64) / Real::parse("9.5", 64)) < Real::parse("1e-18", 64));
    CHECK(lattice_direct_terms(2, Real::parse("1e-12", 64), 100'000'000) == 0);
}

TEST_CASE("Euler-Maclaurin tail against a brute-force partial sum")
{
    // sum_{n > N} (n + w)^-4 with the terms up to 10^5 summed directly and
    // the rest bounded by the integral test (< 4e-16).
    const mpfr_prec_t bits = 128;
    const Complex w = pt("0.3+0.4i");
    const std::uint64_t head = 16;
    Complex brute(bits);
    for (long n = 100'000; n > static_cast<long>(head); --n) {
        brute += pow(reciprocal(w + Real(n, bits)), 4);
    }
    const PrecisionContext ctx(bits, "1e-25");
    const TailPlan plan = plan_em_tail(4, Real::parse("0.3", 64), head, Real::parse("1e-25", 64), ctx);
    CHECK(plan.head >= head);
    REQUIRE(plan.head == head);
    const BoundedValue tail = em_tail(4, w, plan, bits);
    CHECK(tail.radius <= Real::parse("1e-24", 64));
    CHECK(abs(tail.value - brute) <= Real::parse("4e-16", 64));
}

TEST_CASE("even zeta values against MPFR")
{
    for (unsigned m = 1; m <= 10; ++m) {
        const BoundedValue z = zeta_even(m, PrecisionContext(128, "1e-30"));
        CHECK_MESSAGE(encloses(z, Complex(oracle::zeta(2 * m, 256))), "m = ", m);
        CHECK(z.radius <= Real::parse("1e-30", 64));
    }
    const BoundedValue coarse = zeta_even(2, standard.with_method(SumMethod::direct).with_tolerance(Real::parse("1e-6", 64)));
    CHECK(encloses(coarse, Complex(oracle::zeta(4, 256))));
    CHECK_THROWS_AS(static_cast<void>(zeta_even(1, standard.with_method(SumMethod::direct))), ToleranceUnreachableError);
    CHECK_THROWS_AS(static_cast<void>(zeta_even(0, standard)), DomainError);

    const BoundedValue t = zeta_even(1, standard.with_telescoping_rounds(5));
    CHECK(encloses(t, Complex(oracle::zeta(2, 256))));
}

TEST_CASE("Laurent coefficients a_d")
{
    for (unsigned d = 0; d <= 6; ++d) {
        const BoundedValue a = coeff_a(d, standard);
        const Real expected = oracle::zeta(2 * d + 2, 256) * static_cast<long>(2 * (2 * d + 1));
        CHECK(encloses(a, Complex(expected)));
        CHECK(a.radius <= standard.tolerance());
    }
}

TEST_CASE("f at special points")
{
    const Real pi = oracle::pi(256);
    const BoundedValue half = eisenstein_k(2, pt("0.5"), standard);
    CHECK(encloses(half, Complex(pi * pi)));
    CHECK(half.radius <= standard.tolerance());
    const BoundedValue quarter = eisenstein_k(2, pt("0.25"), standard);
    CHECK(encloses(quarter, Complex(pi * pi * 2L)));
    // 9.869604401089358...
    CHECK(abs(half.value.re - Real::parse("9.869604401089358618834490999876", 128)) <= Real::parse("1e-12", 64));
}

TEST_CASE("f against pi^2 / sin^2(pi z)")
{
    const PrecisionContext ctx(128, "1e-25");
    for (const char *z : {"0.3", "0.05", "-0.77", "0.3+0.7i", "0.1+0.2i", "-2.4-1.5i", "0.9+2i", "12.6+0.01i"}) {
        const Complex zz = pt(z);
        const BoundedValue v = eisenstein_k(2, zz, ctx);
        CHECK_MESSAGE(encloses(v, oracle::f(zz)), "z = ", z, ": ", v.to_string(30));
        CHECK(v.radius <= ctx.tolerance());
    }
}

TEST_CASE("eps_k for higher k")
{
    // f'' = 6 eps_4 against the second derivative of pi^2 cosec^2(pi z),
    // which is 6 f^2 - 4 pi^2 f.
    const PrecisionContext ctx(128, "1e-25");
    const Complex z = pt("0.21+0.1i");
    const Complex f = oracle::f(z);
    const Real pi = oracle::pi(256);
    const Complex f2 = f * f * 6L - f * (pi * pi * 4L);
    CHECK(encloses(f_deriv(2, z, ctx), f2));
    // Odd k: eps_k(1/2) = 0 by symmetry.
    CHECK(eisenstein_k(3, pt("0.5"), ctx).consistent_with_zero());
    CHECK(eisenstein_k(5, pt("0.5"), ctx).consistent_with_zero());
    CHECK_THROWS_AS(static_cast<void>(eisenstein_k(1, z, ctx)), DomainError);
}

TEST_CASE("pole guard")
{
    CHECK_THROWS_AS(static_cast<void>(eisenstein_k(2, pt("1.0"), standard)), PoleProximityError);
    CHECK_THROWS_AS(static_cast<void>(eisenstein_k(2, pt("-3"), standard)), PoleProximityError);
    const Complex near = Complex(Real(1L, 128) + Real::pow2(-130, 128));
    CHECK(within_pole_guard(near, 128));
    CHECK_THROWS_AS(static_cast<void>(eisenstein_k(2, near, standard)), PoleProximityError);
    try {
        static_cast<void>(eisenstein_k(2, pt("2"), standard));
    } catch (const PoleProximityError &e) {
        CHECK(std::string(e.what()).find("pole") != std::string::npos);
    }
    // Close but outside the guard: a huge, still enclosed value.
    const Complex z = pt("1e-10");
    CHECK_FALSE(within_pole_guard(z, 128));
    const BoundedValue v = eisenstein_k(2, z, PrecisionContext(128, "1e-4"));
    CHECK(v.value.re > Real::parse("1e19", 64));
    CHECK(pole_guard(5, 128) == pole_guard(-5, 128));
    CHECK(pole_guard(5, 128) > pole_guard(1, 128));
}

TEST_CASE("periodicity is exact")
{
    // A short-mantissa point: z + m is exactly representable.
    const Complex z = pt("0.375+0.25i");
    const BoundedValue base = eisenstein_k(2, z, standard);
    for (long m : {1L, -1L, 7L, 1000L, -123456L}) {
        const Complex shifted(z.re + Real(m, 128), z.im);
        const BoundedValue v = eisenstein_k(2, shifted, standard);
        CHECK(v.value == base.value);
        CHECK(v.radius == base.radius);
    }
    // A full-precision point and its shift carried at higher precision.
    const Complex w = pt("0.3141592653589793238462643383279");
    const BoundedValue wb = eisenstein_k(2, w, standard);
    const Complex ws(w.re.rounded(192) + Real(99L, 192), Real(192));
    const BoundedValue wv = eisenstein_k(2, ws, standard);
    CHECK(wv.value == wb.value);
    CHECK(reduce_argument(ws).shift == 99);
}

TEST_CASE("f is even and conjugate-symmetric")
{
    for (const char *s : {"0.3", "0.1+0.2i", "-0.45+1.3i", "3.7-0.6i"}) {
        const Complex z = pt(s);
        const BoundedValue v = eisenstein_k(2, z, standard);
        CHECK(eisenstein_k(2, -z, standard).overlaps(v));
        const BoundedValue c = eisenstein_k(2, conj(z), standard);
        CHECK(BoundedValue(conj(c.value), c.radius).overlaps(v));
    }
}

TEST_CASE("tightening the tolerance stays inside the previous ball")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> im(-2.0, 2.0);
    std::uniform_int_distribution<int> exp10(6, 20);
    for (int trial = 0; trial < 40; ++trial) {
        const Complex z(Real(re(rng), 128), Real(trial % 3 == 0 ? 0.0 : im(rng), 128));
        if (within_pole_guard(z, 128)) {
            continue;
        }
        const PrecisionContext ctx(128, Real::pow2(-static_cast<long>(3.32 * exp10(rng)), 64));
        const BoundedValue coarse = eisenstein_k(2, z, ctx);
        const BoundedValue fine = eisenstein_k(2, z, ctx.with_tolerance(ldexp(ctx.tolerance(), -2)));
        CHECK(abs_up(fine.value - coarse.value) <= coarse.radius);
    }
}

TEST_CASE("direct and accelerated summation agree")
{
    const PrecisionContext loose(128, "1e-4");
    const Complex z = pt("0.3+0.4i");
    const BoundedValue direct = eisenstein_k(2, z, loose.with_method(SumMethod::direct));
    const BoundedValue fast = eisenstein_k(2, z, loose);
    CHECK(direct.overlaps(fast));
    CHECK(direct.terms > fast.terms);
    CHECK_THROWS_AS(static_cast<void>(eisenstein_k(2, z, standard.with_method(SumMethod::direct))),
                    ToleranceUnreachableError);
    CHECK_THROWS_AS(
        static_cast<void>(eisenstein_k(2, z, loose.with_method(SumMethod::direct).with_max_terms(1000))),
        ToleranceUnreachableError);
}

TEST_CASE("partial sums converge like 1/N")
{
    const Complex z = pt("0.3");
    const BoundedValue ref = eisenstein_k(2, z, PrecisionContext(128, "1e-30"));
    Real previous(64);
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL}) {
        const BoundedValue p = lattice_partial_sum(2, z, n, standard);
        CHECK(encloses(p, ref.value));
        const Real err = abs(p.value - ref.value);
        CHECK(err <= lattice_tail_bound(2, n));
        if (n > 10) {
            // Ten times the terms, roughly a tenth of the error.
            CHECK(err * 8L < previous);
        }
        previous = err.rounded(64);
    }
}

TEST_CASE("strip decay")
{
    std::vector<Real> ys;
    for (long y : {1L, 2L, 5L, 10L, 50L, 100L}) {
        ys.emplace_back(y, 128);
    }
    const auto reports = strip_decay(ys, Real(128), standard);
    REQUIRE(reports.size() == ys.size());
    for (const auto &r : reports) {
        CHECK(r.resolved);
        CHECK(r.dominated);
    }
    CHECK(strictly_decreasing(reports));
    CHECK(reports.back().f_magnitude.magnitude_upper() <= Real::parse("1e-3", 64));
    // |f(i)| = pi^2 / sinh^2(pi).
    CHECK(encloses(reports[0].f_magnitude, Complex(abs(oracle::f(pt("1i"))))));

    const Real bad(0.5, 128);
    CHECK_THROWS_AS(static_cast<void>(strip_decay(std::vector<Real>{bad}, Real(128), standard)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(strip_decay(ys, Real(2L, 128), standard)), DomainError);
}

TEST_CASE("differential-equation residuals")
{
    for (const char *s : {"0.3", "0.77", "0.3+0.7i", "0.15+1.9i", "-4.2+0.05i"}) {
        const Complex z = pt(s);
        const BoundedValue r2 = residual_theorem2(z, standard);
        const BoundedValue r3 = residual_theorem3(z, standard);
        CHECK_MESSAGE(r2.consistent_with_zero(), s, ": ", r2.to_string(6));
        CHECK_MESSAGE(r3.consistent_with_zero(), s, ": ", r3.to_string(6));
        CHECK(r2.radius <= standard.tolerance());
        CHECK(r3.radius <= standard.tolerance());
        const Real eps = Real::parse("1e-3", 128);
        CHECK(residual_theorem2(z, standard, eps).excludes_zero());
        CHECK(residual_theorem3(z, standard, eps).excludes_zero());
    }
    CHECK_THROWS_AS(static_cast<void>(residual_theorem2(pt("2"), standard)), PoleProximityError);
}

TEST_CASE("nonvanishing scan")
{
    std::vector<Complex> grid;
    for (const char *s : {"0.05", "0.5", "0.95", "0.1+0.1i", "0.9+2i", "0.5+2i"}) {
        grid.push_back(pt(s));
    }
    const NonvanishingReport rep = nonvanishing_scan(grid, standard);
    CHECK(rep.all_nonzero);
    REQUIRE(rep.points.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(rep.points[i].z == grid[i]);
    }
    // The smallest |f| is high in the strip.
    CHECK(rep.argmin >= 4);
    // Loose tolerance, tiny |f|: re-checked at a tighter tolerance.
    const NonvanishingReport far = nonvanishing_scan(std::vector<Complex>{pt("0.5+6i")}, PrecisionContext(128, "1e-6"));
    CHECK(far.all_nonzero);
}
