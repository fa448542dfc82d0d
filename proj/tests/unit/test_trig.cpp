#include <doctest.h>

#include <cstdlib>
#include <string>

#include "eisentrig/errors.hpp"
#include "eisentrig/trig/trig.hpp"
#include "oracles.hpp"

using namespace eisentrig;
using namespace eisentrig::trig;

namespace
{

const PrecisionContext standard = PrecisionContext::standard();

const TrigEvaluator &evaluator()
{
    static const TrigEvaluator ev(standard);
    return ev;
}

Complex pt(const char *text)
{
    return Complex::parse(text, 128);
}

bool encloses(const BoundedValue &v, const Complex &reference)
{
    return abs_down(v.value - reference.rounded(v.bits())) <= v.radius;
}

bool encloses(const BoundedValue &v, long reference)
{
    return encloses(v, Complex(Real(reference, v.bits())));
}

} // namespace

TEST_CASE("pi from sqrt(6 zeta(2))")
{
    const PiValue pi = compute_pi(PrecisionContext(128, "1e-15"));
    CHECK(std::string(PiValue::provenance) == "sqrt(6·ζ(2))");
    CHECK(pi.value.value.re > 0L);
    CHECK(pi.value.radius <= Real::parse("1e-15", 64));
    const Real machin = oracle::machin_pi(256);
    CHECK(abs(machin - oracle::pi(256)) < Real::parse("1e-70", 64));
    CHECK(encloses(pi.value, Complex(machin)));
    // 3.141592653589793...
    CHECK(abs(pi.value.value.re - Real::parse("3.141592653589793", 128)) < Real::parse("1e-15", 64));

    const TrigEvaluator &ev = evaluator();
    CHECK((square(ev.pi().value) - ev.a0() * 3).consistent_with_zero());
}

TEST_CASE("g = 1/f")
{
    const TrigEvaluator &ev = evaluator();
    const BoundedValue g0 = ev.g(pt("0"));
    CHECK(g0.value.is_zero());
    CHECK(g0.radius.is_zero());
    CHECK(ev.g(pt("-4")).is_exact());
    CHECK(ev.g(pt("-4")).value.is_zero());

    const Real pi = oracle::pi(256);
    CHECK(encloses(ev.g(pt("0.5")), Complex(Real(1L, 256) / (pi * pi))));
    CHECK(encloses(ev.g(pt("0.25")), Complex(Real(1L, 256) / (pi * pi * 2L))));
    // 0.101321183642338 and 0.050660591821169
    CHECK(abs(ev.g(pt("0.5")).value.re - Real::parse("0.101321183642338", 128)) < Real::parse("1e-15", 64));
    CHECK(abs(ev.g(pt("0.25")).value.re - Real::parse("0.050660591821169", 128)) < Real::parse("1e-15", 64));
    // Near an integer g is small and enclosed by the (w - n)^2 bound.
    const BoundedValue tiny = ev.g(Complex(Real(3L, 128) + Real::pow2(-126, 128)));
    CHECK(tiny.consistent_with_zero());
    CHECK(tiny.radius <= Real::pow2(-200, 64));

    CHECK_THROWS_AS(static_cast<void>(g_eval(pt("0.5+60i"), standard)), InconclusiveNonvanishingError);
}

TEST_CASE("cosine and sine at landmarks")
{
    const TrigEvaluator &ev = evaluator();
    const BoundedValue c0 = ev.cosine(pt("0"));
    CHECK(c0.value.re == 1L);
    CHECK(c0.radius.is_zero());
    const BoundedValue s0 = ev.sine(pt("0"));
    CHECK(s0.value.is_zero());
    CHECK(s0.radius.is_zero());

    const Complex pi = ev.pi().value.value;
    CHECK(encloses(ev.cosine(pi), -1));
    CHECK(encloses(ev.sine(pi), 0));
    const Complex half_pi(ldexp(pi.re, -1));
    CHECK(encloses(ev.cosine(half_pi), 0));
    CHECK(encloses(ev.sine(half_pi), 1));
    CHECK(ev.sine(pt("0.001")).value.re > 0L);
}

TEST_CASE("cosine and sine against MPFR")
{
    const TrigEvaluator &ev = evaluator();
    for (const char *s : {"1", "-2.5", "0.3", "7.25", "-10", "0.5+0.5i", "1-2i", "3+0.25i"}) {
        const Complex z = pt(s);
        const BoundedValue c = ev.cosine(z);
        const BoundedValue sn = ev.sine(z);
        CHECK_MESSAGE(encloses(c, oracle::cos(z.rounded(256))), s, ": ", c.to_string(25));
        CHECK_MESSAGE(encloses(sn, oracle::sin(z.rounded(256))), s, ": ", sn.to_string(25));
        CHECK(c.radius <= standard.tolerance());
        CHECK(sn.radius <= standard.tolerance());
    }
}

TEST_CASE("evenness, Pythagoras and periodicity")
{
    const TrigEvaluator &ev = evaluator();
    for (const char *s : {"0.4", "2.2", "0.3+0.8i", "-1.1+0.2i"}) {
        const Complex z = pt(s);
        CHECK(ev.cosine(-z).overlaps(ev.cosine(z)));
        CHECK((ev.sine(-z) + ev.sine(z)).consistent_with_zero());
        const BoundedValue one = square(ev.sine(z)) + square(ev.cosine(z));
        CHECK((one + (-1L)).consistent_with_zero());
    }
    const Complex z = pt("0.7");
    const BoundedValue base = ev.cosine(z);
    // The shift uses the computed pi, so each period carries 2 pi.radius of
    // argument error and |c'| <= 1 on the real axis.
    const Real two_pi = ldexp(ev.pi().value.value.re, 1);
    const Real pi_radius = ev.pi().value.radius;
    for (long k : {1L, -3L, 1000L, 1'000'000L}) {
        const Complex shifted(z.re + two_pi * k, Real(128));
        const BoundedValue c = ev.cosine(shifted);
        const Real allowed = add_up(add_up(c.radius, base.radius), ldexp(pi_radius, 1) * std::labs(k));
        CHECK_MESSAGE(abs(c.value - base.value) <= allowed, "k = ", k);
        CHECK(c.radius <= standard.tolerance());
    }
    // On the real axis |c| <= 1 up to the radius.
    for (const char *s : {"0.1", "1.3", "3.14159", "5"}) {
        const BoundedValue c = ev.cosine(pt(s));
        CHECK(abs(c.value.re) <= add_up(Real(1L, 64), c.radius));
    }
}

TEST_CASE("Taylor cosine")
{
    const TrigEvaluator &ev = evaluator();
    const BoundedValue t0 = ev.taylor_cosine(pt("0"));
    CHECK(t0.value.re == 1L);
    CHECK(t0.radius.is_zero());
    const BoundedValue t1 = ev.taylor_cosine(pt("1"));
    CHECK(encloses(t1, oracle::cos(pt("1").rounded(256))));
    CHECK(abs(t1.value.re - Real::parse("0.540302305868139", 128)) < Real::parse("1e-12", 64));
    const BoundedValue t2i = ev.taylor_cosine(pt("2i"));
    CHECK(abs(t2i.value.re - Real::parse("3.762195691083631", 128)) < Real::parse("1e-12", 64));
    CHECK(t2i.value.im.is_zero());
    CHECK(encloses(ev.taylor_cosine(pt("2.5-1.5i")), oracle::cos(pt("2.5-1.5i").rounded(256))));
    CHECK_THROWS_AS(static_cast<void>(ev.taylor_cosine(pt("4.01"))), DomainError);
    CHECK_THROWS_AS(static_cast<void>(ev.taylor_cosine(pt("3+3i"))), DomainError);
    for (int i = -10; i <= 10; ++i) {
        const Complex z(Real(i / 10.0, 128));
        const BoundedValue c = ev.cosine(z);
        const BoundedValue t = ev.taylor_cosine(z);
        CHECK(abs(c.value - t.value) <= add_up(c.radius, t.radius));
    }
}

TEST_CASE("finite-difference residuals")
{
    const TrigEvaluator &ev = evaluator();
    const BoundedValue r = ev.residual_theorem5(pt("0.3"), 1e-4);
    CHECK(r.consistent_with_zero());
    CHECK(add_up(abs_up(r.value), r.radius) <= Real::parse("1e-6", 64));
    CHECK(ev.residual_theorem5(pt("0.5"), 1e-4).consistent_with_zero());
    CHECK(ev.residual_theorem5(pt("0.3+0.4i"), 1e-4).consistent_with_zero());
    CHECK_THROWS_AS(static_cast<void>(ev.residual_theorem5(pt("2"), 1e-4)), DomainError);

    // g''(1/2) = -2 from a plain second difference of g.
    const Real h = Real::parse("1e-4", 128);
    const BoundedValue gp = ev.g(Complex(Real::parse("0.5", 128) + h));
    const BoundedValue g0 = ev.g(pt("0.5"));
    const BoundedValue gm = ev.g(Complex(Real::parse("0.5", 128) - h));
    const Complex d2 = (gp.value + gm.value - g0.value * 2L) / Complex(h * h);
    CHECK(abs(d2 + Complex(Real(2L, 128))) < Real::parse("1e-6", 64));

    const BoundedValue ivp = ev.ivp_residual(pt("1"), 1e-4);
    CHECK(ivp.consistent_with_zero());
    CHECK(ivp.radius <= Real::parse("1e-6", 64));
    CHECK(ev.ivp_initial_value().value.re == 1L);
    CHECK(ev.ivp_initial_value().radius.is_zero());
    CHECK(ev.ivp_initial_slope(1e-4).consistent_with_zero());

    // Default step: tolerance^(1/4), clamped.
    CHECK(ev.default_step() == doctest::Approx(1e-3));
    CHECK(TrigEvaluator(PrecisionContext(128, "1e-28")).default_step() == doctest::Approx(1e-6));
}

TEST_CASE("cosecant identity")
{
    const TrigEvaluator &ev = evaluator();
    for (const char *s : {"0.5", "0.3333333333333333333333333333333333", "0.1+0.2i", "0.9+2i", "-1.7+0.3i"}) {
        const BoundedValue c = ev.cosec_identity_check(pt(s));
        CHECK_MESSAGE(c.consistent_with_zero(), s, ": ", c.to_string(6));
        CHECK(c.radius <= standard.tolerance());
    }
    CHECK_THROWS_AS(static_cast<void>(ev.cosec_identity_check(pt("1"))), DomainError);
}
