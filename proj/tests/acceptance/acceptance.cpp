// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.
#include <mpfr.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisentrig/errors.hpp"
#include "eisentrig/numeric/eisenstein.hpp"
#include "eisentrig/symbolic/laurent_symbolic.hpp"
#include "eisentrig/trig/trig.hpp"
#include "harness.hpp"

using namespace eisentrig;
using symbolic::SymbolPoly;

namespace
{

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const char *id, const char *title, const std::function<Outcome()> &criterion)
{
    Outcome o;
    try {
        o = criterion();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << title;
    if (!o.detail.empty()) {
        std::cout << "  [" << o.detail << "]";
    }
    std::cout << std::endl;
}

SymbolPoly a(std::size_t d, long c = 1)
{
    return SymbolPoly::symbol(d, symbolic::Rational(c));
}

std::string sci(const Real &x)
{
    return x.to_sci(3);
}

Real upper(const BoundedValue &v)
{
    return add_up(abs_up(v.value), v.radius);
}

const harness::RunConfig default_config{};

std::vector<Complex> default_grid(mpfr_prec_t bits)
{
    return harness::default_grid(default_config, bits);
}

std::vector<Real> real_grid(mpfr_prec_t bits)
{
    return harness::linspace(default_config.real_grid, bits);
}

Outcome a1()
{
    const auto c = symbolic::combination_second_order(8);
    bool ok = true;
    for (int d = -4; d <= -1; ++d) {
        ok = ok && c.coefficient(d).is_zero();
    }
    ok = ok && c.coefficient(0) == a(0, 6) * a(0) - a(1, 10);
    return {ok, "constant term " + c.coefficient(0).to_string()};
}

Outcome a2()
{
    const auto c = symbolic::combination_first_order(8);
    bool ok = true;
    for (int d = c.min_degree(); d <= -3; ++d) {
        ok = ok && c.coefficient(d).is_zero();
    }
    ok = ok && c.coefficient(-2) == (a(0, 6) * a(0) - a(1, 10)) * symbolic::Rational(2);
    ok = ok && c.coefficient(0) == a(0, 8) * a(0) * a(0) - a(2, 28);
    return {ok, "z^-2: " + c.coefficient(-2).to_string() + "; constant: " + c.coefficient(0).to_string()};
}

Outcome a3()
{
    const auto qs = symbolic::derivative_polynomials(10);
    bool ok = qs.size() == 10;
    mpz_class fact = 1;
    for (int k = 1; k <= 10 && ok; ++k) {
        fact *= 2 * k;
        fact *= 2 * k + 1;
        const auto &q = qs[static_cast<std::size_t>(k - 1)];
        ok = q.constant_term().is_zero() && q.degree() == k + 1
             && q.leading_coefficient() == SymbolPoly(symbolic::Rational(fact));
    }
    return {ok, "k = 1..10"};
}

Outcome a4()
{
    const auto start = std::chrono::steady_clock::now();
    const PrecisionContext ctx(128, "1e-21");
    const BoundedValue z2 = numeric::zeta_even(1, ctx);
    const BoundedValue z4 = numeric::zeta_even(2, ctx);
    const BoundedValue r = square(z2) * 2L - z4 * 5L;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Real bound = upper(r);
    const bool ok = bound <= Real::parse("1e-20", 64) && seconds < 1.0;
    std::ostringstream os;
    os << "|2 zeta(2)^2 - 5 zeta(4)| <= " << sci(bound) << ", " << seconds << " s";
    return {ok, os.str()};
}

Outcome a5()
{
    const PrecisionContext ctx(128, "1e-18");
    const BoundedValue v = numeric::evaluate_relation(a(0, 8) * a(0) * a(0) - a(2, 28), ctx);
    const bool ok = v.consistent_with_zero() && v.radius <= ctx.tolerance();
    return {ok, "|8 a0^3 - 28 a2| = " + sci(abs(v.value)) + " vs radius " + sci(v.radius)};
}

Outcome a6()
{
    const trig::PiValue pi = trig::compute_pi(PrecisionContext(128, "1e-13"));
    Real ref(256);
    mpfr_const_pi(ref.get(), MPFR_RNDN);
    const Real err = abs(pi.value.value.re - ref);
    return {err <= Real::parse("1e-12", 64), "error " + sci(err) + ", radius " + sci(pi.value.radius)};
}

Outcome a7()
{
    const PrecisionContext ctx = PrecisionContext::standard();
    const trig::TrigEvaluator ev(ctx);
    Real worst_radius(64);
    bool ok = true;
    for (const auto &z : default_grid(ctx.bits())) {
        const BoundedValue c = ev.cosec_identity_check(z);
        ok = ok && c.consistent_with_zero();
        worst_radius = max(worst_radius, c.radius);
    }
    ok = ok && worst_radius <= Real::parse("1e-9", 64);
    return {ok, "max radius " + sci(worst_radius)};
}

Outcome a8()
{
    const PrecisionContext ctx = PrecisionContext::standard();
    std::vector<Real> ys;
    for (const char *y : {"1", "2", "5", "10", "50", "100"}) {
        ys.push_back(Real::parse(y, ctx.bits()));
    }
    const auto rows = numeric::strip_decay(ys, Real(ctx.bits()), ctx);
    bool ok = numeric::strictly_decreasing(rows);
    for (const auto &row : rows) {
        ok = ok && row.resolved && row.dominated;
    }
    const Real top = rows.back().f_magnitude.magnitude_upper();
    ok = ok && top <= Real::parse("1e-3", 64);
    return {ok, "|f(100i)| <= " + sci(top)};
}

Outcome a9()
{
    const PrecisionContext ctx = PrecisionContext::standard();
    Real worst(64);
    bool ok = true;
    for (const auto &z : default_grid(ctx.bits())) {
        for (const BoundedValue &r : {numeric::residual_theorem2(z, ctx), numeric::residual_theorem3(z, ctx)}) {
            ok = ok && abs_down(r.value) <= r.radius;
            worst = max(worst, r.radius);
        }
    }
    ok = ok && worst <= Real::parse("1e-9", 64);
    return {ok, "max radius " + sci(worst)};
}

Outcome a10()
{
    const PrecisionContext ctx = PrecisionContext::standard();
    const trig::TrigEvaluator ev(ctx);
    const double h = 1e-4;
    const Real limit = Real::parse("1e-6", 64);
    Real worst(64);
    for (const auto &x : real_grid(ctx.bits())) {
        const Complex z(x);
        worst = max(worst, upper(ev.residual_theorem5(z, h)));
        worst = max(worst, upper(ev.ivp_residual(z, h)));
    }
    const BoundedValue g0 = ev.g(Complex(Real(ctx.bits())));
    const BoundedValue c0 = ev.cosine(Complex(Real(ctx.bits())));
    const bool exact = g0.is_exact() && g0.value.is_zero() && c0.is_exact() && c0.value.re == 1L
                       && c0.value.im.is_zero();
    return {worst <= limit && exact, "max |residual| + radius " + sci(worst) + (exact ? ", g(0), c(0) exact" : "")};
}

Outcome a11()
{
    const PrecisionContext ctx = PrecisionContext::standard();
    const trig::TrigEvaluator ev(ctx);
    Real worst(64);
    bool ok = true;
    for (const auto &x : harness::linspace(harness::Range{"-1", "1", 41}, ctx.bits())) {
        const Complex z(x);
        const BoundedValue c = ev.cosine(z);
        const BoundedValue t = ev.taylor_cosine(z);
        const Real summed = add_up(c.radius, t.radius);
        ok = ok && abs(c.value - t.value) <= summed;
        worst = max(worst, summed);
    }
    ok = ok && worst <= Real::parse("1e-11", 64);
    return {ok, "max summed radii " + sci(worst)};
}

Outcome a12()
{
    const PrecisionContext ctx = PrecisionContext::standard();
    const trig::TrigEvaluator ev(ctx);
    double f_rel = 0.0;
    for (const auto &x : real_grid(ctx.bits())) {
        const double xd = x.to_double();
        const double s = std::sin(std::numbers::pi * xd);
        const double platform = std::numbers::pi * std::numbers::pi / (s * s);
        const double ours = numeric::eisenstein_k(2, Complex(x), ctx).value.re.to_double();
        f_rel = std::max(f_rel, std::abs(ours - platform) / std::abs(platform));
    }
    double cos_err = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double xd = -10.0 + 0.1 * i;
        const double ours = ev.cosine(Complex(Real(xd, ctx.bits()))).value.re.to_double();
        cos_err = std::max(cos_err, std::abs(ours - std::cos(xd)));
    }
    std::ostringstream os;
    os << "f relative " << f_rel << ", cosine " << cos_err;
    return {f_rel <= 1e-10 && cos_err <= 1e-10, os.str()};
}

Outcome a13()
{
    std::mt19937_64 rng(0x5eed2025);
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> im(-2.0, 2.0);
    std::uniform_real_distribution<double> exponent(-30.0, -6.0);
    int violations = 0;
    int samples = 0;
    while (samples < 50) {
        const Complex z(Real(re(rng), 128), Real(im(rng), 128));
        const double tol = std::pow(10.0, exponent(rng));
        if (numeric::within_pole_guard(z, 128)
            || abs(numeric::reduce_argument(z).point) < Real::parse("0.01", 64)) {
            continue;
        }
        ++samples;
        const PrecisionContext loose(128, Real(tol, 64).to_sci(6));
        const PrecisionContext tight = loose.with_tolerance(Real(tol / 4.0, 64));
        const BoundedValue old_value = numeric::eisenstein_k(2, z, loose);
        const BoundedValue new_value = numeric::eisenstein_k(2, z, tight);
        if (!(abs(new_value.value - old_value.value) <= old_value.radius)) {
            ++violations;
        }
    }
    return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(samples)};
}

struct CliRun {
    int code;
    nlohmann::json report;
};

CliRun verify_run(const harness::RunConfig &config)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = harness::cmd_verify(config, out, err);
    return {code, out.str().empty() ? nlohmann::json() : nlohmann::json::parse(out.str())};
}

Outcome a14()
{
    const CliRun plain = verify_run(harness::RunConfig{});

    harness::RunConfig perturbed;
    perturbed.perturb_a0 = "1e-3";
    const CliRun bad = verify_run(perturbed);
    long r2_failed = 0;
    for (const auto &item : bad.report["items"]) {
        if (item["check_id"] == "residual_theorem2" && item["status"] == "fail") {
            ++r2_failed;
        }
    }

    harness::RunConfig self_contained;
    self_contained.self_contained = true;
    const CliRun sc = verify_run(self_contained);
    bool reference_free = true;
    for (const auto &item : sc.report["items"]) {
        reference_free = reference_free && item["check_id"] != "pi_vs_reference";
    }

    const bool ok = plain.code == 0 && bad.code == 1 && r2_failed > 0 && sc.code == 0 && reference_free;
    return {ok, "default exit " + std::to_string(plain.code) + ", perturbed exit " + std::to_string(bad.code) + " ("
                    + std::to_string(r2_failed) + " residual_theorem2 failures), self-contained exit "
                    + std::to_string(sc.code)};
}

} // namespace

int main()
{
    report("A1", "second-order combination: poles cancel, constant 6 a0^2 - 10 a1", a1);
    report("A2", "first-order combination: poles cancel, z^-2 and constant terms", a2);
    report("A3", "derivative polynomials: degree, leading coefficient, no constant term", a3);
    report("A4", "2 zeta(2)^2 = 5 zeta(4) to 1e-20 in under 1 s", a4);
    report("A5", "8 a0^3 - 28 a2 vanishes within its bound at tolerance 1e-18", a5);
    report("A6", "pi from sqrt(6 zeta(2)) within 1e-12 of the reference", a6);
    report("A7", "f(z) s(pi z)^2 = pi^2 on the default grid, radii <= 1e-9", a7);
    report("A8", "strip decay majorant, strict decrease, |f(100i)| <= 1e-3", a8);
    report("A9", "f differential-equation residuals enclose 0, radii <= 1e-9", a9);
    report("A10", "g and c finite-difference residuals <= 1e-6 at h = 1e-4; exact g(0), c(0)", a10);
    report("A11", "cosine vs Taylor route on 41 points, summed radii <= 1e-11", a11);
    report("A12", "f and cosine vs platform sin/cos, error <= 1e-10", a12);
    report("A13", "tightening the tolerance 4x stays inside the old radius", a13);
    report("A14", "verify exit codes: default, perturbed a0, self-contained", a14);
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
