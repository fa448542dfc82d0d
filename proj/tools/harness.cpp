#include "harness.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "eisentrig/errors.hpp"
#include "eisentrig/numeric/eisenstein.hpp"
#include "eisentrig/numeric/parallel.hpp"
#include "eisentrig/numeric/summation.hpp"
#include "eisentrig/symbolic/laurent_symbolic.hpp"
#include "eisentrig/trig/trig.hpp"

namespace eisentrig::harness
{

namespace
{

using json = nlohmann::ordered_json;
using symbolic::SymbolPoly;

constexpr int report_schema = 1;
constexpr mpfr_prec_t report_bits = 64;
// The one stored constant the suite consults, in the pi_vs_reference item.
constexpr const char *pi_reference = "3.14159265358979323846264338327950288419716939937510582097494";

using Params = std::vector<std::pair<std::string, std::string>>;

Real nan_real()
{
    Real r(report_bits);
    mpfr_set_nan(r.get());
    return r;
}

CheckItem make_item(std::string id, std::string ref, Params params, Real residual, Real bound)
{
    CheckItem item;
    item.check_id = std::move(id);
    item.theorem_ref = std::move(ref);
    item.parameters = std::move(params);
    item.status = residual <= bound ? Status::pass : Status::fail;
    item.residual = std::move(residual);
    item.bound = std::move(bound);
    return item;
}

// |value| against the ball's own radius.
CheckItem ball_item(std::string id, std::string ref, Params params, const BoundedValue &v)
{
    return make_item(std::move(id), std::move(ref), std::move(params), abs(v.value), v.radius);
}

CheckItem count_item(std::string id, std::string ref, Params params, long failures)
{
    return make_item(std::move(id), std::move(ref), std::move(params), Real(failures, report_bits),
                     Real(report_bits));
}

CheckItem inconclusive(const std::string &id, const std::string &ref, const Params &params, const char *note)
{
    CheckItem item;
    item.check_id = id;
    item.theorem_ref = ref;
    item.parameters = params;
    item.residual = nan_real();
    item.bound = Real(report_bits);
    item.status = Status::inconclusive;
    item.note = note;
    return item;
}

// Runs `fn`, turning numeric errors into an inconclusive item.
CheckItem guarded(const std::string &id, const std::string &ref, const Params &params,
                  const std::function<CheckItem()> &fn)
{
    try {
        return fn();
    } catch (const Error &e) {
        return inconclusive(id, ref, params, e.what());
    }
}

Real rounded_up(const Real &x, mpfr_prec_t bits)
{
    Real out(bits);
    mpfr_set(out.get(), x.get(), MPFR_RNDU);
    return out;
}

std::string point_text(const Complex &z)
{
    return z.to_string(20);
}

SymbolPoly a(std::size_t d, long coeff = 1)
{
    return SymbolPoly::symbol(d, symbolic::Rational(coeff));
}

long count_nonzero(const symbolic::LaurentSeries &s, int lo, int hi)
{
    long n = 0;
    for (int d = lo; d <= hi; ++d) {
        if (!s.coefficient(d).is_zero()) {
            ++n;
        }
    }
    return n;
}

std::vector<CheckItem> symbolic_checks(int order)
{
    std::vector<CheckItem> items;
    const Params p{{"order", std::to_string(order)}};
    const std::string ref2 = "f'' - 6 f^2 + 12 a0 f is entire";
    const std::string ref1 = "(f')^2 - 4 f^3 + 12 a0 f^2 is entire";

    const auto c2 = symbolic::combination_second_order(order);
    items.push_back(count_item("symbolic.comb2_pole_cancellation", ref2, p, count_nonzero(c2, -4, -1)));
    const SymbolPoly first = a(0, 6) * a(0) - a(1, 10);
    items.push_back(count_item("symbolic.comb2_constant", ref2, {{"order", p[0].second}, {"expected", first.to_string()}},
                               c2.coefficient(0) == first ? 0 : 1));

    const auto c1 = symbolic::combination_first_order(order);
    items.push_back(count_item("symbolic.comb1_pole_cancellation", ref1, p, count_nonzero(c1, c1.min_degree(), -3)));
    const SymbolPoly pole_term = first * symbolic::Rational(2);
    items.push_back(count_item("symbolic.comb1_pole_term", ref1,
                               {{"order", p[0].second}, {"expected", pole_term.to_string()}},
                               c1.coefficient(-2) == pole_term ? 0 : 1));
    const SymbolPoly second = a(0, 8) * a(0) * a(0) - a(2, 28);
    items.push_back(count_item("symbolic.comb1_constant", ref1, {{"order", p[0].second}, {"expected", second.to_string()}},
                               c1.coefficient(0) == second ? 0 : 1));

    constexpr int k_max = 10;
    const auto qs = symbolic::derivative_polynomials(k_max);
    long bad = 0;
    mpz_class factorial = 1;
    for (int k = 1; k <= k_max; ++k) {
        factorial *= 2 * k;
        factorial *= 2 * k + 1;
        const auto &q = qs[static_cast<std::size_t>(k - 1)];
        const bool ok = q.constant_term().is_zero() && q.degree() == k + 1
                        && q.leading_coefficient() == SymbolPoly(symbolic::Rational(factorial));
        bad += ok ? 0 : 1;
    }
    items.push_back(count_item("symbolic.derivative_polynomials", "f^(2k) = q_k(f) with q_k(0) = 0",
                               {{"k_max", std::to_string(k_max)}}, bad));
    return items;
}

std::vector<CheckItem> identity_checks(int order, const PrecisionContext &ctx)
{
    std::vector<CheckItem> items;
    const std::string ref = "relations among the Laurent coefficients";
    for (const auto &rec : symbolic::implied_identity_records(order)) {
        const Params p{{"relation", rec.relation.to_string()},
                       {"combination", rec.source_combination == 2 ? "second_order" : "first_order"},
                       {"degree", std::to_string(rec.degree)}};
        items.push_back(guarded("identity.numeric", ref, p, [&] {
            return ball_item("identity.numeric", ref, p, numeric::evaluate_relation(rec.relation, ctx));
        }));
    }
    const Params p{{"relation", "2 zeta(2)^2 - 5 zeta(4)"}};
    items.push_back(guarded("identity.zeta_squares", ref, p, [&] {
        const BoundedValue z2 = numeric::zeta_even(1, ctx);
        const BoundedValue z4 = numeric::zeta_even(2, ctx);
        return ball_item("identity.zeta_squares", ref, p, square(z2) * 2 - z4 * 5);
    }));
    return items;
}

std::vector<CheckItem> strip_checks(const RunConfig &config, const PrecisionContext &ctx)
{
    const std::string ref = "|f(x + iy)| <= 3/y^2 + 2 sum 1/(n^2 + y^2)";
    std::vector<Real> ys;
    for (const auto &y : config.y_values) {
        ys.push_back(Real::parse(y, ctx.bits()));
    }
    std::vector<CheckItem> items;
    try {
        const auto reports = numeric::strip_decay(ys, Real(ctx.bits()), ctx);
        for (const auto &r : reports) {
            const Params p{{"y", r.y.to_string()},
                           {"x", "0"},
                           {"precision_bits", std::to_string(r.precision_bits)},
                           {"resolved", r.resolved ? "true" : "false"}};
            CheckItem item = make_item("strip_decay", ref, p, r.f_magnitude.magnitude_upper(),
                                       sub_down(r.paper_bound.re(), r.paper_bound.radius));
            if (!r.resolved) {
                item.status = Status::inconclusive;
            }
            items.push_back(std::move(item));
        }
        long steps_up = 0;
        for (std::size_t i = 1; i < reports.size(); ++i) {
            steps_up += numeric::strictly_decreasing(std::span(reports).subspan(i - 1, 2)) ? 0 : 1;
        }
        items.push_back(count_item("strip_decay.monotone", "|f(iy)| decreases in y", {}, steps_up));
    } catch (const Error &e) {
        items.push_back(inconclusive("strip_decay", ref, {}, e.what()));
    }
    return items;
}

template <class Fn>
std::vector<CheckItem> grid_checks(const std::string &id, const std::string &ref, std::span<const Complex> grid,
                                   Fn &&fn)
{
    return numeric::parallel_map(grid, [&](const Complex &z) {
        const Params p{{"z", point_text(z)}};
        return guarded(id, ref, p, [&] { return ball_item(id, ref, p, fn(z)); });
    });
}

CheckItem nonvanishing_check(std::span<const Complex> grid, const PrecisionContext &ctx)
{
    const std::string ref = "f has no zeros";
    return guarded("nonvanishing", ref, {}, [&] {
        const auto rep = numeric::nonvanishing_scan(grid, ctx);
        // Largest radius / |f| over the grid: below 1 when every point is separated from 0.
        Real worst(report_bits);
        for (const auto &pt : rep.points) {
            const Real m = abs(pt.f.value).rounded(report_bits);
            const Real ratio = m.is_zero() ? Real(1L, report_bits) : div_up(pt.f.radius, m);
            if (ratio > worst) {
                worst = ratio;
            }
        }
        const Params p{{"points", std::to_string(rep.points.size())},
                       {"min_modulus", rep.min_modulus.to_string(20)},
                       {"argmin", rep.points.empty() ? "" : point_text(rep.points[rep.argmin].z)}};
        CheckItem item = make_item("nonvanishing", ref, p, worst, Real(1L, report_bits));
        item.status = rep.all_nonzero ? Status::pass : Status::fail;
        return item;
    });
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json range_json(const Range &r)
{
    return json{{"lo", r.lo}, {"hi", r.hi}, {"count", r.count}};
}

json config_json(const RunConfig &c)
{
    json j;
    j["precision_bits"] = c.precision_bits;
    j["tolerance"] = c.tolerance;
    j["guard_bits"] = PrecisionContext::default_guard_bits;
    j["method"] = "accelerated";
    j["symbolic_order"] = c.symbolic_order;
    j["real_grid"] = range_json(c.real_grid);
    j["complex_grid"] = json{{"re", range_json(c.complex_re)}, {"im", range_json(c.complex_im)}};
    j["y_values"] = c.y_values;
    j["step"] = c.step;
    j["route_grid"] = range_json(c.route_grid);
    j["self_contained"] = c.self_contained;
    j["perturb_a0"] = c.perturb_a0 ? json(*c.perturb_a0) : json(nullptr);
    return j;
}

// Writes to `path`, or to `out` when the path is empty. False on I/O failure.
bool emit(const std::string &path, const std::string &text, std::ostream &out, std::ostream &err)
{
    if (path.empty()) {
        out << text;
        out.flush();
        return static_cast<bool>(out);
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return false;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: writing '" << path << "' failed\n";
        return false;
    }
    return true;
}

void validate_range(const Range &r, const char *name, mpfr_prec_t bits)
{
    try {
        const Real lo = Real::parse(r.lo, bits);
        const Real hi = Real::parse(r.hi, bits);
        if (!lo.is_finite() || !hi.is_finite() || lo > hi) {
            throw ConfigError(std::string(name) + ": need finite lo <= hi");
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string(name) + ": " + e.what());
    }
    if (r.count == 0) {
        throw ConfigError(std::string(name) + ": point count must be positive");
    }
}

PrecisionContext make_context(mpfr_prec_t bits, const std::string &tolerance)
{
    try {
        return PrecisionContext(bits, tolerance);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("tolerance: ") + e.what());
    }
}

int exit_code_for(const Error &e)
{
    if (dynamic_cast<const PoleProximityError *>(&e) != nullptr) {
        return exit_pole;
    }
    if (dynamic_cast<const ToleranceUnreachableError *>(&e) != nullptr
        || dynamic_cast<const InconclusiveNonvanishingError *>(&e) != nullptr) {
        return exit_unresolved;
    }
    return exit_config;
}

} // namespace

const char *to_string(Status s) noexcept
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::inconclusive:
        return "inconclusive";
    }
    return "fail";
}

PrecisionContext RunConfig::validate() const
{
    PrecisionContext ctx = make_context(precision_bits, tolerance);
    if (symbolic_order < 6 || symbolic_order > 16 || symbolic_order % 2 != 0) {
        throw ConfigError("symbolic order must be even and in [6, 16], got " + std::to_string(symbolic_order));
    }
    validate_range(real_grid, "real grid", precision_bits);
    validate_range(complex_re, "complex grid (re)", precision_bits);
    validate_range(complex_im, "complex grid (im)", precision_bits);
    validate_range(route_grid, "route grid", precision_bits);
    if (y_values.empty()) {
        throw ConfigError("y_values must not be empty");
    }
    for (const auto &y : y_values) {
        try {
            if (!(abs(Real::parse(y, precision_bits)) >= 1L)) {
                throw ConfigError("y value " + y + " must satisfy |y| >= 1");
            }
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("y value: ") + e.what());
        }
    }
    if (!(step > 0.0) || step > 0.1) {
        throw ConfigError("finite-difference step must lie in (0, 0.1]");
    }
    if (format == OutputFormat::csv) {
        throw ConfigError("verify reports are json or text");
    }
    if (perturb_a0) {
        try {
            static_cast<void>(Real::parse(*perturb_a0, precision_bits));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("perturb-a0: ") + e.what());
        }
    }
    return ctx;
}

std::vector<Real> linspace(const Range &r, mpfr_prec_t bits)
{
    const Real lo = Real::parse(r.lo, bits);
    const Real hi = Real::parse(r.hi, bits);
    std::vector<Real> out;
    out.reserve(r.count);
    if (r.count == 1) {
        out.push_back(lo);
        return out;
    }
    const long last = static_cast<long>(r.count) - 1;
    for (long i = 0; i <= last; ++i) {
        out.push_back((lo * (last - i) + hi * i) / last);
    }
    return out;
}

std::vector<Complex> default_grid(const RunConfig &config, mpfr_prec_t bits)
{
    std::vector<Complex> grid;
    for (auto &x : linspace(config.real_grid, bits)) {
        grid.emplace_back(std::move(x));
    }
    const auto res = linspace(config.complex_re, bits);
    const auto ims = linspace(config.complex_im, bits);
    for (const auto &im : ims) {
        for (const auto &re : res) {
            grid.emplace_back(re, im);
        }
    }
    return grid;
}

bool VerificationReport::passed() const
{
    if (items.empty()) {
        return false;
    }
    for (const auto &item : items) {
        if (item.status != Status::pass) {
            return false;
        }
    }
    return true;
}

std::string VerificationReport::to_json(bool with_timestamp) const
{
    json j;
    j["schema"] = report_schema;
    j["suite_status"] = passed() ? "pass" : "fail";
    j["config"] = config_json(config);
    json arr = json::array();
    for (const auto &item : items) {
        json params = json::object();
        for (const auto &[k, v] : item.parameters) {
            params[k] = v;
        }
        json ji{{"check_id", item.check_id},
                {"theorem_ref", item.theorem_ref},
                {"parameters", params},
                {"residual", item.residual.to_string()},
                {"bound", item.bound.to_string()},
                {"status", to_string(item.status)}};
        if (!item.note.empty()) {
            ji["note"] = item.note;
        }
        arr.push_back(std::move(ji));
    }
    j["items"] = std::move(arr);
    if (with_timestamp) {
        j["timestamp"] = timestamp;
    }
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto &item : items) {
        std::string status = to_string(item.status);
        for (auto &c : status) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        os << status << "  " << item.check_id;
        for (const auto &[k, v] : item.parameters) {
            os << ' ' << k << '=' << v;
        }
        os << "  residual=" << item.residual.to_sci(6) << " bound=" << item.bound.to_sci(6);
        if (!item.note.empty()) {
            os << "  (" << item.note << ")";
        }
        os << '\n';
        failed += item.status == Status::pass ? 0 : 1;
    }
    os << "suite: " << (passed() ? "pass" : "fail") << " (" << items.size() - failed << "/" << items.size()
       << " checks passed)\n";
    return os.str();
}

VerificationReport run_verify(const RunConfig &config)
{
    const PrecisionContext ctx = config.validate();
    VerificationReport report;
    report.config = config;
    report.timestamp = utc_timestamp();
    auto &items = report.items;
    auto append = [&items](std::vector<CheckItem> more) {
        for (auto &item : more) {
            items.push_back(std::move(item));
        }
    };

    append(symbolic_checks(config.symbolic_order));
    append(identity_checks(config.symbolic_order, ctx));
    append(strip_checks(config, ctx));

    const auto grid = default_grid(config, ctx.bits());
    std::vector<Complex> real_grid;
    for (auto &x : linspace(config.real_grid, ctx.bits())) {
        real_grid.emplace_back(std::move(x));
    }
    std::optional<Real> shift;
    if (config.perturb_a0) {
        shift = Real::parse(*config.perturb_a0, ctx.bits());
    }
    append(grid_checks("residual_theorem2", "f'' = 6 f^2 - 12 a0 f", grid,
                       [&](const Complex &z) { return numeric::residual_theorem2(z, ctx, shift); }));
    append(grid_checks("residual_theorem3", "(f')^2 = 4 f^3 - 12 a0 f^2", grid,
                       [&](const Complex &z) { return numeric::residual_theorem3(z, ctx, shift); }));
    items.push_back(nonvanishing_check(grid, ctx));

    std::optional<trig::TrigEvaluator> ev;
    try {
        ev.emplace(ctx);
    } catch (const Error &e) {
        items.push_back(inconclusive("trig.setup", "pi = sqrt(6 zeta(2))", {}, e.what()));
        return report;
    }

    const double h = config.step;
    const std::string h_text = Real(h, report_bits).to_sci(6);
    const std::string ref5 = "g'' + 12 a0 g = 2";
    append(numeric::parallel_map(std::span<const Complex>(real_grid), [&](const Complex &z) {
        const Params p{{"z", point_text(z)}, {"h", h_text}};
        return guarded("residual_theorem5", ref5, p,
                       [&] { return ball_item("residual_theorem5", ref5, p, ev->residual_theorem5(z, h)); });
    }));
    items.push_back(guarded("residual_theorem5.initial_value", ref5, {{"z", "0"}}, [&] {
        const BoundedValue g0 = ev->g(Complex(Real(ctx.bits())));
        return make_item("residual_theorem5.initial_value", ref5, {{"z", "0"}}, add_up(abs_up(g0.value), g0.radius),
                         Real(report_bits));
    }));

    const std::string ref_ivp = "c'' + c = 0, c(0) = 1, c'(0) = 0";
    append(numeric::parallel_map(std::span<const Complex>(real_grid), [&](const Complex &z) {
        const Params p{{"z", point_text(z)}, {"h", h_text}};
        return guarded("ivp_residual", ref_ivp, p,
                       [&] { return ball_item("ivp_residual", ref_ivp, p, ev->ivp_residual(z, h)); });
    }));
    items.push_back(guarded("ivp.initial_value", ref_ivp, {}, [&] {
        const BoundedValue c0 = ev->ivp_initial_value();
        return make_item("ivp.initial_value", ref_ivp, {}, add_up(abs_up(c0.value - Real(1L, c0.bits())), c0.radius),
                         Real(report_bits));
    }));
    items.push_back(guarded("ivp.initial_slope", ref_ivp, {{"h", h_text}}, [&] {
        return ball_item("ivp.initial_slope", ref_ivp, {{"h", h_text}}, ev->ivp_initial_slope(h));
    }));

    const std::string ref_route = "cosine agrees with its Taylor series";
    std::vector<Complex> route;
    for (auto &x : linspace(config.route_grid, ctx.bits())) {
        route.emplace_back(std::move(x));
    }
    append(numeric::parallel_map(std::span<const Complex>(route), [&](const Complex &z) {
        const Params p{{"z", point_text(z)}};
        return guarded("route_agreement", ref_route, p, [&] {
            const BoundedValue c = ev->cosine(z);
            const BoundedValue t = ev->taylor_cosine(z);
            return make_item("route_agreement", ref_route, p, abs(c.value - t.value), add_up(c.radius, t.radius));
        });
    }));

    append(grid_checks("pythagoras", "s^2 + c^2 = 1", grid, [&](const Complex &z) {
        return square(ev->sine(z)) + square(ev->cosine(z)) + (-1L);
    }));
    append(grid_checks("cosec_identity", "f(z) = pi^2 / s(pi z)^2", grid,
                       [&](const Complex &z) { return ev->cosec_identity_check(z); }));

    if (!config.self_contained) {
        const Params p{{"reference", "stored decimal constant"}, {"platform_oracle", "true"}};
        items.push_back(guarded("pi_vs_reference", "pi = sqrt(6 zeta(2))", p, [&] {
            const BoundedValue &pi = ev->pi().value;
            const Real ref = Real::parse(pi_reference, std::max<mpfr_prec_t>(ctx.bits(), 200));
            return make_item("pi_vs_reference", "pi = sqrt(6 zeta(2))", p, abs(pi.value.re - ref), pi.radius);
        }));
    }
    return report;
}

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    VerificationReport report;
    try {
        report = run_verify(config);
    } catch (const ConfigError &e) {
        err << "configuration error: " << e.what() << '\n';
        return exit_config;
    }
    const std::string text = config.format == OutputFormat::text ? report.to_text() : report.to_json();
    if (!emit(config.out_path, text, out, err)) {
        return exit_io;
    }
    return report.passed() ? exit_pass : exit_check_failed;
}

int cmd_eval(const EvalRequest &request, std::ostream &out, std::ostream &err)
{
    try {
        const PrecisionContext ctx = make_context(request.precision_bits, request.tolerance);
        Complex z(ctx.bits());
        try {
            z = Complex::parse(request.point, ctx.bits());
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("point: ") + e.what());
        }
        BoundedValue v(ctx.bits());
        const std::string &fn = request.function;
        if (fn == "f") {
            v = numeric::eisenstein_k(2, z, ctx);
        } else if (fn == "g") {
            v = trig::g_eval(z, ctx);
        } else if (fn == "cos") {
            v = trig::cosine(z, ctx);
        } else if (fn == "sin") {
            v = trig::sine(z, ctx);
        } else if (fn == "zeta") {
            if (!z.is_real() || !z.re.is_integer() || z.re < 2L || z.re.to_long() % 2 != 0) {
                throw ConfigError("zeta is evaluated at even integers s >= 2");
            }
            v = numeric::zeta_even(static_cast<unsigned>(z.re.to_long() / 2), ctx);
        } else {
            throw ConfigError("unknown function '" + fn + "' (expected f, g, cos, sin or zeta)");
        }
        std::string text;
        if (request.format == OutputFormat::json) {
            json j;
            j["schema"] = report_schema;
            j["function"] = fn;
            j["point"] = z.to_string();
            j["value"] = v.value.to_string();
            j["radius"] = v.radius.to_string();
            j["terms"] = v.terms;
            j["precision_bits"] = ctx.bits();
            j["tolerance"] = request.tolerance;
            text = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "function = " << fn << "\npoint = " << z.to_string() << "\nvalue = " << v.value.to_string()
               << "\nradius = " << v.radius.to_sci(6) << "\nterms = " << v.terms << "\nprecision_bits = " << ctx.bits()
               << "\ntolerance = " << request.tolerance << '\n';
            text = os.str();
        }
        return emit("", text, out, err) ? exit_pass : exit_io;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int cmd_expand(const std::string &target, int order, int max_order, std::ostream &out, std::ostream &err)
{
    try {
        if (order < 0 || order % 2 != 0) {
            throw ConfigError("expansion order must be even and nonnegative, got " + std::to_string(order));
        }
        if (order > max_order) {
            throw ConfigError("expansion order " + std::to_string(order) + " exceeds the maximum "
                              + std::to_string(max_order));
        }
        std::string text;
        if (target == "f") {
            text = symbolic::series_f(order).to_string() + "\n";
        } else if (target == "comb2") {
            text = symbolic::combination_second_order(order).to_string() + "\n";
        } else if (target == "comb1") {
            text = symbolic::combination_first_order(order).to_string() + "\n";
        } else if (target == "qpolys") {
            if (order < 2) {
                throw ConfigError("qpolys needs order >= 2");
            }
            const auto qs = symbolic::derivative_polynomials(order);
            for (std::size_t k = 0; k < qs.size(); ++k) {
                text += "q" + std::to_string(k + 1) + " = " + qs[k].to_string("w") + "\n";
            }
        } else {
            throw ConfigError("unknown expansion target '" + target + "' (expected f, comb2, comb1 or qpolys)");
        }
        return emit("", text, out, err) ? exit_pass : exit_io;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    }
}

int cmd_table(const TableRequest &request, std::ostream &out, std::ostream &err)
{
    try {
        const RunConfig &config = request.config;
        const PrecisionContext ctx = make_context(config.precision_bits, config.tolerance);
        std::ostringstream os;
        if (request.kind == "strip_decay") {
            std::vector<Real> ys;
            for (const auto &y : config.y_values) {
                try {
                    ys.push_back(Real::parse(y, ctx.bits()));
                } catch (const std::invalid_argument &e) {
                    throw ConfigError(std::string("y value: ") + e.what());
                }
            }
            os << "y,f_abs,f_err,paper_bound\n";
            for (const auto &r : numeric::strip_decay(ys, Real(ctx.bits()), ctx)) {
                // Escalated rows are reported at the requested precision.
                os << r.y.to_string() << ',' << r.f_magnitude.re().rounded(ctx.bits()).to_string() << ','
                   << rounded_up(r.f_magnitude.radius, report_bits).to_string() << ',' << r.paper_bound.re().to_string()
                   << '\n';
            }
        } else if (request.kind == "convergence") {
            Complex z(ctx.bits());
            try {
                z = Complex::parse(request.z, ctx.bits());
            } catch (const std::invalid_argument &e) {
                throw ConfigError(std::string("point: ") + e.what());
            }
            if (request.k < 2) {
                throw ConfigError("convergence table needs k >= 2");
            }
            const BoundedValue ref = numeric::eisenstein_k(request.k, z, ctx.with_tolerance(ldexp(ctx.tolerance_floor(), 8)));
            os << "N,value,tail_bound,abs_error_vs_ref\n";
            for (const std::uint64_t n : request.n_values) {
                const BoundedValue partial = numeric::lattice_partial_sum(request.k, z, n, ctx);
                os << n << ',' << partial.value.to_string() << ','
                   << numeric::lattice_tail_bound(request.k, n).to_string() << ','
                   << abs(partial.value - ref.value).to_string() << '\n';
            }
        } else if (request.kind == "route_error") {
            const trig::TrigEvaluator ev(ctx);
            os << "z,eisenstein_route,taylor_route,abs_diff,summed_bounds\n";
            for (const auto &x : linspace(config.route_grid, ctx.bits())) {
                const Complex z(x);
                const BoundedValue c = ev.cosine(z);
                const BoundedValue t = ev.taylor_cosine(z);
                os << z.to_string(20) << ',' << c.value.to_string() << ',' << t.value.to_string() << ','
                   << abs(c.value - t.value).to_string() << ',' << add_up(c.radius, t.radius).to_string() << '\n';
            }
        } else {
            throw ConfigError("unknown table '" + request.kind + "' (expected strip_decay, convergence or route_error)");
        }
        return emit(config.out_path, os.str(), out, err) ? exit_pass : exit_io;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

} // namespace eisentrig::harness
