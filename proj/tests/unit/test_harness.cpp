#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eisentrig/errors.hpp"
#include "harness.hpp"

using namespace eisentrig;
using namespace eisentrig::harness;

namespace
{

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string expand(const std::string &target, int order)
{
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(cmd_expand(target, order, 16, out, err) == exit_pass);
    return out.str();
}

// A reduced grid keeps the suite fast; the full default run is the acceptance binary's job.
RunConfig small_config()
{
    RunConfig c;
    c.real_grid.count = 6;
    c.complex_re.count = 2;
    c.complex_im.count = 2;
    c.route_grid.count = 5;
    c.y_values = {"1", "5", "20"};
    return c;
}

const VerificationReport &small_report()
{
    static const VerificationReport r = run_verify(small_config());
    return r;
}

} // namespace

TEST_CASE("expansions match the golden files")
{
    const std::string dir = EISENTRIG_GOLDEN_DIR;
    CHECK(expand("f", 4) == read_file(dir + "/expand_f_4.txt"));
    CHECK(expand("comb2", 6) == read_file(dir + "/expand_comb2_6.txt"));
    CHECK(expand("comb1", 8) == read_file(dir + "/expand_comb1_8.txt"));
    CHECK(expand("qpolys", 4) == read_file(dir + "/expand_qpolys_4.txt"));
}

TEST_CASE("expand rejects bad orders")
{
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_expand("f", 5, 16, out, err) == exit_config);
    CHECK(cmd_expand("comb2", -2, 16, out, err) == exit_config);
    CHECK(cmd_expand("comb1", 18, 16, out, err) == exit_config);
    CHECK(cmd_expand("qpolys", 0, 16, out, err) == exit_config);
    CHECK(cmd_expand("nope", 4, 16, out, err) == exit_config);
    CHECK(out.str().empty());
    CHECK(err.str().find("error:") != std::string::npos);
}

TEST_CASE("linspace and grid layout")
{
    const auto xs = linspace(Range{"0", "1", 5}, 64);
    REQUIRE(xs.size() == 5);
    CHECK(xs.front().is_zero());
    CHECK(xs.back() == 1L);
    CHECK(xs[2] == Real::parse("0.5", 64));
    CHECK(linspace(Range{"3", "7", 1}, 64).at(0) == 3L);
    const RunConfig c = small_config();
    const auto grid = default_grid(c, 128);
    CHECK(grid.size() == 6 + 4);
    CHECK(grid[0].is_real());
    CHECK(grid[6].im == Real::parse("0.1", 128));
}

TEST_CASE("configuration errors surface before computation")
{
    RunConfig c;
    c.symbolic_order = 7;
    CHECK_THROWS_AS(static_cast<void>(c.validate()), ConfigError);
    c = RunConfig{};
    c.tolerance = "1e-300";
    c.precision_bits = 64;
    CHECK_THROWS_AS(static_cast<void>(c.validate()), ConfigError);
    c = RunConfig{};
    c.y_values = {"0.5"};
    CHECK_THROWS_AS(static_cast<void>(c.validate()), ConfigError);
    c = RunConfig{};
    c.format = OutputFormat::csv;
    CHECK_THROWS_AS(static_cast<void>(c.validate()), ConfigError);
    c = RunConfig{};
    c.step = 0.0;
    CHECK_THROWS_AS(static_cast<void>(c.validate()), ConfigError);
    c = RunConfig{};
    c.perturb_a0 = "x";
    CHECK_THROWS_AS(static_cast<void>(c.validate()), ConfigError);
    CHECK_NOTHROW(static_cast<void>(RunConfig{}.validate()));

    std::ostringstream out;
    std::ostringstream err;
    c = RunConfig{};
    c.tolerance = "abc";
    CHECK(cmd_verify(c, out, err) == exit_config);
    CHECK(out.str().empty());
}

TEST_CASE("reduced suite passes and covers every check family")
{
    const VerificationReport &r = small_report();
    CHECK(r.passed());
    std::set<std::string> ids;
    for (const auto &item : r.items) {
        ids.insert(item.check_id);
        CHECK_MESSAGE(item.status == Status::pass, item.check_id, " ", item.note);
        CHECK(!item.theorem_ref.empty());
    }
    for (const char *id : {"symbolic.comb2_pole_cancellation", "symbolic.comb1_pole_cancellation",
                           "symbolic.derivative_polynomials", "identity.numeric", "identity.zeta_squares",
                           "strip_decay", "strip_decay.monotone", "residual_theorem2", "residual_theorem3",
                           "nonvanishing", "residual_theorem5", "residual_theorem5.initial_value", "ivp_residual",
                           "ivp.initial_value", "ivp.initial_slope", "route_agreement", "pythagoras",
                           "cosec_identity", "pi_vs_reference"}) {
        CHECK_MESSAGE(ids.count(id) == 1, id);
    }
}

TEST_CASE("json report is deterministic apart from the timestamp")
{
    const VerificationReport &first = small_report();
    const VerificationReport second = run_verify(small_config());
    CHECK(first.to_json(false) == second.to_json(false));
    const auto j = nlohmann::json::parse(first.to_json());
    CHECK(j["schema"] == 1);
    CHECK(j["suite_status"] == "pass");
    CHECK(j.contains("timestamp"));
    CHECK(!nlohmann::json::parse(first.to_json(false)).contains("timestamp"));
    REQUIRE(j["items"].size() == first.items.size());
    const auto &item = j["items"][0];
    for (const char *key : {"check_id", "theorem_ref", "parameters", "residual", "bound", "status"}) {
        CHECK_MESSAGE(item.contains(key), key);
    }
    CHECK(first.to_text().find("suite: pass") != std::string::npos);
}

TEST_CASE("perturbed a0 fails the f residuals only")
{
    RunConfig c = small_config();
    c.perturb_a0 = "1e-3";
    c.self_contained = true;
    const VerificationReport r = run_verify(c);
    CHECK(!r.passed());
    bool saw_r2_fail = false;
    for (const auto &item : r.items) {
        if (item.check_id == "residual_theorem2" || item.check_id == "residual_theorem3") {
            CHECK(item.status == Status::fail);
            saw_r2_fail = saw_r2_fail || item.check_id == "residual_theorem2";
        } else {
            CHECK_MESSAGE(item.status == Status::pass, item.check_id);
        }
        CHECK(item.check_id != "pi_vs_reference");
    }
    CHECK(saw_r2_fail);
}

TEST_CASE("eval exit codes and output")
{
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_eval({"f", "0.5"}, out, err) == exit_pass);
    CHECK(out.str().find("function = f") != std::string::npos);
    CHECK(out.str().find("radius = ") != std::string::npos);

    // f(1/2) = pi^2 and zeta(4) = pi^4 / 90, each within the printed radius.
    const auto eval_json = [&err](const char *fn, const char *point) {
        std::ostringstream jout;
        EvalRequest req{fn, point};
        req.format = OutputFormat::json;
        REQUIRE(cmd_eval(req, jout, err) == exit_pass);
        return nlohmann::json::parse(jout.str());
    };
    Real pi(256);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    const auto jf = eval_json("f", "0.5");
    CHECK(abs(Real::parse(jf["value"].get<std::string>(), 128) - pi * pi)
          <= Real::parse(jf["radius"].get<std::string>(), 64));
    const auto jz = eval_json("zeta", "4");
    CHECK(jz["function"] == "zeta");
    CHECK(jz["terms"].get<int>() > 0);
    CHECK(abs(Real::parse(jz["value"].get<std::string>(), 128) - pi * pi * pi * pi / 90L)
          <= Real::parse(jz["radius"].get<std::string>(), 64));

    std::ostringstream sink;
    CHECK(cmd_eval({"f", "1.0"}, sink, err) == exit_pole);
    CHECK(cmd_eval({"g", "-3"}, sink, err) == exit_pass);
    CHECK(cmd_eval({"zeta", "3"}, sink, err) == exit_config);
    CHECK(cmd_eval({"tan", "0.5"}, sink, err) == exit_config);
    CHECK(cmd_eval({"f", "0.5+"}, sink, err) == exit_config);
    EvalRequest tight{"f", "0.5"};
    tight.precision_bits = 64;
    tight.tolerance = "1e-300";
    CHECK(cmd_eval(tight, sink, err) == exit_config);
}

TEST_CASE("tables")
{
    std::ostringstream err;
    TableRequest strip;
    strip.kind = "strip_decay";
    strip.config.y_values = {"1", "2"};
    std::ostringstream s;
    REQUIRE(cmd_table(strip, s, err) == exit_pass);
    CHECK(s.str().rfind("y,f_abs,f_err,paper_bound\n", 0) == 0);

    TableRequest conv;
    conv.kind = "convergence";
    conv.n_values = {10, 100};
    std::ostringstream c;
    REQUIRE(cmd_table(conv, c, err) == exit_pass);
    CHECK(c.str().rfind("N,value,tail_bound,abs_error_vs_ref\n", 0) == 0);

    TableRequest route;
    route.kind = "route_error";
    route.config.route_grid.count = 3;
    std::ostringstream r;
    REQUIRE(cmd_table(route, r, err) == exit_pass);
    CHECK(r.str().rfind("z,eisenstein_route,taylor_route,abs_diff,summed_bounds\n", 0) == 0);

    std::ostringstream sink;
    TableRequest bad;
    bad.kind = "nope";
    CHECK(cmd_table(bad, sink, err) == exit_config);
}

TEST_CASE("unwritable output maps to an I/O exit code")
{
    RunConfig c = small_config();
    c.out_path = "/nonexistent-dir/report.json";
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_verify(c, out, err) == exit_io);
    CHECK(!err.str().empty());
}
