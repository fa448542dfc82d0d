#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "harness.hpp"

using namespace eisentrig::harness;

namespace
{

const std::map<std::string, OutputFormat> report_formats{{"json", OutputFormat::json}, {"text", OutputFormat::text}};

void add_precision_options(CLI::App *cmd, mpfr_prec_t &bits, std::string &tolerance)
{
    cmd->add_option("--precision", bits, "working precision in bits")->capture_default_str();
    cmd->add_option("--tolerance", tolerance, "absolute error target")->capture_default_str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Bounded lattice-sum evaluation and the trigonometry built on it"};
    app.require_subcommand(1);

    RunConfig verify_cfg;
    std::string perturb;
    auto *verify = app.add_subcommand("verify", "run the whole verification suite");
    add_precision_options(verify, verify_cfg.precision_bits, verify_cfg.tolerance);
    verify->add_option("--order", verify_cfg.symbolic_order, "symbolic expansion order")->capture_default_str();
    verify->add_flag("--self-contained", verify_cfg.self_contained, "skip the stored-constant comparison");
    verify->add_option("--format", verify_cfg.format, "json or text")
        ->transform(CLI::CheckedTransformer(report_formats, CLI::ignore_case));
    verify->add_option("--out", verify_cfg.out_path, "write the report here instead of stdout");
    verify->add_option("--perturb-a0", perturb, "add EPS to a0 in the f residuals (self-test)");
    verify->add_option("--real-points", verify_cfg.real_grid.count, "real grid size")->capture_default_str();
    verify->add_option("--step", verify_cfg.step, "finite-difference step")->capture_default_str();
    verify->add_option("--y", verify_cfg.y_values, "strip-decay heights")->delimiter(',');

    EvalRequest eval_req;
    auto *eval = app.add_subcommand("eval", "evaluate one function at one point");
    eval->add_option("function", eval_req.function, "f, g, cos, sin or zeta")->required();
    eval->add_option("point", eval_req.point, "re, re+imi or imi")->required();
    add_precision_options(eval, eval_req.precision_bits, eval_req.tolerance);
    eval->add_option("--format", eval_req.format, "json or text")
        ->transform(CLI::CheckedTransformer(report_formats, CLI::ignore_case));

    std::string target;
    int order = 0;
    int max_order = 16;
    auto *expand = app.add_subcommand("expand", "print a symbolic expansion");
    expand->add_option("target", target, "f, comb2, comb1 or qpolys")->required();
    expand->add_option("order", order, "even order (k_max for qpolys)")->required();
    expand->add_option("--max-order", max_order, "largest accepted order")->capture_default_str();

    TableRequest table_req;
    auto *table = app.add_subcommand("table", "emit a CSV table");
    table->add_option("kind", table_req.kind, "strip_decay, convergence or route_error")->required();
    add_precision_options(table, table_req.config.precision_bits, table_req.config.tolerance);
    table->add_option("--y", table_req.config.y_values, "strip-decay heights")->delimiter(',');
    table->add_option("--z", table_req.z, "point for the convergence table")->capture_default_str();
    table->add_option("--k", table_req.k, "lattice exponent for the convergence table")->capture_default_str();
    table->add_option("--n", table_req.n_values, "truncation points for the convergence table")->delimiter(',');
    table->add_option("--points", table_req.config.route_grid.count, "route_error sample size")
        ->capture_default_str();
    table->add_option("--out", table_req.config.out_path, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_config;
    }

    if (*verify) {
        if (!perturb.empty()) {
            verify_cfg.perturb_a0 = perturb;
        }
        return cmd_verify(verify_cfg, std::cout, std::cerr);
    }
    if (*eval) {
        return cmd_eval(eval_req, std::cout, std::cerr);
    }
    if (*expand) {
        return cmd_expand(target, order, max_order, std::cout, std::cerr);
    }
    return cmd_table(table_req, std::cout, std::cerr);
}
