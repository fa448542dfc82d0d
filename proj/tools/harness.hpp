#ifndef EISENTRIG_TOOLS_HARNESS_HPP
#define EISENTRIG_TOOLS_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eisentrig/complex.hpp"
#include "eisentrig/precision.hpp"
#include "eisentrig/real.hpp"

namespace eisentrig::harness
{

// Process exit codes.
enum ExitCode : int {
    exit_pass = 0,
    exit_check_failed = 1,
    exit_config = 2,
    exit_pole = 3,
    exit_io = 4,
    exit_unresolved = 5,
};

enum class OutputFormat { json, text, csv };

struct Range {
    std::string lo;
    std::string hi;
    unsigned count = 0;
};

struct RunConfig {
    mpfr_prec_t precision_bits = 128;
    std::string tolerance = "1e-12";
    int symbolic_order = 8;
    Range real_grid{"0.05", "0.95", 64};
    // Rectangle re x im, filled row by row with re_count x im_count points.
    Range complex_re{"0.1", "0.9", 4};
    Range complex_im{"0.1", "2.0", 4};
    std::vector<std::string> y_values{"1", "2", "5", "10", "50", "100"};
    // Finite-difference step for the g and c residuals.
    double step = 1e-4;
    // Route agreement sample on the real axis.
    Range route_grid{"-1", "1", 41};
    OutputFormat format = OutputFormat::json;
    std::string out_path;
    bool self_contained = false;
    std::optional<std::string> perturb_a0;

    // Throws ConfigError on any inconsistency, before any computation.
    [[nodiscard]] PrecisionContext validate() const;
};

enum class Status { pass, fail, inconclusive };
[[nodiscard]] const char *to_string(Status s) noexcept;

struct CheckItem {
    std::string check_id;
    std::string theorem_ref;
    std::vector<std::pair<std::string, std::string>> parameters;
    Real residual;
    Real bound;
    Status status = Status::fail;
    std::string note;
};

struct VerificationReport {
    std::vector<CheckItem> items;
    RunConfig config;
    std::string timestamp;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::string to_json(bool with_timestamp = true) const;
    [[nodiscard]] std::string to_text() const;
};

[[nodiscard]] std::vector<Real> linspace(const Range &r, mpfr_prec_t bits);
// Real grid followed by the complex rectangle.
[[nodiscard]] std::vector<Complex> default_grid(const RunConfig &config, mpfr_prec_t bits);

// Runs every check of the suite in a fixed order.
[[nodiscard]] VerificationReport run_verify(const RunConfig &config);

struct EvalRequest {
    std::string function;
    std::string point;
    mpfr_prec_t precision_bits = 128;
    std::string tolerance = "1e-12";
    OutputFormat format = OutputFormat::text;
};

struct TableRequest {
    std::string kind;
    RunConfig config;
    std::string z = "0.3";
    unsigned k = 2;
    std::vector<std::uint64_t> n_values{10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000};
};

// Each returns the process exit code; diagnostics go to `err`.
int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_eval(const EvalRequest &request, std::ostream &out, std::ostream &err);
int cmd_expand(const std::string &target, int order, int max_order, std::ostream &out, std::ostream &err);
int cmd_table(const TableRequest &request, std::ostream &out, std::ostream &err);

} // namespace eisentrig::harness

#endif
