#ifndef QDEFORM_CLI_HPP
#define QDEFORM_CLI_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qdeform/gates.hpp"
#include "qdeform/report.hpp"

namespace qdeform {

enum class Command { Verify, Sweep, Dump };

struct RunConfig {
    Command command = Command::Verify;
    std::vector<double> s_values{0.1, 0.5, 1.0};
    std::vector<double> n_hat_values{1.0, 2.0, 3.0};
    // theta default depends on the subcommand: verify probes {0, pi/2, pi},
    // sweep defaults to the single point {0} so the row count is exactly the
    // product of the grids the user asked for.
    std::vector<double> theta_values;
    int dim = 8;
    PsiSpec psi = PsiSpec::one();
    double tolerance = 1e-10;
    ReportFormat format = ReportFormat::Json;
    std::string output_path;  // empty = standard output
};

// Parse failure or help request. exit_code 2 for bad usage, 0 for --help;
// what() carries the message / help text.
struct UsageError : std::runtime_error {
    int exit_code;
    UsageError(const std::string& message, int code)
        : std::runtime_error(message), exit_code(code) {}
};

// Parses the arguments after the program name. Throws UsageError on unknown
// flags, out-of-range values (s outside [0,1], n_hat < 0, dim < 3,
// tolerance <= 0), or a help request.
RunConfig parse_config(const std::vector<std::string>& args);

// The full verification suite: algebra residuals, truncation defect, Hadamard
// equivalence, Case II / Case I norm ratios, and phase-gate distinguishability
// across the configured grids — one row per (check, grid point). Checks that
// need a deformation (the two Case II families) are emitted for s > 0 and
// n_hat > 0 grid points only. Internal domain errors become failed rows with
// the diagnostic appended to the quantity name, never exceptions.
std::vector<ReportRow> run_verify(const RunConfig& config);

// Phase-gate distinguishability over the full cartesian (s, n_hat, theta)
// grid, one row per point. Points outside the Case II domain (s = 0 or
// n_hat = 0) produce failed diagnostic rows.
std::vector<ReportRow> run_sweep(const RunConfig& config);

// JSON document with the operator matrices (row-major [re, im] pairs) and the
// qubit basis states for every configured s. Debugging aid; JSON only.
std::string render_dump(const RunConfig& config);

// Parse, run, emit. Returns the process exit status: 0 if every row passed
// (or the dump was written), 1 if any check failed, 2 on usage errors.
int run_cli(int argc, char** argv);

}  // namespace qdeform

#endif
