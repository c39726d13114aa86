#include "qdeform/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <utility>

#include "CLI11.hpp"

namespace qdeform {

namespace {

// Raw option values as given on the command line, before validation.
struct RawOptions {
    std::vector<double> s_values;
    std::vector<double> n_hat_values;
    std::vector<double> theta_values;
    int dim = 8;
    std::string psi = "one";
    double tolerance = 1e-10;
    std::string format = "json";
    std::string out;
};

void add_common_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--s", raw.s_values, "deformation grid: s values in [0,1] (default 0.1,0.5,1.0)")
        ->delimiter(',');
    cmd->add_option("--nhat", raw.n_hat_values, "n_hat grid: Case II exponents >= 0 (default 1,2,3)")
        ->delimiter(',');
    cmd->add_option("--theta", raw.theta_values, "phase angles in radians (default 0,pi/2,pi; sweep: 0)")
        ->delimiter(',');
    cmd->add_option("--dim", raw.dim, "Fock truncation dimension, >= 3 (default 8)");
    cmd->add_option("--psi", raw.psi, "psi function: 'one' or 'power:<n_hat>' (default one)");
    cmd->add_option("--tol", raw.tolerance, "pass/fail tolerance, > 0 (default 1e-10)");
    cmd->add_option("--format", raw.format, "output format: json or csv (default json)");
    cmd->add_option("--out", raw.out, "output file path (default: standard output)");
}

PsiSpec parse_psi(const std::string& text) {
    if (text == "one") {
        return PsiSpec::one();
    }
    const std::string prefix = "power:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string tail = text.substr(prefix.size());
        std::size_t used = 0;
        double n_hat = 0.0;
        try {
            n_hat = std::stod(tail, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tail.size()) {
            throw UsageError("--psi power:<n_hat> needs a numeric exponent, got '" + tail + "'", 2);
        }
        if (n_hat < 0.0) {
            throw UsageError("--psi power exponent must be >= 0, got " + tail, 2);
        }
        return PsiSpec::power_law(n_hat);
    }
    throw UsageError("--psi must be 'one' or 'power:<n_hat>', got '" + text + "'", 2);
}

void add_row(std::vector<ReportRow>& rows, double tolerance, double s, double n_hat,
             double theta, std::string quantity, double computed, double expected) {
    ReportRow row;
    row.s = s;
    row.n_hat = n_hat;
    row.theta = theta;
    row.quantity = std::move(quantity);
    row.computed = computed;
    row.expected = expected;
    row.residual = scaled_error(computed, expected);
    row.pass = row.residual <= tolerance;
    rows.push_back(std::move(row));
}

// Domain errors surface as failed rows carrying the diagnostic, so a bad grid
// point cannot abort the rest of the run.
void add_error_row(std::vector<ReportRow>& rows, double s, double n_hat, double theta,
                   const std::string& quantity, const std::string& diagnostic) {
    ReportRow row;
    row.s = s;
    row.n_hat = n_hat;
    row.theta = theta;
    row.quantity = quantity + " [error: " + diagnostic + "]";
    row.residual = std::numeric_limits<double>::max();
    row.pass = false;
    rows.push_back(std::move(row));
}

std::string relation_name(AlgebraRelation relation) {
    switch (relation) {
        case AlgebraRelation::DeformedCommutator_1a: return "algebra/commutator_1a";
        case AlgebraRelation::NumberLadder_1b: return "algebra/number_ladder_1b";
        case AlgebraRelation::BracketProduct_1b: return "algebra/bracket_product_1b";
        case AlgebraRelation::FunctionShift_1c: return "algebra/function_shift_1c";
    }
    return "algebra/unknown";
}

// Case parameters matching the configured psi: Case II when it is a power law
// with a positive exponent, Case I otherwise.
CaseParameters case_for_psi(const PsiSpec& psi, double s) {
    if (psi.kind == PsiSpec::Kind::PowerLaw && psi.n_hat > 0.0) {
        return CaseParameters::case_ii(s, psi.n_hat);
    }
    return CaseParameters::case_i(s);
}

void write_complex_matrix(std::ostream& out, const Matrix& m) {
    out << '[';
    for (int row = 0; row < m.rows(); ++row) {
        for (int col = 0; col < m.cols(); ++col) {
            if (row != 0 || col != 0) out << ',';
            out << '[' << format_double(m(row, col).real()) << ','
                << format_double(m(row, col).imag()) << ']';
        }
    }
    out << ']';
}

void write_qubit_state(std::ostream& out, int basis, const QubitState& state) {
    out << "{\"basis\":" << basis << ",\"case\":\""
        << (state.case_tag == CaseTag::CaseII ? "II" : "I") << "\",\"scale\":"
        << format_double(state.scale) << ",\"up\":[" << format_double(state.up.real())
        << ',' << format_double(state.up.imag()) << "],\"down\":["
        << format_double(state.down.real()) << ',' << format_double(state.down.imag())
        << "]}";
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"q-deformed oscillator qubits: verification and parameter sweeps"};
    app.require_subcommand(1);

    RawOptions raw;
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    CLI::App* sweep =
        app.add_subcommand("sweep", "sweep the Case II / Case I ratio over (s, n_hat, theta)");
    CLI::App* dump = app.add_subcommand("dump", "dump operator matrices and qubit states as JSON");
    for (CLI::App* cmd : {verify, sweep, dump}) {
        add_common_options(cmd, raw);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help("", CLI::AppFormatMode::All), 0);
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\nRun with --help for usage.", 2);
    }

    RunConfig config;
    if (app.got_subcommand(sweep)) {
        config.command = Command::Sweep;
    } else if (app.got_subcommand(dump)) {
        config.command = Command::Dump;
    } else {
        config.command = Command::Verify;
    }

    if (!raw.s_values.empty()) config.s_values = raw.s_values;
    if (!raw.n_hat_values.empty()) config.n_hat_values = raw.n_hat_values;
    if (!raw.theta_values.empty()) {
        config.theta_values = raw.theta_values;
    } else if (config.command == Command::Sweep) {
        config.theta_values = {0.0};
    } else {
        config.theta_values = {0.0, std::acos(-1.0) / 2.0, std::acos(-1.0)};
    }
    config.dim = raw.dim;
    config.psi = parse_psi(raw.psi);
    config.tolerance = raw.tolerance;
    config.output_path = raw.out;

    if (raw.format == "json") {
        config.format = ReportFormat::Json;
    } else if (raw.format == "csv") {
        config.format = ReportFormat::Csv;
    } else {
        throw UsageError("--format must be json or csv, got '" + raw.format + "'", 2);
    }

    for (double s : config.s_values) {
        if (!(s >= 0.0) || s > 1.0) {
            throw UsageError("--s values must lie in [0, 1], got " + format_double(s), 2);
        }
    }
    for (double n_hat : config.n_hat_values) {
        if (!(n_hat >= 0.0)) {
            throw UsageError("--nhat values must be >= 0, got " + format_double(n_hat), 2);
        }
    }
    if (config.dim < 3) {
        throw UsageError("--dim must be >= 3, got " + std::to_string(config.dim), 2);
    }
    if (!(config.tolerance > 0.0)) {
        throw UsageError("--tol must be > 0, got " + format_double(config.tolerance), 2);
    }
    if (config.command == Command::Dump && config.format == ReportFormat::Csv) {
        throw UsageError("dump supports only --format json", 2);
    }
    return config;
}

std::vector<ReportRow> run_verify(const RunConfig& config) {
    std::vector<ReportRow> rows;
    const double tol = config.tolerance;

    for (double s : config.s_values) {
        try {
            const DeformationParameter q = q_from_s(s);
            for (const AlgebraReport& report : algebra_residuals(config.dim, q)) {
                add_row(rows, tol, s, 0.0, 0.0, relation_name(report.relation),
                        report.max_residual, 0.0);
            }
            add_row(rows, tol, s, 0.0, 0.0, "algebra/truncation_defect_top",
                    truncation_defect_measured(config.dim, q),
                    truncation_defect_predicted(config.dim, q));
        } catch (const std::exception& e) {
            add_error_row(rows, s, 0.0, 0.0, "algebra/suite", e.what());
        }

        try {
            const DeformationParameter q = q_from_s(s);
            const EquivalenceReport eq =
                verify_hadamard_equivalence(config.dim, {q}, config.psi, tol);
            add_row(rows, tol, s, 0.0, 0.0, "hadamard/operator_equivalence",
                    eq.max_operator_residual, 0.0);
            add_row(rows, tol, s, 0.0, 0.0, "hadamard/consistency_ratio_nhat0",
                    consistency_ratio(0.0, q), 1.0);
            add_row(rows, tol, s, 1.0, 0.0, "hadamard/consistency_ratio_nhat1",
                    consistency_ratio(1.0, q), 1.0);
        } catch (const std::exception& e) {
            add_error_row(rows, s, 0.0, 0.0, "hadamard/operator_equivalence", e.what());
        }

        // The Case II family needs a real deformation and a positive exponent;
        // other grid points have nothing to compare.
        for (double n_hat : config.n_hat_values) {
            if (!(s > 0.0) || !(n_hat > 0.0)) continue;
            const double expected = std::exp(s * n_hat);

            try {
                const DeformationParameter q = q_from_s(s);
                const QubitState case2 =
                    qubit_basis_state(1, config.dim, q, CaseParameters::case_ii(s, n_hat));
                const QubitState case1 =
                    qubit_basis_state(1, config.dim, q, CaseParameters::case_i(s));
                add_row(rows, tol, s, n_hat, 0.0, "schwinger/norm_ratio",
                        norm_ratio(case2, case1), expected);
            } catch (const std::exception& e) {
                add_error_row(rows, s, n_hat, 0.0, "schwinger/norm_ratio", e.what());
            }

            for (double theta : config.theta_values) {
                try {
                    add_row(rows, tol, s, n_hat, theta, "gates/phase_distinguishability",
                            case_distinguishability(s, n_hat, theta), expected);
                } catch (const std::exception& e) {
                    add_error_row(rows, s, n_hat, theta, "gates/phase_distinguishability",
                                  e.what());
                }
            }
        }
    }
    return rows;
}

std::vector<ReportRow> run_sweep(const RunConfig& config) {
    std::vector<ReportRow> rows;
    for (double s : config.s_values) {
        for (double n_hat : config.n_hat_values) {
            for (double theta : config.theta_values) {
                try {
                    add_row(rows, config.tolerance, s, n_hat, theta, "sweep/phase_ratio",
                            case_distinguishability(s, n_hat, theta), std::exp(s * n_hat));
                } catch (const std::exception& e) {
                    add_error_row(rows, s, n_hat, theta, "sweep/phase_ratio", e.what());
                }
            }
        }
    }
    return rows;
}

std::string render_dump(const RunConfig& config) {
    std::ostringstream out;
    out << "{\n\"dim\":" << config.dim << ",\n\"psi\":\"" << config.psi.describe()
        << "\",\n\"entries\":[\n";

    for (std::size_t i = 0; i < config.s_values.size(); ++i) {
        const double s = config.s_values[i];
        const DeformationParameter q = q_from_s(s);

        std::vector<std::pair<std::string, Matrix>> matrices;
        matrices.emplace_back("annihilator", build_annihilator(config.dim).entries);
        matrices.emplace_back("creation", build_creation(config.dim).entries);
        matrices.emplace_back("number", build_number(config.dim).entries);
        matrices.emplace_back("q_annihilator", build_q_annihilator(config.dim, q).entries);
        matrices.emplace_back("q_creation", build_q_creation(config.dim, q).entries);
        matrices.emplace_back(
            "realization_factor",
            realization_factor(config.dim, q, config.psi, config.psi).entries);
        matrices.emplace_back(
            "realized_q_annihilator",
            harmonic_realized_q_annihilator(config.dim, q, config.psi, config.psi).entries);
        matrices.emplace_back(
            "realized_q_creation",
            harmonic_realized_q_creation(config.dim, q, config.psi, config.psi).entries);
        try {
            // Undefined at s = 0 for a non-trivial psi; omitted there.
            matrices.emplace_back("shifted_number",
                                  shifted_number(config.dim, s, config.psi).entries);
        } catch (const std::exception&) {
        }

        out << "{\"s\":" << format_double(s) << ",\"q\":" << format_double(q.q)
            << ",\"matrices\":{";
        for (std::size_t m = 0; m < matrices.size(); ++m) {
            if (m != 0) out << ',';
            out << '"' << matrices[m].first << "\":";
            write_complex_matrix(out, matrices[m].second);
        }
        out << "},\"states\":[";
        const CaseParameters params = case_for_psi(config.psi, s);
        for (int basis = 0; basis <= 1; ++basis) {
            if (basis != 0) out << ',';
            write_qubit_state(out, basis, qubit_basis_state(basis, config.dim, q, params));
        }
        out << "]}";
        out << (i + 1 < config.s_values.size() ? ",\n" : "\n");
    }
    out << "]\n}\n";
    return out.str();
}

int run_cli(int argc, char** argv) {
    RunConfig config;
    try {
        config = parse_config(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const UsageError& e) {
        (e.exit_code == 0 ? std::cout : std::cerr) << e.what() << '\n';
        return e.exit_code;
    }

    std::string dump_text;
    std::vector<ReportRow> rows;
    try {
        if (config.command == Command::Dump) {
            dump_text = render_dump(config);
        } else if (config.command == Command::Verify) {
            rows = run_verify(config);
        } else {
            rows = run_sweep(config);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!config.output_path.empty()) {
        file.open(config.output_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << config.output_path << '\n';
            return 2;
        }
        out = &file;
    }

    if (config.command == Command::Dump) {
        *out << dump_text;
    } else {
        emit_report(rows, config.format, *out);
    }
    out->flush();
    if (!*out) {
        std::cerr << "error writing output\n";
        return 2;
    }
    return config.command == Command::Dump || all_pass(rows) ? 0 : 1;
}

}  // namespace qdeform
