#include "qdeform/gates.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace qdeform {

namespace {

double hadamard_scale(bool normalized) {
    return normalized ? 1.0 / std::sqrt(2.0) : 1.0;
}

}  // namespace

GateMatrix hadamard_matrix(bool normalized) {
    GateMatrix gate;
    gate.normalized = normalized;
    gate.entries << -1.0, 1.0,  //
        1.0, 1.0;
    gate.entries *= hadamard_scale(normalized);
    return gate;
}

GateMatrix phase_shift_matrix(double theta) {
    GateMatrix gate;
    gate.normalized = true;
    gate.entries.setZero();
    gate.entries(0, 0) = std::polar(1.0, theta);
    gate.entries(1, 1) = Complex(1.0, 0.0);
    return gate;
}

QubitState apply_hadamard(const QubitState& state, bool normalized) {
    const double k = hadamard_scale(normalized);
    QubitState out = state;
    out.up = k * (state.down - state.up);
    out.down = k * (state.down + state.up);
    return out;
}

QubitState apply_phase_shift(const QubitState& state, double theta) {
    QubitState out = state;
    out.up = std::polar(1.0, theta) * state.up;
    return out;
}

Matrix two_mode_hadamard(int dim, const DeformationParameter& q, bool deformed,
                         bool normalized) {
    if (dim < 2) {
        throw std::invalid_argument("two_mode_hadamard needs dim >= 2, got " +
                                    std::to_string(dim));
    }
    const double k = hadamard_scale(normalized);
    // |x> carries mode occupations (n1, n2) = (x, 1 - x).
    const TwoModeState src[2] = {jm_state(0, 1, dim, q, deformed),
                                 jm_state(1, 0, dim, q, deformed)};
    Matrix gate = Matrix::Zero(dim * dim, dim * dim);
    for (int x = 0; x < 2; ++x) {
        const double sign = (x == 1) ? -1.0 : 1.0;
        const Vector image =
            k * (sign * src[x].amplitudes + src[1 - x].amplitudes);
        gate += image * src[x].amplitudes.adjoint();
    }
    return gate;
}

EquivalenceReport verify_hadamard_equivalence(int dim,
                                              const std::vector<DeformationParameter>& q_grid,
                                              const PsiSpec& psi, double tolerance) {
    if (dim < 3) {
        // Creators touching occupations {0, 1} need level 2 present so that
        // truncation artifacts cannot hide inside the checked block.
        throw std::invalid_argument(
            "verify_hadamard_equivalence needs dim >= 3, got " + std::to_string(dim));
    }
    if (q_grid.empty()) {
        throw std::invalid_argument("verify_hadamard_equivalence: empty q grid");
    }

    EquivalenceReport report;
    report.tolerance = tolerance;
    report.q_grid.reserve(q_grid.size());

    const double k = hadamard_scale(true);
    const int total = dim * dim;

    for (const DeformationParameter& q : q_grid) {
        report.q_grid.push_back(q.q);

        const OperatorMatrix factor = realization_factor(dim, q, psi, psi);
        for (int level = 0; level <= 1; ++level) {
            if (std::abs(factor.entries(level, level)) == 0.0) {
                std::ostringstream msg;
                msg << "verify_hadamard_equivalence: realization factor vanishes at level "
                    << level << " for q = " << q.q << " (" << psi.describe() << ")";
                throw std::domain_error(msg.str());
            }
        }

        // Qubit basis states produced by the psi-carrying realized creators.
        // Each picks up the common factor psi^{1/2} relative to the ordinary
        // construction; that factor is divided out before comparing.
        const Matrix c1 = mode1_operator(harmonic_realized_q_creation(dim, q, psi, psi));
        const Matrix c2 = mode2_operator(harmonic_realized_q_creation(dim, q, psi, psi));
        const Vector vacuum = two_mode_vacuum(dim).amplitudes;
        const Vector realized[2] = {c2 * vacuum, c1 * vacuum};

        Vector plain[2] = {Vector::Zero(total), Vector::Zero(total)};
        plain[0](0 * dim + 1) = Complex(1.0, 0.0);  // (n1, n2) = (0, 1)
        plain[1](1 * dim + 0) = Complex(1.0, 0.0);  // (n1, n2) = (1, 0)

        const double scale = std::sqrt(psi_eval(psi, q));
        double residual = 0.0;
        for (int x = 0; x < 2; ++x) {
            const double sign = (x == 1) ? -1.0 : 1.0;
            const Vector image = (k / scale) * (sign * realized[x] + realized[1 - x]);
            const Vector expected = k * (sign * plain[x] + plain[1 - x]);
            residual = std::max(residual, (image - expected).cwiseAbs().maxCoeff());
        }
        report.max_operator_residual = std::max(report.max_operator_residual, residual);
    }

    for (int n = 0; n <= 1; ++n) {
        double worst = 0.0;
        for (const DeformationParameter& q : q_grid) {
            worst = std::max(worst,
                             std::abs(consistency_ratio(static_cast<double>(n), q) - 1.0));
        }
        report.ratio_residuals[static_cast<std::size_t>(n)] = worst;
    }

    report.verdict = report.max_operator_residual <= tolerance &&
                     report.ratio_residuals[0] <= tolerance &&
                     report.ratio_residuals[1] <= tolerance;
    return report;
}

double case_distinguishability(double s, double n_hat, double theta) {
    if (!(s > 0.0) || s > 1.0) {
        throw std::domain_error(
            "case_distinguishability needs 0 < s <= 1, got s = " + std::to_string(s));
    }
    const CaseParameters deformed_case = CaseParameters::case_ii(s, n_hat);
    const CaseParameters plain_case = CaseParameters::case_i(s);
    const DeformationParameter q = q_from_s(s);
    // The basis states populate levels 0 and 1 only; two levels suffice.
    const int dim = 2;
    const QubitState after2 =
        apply_phase_shift(qubit_basis_state(1, dim, q, deformed_case), theta);
    const QubitState after1 =
        apply_phase_shift(qubit_basis_state(1, dim, q, plain_case), theta);
    return norm_ratio(after2, after1);
}

}  // namespace qdeform
