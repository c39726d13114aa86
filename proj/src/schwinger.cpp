#include "qdeform/schwinger.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdeform {

namespace {

void require_mode_dim(int dim, const char* where) {
    if (dim < 2) {
        std::ostringstream msg;
        msg << where << " requires dim >= 2 per mode, got " << dim;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

TwoModeState two_mode_vacuum(int dim) {
    require_mode_dim(dim, "two_mode_vacuum");
    TwoModeState state{dim, Vector::Zero(dim * dim)};
    state.amplitudes(0) = Complex(1.0, 0.0);
    return state;
}

Matrix mode1_operator(const OperatorMatrix& op) {
    const int d = op.dim;
    Matrix out = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (op.entries(i, j) == Complex(0.0, 0.0)) continue;
            for (int k = 0; k < d; ++k) {
                out(i * d + k, j * d + k) = op.entries(i, j);
            }
        }
    }
    return out;
}

Matrix mode2_operator(const OperatorMatrix& op) {
    const int d = op.dim;
    Matrix out = Matrix::Zero(d * d, d * d);
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (op.entries(i, j) == Complex(0.0, 0.0)) continue;
                out(k * d + i, k * d + j) = op.entries(i, j);
            }
        }
    }
    return out;
}

TwoModeState jm_state(int n1, int n2, int dim, const DeformationParameter& q, bool deformed) {
    require_mode_dim(dim, "jm_state");
    if (n1 < 0 || n2 < 0 || n1 > dim - 1 || n2 > dim - 1) {
        std::ostringstream msg;
        msg << "jm_state occupation (" << n1 << ", " << n2 << ") outside truncation 0.."
            << dim - 1;
        throw std::invalid_argument(msg.str());
    }

    const OperatorMatrix creator =
        deformed ? build_q_creation(dim, q) : build_creation(dim);
    const Matrix c1 = mode1_operator(creator);
    const Matrix c2 = mode2_operator(creator);

    TwoModeState state = two_mode_vacuum(dim);
    for (int k = 0; k < n1; ++k) state.amplitudes = c1 * state.amplitudes;
    for (int k = 0; k < n2; ++k) state.amplitudes = c2 * state.amplitudes;

    double normalization;
    if (deformed) {
        normalization = std::sqrt(q_factorial(n1, q) * q_factorial(n2, q));
    } else {
        normalization = std::sqrt(std::tgamma(n1 + 1.0) * std::tgamma(n2 + 1.0));
    }
    state.amplitudes /= normalization;
    return state;
}

CaseParameters CaseParameters::case_i(double s) {
    q_from_s(s);  // range check
    return CaseParameters{s, 0.0, PsiSpec::one()};
}

CaseParameters CaseParameters::case_ii(double s, double n_hat) {
    q_from_s(s);
    if (!(n_hat > 0.0)) {
        std::ostringstream msg;
        msg << "Case II requires n_hat > 0 (psi would collapse to 1), got " << n_hat;
        throw std::domain_error(msg.str());
    }
    return CaseParameters{s, n_hat, PsiSpec::power_law(n_hat)};
}

CaseTag CaseParameters::tag() const {
    const bool nontrivial = psi.kind == PsiSpec::Kind::PowerLaw && psi.n_hat > 0.0;
    return nontrivial ? CaseTag::CaseII : CaseTag::CaseI;
}

QubitState qubit_basis_state(int x, int dim, const DeformationParameter& q,
                             const CaseParameters& params) {
    require_mode_dim(dim, "qubit_basis_state");
    if (x != 0 && x != 1) {
        throw std::invalid_argument("qubit basis label must be 0 or 1, got " +
                                    std::to_string(x));
    }
    const CaseTag tag = params.tag();
    const double scale =
        tag == CaseTag::CaseII ? std::sqrt(psi_eval(params.psi, q)) : 1.0;
    QubitState state;
    state.case_tag = tag;
    state.scale = scale;
    if (x == 1) {
        state.up = Complex(scale, 0.0);
    } else {
        state.down = Complex(scale, 0.0);
    }
    return state;
}

double norm_ratio(const QubitState& case2, const QubitState& case1) {
    if (case2.case_tag != CaseTag::CaseII || case1.case_tag != CaseTag::CaseI) {
        throw std::invalid_argument("norm_ratio expects (Case II, Case I) arguments");
    }
    const double n2 = case2.squared_norm();
    const double n1 = case1.squared_norm();
    if (n1 == 0.0 || n2 == 0.0) {
        throw std::invalid_argument("norm_ratio of a null state");
    }
    // Same-ray check: both states must carry the same qubit, up to phase and
    // overall scale. Basis labels are recovered from the support.
    const Complex overlap =
        std::conj(case1.up) * case2.up + std::conj(case1.down) * case2.down;
    const double alignment = std::abs(overlap) / std::sqrt(n1 * n2);
    if (alignment < 1.0 - 1e-9) {
        throw std::invalid_argument("norm_ratio arguments carry different qubit states");
    }
    return n2 / n1;
}

TwoModeState embed_qubit(const QubitState& state, int dim) {
    require_mode_dim(dim, "embed_qubit");
    TwoModeState out{dim, Vector::Zero(dim * dim)};
    out.amplitudes(out.index(1, 0)) = state.up;
    out.amplitudes(out.index(0, 1)) = state.down;
    return out;
}

}  // namespace qdeform
