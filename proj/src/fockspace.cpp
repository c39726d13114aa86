#include "qdeform/fockspace.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdeform {

namespace {

void require_dim(int dim, int minimum, const char* where) {
    if (dim < minimum) {
        std::ostringstream msg;
        msg << where << " requires dim >= " << minimum << ", got " << dim;
        throw std::invalid_argument(msg.str());
    }
}

// Largest entrywise residual divided by max(1, largest term magnitude).
// Keeps the report meaningful when matrix entries reach ~1e6, where a single
// ulp already exceeds any fixed absolute tolerance.
double scaled_residual(const Matrix& residual, std::initializer_list<const Matrix*> terms) {
    double scale = 1.0;
    for (const Matrix* term : terms) {
        scale = std::max(scale, term->cwiseAbs().maxCoeff());
    }
    return residual.cwiseAbs().maxCoeff() / scale;
}

Matrix q_power_of_number(int dim, double s, double exponent_shift) {
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        m(n, n) = std::exp(s * (static_cast<double>(n) + exponent_shift));
    }
    return m;
}

}  // namespace

OperatorMatrix build_annihilator(int dim) {
    require_dim(dim, 2, "build_annihilator");
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        m(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return {dim, OperatorRole::Annihilator, std::move(m)};
}

OperatorMatrix build_creation(int dim) {
    OperatorMatrix a = build_annihilator(dim);
    return {dim, OperatorRole::Creator, a.entries.adjoint()};
}

OperatorMatrix build_number(int dim) {
    require_dim(dim, 2, "build_number");
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        m(n, n) = static_cast<double>(n);
    }
    return {dim, OperatorRole::Number, std::move(m)};
}

OperatorMatrix build_q_annihilator(int dim, const DeformationParameter& q) {
    require_dim(dim, 2, "build_q_annihilator");
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        m(n - 1, n) = std::sqrt(q_number(static_cast<double>(n), q));
    }
    return {dim, OperatorRole::Annihilator, std::move(m)};
}

OperatorMatrix build_q_creation(int dim, const DeformationParameter& q) {
    OperatorMatrix a = build_q_annihilator(dim, q);
    return {dim, OperatorRole::Creator, a.entries.adjoint()};
}

OperatorMatrix realization_factor(int dim, const DeformationParameter& q,
                                  const PsiSpec& psi1, const PsiSpec& psi2) {
    require_dim(dim, 2, "realization_factor");
    Matrix m = Matrix::Zero(dim, dim);
    if (q.undeformed()) {
        // q = 1: every psi evaluates to 1 and the factor degenerates to I.
        m.setIdentity();
        return {dim, OperatorRole::RealizationFactor, std::move(m)};
    }

    const double p1 = psi_eval(psi1, q);
    const double p2 = psi_eval(psi2, q);
    const double denom_unit = q.q - 1.0 / q.q;  // q - q^-1 = 2 sinh s

    if (p1 == p2) {
        // Level 0 is the 0/0 limit of the radicand: psi * s / sinh(s).
        m(0, 0) = std::sqrt(p1 * q.s / std::sinh(q.s));
    } else {
        // Genuinely divergent at level 0; pinned to 0. The only consumer is
        // a * F, which annihilates |0> regardless of this entry.
        m(0, 0) = 0.0;
    }

    for (int n = 1; n < dim; ++n) {
        const double radicand =
            (std::exp(q.s * n) * p1 - std::exp(-q.s * n) * p2) / (n * denom_unit);
        if (radicand < 0.0) {
            std::ostringstream msg;
            msg << "realization factor has negative radicand " << radicand << " at level n=" << n
                << ", q=" << q.q << ", psi1=" << psi1.describe() << ", psi2=" << psi2.describe();
            throw std::domain_error(msg.str());
        }
        m(n, n) = std::sqrt(radicand);
    }
    return {dim, OperatorRole::RealizationFactor, std::move(m)};
}

OperatorMatrix harmonic_realized_q_annihilator(int dim, const DeformationParameter& q,
                                               const PsiSpec& psi1, const PsiSpec& psi2) {
    OperatorMatrix a = build_annihilator(dim);
    OperatorMatrix f = realization_factor(dim, q, psi1, psi2);
    return {dim, OperatorRole::Annihilator, a.entries * f.entries};
}

OperatorMatrix harmonic_realized_q_creation(int dim, const DeformationParameter& q,
                                            const PsiSpec& psi1, const PsiSpec& psi2) {
    OperatorMatrix aq = harmonic_realized_q_annihilator(dim, q, psi1, psi2);
    return {dim, OperatorRole::Creator, aq.entries.adjoint()};
}

OperatorMatrix shifted_number(int dim, double s, const PsiSpec& psi2) {
    require_dim(dim, 2, "shifted_number");
    if (s == 0.0 && psi2.kind == PsiSpec::Kind::PowerLaw && psi2.n_hat > 0.0) {
        throw std::domain_error("shifted_number: (1/s) ln psi2 is singular at s = 0");
    }
    const double shift = psi2.number_shift();
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        m(n, n) = static_cast<double>(n) - shift;
    }
    return {dim, OperatorRole::ShiftedNumber, std::move(m)};
}

std::array<AlgebraReport, 4> algebra_residuals(int dim, const DeformationParameter& q) {
    require_dim(dim, 3, "algebra_residuals");

    const Matrix aq = build_q_annihilator(dim, q).entries;
    const Matrix aq_dag = aq.adjoint();
    const Matrix number = build_number(dim).entries;

    std::array<AlgebraReport, 4> reports;

    // (1a) a_q a_q^dag - q a_q^dag a_q = q^-N, valid below the truncation
    // boundary; the top level misses the a_q a_q^dag term entirely.
    {
        const int sub = dim - 1;
        const Matrix lhs1 = (aq * aq_dag).topLeftCorner(sub, sub);
        const Matrix lhs2 = q.q * (aq_dag * aq).topLeftCorner(sub, sub);
        const Matrix rhs = q_power_of_number(dim, -q.s, 0.0).topLeftCorner(sub, sub);
        const Matrix residual = lhs1 - lhs2 - rhs;
        reports[0] = {AlgebraRelation::DeformedCommutator_1a,
                      scaled_residual(residual, {&lhs1, &lhs2, &rhs}), dim - 2};
    }

    // (1b) [N, a_q] = -a_q and [N, a_q^dag] = a_q^dag; exact on the full
    // truncated space.
    {
        const Matrix res_lower = number * aq - aq * number + aq;
        const Matrix res_raise = number * aq_dag - aq_dag * number - aq_dag;
        const Matrix na = number * aq;
        const Matrix nad = number * aq_dag;
        const double r = std::max(scaled_residual(res_lower, {&na, &aq}),
                                  scaled_residual(res_raise, {&nad, &aq_dag}));
        reports[1] = {AlgebraRelation::NumberLadder_1b, r, dim - 1};
    }

    // (1b) a_q^dag a_q = [N].
    {
        Matrix bracket_number = Matrix::Zero(dim, dim);
        for (int n = 0; n < dim; ++n) {
            bracket_number(n, n) = q_number(static_cast<double>(n), q);
        }
        const Matrix lhs = aq_dag * aq;
        const Matrix residual = lhs - bracket_number;
        reports[2] = {AlgebraRelation::BracketProduct_1b,
                      scaled_residual(residual, {&lhs, &bracket_number}), dim - 1};
    }

    // (1c) a_q f(N) = f(N+1) a_q, with f(N) = q^N as witness.
    {
        const Matrix f_n = q_power_of_number(dim, q.s, 0.0);
        const Matrix f_n1 = q_power_of_number(dim, q.s, 1.0);
        const Matrix lhs = aq * f_n;
        const Matrix rhs = f_n1 * aq;
        const Matrix residual = lhs - rhs;
        reports[3] = {AlgebraRelation::FunctionShift_1c, scaled_residual(residual, {&lhs, &rhs}),
                      dim - 1};
    }

    return reports;
}

double truncation_defect_measured(int dim, const DeformationParameter& q) {
    require_dim(dim, 3, "truncation_defect_measured");
    const Matrix aq = build_q_annihilator(dim, q).entries;
    const Matrix aq_dag = aq.adjoint();
    const Matrix residual =
        aq * aq_dag - q.q * (aq_dag * aq) - q_power_of_number(dim, -q.s, 0.0);
    return std::abs(residual(dim - 1, dim - 1));
}

double truncation_defect_predicted(int dim, const DeformationParameter& q) {
    require_dim(dim, 3, "truncation_defect_predicted");
    const double top = static_cast<double>(dim - 1);
    return q.q * q_number(top, q) + std::exp(-q.s * top);
}

}  // namespace qdeform
