#ifndef QDEFORM_GATES_HPP
#define QDEFORM_GATES_HPP

#include <vector>

#include "qdeform/schwinger.hpp"

namespace qdeform {

// 2x2 gate over the ordered basis (|1>, |0>). normalized records whether the
// 1/sqrt(2) factor is included; only the normalized form is unitary.
struct GateMatrix {
    Eigen::Matrix2cd entries;
    bool normalized = true;
};

// |x> -> (-1)^x |x> + |1-x>, i.e. columns (-1, 1)^T and (1, 1)^T in the
// (|1>, |0>) ordering, times 1/sqrt(2) when normalized.
GateMatrix hadamard_matrix(bool normalized);

// |x> -> e^{i x theta} |x>: diag(e^{i theta}, 1). Unitary for every theta.
GateMatrix phase_shift_matrix(double theta);

// Applies the Hadamard to the qubit amplitudes. The case tag and scale pass
// through: the Case II prefactor multiplies both sides of the transformation.
QubitState apply_hadamard(const QubitState& state, bool normalized);

// up <- e^{i theta} up (the n = 1 component); down, scale, case unchanged.
QubitState apply_phase_shift(const QubitState& state, double theta);

// The Hadamard as an operator on the two-mode product space, assembled from
// the oscillator construction: each qubit basis state (built by applying
// creation operators to the vacuum) is mapped to its transform. Supported on
// the n1 + n2 = 1 subspace, zero elsewhere. With deformed = true the
// q-deformed creators are used; the result is identical because the qubit
// occupations see only [0]! = [1]! = 1.
Matrix two_mode_hadamard(int dim, const DeformationParameter& q, bool deformed,
                         bool normalized);

// Outcome of checking, over a q-grid, that the deformed Hadamard coincides
// with the ordinary one on the qubit subspace.
//
// max_operator_residual measures the realized-operator route: qubit states
// built with the psi-carrying creators, transformed by the deformed Hadamard,
// divided by the common psi^{1/2} scale, and compared entrywise with the
// ordinary normalized Hadamard images. This is the operational content of the
// operator condition F^-1(N, q) F(1-N, q) = 1 on the qubit levels; the scalar
// shape of that condition is checked separately as the consistency ratio at
// n_hat in {0, 1} (ratio_residuals).
struct EquivalenceReport {
    std::vector<double> q_grid;
    double max_operator_residual = 0.0;
    std::array<double, 2> ratio_residuals{0.0, 0.0};  // n_hat = 0 and 1
    double tolerance = 1e-12;
    bool verdict = false;
};

// Runs the equivalence check with psi1 = psi2 = psi on every grid point.
// Requires dim >= 3 so the embedded construction has headroom above the
// qubit levels. A vanishing realization-factor entry on a checked level is
// reported as a domain error.
EquivalenceReport verify_hadamard_equivalence(int dim,
                                              const std::vector<DeformationParameter>& q_grid,
                                              const PsiSpec& psi, double tolerance = 1e-12);

// Applies the phase gate to matched Case I / Case II basis states and returns
// the measured norm ratio, which equals psi(q) = e^{s n_hat} for every theta.
// Requires 0 < s <= 1 and n_hat > 0.
double case_distinguishability(double s, double n_hat, double theta);

}  // namespace qdeform

#endif
