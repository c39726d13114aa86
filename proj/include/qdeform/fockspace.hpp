#ifndef QDEFORM_FOCKSPACE_HPP
#define QDEFORM_FOCKSPACE_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "qdeform/qalgebra.hpp"

namespace qdeform {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class OperatorRole {
    Annihilator,
    Creator,
    Number,
    ShiftedNumber,
    RealizationFactor,
    General,
};

// Dense complex operator on the truncated Fock space |0>, ..., |D-1>.
// Entries are complex throughout even where construction yields real values,
// since the phase gate introduces complex amplitudes downstream.
struct OperatorMatrix {
    int dim = 0;
    OperatorRole role = OperatorRole::General;
    Matrix entries;
};

// a with a|n> = sqrt(n)|n-1>: entry (n-1, n) = sqrt(n).
OperatorMatrix build_annihilator(int dim);
// a^dag, the conjugate transpose of build_annihilator.
OperatorMatrix build_creation(int dim);
// N = diag(0, 1, ..., D-1).
OperatorMatrix build_number(int dim);

// a_q with a_q|n> = sqrt([n])|n-1>, so a_q^dag a_q = diag([0], ..., [D-1]).
OperatorMatrix build_q_annihilator(int dim, const DeformationParameter& q);
OperatorMatrix build_q_creation(int dim, const DeformationParameter& q);

// Diagonal factor F(N, q) with level-n entry
//   sqrt( (q^n psi1(q) - q^-n psi2(q)) / (n (q - q^-1)) )   for n >= 1.
// The n = 0 entry is the analytic limit sqrt(psi * s / sinh s) when psi1 and
// psi2 agree in value at this q, and 0 otherwise; a*F annihilates |0> either
// way, so the realized operator is unaffected. At s = 0 the factor is the
// identity. Throws std::domain_error on a negative radicand.
OperatorMatrix realization_factor(int dim, const DeformationParameter& q,
                                  const PsiSpec& psi1, const PsiSpec& psi2);

// The realized annihilator a * F(N, q); equals build_q_annihilator when both
// psi are identically one.
OperatorMatrix harmonic_realized_q_annihilator(int dim, const DeformationParameter& q,
                                               const PsiSpec& psi1, const PsiSpec& psi2);
// Its conjugate transpose F(N, q) * a^dag.
OperatorMatrix harmonic_realized_q_creation(int dim, const DeformationParameter& q,
                                            const PsiSpec& psi1, const PsiSpec& psi2);

// diag(n - (1/s) ln psi2(q)). The shift is evaluated in closed form, so the
// PowerLaw(n_hat) case gives entries n - n_hat exactly. s = 0 with a
// non-trivial psi2 is singular and rejected.
OperatorMatrix shifted_number(int dim, double s, const PsiSpec& psi2);

enum class AlgebraRelation {
    DeformedCommutator_1a,  // a_q a_q^dag - q a_q^dag a_q - q^-N = 0
    NumberLadder_1b,        // [N, a_q] + a_q = 0 and [N, a_q^dag] - a_q^dag = 0
    BracketProduct_1b,      // a_q^dag a_q - [N] = 0
    FunctionShift_1c,       // a_q f(N) - f(N+1) a_q = 0, with f(N) = q^N
};

// Residual of one defining relation. max_residual is the largest entrywise
// deviation divided by max(1, largest magnitude among the relation's terms);
// the scaling keeps the report meaningful when [n] grows to ~1e6 and one ulp
// is far above any fixed absolute tolerance.
struct AlgebraReport {
    AlgebraRelation relation;
    double max_residual = 0.0;
    int checked_subspace = 0;  // highest Fock level included in the check
};

// Residuals of the four defining relations. The commutator relation is checked
// on levels 0..D-2 only: the top level violates it by construction under
// truncation. Requires D >= 3.
std::array<AlgebraReport, 4> algebra_residuals(int dim, const DeformationParameter& q);

// Magnitude of the full-space commutator residual at the top diagonal entry
// (D-1, D-1). Unscaled: this is a physical quantity of size [D].
double truncation_defect_measured(int dim, const DeformationParameter& q);
// The scalar prediction q [D-1] + q^{-(D-1)} (= [D]) for that defect.
double truncation_defect_predicted(int dim, const DeformationParameter& q);

}  // namespace qdeform

#endif
