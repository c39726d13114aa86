#ifndef QDEFORM_SCHWINGER_HPP
#define QDEFORM_SCHWINGER_HPP

#include "qdeform/fockspace.hpp"

namespace qdeform {

// Amplitudes over the two-oscillator basis |n1> x |n2>, both modes truncated
// to dim levels, stored row-major in (n1, n2). States carry their norm; they
// are never silently normalized, since the Case II signature lives in the
// norm.
struct TwoModeState {
    int dim = 0;
    Vector amplitudes;

    int index(int n1, int n2) const { return n1 * dim + n2; }
    Complex amplitude(int n1, int n2) const { return amplitudes(index(n1, n2)); }
    double norm() const { return amplitudes.norm(); }
};

TwoModeState two_mode_vacuum(int dim);

// kron(op, I) and kron(I, op): the single-mode operator acting on mode 1 or
// mode 2 of the product space.
Matrix mode1_operator(const OperatorMatrix& op);
Matrix mode2_operator(const OperatorMatrix& op);

// Angular-momentum state |j m> with j = (n1+n2)/2, m = (n1-n2)/2, built by
// applying the (deformed or ordinary) creation operators to the two-mode
// vacuum with the matching factorial normalization. Unit norm by
// construction. Occupations above dim-1 are rejected.
TwoModeState jm_state(int n1, int n2, int dim, const DeformationParameter& q, bool deformed);

enum class CaseTag { CaseI, CaseII };

// The (s, n_hat, psi) triple selecting one of the two state families:
// Case I has psi identically one; Case II has psi = q^n_hat with n_hat > 0.
struct CaseParameters {
    double s = 0.0;
    double n_hat = 0.0;
    PsiSpec psi = PsiSpec::one();

    static CaseParameters case_i(double s);
    static CaseParameters case_ii(double s, double n_hat);

    CaseTag tag() const;
    DeformationParameter deformation() const { return q_from_s(s); }
};

// Qubit amplitudes over the ordered basis (|1>, |0>), with |1> = (1,0)^T and
// |0> = (0,1)^T. The up/down amplitudes carry the full state including the
// Case II prefactor; scale records that prefactor (psi^{1/2}, or 1 in Case I)
// so it can be divided out.
struct QubitState {
    Complex up{0.0, 0.0};
    Complex down{0.0, 0.0};
    CaseTag case_tag = CaseTag::CaseI;
    double scale = 1.0;

    double squared_norm() const { return std::norm(up) + std::norm(down); }
};

// |x> for x in {0, 1}: the Jordan-Schwinger basis qubit, scaled by psi^{1/2}
// in Case II.
QubitState qubit_basis_state(int x, int dim, const DeformationParameter& q,
                             const CaseParameters& params);

// <psi_II|psi_II> / <psi_I|psi_I> for two states of the same qubit ray with
// case tags (II, I). Equals psi(q) = e^{s n_hat} for matched basis states.
// States on different rays (mismatched basis labels) are rejected.
double norm_ratio(const QubitState& case2, const QubitState& case1);

// up |1,0> + down |0,1> in the two-mode space, scale factor included.
TwoModeState embed_qubit(const QubitState& state, int dim);

}  // namespace qdeform

#endif
