#ifndef QDEFORM_QALGEBRA_HPP
#define QDEFORM_QALGEBRA_HPP

#include <string>

namespace qdeform {

// Deformation parameter pair (s, q = e^s) with 0 <= s <= 1, so q lies in [1, e].
// s == 0 is the undeformed oscillator limit.
struct DeformationParameter {
    double s = 0.0;
    double q = 1.0;

    bool undeformed() const { return s == 0.0; }
};

// Validates 0 <= s <= 1 and returns (s, e^s). Throws std::domain_error otherwise.
DeformationParameter q_from_s(double s);

// The q-number [x] = (q^x - q^-x) / (q - q^-1), with the analytic limit
// [x] = x at q = 1. Equals sinh(s x) / sinh(s) for q = e^s.
double q_number(double x, const DeformationParameter& q);

// [n]! = [1][2]...[n], empty product for n = 0. n must be a non-negative integer.
double q_factorial(int n, const DeformationParameter& q);

// One of the arbitrary functions psi(q) entering the harmonic-oscillator
// realization. Constrained to psi(1) = 1, which both kinds satisfy:
//   ConstantOne : psi(q) = 1
//   PowerLaw    : psi(q) = q^n_hat = e^{s n_hat}
struct PsiSpec {
    enum class Kind { ConstantOne, PowerLaw };

    Kind kind = Kind::ConstantOne;
    double n_hat = 0.0;  // exponent, used only for PowerLaw

    static PsiSpec one() { return {Kind::ConstantOne, 0.0}; }
    static PsiSpec power_law(double n_hat);

    // ln psi(e^s) in closed form: s * n_hat for PowerLaw, 0 for ConstantOne.
    double log_at(double s) const;
    // The exponent recovered by (1/s) ln psi(q); exact by construction.
    double number_shift() const;

    std::string describe() const;
};

double psi_eval(const PsiSpec& spec, const DeformationParameter& q);

// The scalar ratio
//   (q^-n - n q^-n - n q^{n-1}) / (q^n - n q^n - n q^{1-n})
// which equals psi1/psi2 exactly when the deformed and undeformed Hadamard
// actions coincide on the qubit levels. Identically 1 for n in {0, 1}.
// Throws std::domain_error when the denominator vanishes (e.g. n = 1/2,
// where both numerator and denominator are zero for every q).
double consistency_ratio(double n_hat, const DeformationParameter& q);

}  // namespace qdeform

#endif
