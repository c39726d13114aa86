#include "qdeform/qalgebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdeform {

DeformationParameter q_from_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        std::ostringstream msg;
        msg << "deformation parameter s = " << s << " outside [0, 1]";
        throw std::domain_error(msg.str());
    }
    return DeformationParameter{s, std::exp(s)};
}

double q_number(double x, const DeformationParameter& q) {
    if (q.undeformed()) {
        return x;  // analytic limit of the 0/0 form at q = 1
    }
    return std::sinh(q.s * x) / std::sinh(q.s);
}

double q_factorial(int n, const DeformationParameter& q) {
    if (n < 0) {
        throw std::domain_error("q_factorial requires n >= 0, got n = " + std::to_string(n));
    }
    double product = 1.0;
    for (int k = 1; k <= n; ++k) {
        product *= q_number(static_cast<double>(k), q);
    }
    return product;
}

PsiSpec PsiSpec::power_law(double n_hat) {
    if (!(n_hat >= 0.0)) {
        std::ostringstream msg;
        msg << "psi power-law exponent n_hat = " << n_hat << " must be >= 0";
        throw std::domain_error(msg.str());
    }
    return {Kind::PowerLaw, n_hat};
}

double PsiSpec::log_at(double s) const {
    return kind == Kind::PowerLaw ? s * n_hat : 0.0;
}

double PsiSpec::number_shift() const {
    return kind == Kind::PowerLaw ? n_hat : 0.0;
}

std::string PsiSpec::describe() const {
    if (kind == Kind::ConstantOne) {
        return "one";
    }
    std::ostringstream out;
    out << "power(" << n_hat << ")";
    return out.str();
}

double psi_eval(const PsiSpec& spec, const DeformationParameter& q) {
    switch (spec.kind) {
        case PsiSpec::Kind::ConstantOne:
            return 1.0;
        case PsiSpec::Kind::PowerLaw:
            return std::exp(q.s * spec.n_hat);
    }
    throw std::logic_error("unreachable psi kind");
}

double consistency_ratio(double n_hat, const DeformationParameter& q) {
    const double n = n_hat;
    const double qp = std::pow(q.q, n);    // q^n
    const double qm = std::pow(q.q, -n);   // q^-n
    const double numerator = qm - n * qm - n * std::pow(q.q, n - 1.0);
    const double denominator = qp - n * qp - n * std::pow(q.q, 1.0 - n);
    if (denominator == 0.0) {
        std::ostringstream msg;
        msg << "consistency ratio singular at n_hat = " << n << ", q = " << q.q;
        throw std::domain_error(msg.str());
    }
    return numerator / denominator;
}

}  // namespace qdeform
