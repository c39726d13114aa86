#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "qdeform/schwinger.hpp"

using namespace qdeform;
using qdeform_test::max_abs_diff;

TEST_CASE("two-mode vacuum and amplitude indexing") {
    const TwoModeState vac = two_mode_vacuum(4);
    CHECK(vac.dim == 4);
    CHECK(vac.amplitudes.size() == 16);
    CHECK(vac.amplitude(0, 0) == Complex(1.0, 0.0));
    CHECK(vac.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(vac.index(2, 3) == 11);
}

TEST_CASE("mode operators act on their own factor and commute across modes") {
    const int dim = 4;
    const OperatorMatrix a = build_annihilator(dim);
    const OperatorMatrix ad = build_creation(dim);
    const Matrix m1 = mode1_operator(ad);
    const Matrix m2 = mode2_operator(a);
    CHECK(max_abs_diff(m1 * m2, m2 * m1) == 0.0);

    // Raising mode 1 from the vacuum lands on |1, 0>.
    const Vector raised = m1 * two_mode_vacuum(dim).amplitudes;
    TwoModeState state{dim, raised};
    CHECK(state.amplitude(1, 0) == Complex(1.0, 0.0));
    CHECK(state.amplitude(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("jm states are unit normalized, deformed or not") {
    for (double s : {0.0, 0.5, 1.0}) {
        const DeformationParameter q = q_from_s(s);
        for (bool deformed : {false, true}) {
            for (int n1 = 0; n1 <= 2; ++n1) {
                for (int n2 = 0; n2 <= 2; ++n2) {
                    CAPTURE(s);
                    CAPTURE(deformed);
                    const TwoModeState state = jm_state(n1, n2, 4, q, deformed);
                    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-13));
                    // All weight on the (n1, n2) component.
                    CHECK(std::abs(state.amplitude(n1, n2)) ==
                          doctest::Approx(1.0).epsilon(1e-13));
                }
            }
        }
    }
    CHECK_THROWS_AS(jm_state(4, 0, 4, q_from_s(0.5), true), std::invalid_argument);
    CHECK_THROWS_AS(jm_state(-1, 0, 4, q_from_s(0.5), false), std::invalid_argument);
}

TEST_CASE("case parameters: tags and validation") {
    const CaseParameters plain = CaseParameters::case_i(0.5);
    CHECK(plain.tag() == CaseTag::CaseI);
    CHECK(plain.psi.kind == PsiSpec::Kind::ConstantOne);

    const CaseParameters deformed = CaseParameters::case_ii(0.5, 2.0);
    CHECK(deformed.tag() == CaseTag::CaseII);
    CHECK(deformed.psi.kind == PsiSpec::Kind::PowerLaw);
    CHECK(deformed.n_hat == 2.0);
    CHECK(deformed.deformation().q ==
          doctest::Approx(1.6487212707001282).epsilon(1e-15));

    CHECK_THROWS_AS(CaseParameters::case_ii(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(CaseParameters::case_ii(0.5, -1.0), std::domain_error);
}

TEST_CASE("qubit basis states carry the Case II scale") {
    const DeformationParameter q = q_from_s(0.5);

    const QubitState up1 = qubit_basis_state(1, 3, q, CaseParameters::case_i(0.5));
    CHECK(up1.up == Complex(1.0, 0.0));
    CHECK(up1.down == Complex(0.0, 0.0));
    CHECK(up1.scale == 1.0);
    CHECK(up1.case_tag == CaseTag::CaseI);

    const QubitState up2 = qubit_basis_state(1, 3, q, CaseParameters::case_ii(0.5, 2.0));
    CHECK(up2.case_tag == CaseTag::CaseII);
    // scale = sqrt(psi) = e^{s n_hat / 2}; squared norm = psi = e^1.
    CHECK(up2.scale == doctest::Approx(1.6487212707001282).epsilon(1e-14));
    CHECK(up2.squared_norm() == doctest::Approx(2.718281828459045).epsilon(1e-13));

    const QubitState down2 = qubit_basis_state(0, 3, q, CaseParameters::case_ii(0.5, 2.0));
    CHECK(down2.up == Complex(0.0, 0.0));
    CHECK(std::abs(down2.down) == doctest::Approx(up2.scale).epsilon(1e-15));

    CHECK_THROWS_AS(qubit_basis_state(2, 3, q, CaseParameters::case_i(0.5)),
                    std::invalid_argument);
}

TEST_CASE("norm ratio measures psi and rejects mismatched inputs") {
    const DeformationParameter q = q_from_s(0.5);
    const CaseParameters case2 = CaseParameters::case_ii(0.5, 2.0);
    const CaseParameters case1 = CaseParameters::case_i(0.5);

    for (int x : {0, 1}) {
        const double ratio = norm_ratio(qubit_basis_state(x, 3, q, case2),
                                        qubit_basis_state(x, 3, q, case1));
        CHECK(ratio == doctest::Approx(2.718281828459045).epsilon(1e-13));
    }

    // Different rays: |1> against |0>.
    CHECK_THROWS_AS(norm_ratio(qubit_basis_state(1, 3, q, case2),
                               qubit_basis_state(0, 3, q, case1)),
                    std::invalid_argument);
    // Tags must come in the order (Case II, Case I).
    CHECK_THROWS_AS(norm_ratio(qubit_basis_state(1, 3, q, case1),
                               qubit_basis_state(1, 3, q, case2)),
                    std::invalid_argument);
}

TEST_CASE("norm ratio equals e^{s n_hat} over random parameters") {
    std::mt19937 rng(90125u);
    std::uniform_real_distribution<double> pick_s(0.01, 1.0);
    std::uniform_real_distribution<double> pick_n(0.1, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double s = pick_s(rng);
        const double n_hat = pick_n(rng);
        const DeformationParameter q = q_from_s(s);
        const double ratio =
            norm_ratio(qubit_basis_state(1, 3, q, CaseParameters::case_ii(s, n_hat)),
                       qubit_basis_state(1, 3, q, CaseParameters::case_i(s)));
        CHECK(ratio == doctest::Approx(std::exp(s * n_hat)).epsilon(1e-13));
    }
}

TEST_CASE("norm ratio tends to 1 as the deformation is switched off") {
    const double s = 1e-9;
    const DeformationParameter q = q_from_s(s);
    const double ratio =
        norm_ratio(qubit_basis_state(1, 3, q, CaseParameters::case_ii(s, 1.0)),
                   qubit_basis_state(1, 3, q, CaseParameters::case_i(s)));
    CHECK(std::abs(ratio - 1.0) <= 1e-8);
}

TEST_CASE("embedding places the qubit on the n1 + n2 = 1 levels") {
    const DeformationParameter q = q_from_s(0.5);
    const QubitState state = qubit_basis_state(1, 4, q, CaseParameters::case_ii(0.5, 1.0));
    const TwoModeState embedded = embed_qubit(state, 4);
    CHECK(embedded.amplitude(1, 0) == state.up);
    CHECK(embedded.amplitude(0, 1) == state.down);
    CHECK(embedded.amplitude(0, 0) == Complex(0.0, 0.0));
    CHECK(embedded.norm() * embedded.norm() ==
          doctest::Approx(state.squared_norm()).epsilon(1e-13));
}
