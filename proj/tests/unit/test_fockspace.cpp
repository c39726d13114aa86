#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qdeform/fockspace.hpp"

using namespace qdeform;
using qdeform_test::max_abs_diff;
using qdeform_test::rel_diff;

TEST_CASE("ordinary ladder operators on the truncated space") {
    const int dim = 5;
    const Matrix a = build_annihilator(dim).entries;
    const Matrix ad = build_creation(dim).entries;
    const Matrix n = build_number(dim).entries;

    CHECK(a(0, 1) == Complex(1.0, 0.0));
    CHECK(a(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(max_abs_diff(ad, a.adjoint()) == 0.0);

    // a^dag a = N exactly: the products sqrt(n) * sqrt(n) do round, so allow ulps.
    CHECK(max_abs_diff(ad * a, n) <= 1e-14);

    // [a, a^dag] = 1 everywhere except the truncation boundary, where the
    // missing level forces the diagonal entry to -(D-1).
    const Matrix comm = a * ad - ad * a;
    CHECK(max_abs_diff(comm.topLeftCorner(dim - 1, dim - 1),
                       Matrix::Identity(dim - 1, dim - 1)) <= 1e-14);
    CHECK(comm(dim - 1, dim - 1).real() ==
          doctest::Approx(-(dim - 1.0)).epsilon(1e-14));

    CHECK_THROWS_AS(build_annihilator(1), std::invalid_argument);
}

TEST_CASE("deformed ladder reduces to the ordinary one at q = 1") {
    const DeformationParameter unit = q_from_s(0.0);
    for (int dim : {3, 8}) {
        CHECK(max_abs_diff(build_q_annihilator(dim, unit).entries,
                           build_annihilator(dim).entries) == 0.0);
    }
}

TEST_CASE("defining relations hold to scaled machine precision") {
    for (double s : {0.0, 0.1, 0.5, 1.0}) {
        const DeformationParameter q = q_from_s(s);
        for (int dim : {4, 8, 16}) {
            CAPTURE(s);
            CAPTURE(dim);
            const auto reports = algebra_residuals(dim, q);
            for (const AlgebraReport& report : reports) {
                CHECK(report.max_residual <= 1e-13);
            }
            CHECK(reports[0].relation == AlgebraRelation::DeformedCommutator_1a);
            CHECK(reports[0].checked_subspace == dim - 2);
            CHECK(reports[1].checked_subspace == dim - 1);
        }
    }
    CHECK_THROWS_AS(algebra_residuals(2, q_from_s(0.5)), std::invalid_argument);
}

TEST_CASE("bracket product reproduces the q-numbers on the diagonal") {
    const DeformationParameter q = q_from_s(1.0);
    const int dim = 16;
    const Matrix aq = build_q_annihilator(dim, q).entries;
    const Matrix product = aq.adjoint() * aq;
    for (int n = 0; n < dim; ++n) {
        CHECK(rel_diff(product(n, n).real(), q_number(n, q)) <= 1e-13);
    }
}

TEST_CASE("realization factor levels for psi = 1") {
    const DeformationParameter q = q_from_s(0.5);
    const PsiSpec one = PsiSpec::one();
    const Matrix f = realization_factor(6, q, one, one).entries;

    // Level 0 carries the analytic limit sqrt(s / sinh s).
    CHECK(f(0, 0).real() == doctest::Approx(0.9795495779527812).epsilon(1e-14));
    // Level 1: radicand (q - q^-1) / (q - q^-1) = 1 exactly.
    CHECK(f(1, 1) == Complex(1.0, 0.0));
    // Level n: sqrt([n] / n).
    for (int n = 2; n < 6; ++n) {
        CHECK(f(n, n).real() ==
              doctest::Approx(std::sqrt(q_number(n, q) / n)).epsilon(1e-14));
    }
    CHECK(f.isDiagonal());

    // Undeformed: F = I exactly.
    CHECK(max_abs_diff(realization_factor(6, q_from_s(0.0), one, one).entries,
                       Matrix::Identity(6, 6)) == 0.0);
}

TEST_CASE("Case I collapse: realized operator equals the direct q-ladder") {
    const PsiSpec one = PsiSpec::one();
    for (double s : {0.1, 0.5, 1.0}) {
        const DeformationParameter q = q_from_s(s);
        for (int dim : {4, 8, 16}) {
            CAPTURE(s);
            CAPTURE(dim);
            const Matrix realized =
                harmonic_realized_q_annihilator(dim, q, one, one).entries;
            const Matrix direct = build_q_annihilator(dim, q).entries;
            CHECK(max_abs_diff(realized, direct) <= 1e-12);
            CHECK(max_abs_diff(
                      harmonic_realized_q_creation(dim, q, one, one).entries,
                      realized.adjoint()) == 0.0);
        }
    }
}

TEST_CASE("power-law psi scales the realized operator by sqrt(psi)") {
    const DeformationParameter q = q_from_s(0.5);
    const PsiSpec power = PsiSpec::power_law(2.0);
    const int dim = 8;
    const double root_psi = std::sqrt(psi_eval(power, q));
    const Matrix realized =
        harmonic_realized_q_annihilator(dim, q, power, power).entries;
    const Matrix scaled = root_psi * build_q_annihilator(dim, q).entries;
    CHECK(max_abs_diff(realized, scaled) <= 1e-12);
}

TEST_CASE("mismatched psi pair: zero level-0 entry or rejected radicand") {
    const DeformationParameter q = q_from_s(0.5);
    const PsiSpec one = PsiSpec::one();
    const PsiSpec low = PsiSpec::power_law(1.0);
    const PsiSpec high = PsiSpec::power_law(5.0);

    // psi1 != psi2 leaves no finite analytic limit at level 0; the builder
    // stores 0 there, which the annihilator never samples.
    const Matrix f = realization_factor(4, q, one, low).entries;
    CHECK(f(0, 0) == Complex(0.0, 0.0));

    // q^n - q^-n e^{s n_hat} < 0 at n = 1 for n_hat = 5, s = 0.5.
    CHECK_THROWS_AS(realization_factor(4, q, one, high), std::domain_error);
}

TEST_CASE("shifted number operator uses the closed-form exponent") {
    const PsiSpec power = PsiSpec::power_law(2.0);
    const Matrix shifted = shifted_number(5, 0.5, power).entries;
    for (int n = 0; n < 5; ++n) {
        CHECK(shifted(n, n) == Complex(n - 2.0, 0.0));  // exact, no log round trip
    }

    const Matrix plain = shifted_number(5, 0.0, PsiSpec::one()).entries;
    for (int n = 0; n < 5; ++n) {
        CHECK(plain(n, n) == Complex(static_cast<double>(n), 0.0));
    }

    // (1/s) ln psi is singular at s = 0 for a non-trivial psi.
    CHECK_THROWS_AS(shifted_number(5, 0.0, power), std::domain_error);
}

TEST_CASE("truncation defect matches the scalar prediction") {
    for (double s : {0.0, 0.1, 0.5, 1.0}) {
        const DeformationParameter q = q_from_s(s);
        for (int dim : {4, 8, 16}) {
            CAPTURE(s);
            CAPTURE(dim);
            CHECK(rel_diff(truncation_defect_measured(dim, q),
                           truncation_defect_predicted(dim, q)) <= 1e-12);
        }
    }

    // The prediction telescopes to [D]; spot value at D = 6, s = 0.5.
    CHECK(truncation_defect_predicted(6, q_from_s(0.5)) ==
          doctest::Approx(19.224650120226627).epsilon(1e-14));
    // Undeformed: the defect is exactly D.
    CHECK(truncation_defect_measured(8, q_from_s(0.0)) ==
          doctest::Approx(8.0).epsilon(1e-14));
}
