#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdeform/gates.hpp"

namespace py = pybind11;
using namespace qdeform;

PYBIND11_MODULE(_qdeform, m) {
    m.doc() = "q-deformed oscillator qubits: deformed ladder operators on truncated "
              "Fock spaces, two-mode qubit construction, Hadamard / phase-shift "
              "gates, and the identities relating them";

    // ---- scalar q-arithmetic ----------------------------------------------

    py::class_<DeformationParameter>(m, "DeformationParameter",
                                     "The pair (s, q = e^s) with s in [0, 1]")
        .def_readonly("s", &DeformationParameter::s)
        .def_readonly("q", &DeformationParameter::q)
        .def("undeformed", &DeformationParameter::undeformed)
        .def("__repr__", [](const DeformationParameter& p) {
            return "DeformationParameter(s=" + std::to_string(p.s) + ")";
        });

    m.def("q_from_s", &q_from_s, py::arg("s"),
          "Deformation parameter q = e^s for s in [0, 1]");
    m.def("q_number", &q_number, py::arg("x"), py::arg("q"),
          "[x] = (q^x - q^-x) / (q - q^-1); equals x when q = 1");
    m.def("q_factorial", &q_factorial, py::arg("n"), py::arg("q"),
          "[n]! = [n][n-1]...[1], with [0]! = 1");

    py::class_<PsiSpec> psi(m, "PsiSpec",
                            "psi function entering the oscillator realization; "
                            "constant 1 or the power law q^n_hat");
    py::enum_<PsiSpec::Kind>(psi, "Kind")
        .value("ConstantOne", PsiSpec::Kind::ConstantOne)
        .value("PowerLaw", PsiSpec::Kind::PowerLaw);
    psi.def_static("one", &PsiSpec::one)
        .def_static("power_law", &PsiSpec::power_law, py::arg("n_hat"))
        .def_readonly("kind", &PsiSpec::kind)
        .def_readonly("n_hat", &PsiSpec::n_hat)
        .def("number_shift", &PsiSpec::number_shift)
        .def("describe", &PsiSpec::describe)
        .def("__repr__", [](const PsiSpec& p) { return "PsiSpec(" + p.describe() + ")"; });

    m.def("psi_eval", &psi_eval, py::arg("spec"), py::arg("q"),
          "psi evaluated at q = e^s: 1 or e^{s n_hat}");
    m.def("consistency_ratio", &consistency_ratio, py::arg("n_hat"), py::arg("q"),
          "Scalar gate-equivalence ratio; identically 1 at n_hat in {0, 1}");

    // ---- truncated Fock-space operators -----------------------------------

    py::enum_<OperatorRole>(m, "OperatorRole")
        .value("Annihilator", OperatorRole::Annihilator)
        .value("Creator", OperatorRole::Creator)
        .value("Number", OperatorRole::Number)
        .value("ShiftedNumber", OperatorRole::ShiftedNumber)
        .value("RealizationFactor", OperatorRole::RealizationFactor)
        .value("General", OperatorRole::General);

    py::class_<OperatorMatrix>(m, "OperatorMatrix",
                               "Dense complex matrix over the Fock basis |0..D-1>")
        .def_readonly("dim", &OperatorMatrix::dim)
        .def_readonly("role", &OperatorMatrix::role)
        .def_readonly("entries", &OperatorMatrix::entries);

    m.def("annihilator", &build_annihilator, py::arg("dim"),
          "a with a|n> = sqrt(n)|n-1>");
    m.def("creation", &build_creation, py::arg("dim"), "a^dag");
    m.def("number", &build_number, py::arg("dim"), "N = diag(0..D-1)");
    m.def("q_annihilator", &build_q_annihilator, py::arg("dim"), py::arg("q"),
          "a_q with a_q|n> = sqrt([n])|n-1>");
    m.def("q_creation", &build_q_creation, py::arg("dim"), py::arg("q"), "a_q^dag");
    m.def("realization_factor", &realization_factor, py::arg("dim"), py::arg("q"),
          py::arg("psi1"), py::arg("psi2"),
          "Diagonal F(N, q) relating the ordinary and deformed ladder operators");
    m.def("realized_q_annihilator", &harmonic_realized_q_annihilator, py::arg("dim"),
          py::arg("q"), py::arg("psi1"), py::arg("psi2"), "a F(N, q)");
    m.def("realized_q_creation", &harmonic_realized_q_creation, py::arg("dim"),
          py::arg("q"), py::arg("psi1"), py::arg("psi2"), "F(N, q) a^dag");
    m.def("shifted_number", &shifted_number, py::arg("dim"), py::arg("s"),
          py::arg("psi2"), "diag(n - (1/s) ln psi2)");

    py::enum_<AlgebraRelation>(m, "AlgebraRelation")
        .value("DeformedCommutator_1a", AlgebraRelation::DeformedCommutator_1a)
        .value("NumberLadder_1b", AlgebraRelation::NumberLadder_1b)
        .value("BracketProduct_1b", AlgebraRelation::BracketProduct_1b)
        .value("FunctionShift_1c", AlgebraRelation::FunctionShift_1c);

    py::class_<AlgebraReport>(m, "AlgebraReport")
        .def_readonly("relation", &AlgebraReport::relation)
        .def_readonly("max_residual", &AlgebraReport::max_residual)
        .def_readonly("checked_subspace", &AlgebraReport::checked_subspace);

    m.def("algebra_residuals", &algebra_residuals, py::arg("dim"), py::arg("q"),
          "Scaled residuals of the defining operator relations");
    m.def("truncation_defect_measured", &truncation_defect_measured, py::arg("dim"),
          py::arg("q"), "Top-level defect of the deformed commutator, full space");
    m.def("truncation_defect_predicted", &truncation_defect_predicted, py::arg("dim"),
          py::arg("q"), "q [D-1] + q^{-(D-1)}, the predicted top-level defect");

    // ---- two-mode qubit construction --------------------------------------

    py::class_<TwoModeState>(m, "TwoModeState",
                             "Amplitudes over |n1> x |n2>, row-major in (n1, n2)")
        .def_readonly("dim", &TwoModeState::dim)
        .def_readonly("amplitudes", &TwoModeState::amplitudes)
        .def("amplitude", &TwoModeState::amplitude, py::arg("n1"), py::arg("n2"))
        .def("norm", &TwoModeState::norm);

    m.def("two_mode_vacuum", &two_mode_vacuum, py::arg("dim"));
    m.def("mode1_operator", &mode1_operator, py::arg("op"), "kron(op, I)");
    m.def("mode2_operator", &mode2_operator, py::arg("op"), "kron(I, op)");
    m.def("jm_state", &jm_state, py::arg("n1"), py::arg("n2"), py::arg("dim"),
          py::arg("q"), py::arg("deformed"),
          "|j m> with j = (n1+n2)/2, m = (n1-n2)/2, unit norm");

    py::enum_<CaseTag>(m, "CaseTag")
        .value("CaseI", CaseTag::CaseI)
        .value("CaseII", CaseTag::CaseII);

    py::class_<CaseParameters>(m, "CaseParameters")
        .def_static("case_i", &CaseParameters::case_i, py::arg("s"))
        .def_static("case_ii", &CaseParameters::case_ii, py::arg("s"), py::arg("n_hat"))
        .def_readonly("s", &CaseParameters::s)
        .def_readonly("n_hat", &CaseParameters::n_hat)
        .def_readonly("psi", &CaseParameters::psi)
        .def("tag", &CaseParameters::tag)
        .def("deformation", &CaseParameters::deformation);

    py::class_<QubitState>(m, "QubitState",
                           "Amplitudes over the ordered qubit basis (|1>, |0>)")
        .def_readonly("up", &QubitState::up)
        .def_readonly("down", &QubitState::down)
        .def_readonly("case_tag", &QubitState::case_tag)
        .def_readonly("scale", &QubitState::scale)
        .def("squared_norm", &QubitState::squared_norm);

    m.def("qubit_basis_state", &qubit_basis_state, py::arg("x"), py::arg("dim"),
          py::arg("q"), py::arg("params"),
          "|x> for x in {0, 1}, carrying psi^{1/2} in Case II");
    m.def("norm_ratio", &norm_ratio, py::arg("case2"), py::arg("case1"),
          "Case II / Case I squared-norm ratio; e^{s n_hat} for matched states");
    m.def("embed_qubit", &embed_qubit, py::arg("state"), py::arg("dim"),
          "up |1,0> + down |0,1> in the two-mode space");

    // ---- gates -------------------------------------------------------------

    py::class_<GateMatrix>(m, "GateMatrix")
        .def_readonly("entries", &GateMatrix::entries)
        .def_readonly("normalized", &GateMatrix::normalized);

    m.def("hadamard_matrix", &hadamard_matrix, py::arg("normalized") = true,
          "Columns (-1, 1)/sqrt(2) and (1, 1)/sqrt(2) over (|1>, |0>)");
    m.def("phase_shift_matrix", &phase_shift_matrix, py::arg("theta"),
          "diag(e^{i theta}, 1)");
    m.def("apply_hadamard", &apply_hadamard, py::arg("state"),
          py::arg("normalized") = true);
    m.def("apply_phase_shift", &apply_phase_shift, py::arg("state"), py::arg("theta"));
    m.def("two_mode_hadamard", &two_mode_hadamard, py::arg("dim"), py::arg("q"),
          py::arg("deformed"), py::arg("normalized"),
          "The Hadamard as an operator on the n1 + n2 = 1 subspace");

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("q_grid", &EquivalenceReport::q_grid)
        .def_readonly("max_operator_residual", &EquivalenceReport::max_operator_residual)
        .def_readonly("ratio_residuals", &EquivalenceReport::ratio_residuals)
        .def_readonly("tolerance", &EquivalenceReport::tolerance)
        .def_readonly("verdict", &EquivalenceReport::verdict);

    m.def("verify_hadamard_equivalence", &verify_hadamard_equivalence, py::arg("dim"),
          py::arg("q_grid"), py::arg("psi"), py::arg("tolerance") = 1e-12,
          "Deformed vs ordinary Hadamard on the qubit subspace over a q-grid");
    m.def("case_distinguishability", &case_distinguishability, py::arg("s"),
          py::arg("n_hat"), py::arg("theta"),
          "Post-phase-gate Case II / Case I norm ratio, equals e^{s n_hat}");
}
