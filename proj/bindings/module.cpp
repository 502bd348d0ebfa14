// Python bindings for the qudit Dicke-state synthesis library.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdicke/dicke_reference.hpp"
#include "qdicke/pruning.hpp"
#include "qdicke/simulator.hpp"
#include "qdicke/synthesis.hpp"

namespace py = pybind11;

PYBIND11_MODULE(qdicke, m) {
    m.doc() =
        "Deterministic qudit Dicke-state preparation: synthesis, simulation, "
        "and verification";

    py::class_<qdicke::CompositionVector>(m, "CompositionVector")
        .def(py::init<int, std::vector<int>>(), py::arg("d"), py::arg("parts"))
        .def_readonly("d", &qdicke::CompositionVector::d)
        .def_readonly("parts", &qdicke::CompositionVector::parts)
        .def("n", &qdicke::CompositionVector::n)
        .def("__eq__", [](const qdicke::CompositionVector& a,
                          const qdicke::CompositionVector& b) { return a == b; })
        .def("__repr__", [](const qdicke::CompositionVector& k) {
            std::string s = "CompositionVector(d=" + std::to_string(k.d) + ", parts=[";
            for (std::size_t i = 0; i < k.parts.size(); ++i)
                s += (i ? ", " : "") + std::to_string(k.parts[i]);
            return s + "])";
        });

    py::class_<qdicke::QuditState>(m, "QuditState")
        .def_readonly("d", &qdicke::QuditState::d)
        .def_readonly("n", &qdicke::QuditState::n)
        .def_readonly("amps", &qdicke::QuditState::amps)
        .def("dim", &qdicke::QuditState::dim)
        .def("norm", &qdicke::QuditState::norm);

    py::class_<qdicke::Circuit>(m, "Circuit")
        .def_readonly("d", &qdicke::Circuit::d)
        .def_readonly("n", &qdicke::Circuit::n)
        .def_readonly("tags", &qdicke::Circuit::tags)
        .def("size", &qdicke::Circuit::size)
        .def("depth", &qdicke::Circuit::depth)
        .def("to_json", [](const qdicke::Circuit& c) {
            return qdicke::to_json_string(c);
        });

    py::class_<qdicke::VerifyReport>(m, "VerifyReport")
        .def_readonly("fidelity", &qdicke::VerifyReport::fidelity)
        .def_readonly("max_amp_error", &qdicke::VerifyReport::max_amp_error)
        .def_readonly("counts", &qdicke::VerifyReport::counts)
        .def_readonly("size", &qdicke::VerifyReport::size)
        .def_readonly("depth", &qdicke::VerifyReport::depth)
        .def_readonly("pass_", &qdicke::VerifyReport::pass)
        .def("__repr__", [](const qdicke::VerifyReport& r) {
            return "VerifyReport(fidelity=" + std::to_string(r.fidelity) +
                   ", pass=" + (r.pass ? std::string("True") : "False") + ")";
        });

    py::enum_<qdicke::SynthesisMode>(m, "SynthesisMode")
        .value("Full", qdicke::SynthesisMode::Full)
        .value("Pruned", qdicke::SynthesisMode::Pruned);

    m.def("identity_permutation_state", &qdicke::identity_permutation_state,
          py::arg("k"), "Sorted computational basis state |e(k)>");
    m.def("fidelity", &qdicke::fidelity, py::arg("a"), py::arg("b"));
    m.def("multinomial", &qdicke::multinomial, py::arg("k"));
    m.def("reference_dicke_state", &qdicke::reference_dicke_state, py::arg("k"),
          "Brute-force equal-superposition Dicke state");
    m.def("recursion_check", &qdicke::recursion_check, py::arg("k"));
    m.def("all_compositions", &qdicke::all_compositions, py::arg("n"),
          py::arg("d"));
    m.def("build_u", &qdicke::build_u, py::arg("n"), py::arg("d"),
          "Full preparation circuit U_n on n wires");
    m.def("build_w", &qdicke::build_w, py::arg("m"), py::arg("d"), py::arg("n"));
    m.def("build_w_dj", &qdicke::build_w_dj, py::arg("m"), py::arg("d"),
          py::arg("j"), py::arg("n"));
    m.def("build_pruned_u", &qdicke::build_pruned_u, py::arg("k"),
          "Pruned, k-specialized preparation circuit (d = 2 or 3)");
    m.def("predicted_w_count", &qdicke::predicted_w_count, py::arg("m"),
          py::arg("d"));
    m.def("predicted_v_count", &qdicke::predicted_v_count, py::arg("n"),
          py::arg("d"));
    m.def(
        "predicted_pruned_counts",
        [](const qdicke::CompositionVector& k) {
            return qdicke::predicted_pruned_counts(qdicke::PrunedSpec(k));
        },
        py::arg("k"), "Pair (I-count, II-count) for the pruned circuit");
    m.def("count_by_tag", &qdicke::count_by_tag, py::arg("circuit"));
    m.def("circuit_from_json", &qdicke::circuit_from_json_string,
          py::arg("text"));
    m.def("run", &qdicke::run, py::arg("circuit"), py::arg("input"),
          py::arg("max_amps") = qdicke::kDefaultAmpGuard);
    m.def("verify", &qdicke::verify, py::arg("d"), py::arg("n"), py::arg("k"),
          py::arg("mode") = qdicke::SynthesisMode::Full,
          py::arg("fidelity_tol") = qdicke::kFidelityTol);
}
