// Python bindings for the core operations: state construction, correlation
// tensors, classification, the purity oracle, B measures and the Werner scan.

#include <string>
#include <utility>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entcorr/classify.hpp"
#include "entcorr/correlation.hpp"
#include "entcorr/measure.hpp"
#include "entcorr/mixed.hpp"
#include "entcorr/oracle.hpp"
#include "entcorr/state.hpp"

namespace py = pybind11;
using namespace entcorr;

namespace {

struct ClassificationReport {
    EntanglementPartition partition;
    ClassLabel cls;
    std::vector<Witness> witness;
};

ClassificationReport classify_state(const PureState& state, double epsilon,
                                    int max_qubits, bool parallel) {
    ClassifyOptions opts;
    opts.epsilon = epsilon;
    opts.max_qubits = max_qubits;
    opts.parallel = parallel;
    EntanglementPartition part = finest_partition(state, opts);
    ClassLabel cls = label(part);
    std::vector<Witness> wit = witnesses(state, part);
    return {std::move(part), std::move(cls), std::move(wit)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pauli correlation tensors and entanglement structure of pure "
              "multiqubit states";

    py::class_<PureState>(m, "PureState")
        .def_property_readonly("n_qubits", &PureState::n_qubits)
        .def_property_readonly("dim", &PureState::dim)
        .def_property_readonly(
            "amplitudes",
            [](const PureState& s) { return s.amplitudes(); })
        .def("norm", &PureState::norm)
        .def("__repr__", [](const PureState& s) {
            return "<PureState n_qubits=" + std::to_string(s.n_qubits()) + ">";
        });

    py::class_<CorrelationTensor>(m, "CorrelationTensor")
        .def_readonly("subset", &CorrelationTensor::subset)
        .def_readonly("values", &CorrelationTensor::values)
        .def_readonly("epsilon", &CorrelationTensor::epsilon)
        .def_property_readonly(
            "kind",
            [](const CorrelationTensor& t) { return to_string(t.kind); })
        .def("at", &CorrelationTensor::at, py::arg("axes"))
        .def("max_abs",
             [](const CorrelationTensor& t) { return max_abs(t); })
        .def_static("axes_string", &CorrelationTensor::axes_string,
                    py::arg("flat_index"), py::arg("k"));

    py::class_<EntanglementPartition>(m, "EntanglementPartition")
        .def_readonly("n_qubits", &EntanglementPartition::n_qubits)
        .def_readonly("blocks", &EntanglementPartition::blocks)
        .def_readonly("epsilon", &EntanglementPartition::epsilon);

    py::class_<ClassLabel>(m, "ClassLabel")
        .def_property_readonly(
            "kind",
            [](const ClassLabel& c) {
                switch (c.kind) {
                    case ClassLabel::Kind::TotallyEntangled:
                        return "TotallyEntangled";
                    case ClassLabel::Kind::PartiallySeparable:
                        return "PartiallySeparable";
                    default:
                        return "CompletelySeparable";
                }
            })
        .def_readonly("block_sizes", &ClassLabel::block_sizes)
        .def("__str__", &ClassLabel::to_string)
        .def("__repr__", [](const ClassLabel& c) {
            return "<ClassLabel " + c.to_string() + ">";
        });

    py::class_<Witness>(m, "Witness")
        .def_readonly("subset", &Witness::subset)
        .def_readonly("axes", &Witness::axes)
        .def_readonly("value", &Witness::value);

    py::class_<ClassificationReport>(m, "ClassificationReport")
        .def_property_readonly(
            "blocks",
            [](const ClassificationReport& r) { return r.partition.blocks; })
        .def_property_readonly(
            "epsilon",
            [](const ClassificationReport& r) { return r.partition.epsilon; })
        .def_property_readonly(
            "label",
            [](const ClassificationReport& r) { return r.cls.to_string(); })
        .def_readonly("witness", &ClassificationReport::witness);

    py::class_<MeasureReport>(m, "MeasureReport")
        .def_readonly("subset", &MeasureReport::subset)
        .def_readonly("raw", &MeasureReport::raw)
        .def_readonly("normalized", &MeasureReport::normalized)
        .def_readonly("reference", &MeasureReport::reference);

    py::class_<SchmidtSplit>(m, "SchmidtSplit")
        .def_readonly("subset", &SchmidtSplit::subset)
        .def_readonly("coefficients", &SchmidtSplit::coefficients)
        .def_readonly("rank", &SchmidtSplit::rank);

    m.def("make_state", &make_state, py::arg("n_qubits"),
          py::arg("amplitudes"), py::arg("renormalize") = false,
          py::arg("max_qubits") = kDefaultMaxQubits);
    m.def("basis_state",
          [](const std::string& bits) { return basis_state(bits); },
          py::arg("bits"));
    m.def("bell_state", &bell_state, py::arg("variant"));
    m.def("ghz_state", &ghz_state, py::arg("n_qubits"));
    m.def("w_state", &w_state, py::arg("n_qubits"));
    m.def("dicke_state", &dicke_state, py::arg("n_qubits"), py::arg("k"));
    m.def("phi4_cluster_state", &phi4_cluster_state);
    m.def("named_state",
          [](const std::string& name) { return named_state(name); },
          py::arg("name"));
    m.def("haar_random_state", &haar_random_state, py::arg("n_qubits"),
          py::arg("seed"));

    m.def("m_value",
          [](const PureState& s, const std::vector<int>& qubits,
             const std::string& axes) {
              return m_value(s, PauliAssignment::from_axes(qubits, axes));
          },
          py::arg("state"), py::arg("qubits"), py::arg("axes"));
    m.def("m_prime_value",
          [](const PureState& s, const std::vector<int>& qubits,
             const std::string& axes) {
              return m_prime_value(s,
                                   PauliAssignment::from_axes(qubits, axes));
          },
          py::arg("state"), py::arg("qubits"), py::arg("axes"));
    m.def("tensor_scan",
          [](const PureState& s, std::vector<int> subset, bool prime,
             double epsilon, bool parallel) {
              ScanOptions opts;
              opts.epsilon = epsilon;
              opts.parallel = parallel;
              return tensor_scan(s, std::move(subset),
                                 prime ? TensorKind::MPrime : TensorKind::M,
                                 opts);
          },
          py::arg("state"), py::arg("subset"), py::arg("prime") = true,
          py::arg("epsilon") = 1e-9, py::arg("parallel") = false);

    m.def("finest_partition",
          [](const PureState& s, double epsilon, int max_qubits,
             bool parallel) {
              ClassifyOptions opts;
              opts.epsilon = epsilon;
              opts.max_qubits = max_qubits;
              opts.parallel = parallel;
              return finest_partition(s, opts);
          },
          py::arg("state"), py::arg("epsilon") = 1e-9,
          py::arg("max_qubits") = 10, py::arg("parallel") = false);
    m.def("classify", &classify_state, py::arg("state"),
          py::arg("epsilon") = 1e-9, py::arg("max_qubits") = 10,
          py::arg("parallel") = false);

    m.def("oracle_partition", &oracle_partition, py::arg("state"),
          py::arg("epsilon") = 1e-9);
    m.def("schmidt_split", &schmidt_split, py::arg("state"),
          py::arg("subset"), py::arg("rank_threshold") = 1e-9);

    m.def("b_measure", &b_measure, py::arg("state"), py::arg("subset"));
    m.def("ghz_reference", &ghz_reference, py::arg("m"));
    m.def("b_normalized", &b_normalized, py::arg("state"), py::arg("subset"));
    m.def("measure", &measure_report, py::arg("state"), py::arg("subset"));

    m.def("werner_scan",
          [](const std::vector<double>& grid) {
              std::vector<std::pair<double, double>> out;
              for (const WernerPoint& p : werner_scan(grid)) {
                  out.emplace_back(p.fidelity, p.max_abs_m);
              }
              return out;
          },
          py::arg("grid"));
}
