#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtrit/arith.hpp"
#include "qtrit/circuit.hpp"
#include "qtrit/decompose.hpp"
#include "qtrit/estimator.hpp"
#include "qtrit/noise.hpp"
#include "qtrit/qasm.hpp"
#include "qtrit/serialize.hpp"
#include "qtrit/sim.hpp"

namespace py = pybind11;
using namespace qtrit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "mixed-radix circuit toolkit";

  py::enum_<GateKind>(m, "GateKind")
      .value("X", GateKind::X)
      .value("H", GateKind::H)
      .value("T", GateKind::T)
      .value("Tdg", GateKind::Tdg)
      .value("S", GateKind::S)
      .value("Sdg", GateKind::Sdg)
      .value("CX", GateKind::CX)
      .value("CCX", GateKind::CCX)
      .value("TernaryCX", GateKind::TernaryCX)
      .value("Measure", GateKind::Measure)
      .value("Barrier", GateKind::Barrier);

  py::enum_<TernaryAction>(m, "TernaryAction")
      .value("Increment", TernaryAction::Increment)
      .value("Decrement", TernaryAction::Decrement)
      .value("Flip01", TernaryAction::Flip01);

  py::enum_<DecompositionVariant>(m, "DecompositionVariant")
      .value("clifford_t_A", DecompositionVariant::clifford_t_A)
      .value("clifford_t_B", DecompositionVariant::clifford_t_B)
      .value("clifford_t_C", DecompositionVariant::clifford_t_C)
      .value("qutrit", DecompositionVariant::qutrit);

  py::enum_<OperationKind>(m, "OperationKind")
      .value("add_sub", OperationKind::add_sub)
      .value("mul_div", OperationKind::mul_div)
      .value("sqrt", OperationKind::sqrt);

  py::enum_<Route>(m, "Route")
      .value("clifford_t", Route::clifford_t)
      .value("qutrit", Route::qutrit);

  py::class_<WireSpec>(m, "WireSpec")
      .def(py::init<>())
      .def(py::init([](int id, int radix, std::string label) {
             return WireSpec{id, radix, std::move(label)};
           }),
           py::arg("id"), py::arg("radix") = 2, py::arg("label") = "")
      .def_readwrite("id", &WireSpec::id)
      .def_readwrite("radix", &WireSpec::radix)
      .def_readwrite("label", &WireSpec::label)
      .def("__eq__", [](const WireSpec& a, const WireSpec& b) { return a == b; });

  py::class_<Gate>(m, "Gate")
      .def_readwrite("kind", &Gate::kind)
      .def_readwrite("wires", &Gate::wires)
      .def_readwrite("control_value", &Gate::control_value)
      .def_readwrite("action", &Gate::action)
      .def("__eq__", [](const Gate& a, const Gate& b) { return a == b; });

  m.def("make_gate", &make_gate, py::arg("kind"), py::arg("wires"));
  m.def("make_ternary_cx", &make_ternary_cx, py::arg("control"), py::arg("target"),
        py::arg("control_value"), py::arg("action"));

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<>())
      .def_readwrite("name", &Circuit::name)
      .def_readwrite("wires", &Circuit::wires)
      .def_readwrite("gates", &Circuit::gates)
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("validate",
           [](const Circuit& c) {
             std::vector<std::pair<int, std::string>> out;
             for (const Violation& v : validate(c)) out.emplace_back(v.gate_index, v.rule);
             return out;
           })
      .def("is_valid", [](const Circuit& c) { return is_valid(c); })
      .def("require_valid", [](const Circuit& c) { require_valid(c); })
      .def("depth", [](const Circuit& c) { return depth(c); })
      .def("to_json", [](const Circuit& c) { return circuit_to_json_string(c); })
      .def("to_qasm", [](const Circuit& c) { return emit_qasm(c); });

  py::class_<CountReport>(m, "CountReport")
      .def_readonly("toffoli", &CountReport::toffoli)
      .def_readonly("t", &CountReport::t)
      .def_readonly("cnot", &CountReport::cnot)
      .def_readonly("h", &CountReport::h)
      .def_readonly("ternary_cnot", &CountReport::ternary_cnot)
      .def_readonly("one_wire", &CountReport::one_wire)
      .def_readonly("two_wire", &CountReport::two_wire)
      .def_readonly("depth", &CountReport::depth);

  m.def("gate_counts", &gate_counts, py::arg("circuit"));
  m.def("circuit_from_json", &circuit_from_json_string, py::arg("text"));
  m.def(
      "parse_qasm",
      [](const std::string& text) {
        ParseResult res = parse_qasm(text);
        py::list errors;
        for (const ParseError& e : res.errors) {
          py::dict d;
          d["kind"] = to_string(e.kind);
          d["message"] = e.message;
          d["line"] = e.span.line;
          d["column"] = e.span.column;
          d["length"] = e.span.length;
          errors.append(d);
        }
        py::object circ = res.circuit ? py::cast(*res.circuit) : py::none();
        return py::make_tuple(circ, errors);
      },
      py::arg("text"), "Returns (circuit or None, list of error dicts).");

  m.def("build_adder", &build_adder, py::arg("n"));
  m.def("build_multiplier", &build_multiplier, py::arg("n_a"), py::arg("n_b"));
  m.def(
      "prepare_operand",
      [](Circuit& c, std::uint64_t value, int n_bits, int wire_offset) {
        prepare_operand(c, OperandEncoding{value, n_bits, wire_offset});
      },
      py::arg("circuit"), py::arg("value"), py::arg("n_bits"), py::arg("wire_offset"));

  m.def("decompose_toffoli", &decompose_toffoli, py::arg("circuit"), py::arg("variant"));
  m.def("promoted_wires", &promoted_wires, py::arg("before"), py::arg("after"));

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<std::vector<int>>(), py::arg("dims"))
      .def_static("basis", &StateVector::basis, py::arg("dims"), py::arg("digits"))
      .def_property_readonly("dims", &StateVector::dims)
      .def("__len__", &StateVector::size)
      .def_property_readonly("amplitudes", [](const StateVector& s) { return s.amplitudes(); })
      .def("norm", &StateVector::norm)
      .def("index_of", &StateVector::index_of, py::arg("digits"))
      .def("digits_of", &StateVector::digits_of, py::arg("index"))
      .def("level_population", &StateVector::level_population, py::arg("wire"),
           py::arg("level"));

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<std::vector<int>>(), py::arg("dims"))
      .def_static("from_state", &DensityMatrix::from_state, py::arg("psi"))
      .def_property_readonly("dims", &DensityMatrix::dims)
      .def_property_readonly("matrix", [](const DensityMatrix& r) { return r.matrix(); })
      .def("trace", &DensityMatrix::trace)
      .def("hermiticity_defect", &DensityMatrix::hermiticity_defect)
      .def("min_eigenvalue", &DensityMatrix::min_eigenvalue);

  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init<>())
      .def_readwrite("eps1", &NoiseParams::eps1)
      .def_readwrite("eps2", &NoiseParams::eps2)
      .def_readwrite("lambda1", &NoiseParams::lambda1)
      .def_readwrite("lambda2", &NoiseParams::lambda2)
      .def_readwrite("t1_qubit", &NoiseParams::t1_qubit)
      .def_readwrite("t1_qutrit", &NoiseParams::t1_qutrit)
      .def_readwrite("gate_time", &NoiseParams::gate_time);

  py::class_<KrausChannel>(m, "KrausChannel")
      .def_property_readonly("operators",
                             [](const KrausChannel& ch) { return ch.operators; })
      .def("dimension", &KrausChannel::dimension);

  m.def("completeness_defect", &completeness_defect, py::arg("channel"));
  m.def("is_complete", &is_complete, py::arg("channel"), py::arg("tol") = 1e-12);
  m.def("depolarizing_channel", &depolarizing_channel, py::arg("dims"), py::arg("eps_total"));
  m.def("amplitude_damping_channel", &amplitude_damping_channel, py::arg("radix"),
        py::arg("lambda1"), py::arg("lambda2"));

  m.def("run", &run, py::arg("circuit"), py::arg("input_digits"));
  m.def("unitary_of", &unitary_of, py::arg("circuit"));
  m.def("equivalent_up_to_global_phase", &equivalent_up_to_global_phase, py::arg("u"),
        py::arg("v"), py::arg("tol") = 1e-10);
  m.def("run_density", &run_density, py::arg("circuit"), py::arg("input_digits"),
        py::arg("noise") = NoiseParams{});
  m.def("fidelity", &fidelity, py::arg("rho"), py::arg("psi"));

  py::class_<ResourceEstimate>(m, "ResourceEstimate")
      .def_readonly("kind", &ResourceEstimate::kind)
      .def_readonly("n", &ResourceEstimate::n)
      .def_readonly("route", &ResourceEstimate::route)
      .def_readonly("toffoli", &ResourceEstimate::toffoli)
      .def_readonly("total_depth", &ResourceEstimate::total_depth)
      .def_readonly("cnot", &ResourceEstimate::cnot)
      .def_readonly("t", &ResourceEstimate::t)
      .def_readonly("h", &ResourceEstimate::h)
      .def_readonly("ternary_cnot", &ResourceEstimate::ternary_cnot);

  py::class_<SuccessReport>(m, "SuccessReport")
      .def_readonly("p_success", &SuccessReport::p_success)
      .def_readonly("p_error", &SuccessReport::p_error)
      .def_readonly("one_wire_factor", &SuccessReport::one_wire_factor)
      .def_readonly("two_wire_factor", &SuccessReport::two_wire_factor)
      .def_readonly("relaxation_factor", &SuccessReport::relaxation_factor);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("n", &SweepRow::n)
      .def_readonly("p_success_conventional", &SweepRow::p_success_conventional)
      .def_readonly("p_success_qutrit", &SweepRow::p_success_qutrit)
      .def_readonly("error_decrease_percent", &SweepRow::error_decrease_percent);

  m.def("toffoli_count", &toffoli_count, py::arg("kind"), py::arg("n"));
  m.def("estimate", &estimate, py::arg("kind"), py::arg("n"), py::arg("route"),
        py::arg("floor_counts") = false);
  m.def("success_probability", &success_probability, py::arg("estimate"),
        py::arg("noise") = NoiseParams{});
  m.def("sweep", &sweep, py::arg("kind"), py::arg("n_from"), py::arg("n_to"),
        py::arg("noise") = NoiseParams{});
}
