#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pauliseq/config.hpp"
#include "pauliseq/dynamic.hpp"
#include "pauliseq/experiments.hpp"
#include "pauliseq/gates.hpp"
#include "pauliseq/search.hpp"

namespace py = pybind11;
using namespace pauliseq;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Adiabatic Pauli-Hamiltonian-sequence gates: symbolic verifier and "
            "noise-robustness simulator";

  py::class_<PauliString>(m, "PauliString")
      .def(py::init<std::string, int>(), py::arg("letters"), py::arg("sign") = 1)
      .def_static("parse", &PauliString::parse)
      .def_property_readonly("n_qubits", &PauliString::n_qubits)
      .def_property_readonly("letters", &PauliString::letters)
      .def_property_readonly("sign", &PauliString::sign)
      .def("weight", &PauliString::weight)
      .def("support", &PauliString::support)
      .def("__str__", &PauliString::str)
      .def("__repr__", [](const PauliString& s) { return "PauliString('" + s.str() + "')"; })
      .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; });

  py::class_<PauliProduct>(m, "PauliProduct")
      .def_readonly("phase_quarters", &PauliProduct::phase_quarters)
      .def_readonly("product", &PauliProduct::product)
      .def("phase", &PauliProduct::phase);

  py::class_<PauliSum>(m, "PauliSum")
      .def(py::init<int>(), py::arg("n_qubits"))
      .def(py::init<const PauliString&, double>(), py::arg("string"), py::arg("coeff") = 1.0)
      .def("add", py::overload_cast<const PauliString&, double>(&PauliSum::add),
           py::arg("string"), py::arg("coeff") = 1.0, py::return_value_policy::reference)
      .def_property_readonly("n_qubits", &PauliSum::n_qubits)
      .def_property_readonly("terms", [](const PauliSum& s) { return s.terms(); })
      .def("__str__", &PauliSum::str);

  m.def("multiply", &multiply);
  m.def("commutes", &commutes);
  m.def("commutes_sum", &commutes_sum);
  m.def("matrix_of", [](const PauliString& s) { return matrix_of(s); });
  m.def("matrix_of_sum", [](const PauliSum& s) { return matrix_of(s); });

  py::class_<StageHamiltonian>(m, "StageHamiltonian")
      .def_readonly("generators", &StageHamiltonian::generators)
      .def_readonly("canonical", &StageHamiltonian::canonical)
      .def("total", &StageHamiltonian::total);

  py::class_<GateSequence>(m, "GateSequence")
      .def_readonly("n_qubits", &GateSequence::n_qubits)
      .def_readonly("data_in", &GateSequence::data_in)
      .def_readonly("data_out", &GateSequence::data_out)
      .def_readonly("stages", &GateSequence::stages)
      .def_readonly("name", &GateSequence::name)
      .def("n_stages", &GateSequence::n_stages);

  m.def("parse_sequence", &parse_sequence);
  m.def("render_sequence", &render_sequence);

  py::class_<LegReport>(m, "LegReport")
      .def_readonly("min_gap", &LegReport::min_gap)
      .def_readonly("max_ground_split", &LegReport::max_ground_split);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("passed", &ValidationReport::passed)
      .def_readonly("ground_dims", &ValidationReport::ground_dims)
      .def_readonly("legs", &ValidationReport::legs)
      .def_readonly("failures", &ValidationReport::failures)
      .def("__str__", &ValidationReport::str);

  py::class_<LogicalTransformation>(m, "LogicalTransformation")
      .def_readonly("in_qubits", &LogicalTransformation::in_qubits)
      .def_readonly("out_qubits", &LogicalTransformation::out_qubits)
      .def_readonly("x_images", &LogicalTransformation::x_images)
      .def_readonly("z_images", &LogicalTransformation::z_images)
      .def("symplectic", &LogicalTransformation::symplectic)
      .def("__str__", &LogicalTransformation::str)
      .def("__eq__",
           [](const LogicalTransformation& a, const LogicalTransformation& b) { return a == b; });

  m.def("validate_sequence", &validate_sequence, py::arg("sequence"), py::arg("grid_points") = 33);
  m.def("track_clifford", &track_clifford);
  m.def("ground_basis", &ground_basis);

  py::class_<CertificateClaim>(m, "CertificateClaim")
      .def(py::init([](const PauliSum& in, const PauliSum& out) {
             return CertificateClaim{in, out};
           }),
           py::arg("input"), py::arg("output"))
      .def_readonly("input", &CertificateClaim::input)
      .def_readonly("output", &CertificateClaim::output);

  py::class_<CertificateResult>(m, "CertificateResult")
      .def_readonly("verified", &CertificateResult::verified)
      .def_readonly("trace", &CertificateResult::trace)
      .def("__bool__", [](const CertificateResult& r) { return r.verified; });

  m.def("verify_certificate", &verify_certificate);

  py::class_<RotationCertificate>(m, "RotationCertificate")
      .def_readonly("claims", &RotationCertificate::claims)
      .def_readonly("logical_unitary", &RotationCertificate::logical_unitary);

  py::class_<GateSpec>(m, "GateSpec")
      .def_readonly("name", &GateSpec::name)
      .def_readonly("sequence", &GateSpec::sequence)
      .def_readonly("clifford_ideal", &GateSpec::clifford_ideal)
      .def_readonly("rotation_certificate", &GateSpec::rotation_certificate)
      .def_readonly("theta", &GateSpec::theta)
      .def_readonly("reconstructed", &GateSpec::reconstructed);

  m.def("get_gate", &get_gate, py::arg("name"), py::arg("theta") = std::nullopt);
  m.def("gate_names", &gate_names);
  m.def("list_gates", &list_gates);
  m.def("perturb_stage", &perturb_stage, py::arg("spec"), py::arg("stage_index"),
        py::arg("extra"), py::arg("eps"));

  py::enum_<PulseShape>(m, "PulseShape")
      .value("rosen_zener", PulseShape::RosenZener)
      .value("erf", PulseShape::Erf);

  py::class_<PulseSpec>(m, "PulseSpec")
      .def(py::init<>())
      .def_readwrite("shape", &PulseSpec::shape)
      .def_readwrite("gap", &PulseSpec::gap)
      .def_readwrite("gate_time", &PulseSpec::gate_time)
      .def_readwrite("rz_ratio", &PulseSpec::rz_ratio)
      .def_readwrite("erf_width", &PulseSpec::erf_width)
      .def_readwrite("samples", &PulseSpec::samples);

  py::class_<ControlTrace>(m, "ControlTrace")
      .def_readonly("grid", &ControlTrace::grid)
      .def_readonly("strengths", &ControlTrace::strengths)
      .def_readonly("warnings", &ControlTrace::warnings)
      .def("to_csv", &ControlTrace::to_csv);

  m.def("build_schedule",
        py::overload_cast<const GateSequence&, const PulseSpec&>(&build_schedule));
  m.def("dtheta_max", &dtheta_max, py::arg("pulse"), py::arg("n_stages") = 3);

  py::enum_<NoiseMode>(m, "NoiseMode")
      .value("none", NoiseMode::None)
      .value("dc", NoiseMode::Dc)
      .value("filtered", NoiseMode::Filtered);

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init<>())
      .def_readwrite("mode", &NoiseSpec::mode)
      .def_readwrite("sigma_f", &NoiseSpec::sigma_f)
      .def_readwrite("bandwidth", &NoiseSpec::bandwidth)
      .def_readwrite("seed", &NoiseSpec::seed)
      .def_readwrite("per_line_independent", &NoiseSpec::per_line_independent);

  m.def("generate_multipliers", &generate_multipliers, py::arg("spec"), py::arg("grid"),
        py::arg("n_lines"), py::arg("run_index"));
  m.def("apply_noise", &apply_noise);

  py::class_<EvolutionResult>(m, "EvolutionResult")
      .def_readonly("u_sim", &EvolutionResult::u_sim)
      .def_readonly("steps_used", &EvolutionResult::steps_used)
      .def_readonly("unitarity_defect", &EvolutionResult::unitarity_defect);

  m.def("evolve",
        [](const GateSequence& seq, const ControlTrace& trace) { return evolve(seq, trace); });

  py::class_<GateErrorReport>(m, "GateErrorReport")
      .def_readonly("error", &GateErrorReport::error)
      .def_readonly("leakage", &GateErrorReport::leakage)
      .def_readonly("o_sim", &GateErrorReport::o_sim);

  m.def("gate_error", &gate_error);
  m.def("ideal_unitary", &ideal_unitary);
  m.def("rz_reference", &rz_reference);
  m.def("dynamic_detuning_error", &dynamic_detuning_error);

  py::class_<DynamicReferences>(m, "DynamicReferences")
      .def_readonly("time_error", &DynamicReferences::time_error)
      .def_readonly("dc_error", &DynamicReferences::dc_error);
  m.def("dynamic_references", &dynamic_references);

  py::enum_<DynamicEnvelope>(m, "DynamicEnvelope")
      .value("square", DynamicEnvelope::Square)
      .value("crossfade", DynamicEnvelope::Crossfade);

  py::class_<DynamicSpec>(m, "DynamicSpec")
      .def_readonly("t_0", &DynamicSpec::t_0)
      .def_readonly("amplitude", &DynamicSpec::amplitude)
      .def_readonly("envelope", &DynamicSpec::envelope);

  m.def("calibrate", &calibrate, py::arg("t_0"),
        py::arg("envelope") = DynamicEnvelope::Square, py::arg("pulse") = PulseSpec{},
        py::arg("samples") = 4096);
  m.def("simulate_dynamic", &simulate_dynamic, py::arg("spec"), py::arg("t_g"),
        py::arg("noise"), py::arg("run_index"));

  py::enum_<SweepVariable>(m, "SweepVariable")
      .value("gate_time", SweepVariable::GateTime)
      .value("sigma_f", SweepVariable::SigmaF)
      .value("bandwidth", SweepVariable::Bandwidth)
      .value("epsilon", SweepVariable::Epsilon);

  py::class_<EpsilonPerturbation>(m, "EpsilonPerturbation")
      .def(py::init([](int stage_index, const PauliString& extra) {
             return EpsilonPerturbation{stage_index, extra};
           }),
           py::arg("stage_index"), py::arg("extra"));

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("gate", &ExperimentConfig::gate)
      .def_readwrite("dynamic_t0", &ExperimentConfig::dynamic_t0)
      .def_readwrite("envelope", &ExperimentConfig::envelope)
      .def_readwrite("pulse", &ExperimentConfig::pulse)
      .def_readwrite("noise", &ExperimentConfig::noise)
      .def_readwrite("runs", &ExperimentConfig::runs)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("epsilon", &ExperimentConfig::epsilon)
      .def("resolved", [](const ExperimentConfig& c) { return c.resolved(); });

  py::class_<McPoint>(m, "McPoint")
      .def_readonly("mean_error", &McPoint::mean_error)
      .def_readonly("sem_error", &McPoint::sem_error)
      .def_readonly("mean_leakage", &McPoint::mean_leakage)
      .def_readonly("max_unitarity_defect", &McPoint::max_unitarity_defect)
      .def_readonly("runs", &McPoint::runs);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("variable", &SweepRow::variable)
      .def_readonly("value", &SweepRow::value)
      .def_readonly("stats", &SweepRow::stats)
      .def_readonly("seed", &SweepRow::seed)
      .def_readonly("digest", &SweepRow::digest);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("failures", &SweepResult::failures)
      .def("to_csv", &SweepResult::to_csv)
      .def("to_json", &SweepResult::to_json);

  m.def("mc_estimate", &mc_estimate, py::call_guard<py::gil_scoped_release>());
  m.def("run_sweep", &run_sweep, py::call_guard<py::gil_scoped_release>());
  m.def("run_preset", &run_preset, py::call_guard<py::gil_scoped_release>());
  m.def("preset_names", &preset_names);
  m.def("config_digest", &config_digest);

  py::class_<SearchConstraints>(m, "SearchConstraints")
      .def(py::init<>())
      .def_readwrite("n_qubits", &SearchConstraints::n_qubits)
      .def_readwrite("max_stages", &SearchConstraints::max_stages)
      .def_readwrite("max_weight", &SearchConstraints::max_weight)
      .def_readwrite("allow_pair_stages", &SearchConstraints::allow_pair_stages)
      .def_readwrite("max_results", &SearchConstraints::max_results);
  m.def("search_sequences", &search_sequences, py::call_guard<py::gil_scoped_release>());

  m.attr("__version__") = "0.1.0";
}
