/*
   Copyright 2026 The bellchain authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bellchain/analysis.hpp"
#include "bellchain/chainedbell.hpp"
#include "bellchain/config.hpp"
#include "bellchain/errors.hpp"
#include "bellchain/models.hpp"
#include "bellchain/montecarlo.hpp"
#include "bellchain/spacetime.hpp"

namespace py = pybind11;
using namespace bellchain;

namespace {

void bind_spacetime(py::module_& m)
{
    using namespace spacetime;

    py::class_<Event>(m, "Event")
        .def(py::init<double, double>(), py::arg("t"), py::arg("x"))
        .def_readonly("t", &Event::t)
        .def_readonly("x", &Event::x)
        .def("__repr__", [](const Event& e) {
            std::ostringstream s;
            s << "Event(t=" << e.t << ", x=" << e.x << ")";
            return s.str();
        });

    py::class_<Boost>(m, "Boost")
        .def(py::init<double>(), py::arg("beta"))
        .def_property_readonly("beta", &Boost::beta)
        .def_property_readonly("gamma", &Boost::gamma);

    py::enum_<IntervalKind>(m, "IntervalKind")
        .value("Spacelike", IntervalKind::Spacelike)
        .value("Timelike", IntervalKind::Timelike)
        .value("Lightlike", IntervalKind::Lightlike);

    py::enum_<TimingKind>(m, "TimingKind")
        .value("BeforeBefore", TimingKind::BeforeBefore)
        .value("AfterAfter", TimingKind::AfterAfter)
        .value("AliceBeforeOnly", TimingKind::AliceBeforeOnly)
        .value("BobBeforeOnly", TimingKind::BobBeforeOnly);

    py::class_<TimingClass>(m, "TimingClass")
        .def(py::init([](bool alice, bool bob) {
                 return TimingClass{alice, bob};
             }),
             py::arg("alice_is_before"), py::arg("bob_is_before"))
        .def_static("from_kind", &TimingClass::from_kind, py::arg("kind"))
        .def_readonly("alice_is_before", &TimingClass::alice_is_before)
        .def_readonly("bob_is_before", &TimingClass::bob_is_before)
        .def_property_readonly("kind", &TimingClass::kind)
        .def("__repr__", [](const TimingClass& t) {
            return std::string("TimingClass(") + std::string(to_string(t.kind())) + ")";
        });

    py::class_<ApparatusGeometry>(m, "ApparatusGeometry")
        .def(py::init([](const Event& alice, const Event& bob, double beta_A, double beta_B) {
                 return ApparatusGeometry{alice, bob, Boost(beta_A), Boost(beta_B)};
             }),
             py::arg("alice_event"), py::arg("bob_event"), py::arg("beta_A"),
             py::arg("beta_B"))
        .def_readonly("alice_event", &ApparatusGeometry::alice_event)
        .def_readonly("bob_event", &ApparatusGeometry::bob_event);

    py::class_<TimingDiagnostics>(m, "TimingDiagnostics")
        .def_readonly("alice_time_in_frame_A", &TimingDiagnostics::alice_time_in_frame_A)
        .def_readonly("bob_time_in_frame_A", &TimingDiagnostics::bob_time_in_frame_A)
        .def_readonly("alice_time_in_frame_B", &TimingDiagnostics::alice_time_in_frame_B)
        .def_readonly("bob_time_in_frame_B", &TimingDiagnostics::bob_time_in_frame_B)
        .def_readonly("alice_tie", &TimingDiagnostics::alice_tie)
        .def_readonly("bob_tie", &TimingDiagnostics::bob_tie)
        .def_readonly("timing", &TimingDiagnostics::timing);

    m.def("time_in_frame", &time_in_frame, py::arg("event"), py::arg("boost"),
          "Time coordinate of the event in the boosted frame, gamma (t - beta x).");
    m.def("interval_class", &interval_class, py::arg("e1"), py::arg("e2"));
    m.def("classify_timing", &classify_timing, py::arg("geometry"));
    m.def("classify_timing_detailed", &classify_timing_detailed, py::arg("geometry"));
}

void bind_chainedbell(py::module_& m)
{
    using namespace chainedbell;

    py::class_<InterferometerParams>(m, "InterferometerParams")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("omega_A"),
             py::arg("omega_B"), py::arg("s_A"), py::arg("s_B"))
        .def_readonly("omega_A", &InterferometerParams::omega_A)
        .def_readonly("omega_B", &InterferometerParams::omega_B)
        .def_readonly("s_A", &InterferometerParams::s_A)
        .def_readonly("s_B", &InterferometerParams::s_B);

    py::class_<ChainedConfig>(m, "ChainedConfig")
        .def(py::init<int, double, double>(), py::arg("N"), py::arg("theta"),
             py::arg("visibility"))
        .def_readonly("N", &ChainedConfig::N)
        .def_readonly("theta", &ChainedConfig::theta)
        .def_readonly("visibility", &ChainedConfig::visibility);

    py::class_<ChainedSettings>(m, "ChainedSettings")
        .def_readonly("alice_phases", &ChainedSettings::alice_phases)
        .def_readonly("bob_phases", &ChainedSettings::bob_phases)
        .def_readonly("alice_long_arms", &ChainedSettings::alice_long_arms)
        .def_readonly("bob_long_arms", &ChainedSettings::bob_long_arms);

    py::enum_<TermKind>(m, "TermKind")
        .value("ExtremeEqual", TermKind::ExtremeEqual)
        .value("AdjacentDifferent", TermKind::AdjacentDifferent);

    py::class_<ChainTerm>(m, "ChainTerm")
        .def_readonly("kind", &ChainTerm::kind)
        .def_readonly("alice_setting", &ChainTerm::alice_setting)
        .def_readonly("bob_setting", &ChainTerm::bob_setting)
        .def_readonly("probability", &ChainTerm::probability)
        .def_readonly("std_error", &ChainTerm::std_error)
        .def_readonly("trials", &ChainTerm::trials);

    py::class_<InequalityReport>(m, "InequalityReport")
        .def_readonly("N", &InequalityReport::N)
        .def_readonly("theta", &InequalityReport::theta)
        .def_readonly("visibility", &InequalityReport::visibility)
        .def_readonly("value", &InequalityReport::value)
        .def_readonly("std_error", &InequalityReport::std_error)
        .def_readonly("is_violation", &InequalityReport::is_violation)
        .def_readonly("terms", &InequalityReport::terms)
        .def("__repr__", [](const InequalityReport& r) {
            std::ostringstream s;
            s << "InequalityReport(N=" << r.N << ", value=" << r.value << ")";
            return s.str();
        });

    py::class_<MinimizeResult>(m, "MinimizeResult")
        .def_readonly("n_star", &MinimizeResult::n_star)
        .def_readonly("i_min", &MinimizeResult::i_min)
        .def_readonly("monotone", &MinimizeResult::monotone);

    m.def("phase", &phase, py::arg("l_A"), py::arg("l_B"), py::arg("params"),
          "Interference phase for the two long-arm settings, reduced into [0, 2pi).");
    m.def("prob_equal", &prob_equal, py::arg("phi"), py::arg("visibility"),
          "P(a = b | phi) = (1 + V cos phi) / 2.");
    m.def("equipartition_settings", &equipartition_settings, py::arg("config"),
          py::arg("params") = InterferometerParams());
    m.def("closed_form_I", &closed_form_I, py::arg("config"));
    m.def("minimize_I_over_N", &minimize_I_over_N, py::arg("visibility"), py::arg("theta"),
          py::arg("n_max") = 1000);
    m.attr("SPEED_OF_LIGHT") = kSpeedOfLight;
}

void bind_models(py::module_& m)
{
    using namespace models;

    py::class_<HiddenState>(m, "HiddenState")
        .def_static("from_trial", &HiddenState::from_trial, py::arg("seed"), py::arg("trial"))
        .def_readwrite("u", &HiddenState::u)
        .def_readwrite("v", &HiddenState::v)
        .def_readwrite("alpha", &HiddenState::alpha)
        .def_readwrite("beta_nl", &HiddenState::beta_nl)
        .def_readwrite("shared_lambda", &HiddenState::shared_lambda);

    py::class_<TrialInput>(m, "TrialInput")
        .def(py::init<>())
        .def_readwrite("phi", &TrialInput::phi)
        .def_readwrite("alice_phase", &TrialInput::alice_phase)
        .def_readwrite("bob_phase", &TrialInput::bob_phase)
        .def_readwrite("alice_setting", &TrialInput::alice_setting)
        .def_readwrite("bob_setting", &TrialInput::bob_setting)
        .def_readwrite("timing", &TrialInput::timing)
        .def_readwrite("hidden", &TrialInput::hidden);

    py::class_<JointOutcome>(m, "JointOutcome")
        .def_readonly("a", &JointOutcome::a)
        .def_readonly("b", &JointOutcome::b)
        .def("__repr__", [](const JointOutcome& o) {
            std::ostringstream s;
            s << "JointOutcome(a=" << o.a << ", b=" << o.b << ")";
            return s.str();
        });

    py::enum_<LocalStrategy>(m, "LocalStrategy")
        .value("Product", LocalStrategy::Product)
        .value("SharedRandomness", LocalStrategy::SharedRandomness);

    py::class_<OutcomeModel>(m, "OutcomeModel")
        .def_property_readonly("name",
                               [](const OutcomeModel& o) { return std::string(o.name()); })
        .def_property_readonly("timing_sensitive", &OutcomeModel::timing_sensitive)
        .def("sample", &OutcomeModel::sample, py::arg("trial_input"));

    py::class_<QuantumModel, OutcomeModel>(m, "QuantumModel")
        .def(py::init<double>(), py::arg("visibility"))
        .def_property_readonly("visibility", &QuantumModel::visibility);

    py::class_<SuarezScaraniModel, OutcomeModel>(m, "SuarezScaraniModel")
        .def(py::init<double, LocalStrategy>(), py::arg("visibility"),
             py::arg("strategy") = LocalStrategy::Product)
        .def_property_readonly("visibility", &SuarezScaraniModel::visibility)
        .def_property_readonly("strategy", &SuarezScaraniModel::strategy);

    py::class_<LocalDeterministicModel, OutcomeModel>(m, "LocalDeterministicModel")
        .def(py::init<>());

    py::class_<SignalingToyModel, OutcomeModel>(m, "SignalingToyModel")
        .def(py::init<double>(), py::arg("delta"))
        .def_property_readonly("delta", &SignalingToyModel::delta);

    m.def("quantum_sample", &quantum_sample, py::arg("trial_input"), py::arg("visibility"));
    m.def("suarez_scarani_sample", &suarez_scarani_sample, py::arg("trial_input"),
          py::arg("visibility"), py::arg("strategy") = LocalStrategy::Product);
    m.def("local_deterministic_sample", &local_deterministic_sample, py::arg("trial_input"));
    m.def("signaling_toy_sample", &signaling_toy_sample, py::arg("trial_input"),
          py::arg("delta"));
}

void bind_montecarlo(py::module_& m)
{
    using namespace montecarlo;

    py::class_<JointCounts>(m, "JointCounts")
        .def_readonly("pp", &JointCounts::pp)
        .def_readonly("pm", &JointCounts::pm)
        .def_readonly("mp", &JointCounts::mp)
        .def_readonly("mm", &JointCounts::mm)
        .def_property_readonly("total", &JointCounts::total);

    py::class_<CountsTable>(m, "CountsTable")
        .def_property_readonly("n_alice", &CountsTable::n_alice)
        .def_property_readonly("n_bob", &CountsTable::n_bob)
        .def_property_readonly("total_trials", &CountsTable::total_trials)
        .def("at",
             static_cast<const JointCounts& (CountsTable::*)(int, int) const>(
                 &CountsTable::at),
             py::arg("alice"), py::arg("bob"), py::return_value_policy::reference_internal);

    py::class_<EstimateWithError>(m, "EstimateWithError")
        .def_readonly("value", &EstimateWithError::value)
        .def_readonly("std_error", &EstimateWithError::std_error)
        .def_readonly("n", &EstimateWithError::n)
        .def("__repr__", [](const EstimateWithError& e) {
            std::ostringstream s;
            s << "EstimateWithError(value=" << e.value << ", std_error=" << e.std_error
              << ", n=" << e.n << ")";
            return s.str();
        });

    py::class_<SettingChoice>(m, "SettingChoice")
        .def_static("random_uniform", &SettingChoice::random_uniform)
        .def_static("fixed_pair", &SettingChoice::fixed_pair, py::arg("alice"),
                    py::arg("bob"));

    py::class_<ScanPoint>(m, "ScanPoint")
        .def(py::init([](double phi, double p_equal, double std_error, std::uint64_t n) {
                 return ScanPoint{phi, p_equal, std_error, n};
             }),
             py::arg("phi"), py::arg("p_equal"), py::arg("std_error"), py::arg("n"))
        .def_readonly("phi", &ScanPoint::phi)
        .def_readonly("p_equal", &ScanPoint::p_equal)
        .def_readonly("std_error", &ScanPoint::std_error)
        .def_readonly("n", &ScanPoint::n);

    py::class_<ZComparison>(m, "ZComparison")
        .def_readonly("side", &ZComparison::side)
        .def_readonly("local_setting", &ZComparison::local_setting)
        .def_readonly("remote_first", &ZComparison::remote_first)
        .def_readonly("remote_second", &ZComparison::remote_second)
        .def_readonly("p_first", &ZComparison::p_first)
        .def_readonly("p_second", &ZComparison::p_second)
        .def_readonly("z", &ZComparison::z);

    py::class_<NonsignalingReport>(m, "NonsignalingReport")
        .def_readonly("passed", &NonsignalingReport::pass)
        .def_readonly("z_threshold", &NonsignalingReport::z_threshold)
        .def_readonly("max_abs_z", &NonsignalingReport::max_abs_z)
        .def_readonly("comparisons", &NonsignalingReport::comparisons);

    py::enum_<Side>(m, "Side").value("Alice", Side::Alice).value("Bob", Side::Bob);

    m.def("run_trials", &run_trials, py::arg("model"), py::arg("settings"), py::arg("timing"),
          py::arg("trials"), py::arg("seed"),
          py::arg("choice") = SettingChoice::random_uniform(), py::arg("n_workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("estimate_I", &estimate_I, py::arg("counts"), py::arg("config"));
    m.def("scan_phase", &scan_phase, py::arg("model"), py::arg("phases"),
          py::arg("trials_per_point"), py::arg("seed"), py::arg("timing"),
          py::arg("n_workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("fit_visibility", &fit_visibility, py::arg("scan"));
    m.def("nonsignaling_test", &nonsignaling_test, py::arg("counts"),
          py::arg("z_threshold") = 4.0);
    m.def("estimate_distance", &estimate_distance, py::arg("counts"), py::arg("side"));
    m.def("joint_distance", &joint_distance, py::arg("counts"), py::arg("alice"),
          py::arg("bob"));
}

void bind_analysis(py::module_& m)
{
    using namespace analysis;

    py::class_<ExtensionClaim>(m, "ExtensionClaim")
        .def(py::init([](double claimed_distance, double visibility, double theta,
                         int n_max) {
                 ExtensionClaim c;
                 c.claimed_distance = claimed_distance;
                 c.visibility = visibility;
                 c.theta = theta;
                 c.n_max = n_max;
                 return c;
             }),
             py::arg("claimed_distance"), py::arg("visibility"),
             py::arg("theta") = 3.14159265358979323846, py::arg("n_max") = 1000)
        .def_readwrite("claimed_distance", &ExtensionClaim::claimed_distance)
        .def_readwrite("visibility", &ExtensionClaim::visibility)
        .def_readwrite("theta", &ExtensionClaim::theta)
        .def_readwrite("n_max", &ExtensionClaim::n_max);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("n_star", &Verdict::n_star)
        .def_readonly("i_min", &Verdict::i_min)
        .def_readonly("bound", &Verdict::bound)
        .def_readonly("contradictory", &Verdict::contradictory)
        .def_readonly("margin", &Verdict::margin)
        .def("__repr__", [](const Verdict& v) {
            std::ostringstream s;
            s << "Verdict(n_star=" << v.n_star << ", bound=" << v.bound
              << ", contradictory=" << (v.contradictory ? "True" : "False") << ")";
            return s.str();
        });

    py::class_<EmpiricalVerdict>(m, "EmpiricalVerdict")
        .def_readonly("bound", &EmpiricalVerdict::bound)
        .def_readonly("bound_std_error", &EmpiricalVerdict::bound_std_error)
        .def_readonly("contradictory", &EmpiricalVerdict::contradictory)
        .def_readonly("margin", &EmpiricalVerdict::margin);

    m.def("nonsignaling_bound", &nonsignaling_bound, py::arg("i_value"));
    m.def("check_extension", &check_extension, py::arg("claim"));
    m.def("check_extension_empirical", &check_extension_empirical,
          py::arg("claimed_distance"), py::arg("i_hat"), py::arg("n_sigma") = 4.0);
    m.def("admissible_envelope", &admissible_envelope, py::arg("visibility"),
          py::arg("theta"), py::arg("n_min"), py::arg("n_max"));
}

} // namespace

PYBIND11_MODULE(_bellchain, m)
{
    m.doc() = "Chained Bell experiment simulator: relativistic timing, outcome models, "
              "Monte-Carlo estimators, and non-signaling analysis.";

    py::register_exception<insufficient_data_error>(m, "InsufficientDataError",
                                                    PyExc_RuntimeError);
    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);

    bind_spacetime(m);
    bind_chainedbell(m);
    bind_models(m);
    bind_montecarlo(m);
    bind_analysis(m);

    // Config plumbing, handy for driving the same experiments from Python.
    m.def(
        "parse_config",
        [](const std::string& text) { return config::serialize_config(config::parse_config(text)); },
        py::arg("json_text"),
        "Validate a JSON experiment config and return its canonical serialization.");
}
