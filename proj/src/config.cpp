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

#include "bellchain/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bellchain/errors.hpp"

namespace bellchain::config {

using nlohmann::ordered_json;

std::string_view to_string(ModelKind m) noexcept
{
    switch (m) {
    case ModelKind::Quantum: return "quantum";
    case ModelKind::SuarezScarani: return "suarez-scarani";
    case ModelKind::LocalDeterministic: return "local";
    case ModelKind::SignalingToy: return "signaling-toy";
    }
    return "unknown";
}

ModelKind model_kind_from_string(std::string_view name)
{
    if (name == "quantum") return ModelKind::Quantum;
    if (name == "suarez-scarani") return ModelKind::SuarezScarani;
    if (name == "local") return ModelKind::LocalDeterministic;
    if (name == "signaling-toy") return ModelKind::SignalingToy;
    throw config_error("unknown model \"" + std::string(name) +
                       "\"; expected quantum | suarez-scarani | local | signaling-toy");
}

namespace {

std::string_view timing_to_string(spacetime::TimingKind k) noexcept
{
    switch (k) {
    case spacetime::TimingKind::BeforeBefore: return "before-before";
    case spacetime::TimingKind::AfterAfter: return "after-after";
    case spacetime::TimingKind::AliceBeforeOnly: return "alice-before";
    case spacetime::TimingKind::BobBeforeOnly: return "bob-before";
    }
    return "unknown";
}

spacetime::TimingKind timing_from_string(const std::string& name)
{
    if (name == "before-before") return spacetime::TimingKind::BeforeBefore;
    if (name == "after-after") return spacetime::TimingKind::AfterAfter;
    if (name == "alice-before") return spacetime::TimingKind::AliceBeforeOnly;
    if (name == "bob-before") return spacetime::TimingKind::BobBeforeOnly;
    throw config_error("unknown timing \"" + name +
                       "\"; expected before-before | after-after | alice-before | bob-before");
}

std::string_view strategy_to_string(models::LocalStrategy s) noexcept
{
    return s == models::LocalStrategy::Product ? "product" : "shared_randomness";
}

models::LocalStrategy strategy_from_string(const std::string& name)
{
    if (name == "product") return models::LocalStrategy::Product;
    if (name == "shared_randomness") return models::LocalStrategy::SharedRandomness;
    throw config_error("unknown local_strategy \"" + name +
                       "\"; expected product | shared_randomness");
}

// Typed key reader with key-path diagnostics.
template <typename T>
T read_key(const ordered_json& j, const std::string& key)
{
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw config_error("config key \"" + key + "\": " + e.what());
    }
}

template <typename T>
void read_if_present(const ordered_json& j, const std::string& key, T& target)
{
    if (j.contains(key)) target = read_key<T>(j, key);
}

void reject_unknown_keys(const ordered_json& j, const std::set<std::string>& known,
                         const std::string& scope)
{
    for (const auto& item : j.items()) {
        if (!known.contains(item.key())) {
            throw config_error("unknown config key \"" + scope + item.key() + "\"");
        }
    }
}

spacetime::Event read_event(const ordered_json& j, const std::string& scope)
{
    reject_unknown_keys(j, {"t", "x"}, scope);
    try {
        return spacetime::Event(read_key<double>(j, "t"), read_key<double>(j, "x"));
    } catch (const std::invalid_argument& e) {
        throw config_error("config key \"" + scope + "\": " + e.what());
    }
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw config_error("config root must be a JSON object");
    }

    static const std::set<std::string> kKnown = {
        "model",     "visibility", "local_strategy", "delta",      "noise_fraction",
        "N",         "theta",      "omega_A",        "omega_B",    "s_A",
        "s_B",       "geometry",   "timing",         "trials",     "seed",
        "setting_choice", "fixed_alice", "fixed_bob", "threads",   "scan_points",
        "out_dir"};
    reject_unknown_keys(j, kKnown, "");

    ExperimentConfig c;
    if (j.contains("model")) c.model = model_kind_from_string(read_key<std::string>(j, "model"));
    read_if_present(j, "visibility", c.visibility);
    if (j.contains("local_strategy")) {
        c.local_strategy = strategy_from_string(read_key<std::string>(j, "local_strategy"));
    }
    read_if_present(j, "delta", c.delta);
    read_if_present(j, "noise_fraction", c.noise_fraction);
    read_if_present(j, "N", c.N);
    read_if_present(j, "theta", c.theta);

    double omega_A = c.interferometer.omega_A;
    double omega_B = c.interferometer.omega_B;
    double s_A = c.interferometer.s_A;
    double s_B = c.interferometer.s_B;
    read_if_present(j, "omega_A", omega_A);
    read_if_present(j, "omega_B", omega_B);
    read_if_present(j, "s_A", s_A);
    read_if_present(j, "s_B", s_B);
    try {
        c.interferometer = chainedbell::InterferometerParams(omega_A, omega_B, s_A, s_B);
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("config keys omega_A/omega_B/s_A/s_B: ") + e.what());
    }

    if (j.contains("geometry") && j.contains("timing")) {
        throw config_error("config keys \"geometry\" and \"timing\" are mutually exclusive");
    }
    if (j.contains("geometry")) {
        const auto& g = j.at("geometry");
        if (!g.is_object()) throw config_error("config key \"geometry\" must be an object");
        reject_unknown_keys(g, {"alice_event", "bob_event", "beta_A", "beta_B"}, "geometry.");
        spacetime::ApparatusGeometry geom;
        geom.alice_event = read_event(g.at("alice_event"), "geometry.alice_event");
        geom.bob_event = read_event(g.at("bob_event"), "geometry.bob_event");
        try {
            geom.beta_A = spacetime::Boost(read_key<double>(g, "beta_A"));
            geom.beta_B = spacetime::Boost(read_key<double>(g, "beta_B"));
        } catch (const std::invalid_argument& e) {
            throw config_error(std::string("config key \"geometry\": ") + e.what());
        }
        c.geometry = geom;
    }
    if (j.contains("timing")) {
        c.timing = timing_from_string(read_key<std::string>(j, "timing"));
    }

    read_if_present(j, "trials", c.trials);
    read_if_present(j, "seed", c.seed);
    if (j.contains("setting_choice")) {
        const auto mode = read_key<std::string>(j, "setting_choice");
        if (mode == "random-uniform") {
            c.setting_choice = montecarlo::SettingChoice::random_uniform();
        } else if (mode == "fixed-pair") {
            int alice = 0;
            int bob = 0;
            read_if_present(j, "fixed_alice", alice);
            read_if_present(j, "fixed_bob", bob);
            c.setting_choice = montecarlo::SettingChoice::fixed_pair(alice, bob);
        } else {
            throw config_error("unknown setting_choice \"" + mode +
                               "\"; expected random-uniform | fixed-pair");
        }
    } else if (j.contains("fixed_alice") || j.contains("fixed_bob")) {
        throw config_error("fixed_alice/fixed_bob require setting_choice = \"fixed-pair\"");
    }
    read_if_present(j, "threads", c.threads);
    read_if_present(j, "scan_points", c.scan_points);
    read_if_present(j, "out_dir", c.out_dir);

    // Range validation beyond what the typed readers catch.
    if (c.N < 2) throw config_error("config key \"N\": must be >= 2");
    if (!(c.visibility >= 0.0 && c.visibility <= 1.0)) {
        throw config_error("config key \"visibility\": must lie in [0, 1]");
    }
    if (!(c.delta >= 0.0 && c.delta <= 0.25)) {
        throw config_error("config key \"delta\": must lie in [0, 0.25]");
    }
    if (!(c.noise_fraction >= 0.0 && c.noise_fraction < 1.0)) {
        throw config_error("config key \"noise_fraction\": must lie in [0, 1)");
    }
    if (c.trials < 1) throw config_error("config key \"trials\": must be >= 1");
    if (c.scan_points < 1) throw config_error("config key \"scan_points\": must be >= 1");
    if (c.setting_choice.mode == montecarlo::SettingChoice::Mode::FixedPair &&
        (c.setting_choice.alice < 0 || c.setting_choice.alice >= c.N ||
         c.setting_choice.bob < 0 || c.setting_choice.bob >= c.N)) {
        throw config_error("config keys fixed_alice/fixed_bob: out of range for N");
    }
    return c;
}

ExperimentConfig load_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw config_error("cannot open config file: " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string serialize_config(const ExperimentConfig& c)
{
    ordered_json j;
    j["model"] = std::string(to_string(c.model));
    j["visibility"] = c.visibility;
    j["local_strategy"] = std::string(strategy_to_string(c.local_strategy));
    j["delta"] = c.delta;
    j["noise_fraction"] = c.noise_fraction;
    j["N"] = c.N;
    j["theta"] = c.theta;
    j["omega_A"] = c.interferometer.omega_A;
    j["omega_B"] = c.interferometer.omega_B;
    j["s_A"] = c.interferometer.s_A;
    j["s_B"] = c.interferometer.s_B;
    if (c.geometry) {
        j["geometry"] = {{"alice_event", {{"t", c.geometry->alice_event.t},
                                          {"x", c.geometry->alice_event.x}}},
                         {"bob_event", {{"t", c.geometry->bob_event.t},
                                        {"x", c.geometry->bob_event.x}}},
                         {"beta_A", c.geometry->beta_A.beta()},
                         {"beta_B", c.geometry->beta_B.beta()}};
    }
    if (c.timing) {
        j["timing"] = std::string(timing_to_string(*c.timing));
    }
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["setting_choice"] =
        c.setting_choice.mode == montecarlo::SettingChoice::Mode::RandomUniform
            ? "random-uniform"
            : "fixed-pair";
    if (c.setting_choice.mode == montecarlo::SettingChoice::Mode::FixedPair) {
        j["fixed_alice"] = c.setting_choice.alice;
        j["fixed_bob"] = c.setting_choice.bob;
    }
    j["threads"] = c.threads;
    j["scan_points"] = c.scan_points;
    j["out_dir"] = c.out_dir;
    return j.dump(2) + "\n";
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b)
{
    const auto geometry_equal = [](const std::optional<spacetime::ApparatusGeometry>& x,
                                   const std::optional<spacetime::ApparatusGeometry>& y) {
        if (x.has_value() != y.has_value()) return false;
        if (!x) return true;
        return x->alice_event.t == y->alice_event.t && x->alice_event.x == y->alice_event.x &&
               x->bob_event.t == y->bob_event.t && x->bob_event.x == y->bob_event.x &&
               x->beta_A.beta() == y->beta_A.beta() && x->beta_B.beta() == y->beta_B.beta();
    };
    return a.model == b.model && a.visibility == b.visibility &&
           a.local_strategy == b.local_strategy && a.delta == b.delta &&
           a.noise_fraction == b.noise_fraction && a.N == b.N && a.theta == b.theta &&
           a.interferometer.omega_A == b.interferometer.omega_A &&
           a.interferometer.omega_B == b.interferometer.omega_B &&
           a.interferometer.s_A == b.interferometer.s_A &&
           a.interferometer.s_B == b.interferometer.s_B &&
           geometry_equal(a.geometry, b.geometry) && a.timing == b.timing &&
           a.trials == b.trials && a.seed == b.seed &&
           a.setting_choice.mode == b.setting_choice.mode &&
           a.setting_choice.alice == b.setting_choice.alice &&
           a.setting_choice.bob == b.setting_choice.bob && a.threads == b.threads &&
           a.scan_points == b.scan_points && a.out_dir == b.out_dir;
}

spacetime::TimingClass resolve_timing(const ExperimentConfig& c)
{
    if (c.timing) {
        return spacetime::TimingClass::from_kind(*c.timing);
    }
    if (c.geometry) {
        try {
            return spacetime::classify_timing(*c.geometry);
        } catch (const std::invalid_argument& e) {
            throw config_error(std::string("config key \"geometry\": ") + e.what());
        }
    }
    throw config_error("config needs either \"geometry\" or \"timing\"");
}

std::unique_ptr<models::OutcomeModel> make_model(const ExperimentConfig& c)
{
    const double effective_v = c.visibility * (1.0 - c.noise_fraction);
    switch (c.model) {
    case ModelKind::Quantum:
        return std::make_unique<models::QuantumModel>(effective_v);
    case ModelKind::SuarezScarani:
        return std::make_unique<models::SuarezScaraniModel>(effective_v, c.local_strategy);
    case ModelKind::LocalDeterministic:
        return std::make_unique<models::LocalDeterministicModel>();
    case ModelKind::SignalingToy:
        return std::make_unique<models::SignalingToyModel>(c.delta);
    }
    throw config_error("unhandled model kind");
}

} // namespace bellchain::config
