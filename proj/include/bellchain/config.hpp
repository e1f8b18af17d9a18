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

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "bellchain/chainedbell.hpp"
#include "bellchain/models.hpp"
#include "bellchain/montecarlo.hpp"
#include "bellchain/spacetime.hpp"

namespace bellchain::config {

enum class ModelKind { Quantum, SuarezScarani, LocalDeterministic, SignalingToy };

std::string_view to_string(ModelKind m) noexcept;
ModelKind model_kind_from_string(std::string_view name); // throws config_error

/// Flat JSON experiment description. Exactly one of `geometry` / `timing`
/// must be present for commands that run trials; `timing` short-circuits the
/// relativistic classification, `geometry` derives it.
struct ExperimentConfig {
    ModelKind model = ModelKind::Quantum;
    double visibility = 1.0;
    models::LocalStrategy local_strategy = models::LocalStrategy::Product;
    double delta = 0.25;         // signaling-toy bias
    double noise_fraction = 0.0; // accidental-coincidence fraction, folds into V

    int N = 2;
    double theta = 3.14159265358979323846;
    chainedbell::InterferometerParams interferometer;

    std::optional<spacetime::ApparatusGeometry> geometry;
    std::optional<spacetime::TimingKind> timing;

    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    montecarlo::SettingChoice setting_choice = montecarlo::SettingChoice::random_uniform();
    unsigned threads = 1; // 0 = hardware concurrency
    int scan_points = 16;
    std::string out_dir = ".";
};

/// Parse a JSON config document. Unknown keys, type mismatches, and range
/// violations raise config_error naming the offending key.
ExperimentConfig parse_config(const std::string& json_text);

ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Canonical JSON serialization; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& c);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

/// The timing class the trials run under: the explicit one, or the one the
/// geometry classifies to.
spacetime::TimingClass resolve_timing(const ExperimentConfig& c);

/// Instantiate the configured sampler. The noise fraction folds into an
/// effective visibility V * (1 - noise_fraction).
std::unique_ptr<models::OutcomeModel> make_model(const ExperimentConfig& c);

} // namespace bellchain::config
