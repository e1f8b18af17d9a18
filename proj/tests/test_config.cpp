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

#include <doctest.h>

#include <numbers>

#include "bellchain/config.hpp"
#include "bellchain/errors.hpp"

using namespace bellchain;
using namespace bellchain::config;

TEST_CASE("defaults survive a minimal config")
{
    const auto cfg = parse_config(R"({"timing": "after-after"})");
    CHECK(cfg.model == ModelKind::Quantum);
    CHECK(cfg.visibility == 1.0);
    CHECK(cfg.N == 2);
    CHECK(cfg.theta == doctest::Approx(std::numbers::pi));
    CHECK(cfg.trials == 1'000'000);
    CHECK(cfg.seed == 1);
    CHECK(cfg.timing.has_value());
    CHECK_FALSE(cfg.geometry.has_value());
}

TEST_CASE("full config round-trips through serialization")
{
    const std::string text = R"({
        "model": "suarez-scarani",
        "visibility": 0.97,
        "local_strategy": "shared_randomness",
        "N": 3,
        "theta": 3.141592653589793,
        "geometry": {
            "alice_event": {"t": 5, "x": -5},
            "bob_event": {"t": 5, "x": 5},
            "beta_A": -0.5,
            "beta_B": 0.5
        },
        "trials": 400000,
        "seed": 99,
        "setting_choice": "fixed-pair",
        "fixed_alice": 1,
        "fixed_bob": 2,
        "threads": 4,
        "out_dir": "results"
    })";
    const auto cfg = parse_config(text);
    CHECK(cfg.model == ModelKind::SuarezScarani);
    CHECK(cfg.local_strategy == models::LocalStrategy::SharedRandomness);
    CHECK(cfg.geometry.has_value());
    CHECK(cfg.setting_choice.mode == montecarlo::SettingChoice::Mode::FixedPair);
    CHECK(cfg.setting_choice.alice == 1);
    CHECK(cfg.setting_choice.bob == 2);

    const auto round_tripped = parse_config(serialize_config(cfg));
    CHECK(round_tripped == cfg);
    // A second pass is bit-stable too.
    CHECK(serialize_config(round_tripped) == serialize_config(cfg));
}

TEST_CASE("timing-style config round-trips as well")
{
    const auto cfg = parse_config(R"({"timing": "before-before", "model": "local"})");
    const auto round_tripped = parse_config(serialize_config(cfg));
    CHECK(round_tripped == cfg);
}

TEST_CASE("unknown keys are named in the diagnostic")
{
    CHECK_THROWS_WITH_AS(parse_config(R"({"trails": 100})"),
                         doctest::Contains("\"trails\""), config_error);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"geometry": {"alice_event": {"t": 0, "x": 0}, "bob_event":
                        {"t": 0, "x": 1}, "beta_A": 0, "beta_B": 0, "betaC": 1}})"),
        doctest::Contains("geometry.betaC"), config_error);
}

TEST_CASE("malformed JSON and type errors are config errors")
{
    CHECK_THROWS_AS(parse_config("not json"), config_error);
    CHECK_THROWS_WITH_AS(parse_config(R"({"trials": "many"})"),
                         doctest::Contains("\"trials\""), config_error);
}

TEST_CASE("geometry and timing are mutually exclusive")
{
    CHECK_THROWS_WITH_AS(parse_config(R"({
        "timing": "after-after",
        "geometry": {"alice_event": {"t": 0, "x": -1}, "bob_event": {"t": 0, "x": 1},
                     "beta_A": 0, "beta_B": 0}
    })"),
                         doctest::Contains("mutually exclusive"), config_error);
}

TEST_CASE("range violations are rejected with the key name")
{
    CHECK_THROWS_WITH_AS(parse_config(R"({"N": 1})"), doctest::Contains("\"N\""),
                         config_error);
    CHECK_THROWS_WITH_AS(parse_config(R"({"visibility": 1.5})"),
                         doctest::Contains("\"visibility\""), config_error);
    CHECK_THROWS_WITH_AS(parse_config(R"({"delta": 0.3})"), doctest::Contains("\"delta\""),
                         config_error);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"setting_choice": "fixed-pair", "fixed_alice": 5, "fixed_bob": 0})"),
        doctest::Contains("fixed_alice"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"model": "classical"})"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"fixed_alice": 1})"), config_error);
}

TEST_CASE("resolve_timing classifies geometry or passes the explicit class through")
{
    auto cfg = parse_config(R"({
        "geometry": {"alice_event": {"t": 5, "x": -5}, "bob_event": {"t": 5, "x": 5},
                     "beta_A": -0.5, "beta_B": 0.5}
    })");
    CHECK(resolve_timing(cfg).kind() == spacetime::TimingKind::BeforeBefore);

    cfg = parse_config(R"({"timing": "bob-before"})");
    CHECK(resolve_timing(cfg).kind() == spacetime::TimingKind::BobBeforeOnly);

    cfg = parse_config(R"({"N": 2})");
    CHECK_THROWS_AS(resolve_timing(cfg), config_error);

    // Timelike geometry is rejected when the timing is resolved.
    cfg = parse_config(R"({
        "geometry": {"alice_event": {"t": 0, "x": 0}, "bob_event": {"t": 5, "x": 1},
                     "beta_A": 0, "beta_B": 0}
    })");
    CHECK_THROWS_AS(resolve_timing(cfg), config_error);
}

TEST_CASE("make_model folds the noise fraction into the visibility")
{
    auto cfg = parse_config(R"({"model": "quantum", "visibility": 1.0,
                                "noise_fraction": 0.03, "timing": "after-after"})");
    const auto model = make_model(cfg);
    const auto* quantum = dynamic_cast<const models::QuantumModel*>(model.get());
    REQUIRE(quantum != nullptr);
    CHECK(quantum->visibility() == doctest::Approx(0.97).epsilon(1e-12));
}

TEST_CASE("make_model builds each model kind")
{
    CHECK(make_model(parse_config(R"({"model": "quantum"})"))->name() == "quantum");
    CHECK(make_model(parse_config(R"({"model": "suarez-scarani"})"))->name() ==
          "suarez-scarani");
    CHECK(make_model(parse_config(R"({"model": "local"})"))->name() == "local");
    CHECK(make_model(parse_config(R"({"model": "signaling-toy", "delta": 0.25})"))->name() ==
          "signaling-toy");
}
