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

#include <cmath>
#include <numbers>

#include "bellchain/errors.hpp"
#include "bellchain/montecarlo.hpp"

using namespace bellchain;
using namespace bellchain::montecarlo;
using bellchain::chainedbell::ChainedConfig;
using bellchain::chainedbell::InterferometerParams;
using bellchain::spacetime::TimingClass;
using bellchain::spacetime::TimingKind;

namespace {

constexpr double kPi = std::numbers::pi;

chainedbell::ChainedSettings settings_for(int n, double theta = kPi)
{
    return chainedbell::equipartition_settings(ChainedConfig(n, theta, 1.0),
                                               InterferometerParams());
}

TimingClass timing(TimingKind kind)
{
    return TimingClass::from_kind(kind);
}

bool tables_equal(const CountsTable& a, const CountsTable& b)
{
    if (a.n_alice() != b.n_alice() || a.n_bob() != b.n_bob()) return false;
    for (int j = 0; j < a.n_alice(); ++j) {
        for (int k = 0; k < a.n_bob(); ++k) {
            const auto& x = a.at(j, k);
            const auto& y = b.at(j, k);
            if (x.pp != y.pp || x.pm != y.pm || x.mp != y.mp || x.mm != y.mm) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("joint counts bookkeeping")
{
    JointCounts c;
    c.add(+1, +1);
    c.add(+1, -1);
    c.add(-1, +1);
    c.add(-1, -1);
    c.add(+1, +1);
    CHECK(c.pp == 2);
    CHECK(c.pm == 1);
    CHECK(c.mp == 1);
    CHECK(c.mm == 1);
    CHECK(c.total() == 5);
    CHECK(c.alice_plus() == 3);
    CHECK(c.bob_plus() == 3);
    CHECK(c.equal() == 3);
}

TEST_CASE("fixed-pair choice routes every trial into one cell")
{
    const models::QuantumModel model(1.0);
    const auto counts =
        run_trials(model, settings_for(2), timing(TimingKind::AfterAfter), 1000, 7,
                   SettingChoice::fixed_pair(0, 1));
    CHECK(counts.at(0, 1).total() == 1000);
    CHECK(counts.total_trials() == 1000);
    CHECK(counts.at(0, 0).total() == 0);
    CHECK(counts.at(1, 0).total() == 0);
    CHECK(counts.at(1, 1).total() == 0);
}

TEST_CASE("fixed pair at phi=0 gives perfect correlation at V=1")
{
    // Build a single-setting chain with zero phase on both sides.
    chainedbell::ChainedSettings s;
    s.alice_phases = {0.0};
    s.bob_phases = {0.0};
    s.alice_long_arms = {0.0};
    s.bob_long_arms = {0.0};

    const models::QuantumModel model(1.0);
    const auto counts = run_trials(model, s, timing(TimingKind::AfterAfter), 1000, 7,
                                   SettingChoice::fixed_pair(0, 0));
    CHECK(counts.at(0, 0).equal() == 1000);
}

TEST_CASE("local model spreads evenly over the four joint cells")
{
    const models::LocalDeterministicModel model;
    const std::uint64_t trials = 1'000'000;
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   trials, 11, SettingChoice::fixed_pair(0, 0), 2);
    const auto& cell = counts.at(0, 0);
    CHECK(cell.total() == trials);
    const double expected = double(trials) / 4.0;
    const double sigma = std::sqrt(double(trials) * 0.25 * 0.75);
    for (const auto count : {cell.pp, cell.pm, cell.mp, cell.mm}) {
        CHECK(std::fabs(double(count) - expected) < 4.0 * sigma);
    }
}

TEST_CASE("quantum fixed pair at phi=0 recovers the configured visibility")
{
    chainedbell::ChainedSettings s;
    s.alice_phases = {0.0};
    s.bob_phases = {0.0};
    s.alice_long_arms = {0.0};
    s.bob_long_arms = {0.0};

    const models::QuantumModel model(0.97);
    const std::uint64_t trials = 1'000'000;
    const auto counts = run_trials(model, s, timing(TimingKind::AfterAfter), trials, 13,
                                   SettingChoice::fixed_pair(0, 0), 2);
    const double p = double(counts.at(0, 0).equal()) / double(trials);
    const double sigma = std::sqrt(0.985 * 0.015 / double(trials));
    CHECK(std::fabs(p - 0.985) < 4.0 * sigma);
}

TEST_CASE("random-uniform choice records every pair")
{
    const models::QuantumModel model(1.0);
    const auto counts = run_trials(model, settings_for(3), timing(TimingKind::AfterAfter),
                                   90'000, 17, SettingChoice::random_uniform());
    CHECK(counts.total_trials() == 90'000);
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            // 10000 expected per cell; 5 sigma is ~500.
            CHECK(double(counts.at(j, k).total()) == doctest::Approx(10'000).epsilon(0.06));
        }
    }
}

TEST_CASE("run_trials is independent of the worker count")
{
    const models::SuarezScaraniModel model(0.97);
    for (const auto kind : {TimingKind::AfterAfter, TimingKind::BeforeBefore}) {
        const auto reference = run_trials(model, settings_for(2), timing(kind), 100'003, 19,
                                          SettingChoice::random_uniform(), 1);
        for (const unsigned workers : {2u, 3u, 8u}) {
            const auto counts = run_trials(model, settings_for(2), timing(kind), 100'003, 19,
                                           SettingChoice::random_uniform(), workers);
            CHECK(tables_equal(reference, counts));
        }
    }
}

TEST_CASE("estimate_I on the quantum model approaches the closed form")
{
    const ChainedConfig cfg(2, kPi, 1.0);
    const models::QuantumModel model(1.0);
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   4'000'000, 23, SettingChoice::random_uniform(), 2);
    const auto report = estimate_I(counts, cfg);
    const double closed = chainedbell::closed_form_I(cfg).value;
    CHECK(std::fabs(report.value - closed) < 4.0 * report.std_error);
    CHECK(report.is_violation);
    CHECK(report.std_error > 0.0);
    CHECK(report.std_error < 0.01);
    CHECK(report.terms.size() == 4);
}

TEST_CASE("estimate_I on the local model sits at the no-correlation plateau")
{
    const ChainedConfig cfg(2, kPi, 1.0);
    const models::LocalDeterministicModel model;
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   400'000, 29, SettingChoice::random_uniform(), 2);
    const auto report = estimate_I(counts, cfg);
    // Every term is 1/2, so the chain value converges to N = 2.
    CHECK(std::fabs(report.value - 2.0) < 4.0 * report.std_error);
    CHECK_FALSE(report.is_violation);
}

TEST_CASE("estimate_I under before-before product timing loses the violation")
{
    const ChainedConfig cfg(2, kPi, 1.0);
    const models::SuarezScaraniModel model(1.0);
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::BeforeBefore),
                                   400'000, 31, SettingChoice::random_uniform(), 2);
    const auto report = estimate_I(counts, cfg);
    CHECK(std::fabs(report.value - 2.0) < 4.0 * report.std_error);
    CHECK(report.value >= 1.0);
}

TEST_CASE("before-before timing satisfies the chain inequality for either strategy")
{
    for (const auto strategy :
         {models::LocalStrategy::Product, models::LocalStrategy::SharedRandomness}) {
        const models::SuarezScaraniModel model(1.0, strategy);
        for (const int n : {2, 3, 4}) {
            const ChainedConfig cfg(n, kPi, 1.0);
            const std::uint64_t trials = std::uint64_t(n) * std::uint64_t(n) * 60'000;
            const auto counts =
                run_trials(model, settings_for(n), timing(TimingKind::BeforeBefore), trials,
                           33 + std::uint64_t(n), SettingChoice::random_uniform(), 2);
            const auto report = estimate_I(counts, cfg);
            CHECK(report.value >= 1.0 - 4.0 * report.std_error);
        }
    }
}

TEST_CASE("quantum estimates track the closed form at intermediate visibility")
{
    for (const double v : {0.9, 0.97}) {
        const ChainedConfig cfg(3, kPi, v);
        const models::QuantumModel model(v);
        const auto counts = run_trials(model, settings_for(3), timing(TimingKind::AfterAfter),
                                       900'000, 35, SettingChoice::random_uniform(), 2);
        const auto report = estimate_I(counts, cfg);
        const double closed = chainedbell::closed_form_I(cfg).value;
        CHECK(std::fabs(report.value - closed) < 4.0 * report.std_error);
    }
}

TEST_CASE("estimate_I names the starved pair")
{
    const ChainedConfig cfg(2, kPi, 1.0);
    const models::QuantumModel model(1.0);
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   10'000, 37, SettingChoice::fixed_pair(0, 0));
    CHECK_THROWS_WITH_AS(estimate_I(counts, cfg),
                         doctest::Contains("setting pair (alice=0, bob=1)"),
                         insufficient_data_error);
}

TEST_CASE("timing class does not move the quantum counts at all")
{
    const models::QuantumModel model(0.9);
    const auto before = run_trials(model, settings_for(2), timing(TimingKind::BeforeBefore),
                                   200'000, 41, SettingChoice::random_uniform(), 2);
    const auto after = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                  200'000, 41, SettingChoice::random_uniform(), 2);
    CHECK(tables_equal(before, after));
}

TEST_CASE("fit_visibility round-trips a noiseless synthetic scan")
{
    std::vector<ScanPoint> scan;
    for (int i = 0; i < 16; ++i) {
        const double phi = 2.0 * kPi * double(i) / 16.0;
        const double p = 0.5 * (1.0 + 0.97 * std::cos(phi));
        scan.push_back({phi, p, 0.0, 100'000});
    }
    const auto fit = fit_visibility(scan);
    CHECK(std::fabs(fit.value - 0.97) < 1e-12);
    CHECK(fit.std_error == 0.0);
}

TEST_CASE("fit_visibility recovers the visibility from a Monte-Carlo scan")
{
    const models::QuantumModel model(0.97);
    std::vector<double> phases;
    for (int i = 0; i < 16; ++i) phases.push_back(2.0 * kPi * double(i) / 16.0);
    const auto scan =
        scan_phase(model, phases, 100'000, 43, timing(TimingKind::AfterAfter), 2);
    REQUIRE(scan.size() == 16);
    const auto fit = fit_visibility(scan);
    CHECK(std::fabs(fit.value - 0.97) < 0.01);
    CHECK(fit.std_error > 0.0);
    CHECK(fit.std_error < 0.005);
}

TEST_CASE("fit_visibility on a dead fringe reports zero")
{
    const models::QuantumModel model(0.0);
    std::vector<double> phases;
    for (int i = 0; i < 12; ++i) phases.push_back(2.0 * kPi * double(i) / 12.0);
    const auto scan =
        scan_phase(model, phases, 50'000, 47, timing(TimingKind::AfterAfter), 2);
    const auto fit = fit_visibility(scan);
    CHECK(std::fabs(fit.value) < 4.0 * fit.std_error + 1e-12);
}

TEST_CASE("fit_visibility rejects undersized and degenerate scans")
{
    std::vector<ScanPoint> four_points;
    for (int i = 0; i < 4; ++i) {
        four_points.push_back({2.0 * kPi * i / 4.0, 0.5, 0.0, 1000});
    }
    CHECK_THROWS_AS(fit_visibility(four_points), std::invalid_argument);

    std::vector<ScanPoint> constant_cos;
    for (int i = 0; i < 10; ++i) {
        // phi and -phi share a cosine: still degenerate design.
        constant_cos.push_back({i % 2 == 0 ? 1.0 : 2.0 * kPi - 1.0, 0.9, 0.0, 1000});
    }
    CHECK_THROWS_AS(fit_visibility(constant_cos), std::invalid_argument);
}

TEST_CASE("nonsignaling_test passes the quantum model")
{
    const models::QuantumModel model(1.0);
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   400'000, 53, SettingChoice::random_uniform(), 2);
    const auto report = nonsignaling_test(counts);
    CHECK(report.pass);
    CHECK(report.comparisons.size() == 4); // two per side at N=2
    CHECK(report.max_abs_z <= 4.0);
}

TEST_CASE("nonsignaling_test passes the frame-dependent model in both pure timings")
{
    const models::SuarezScaraniModel model(1.0);
    for (const auto kind : {TimingKind::BeforeBefore, TimingKind::AfterAfter}) {
        const auto counts = run_trials(model, settings_for(2), timing(kind), 400'000, 59,
                                       SettingChoice::random_uniform(), 2);
        const auto report = nonsignaling_test(counts);
        CHECK(report.pass);
    }
}

TEST_CASE("nonsignaling_test rejects the signaling toy loudly")
{
    const models::SignalingToyModel model(0.25);
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   400'000, 61, SettingChoice::random_uniform(), 2);
    const auto report = nonsignaling_test(counts);
    CHECK_FALSE(report.pass);
    CHECK(report.max_abs_z > 10.0);

    // Only Alice's marginal is rigged; the worst comparison must sit on side A.
    double worst = 0.0;
    char side = '?';
    for (const auto& c : report.comparisons) {
        if (std::fabs(c.z) > worst) {
            worst = std::fabs(c.z);
            side = c.side;
        }
    }
    CHECK(side == 'A');
}

TEST_CASE("nonsignaling_test demands enough data")
{
    const models::QuantumModel model(1.0);
    const auto starved = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                    1000, 67, SettingChoice::random_uniform());
    CHECK_THROWS_AS(nonsignaling_test(starved), insufficient_data_error);

    const auto single = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   50'000, 67, SettingChoice::fixed_pair(0, 0));
    CHECK_THROWS_AS(nonsignaling_test(single), insufficient_data_error);
}

TEST_CASE("estimate_distance on synthetic tables")
{
    CountsTable balanced(1, 1);
    balanced.at(0, 0).pp = 250;
    balanced.at(0, 0).pm = 250;
    balanced.at(0, 0).mp = 250;
    balanced.at(0, 0).mm = 250;
    CHECK(estimate_distance(balanced, Side::Alice).value == 0.0);
    CHECK(estimate_distance(balanced, Side::Bob).value == 0.0);

    CountsTable skewed(1, 1);
    skewed.at(0, 0).pp = 500;
    skewed.at(0, 0).pm = 500;
    const auto d = estimate_distance(skewed, Side::Alice);
    CHECK(d.value == 0.5);
    CHECK(d.std_error == 0.0); // p = 1 exactly
}

TEST_CASE("estimate_distance on the quantum model converges to zero")
{
    const models::QuantumModel model(1.0);
    const auto counts = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                   1'000'000, 71, SettingChoice::random_uniform(), 2);
    const auto d = estimate_distance(counts, Side::Alice);
    CHECK(d.std_error == doctest::Approx(0.0005).epsilon(0.05));
    CHECK(d.value < 4.0 * d.std_error);
}

TEST_CASE("estimate_distance error scales as one over sqrt(n)")
{
    const models::QuantumModel model(0.97);
    const auto small = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                  10'000, 73, SettingChoice::random_uniform());
    const auto large = run_trials(model, settings_for(2), timing(TimingKind::AfterAfter),
                                  40'000, 73, SettingChoice::random_uniform());
    const double ratio =
        estimate_distance(small, Side::Bob).std_error / estimate_distance(large, Side::Bob).std_error;
    CHECK(ratio > 2.0 * 0.8);
    CHECK(ratio < 2.0 * 1.2);
}

TEST_CASE("joint_distance sees the structure of a correlated pair")
{
    chainedbell::ChainedSettings s;
    s.alice_phases = {0.0};
    s.bob_phases = {0.0};
    s.alice_long_arms = {0.0};
    s.bob_long_arms = {0.0};

    const models::QuantumModel model(1.0);
    const auto counts = run_trials(model, s, timing(TimingKind::AfterAfter), 100'000, 79,
                                   SettingChoice::fixed_pair(0, 0));
    // pp and mm hold ~1/2 each, pm and mp are empty: TV from uniform is 1/2.
    CHECK(joint_distance(counts, 0, 0) == doctest::Approx(0.5).epsilon(0.02));
}
