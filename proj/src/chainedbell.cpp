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

#include "bellchain/chainedbell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bellchain::chainedbell {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double reduce_two_pi(double angle) noexcept
{
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative can round back up to 2*pi exactly.
    if (r >= kTwoPi) r = 0.0;
    return r;
}

InterferometerParams::InterferometerParams(double omega_A_, double omega_B_, double s_A_,
                                           double s_B_)
    : omega_A(omega_A_), omega_B(omega_B_), s_A(s_A_), s_B(s_B_)
{
    if (!(omega_A > 0.0) || !(omega_B > 0.0)) {
        throw std::invalid_argument("interferometer angular frequencies must be positive");
    }
    if (s_A < 0.0 || s_B < 0.0) {
        throw std::invalid_argument("short-arm lengths must be non-negative");
    }
}

ChainedConfig::ChainedConfig(int N_, double theta_, double visibility_)
    : N(N_), theta(theta_), visibility(visibility_)
{
    if (N < 2) {
        throw std::invalid_argument("chained configuration requires N >= 2, got " +
                                    std::to_string(N));
    }
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1], got " +
                                    std::to_string(visibility));
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("theta must be finite");
    }
}

double phase(double l_A, double l_B, const InterferometerParams& p) noexcept
{
    return reduce_two_pi(p.omega_A * (l_A - p.s_A) / kSpeedOfLight +
                         p.omega_B * (l_B - p.s_B) / kSpeedOfLight);
}

double prob_equal(double phi, double visibility)
{
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1], got " +
                                    std::to_string(visibility));
    }
    return 0.5 * (1.0 + visibility * std::cos(phi));
}

std::vector<ChainTerm> chain_terms(int N)
{
    if (N < 2) {
        throw std::invalid_argument("chain_terms requires N >= 2");
    }
    std::vector<ChainTerm> terms;
    terms.reserve(std::size_t(2 * N));
    terms.push_back({TermKind::ExtremeEqual, 0, N - 1, 0.0, 0.0, 0});
    // Arm i and arm i+1, i = 0..2N-2: even i pairs Alice i/2 with Bob i/2,
    // odd i pairs Bob (i-1)/2 with Alice (i+1)/2.
    for (int i = 0; i + 1 < 2 * N; ++i) {
        const int alice = (i % 2 == 0) ? i / 2 : (i + 1) / 2;
        const int bob = i / 2;
        terms.push_back({TermKind::AdjacentDifferent, alice, bob, 0.0, 0.0, 0});
    }
    return terms;
}

ChainedSettings equipartition_settings(const ChainedConfig& cfg, const InterferometerParams& p)
{
    if (cfg.N < 2) {
        throw std::invalid_argument("equipartition requires N >= 2, got " +
                                    std::to_string(cfg.N));
    }
    if (!(cfg.theta > 0.0 && cfg.theta <= std::numbers::pi)) {
        throw std::invalid_argument("equipartition requires 0 < theta <= pi, got " +
                                    std::to_string(cfg.theta));
    }

    const double step = cfg.theta / (2.0 * cfg.N);
    ChainedSettings s;
    s.alice_phases.resize(std::size_t(cfg.N));
    s.bob_phases.resize(std::size_t(cfg.N));
    s.alice_long_arms.resize(std::size_t(cfg.N));
    s.bob_long_arms.resize(std::size_t(cfg.N));
    for (int j = 0; j < cfg.N; ++j) {
        s.alice_phases[std::size_t(j)] = reduce_two_pi(-2.0 * j * step);
        s.bob_phases[std::size_t(j)] = reduce_two_pi((2.0 * j + 1.0) * step);
        // l = s + c*phase/omega keeps every long arm at or above the short one.
        s.alice_long_arms[std::size_t(j)] =
            p.s_A + kSpeedOfLight * s.alice_phases[std::size_t(j)] / p.omega_A;
        s.bob_long_arms[std::size_t(j)] =
            p.s_B + kSpeedOfLight * s.bob_phases[std::size_t(j)] / p.omega_B;
    }
    return s;
}

InequalityReport closed_form_I(const ChainedConfig& cfg)
{
    if (cfg.N < 2) {
        throw std::invalid_argument("closed_form_I requires N >= 2, got " +
                                    std::to_string(cfg.N));
    }
    if (!(cfg.visibility >= 0.0 && cfg.visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }

    const double step = cfg.theta / (2.0 * cfg.N);
    const double p_extreme = prob_equal(cfg.theta - step, cfg.visibility);
    const double p_adjacent_diff = 1.0 - prob_equal(step, cfg.visibility);

    InequalityReport report;
    report.N = cfg.N;
    report.theta = cfg.theta;
    report.visibility = cfg.visibility;
    report.terms = chain_terms(cfg.N);
    report.terms.front().probability = p_extreme;
    for (std::size_t i = 1; i < report.terms.size(); ++i) {
        report.terms[i].probability = p_adjacent_diff;
    }
    report.value = p_extreme + (2.0 * cfg.N - 1.0) * p_adjacent_diff;
    report.std_error = 0.0;
    report.is_violation = report.value < 1.0;
    return report;
}

MinimizeResult minimize_I_over_N(double visibility, double theta, int n_max)
{
    if (n_max < 2 || n_max > 1'000'000) {
        throw std::invalid_argument("minimize_I_over_N requires 2 <= n_max <= 1e6, got " +
                                    std::to_string(n_max));
    }

    MinimizeResult best{2, closed_form_I(ChainedConfig(2, theta, visibility)).value, false};
    for (int n = 3; n <= n_max; ++n) {
        const double value = closed_form_I(ChainedConfig(n, theta, visibility)).value;
        if (value < best.i_min) {
            best.n_star = n;
            best.i_min = value;
        }
    }
    best.monotone = best.n_star == n_max;
    return best;
}

} // namespace bellchain::chainedbell
