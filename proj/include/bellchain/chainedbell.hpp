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
#include <vector>

namespace bellchain::chainedbell {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Reduce an angle into [0, 2*pi).
double reduce_two_pi(double angle) noexcept;

/// Interferometer hardware: angular frequencies and short-arm lengths.
/// Defaults correspond to a 1550 nm source with zero-length short arms.
struct InterferometerParams {
    double omega_A = 1.2152862138091518e15; // rad/s
    double omega_B = 1.2152862138091518e15; // rad/s
    double s_A = 0.0;                       // m
    double s_B = 0.0;                       // m

    InterferometerParams() = default;
    InterferometerParams(double omega_A_, double omega_B_, double s_A_, double s_B_);
};

/// Chain size N (>= 2), total phase budget Theta, and fringe visibility V.
struct ChainedConfig {
    int N = 2;
    double theta = 0.0;
    double visibility = 1.0;

    ChainedConfig() = default;
    ChainedConfig(int N_, double theta_, double visibility_);
};

/// The 2N equipartitioned settings: per-side phases in [0, 2*pi) and the
/// long-arm lengths realizing them (l = s + c*phase/omega).
struct ChainedSettings {
    std::vector<double> alice_phases;
    std::vector<double> bob_phases;
    std::vector<double> alice_long_arms;
    std::vector<double> bob_long_arms;

    int n_settings() const noexcept { return int(alice_phases.size()); }
};

/// One term of the chain sum: the extreme pair contributes P(a=b), each of
/// the 2N-1 adjacent pairs contributes P(a!=b).
enum class TermKind { ExtremeEqual, AdjacentDifferent };

struct ChainTerm {
    TermKind kind{};
    int alice_setting{};
    int bob_setting{};
    double probability{}; // value of the term (already P(a=b) resp. P(a!=b))
    double std_error{};   // 0 for closed-form terms
    std::uint64_t trials{};
};

/// The (alice, bob) setting pairs of the 2N chain terms, extreme pair first.
/// Arm index i maps to Alice's setting i/2 when even and Bob's (i-1)/2 when
/// odd; the extreme pair is (first Alice arm, last Bob arm).
std::vector<ChainTerm> chain_terms(int N);

struct InequalityReport {
    int N{};
    double theta{};
    double visibility{};
    double value{};     // the chain sum; < 1 certifies nonlocal correlations
    double std_error{}; // 0 for closed form
    bool is_violation{};
    std::vector<ChainTerm> terms;
};

/// Interference phase omega_A (l_A - s_A)/c + omega_B (l_B - s_B)/c, reduced
/// into [0, 2*pi).
double phase(double l_A, double l_B, const InterferometerParams& p) noexcept;

/// P(a=b | phi) = (1 + V cos phi) / 2. Rejects visibility outside [0, 1].
double prob_equal(double phi, double visibility);

/// Equipartitioned settings: Alice phase j is (-2j * Theta/2N) mod 2pi, Bob
/// phase k is ((2k+1) * Theta/2N) mod 2pi, so every adjacent pair has cosine
/// cos(Theta/2N) and the extreme pair cos((2N-1) Theta/2N). All observables
/// depend on the phase only through its cosine, which is what makes the
/// negative Alice steps equivalent to equal positive steps.
/// Requires N >= 2 and 0 < Theta <= pi.
ChainedSettings equipartition_settings(const ChainedConfig& cfg, const InterferometerParams& p);

/// Exact closed-form chain value
///   I(N, Theta) = (1 + V cos(Theta - Theta/2N))/2 + (2N-1)(1 - V cos(Theta/2N))/2.
InequalityReport closed_form_I(const ChainedConfig& cfg);

struct MinimizeResult {
    int n_star{};
    double i_min{};
    bool monotone{}; // minimum sits at n_max: no interior minimum in range
};

/// Exhaustive integer scan of closed_form_I over N = 2..n_max, smallest
/// argmin on ties. Requires 2 <= n_max <= 1e6.
MinimizeResult minimize_I_over_N(double visibility, double theta, int n_max = 1000);

} // namespace bellchain::chainedbell
