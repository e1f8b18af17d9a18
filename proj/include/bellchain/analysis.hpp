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

#include <utility>
#include <vector>

#include "bellchain/montecarlo.hpp"

namespace bellchain::analysis {

/// Non-signaling bound on the variational distance of outcomes from
/// uniform: D <= 3 I / 2. Rejects negative I.
double nonsignaling_bound(double i_value);

/// A claimed covariant extension: an N-independent variational distance D
/// together with the visibility regime it must survive.
struct ExtensionClaim {
    double claimed_distance{}; // in [0, 0.5]
    double visibility{};       // in [0, 1]
    double theta = 3.14159265358979323846;
    int n_max = 1000;
};

struct Verdict {
    int n_star{};
    double i_min{};
    double bound{};       // 3 * i_min / 2
    bool contradictory{}; // claimed_distance > bound
    double margin{};      // claimed_distance - bound
};

/// Scan N = 2..n_max for the minimal chain value at the claimed visibility;
/// the claim is self-contradictory when it exceeds the resulting bound.
Verdict check_extension(const ExtensionClaim& claim);

struct EmpiricalVerdict {
    double bound{};           // 3 * I_hat / 2
    double bound_std_error{}; // 3 * sigma(I_hat) / 2
    bool contradictory{};     // claimed_distance > bound + n_sigma * bound_std_error
    double margin{};
};

/// Same verdict from a measured chain value instead of the closed form;
/// contradiction requires clearing the bound by n_sigma error bars.
EmpiricalVerdict check_extension_empirical(double claimed_distance,
                                           const montecarlo::EstimateWithError& i_hat,
                                           double n_sigma = 4.0);

/// D_max(N) = 3 I(N, Theta, V) / 2 for N in [n_min, n_max]: the envelope an
/// N-dependent distance function must stay under.
std::vector<std::pair<int, double>> admissible_envelope(double visibility, double theta,
                                                        int n_min, int n_max);

} // namespace bellchain::analysis
