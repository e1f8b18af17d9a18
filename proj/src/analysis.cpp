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

#include "bellchain/analysis.hpp"

#include <stdexcept>
#include <string>

#include "bellchain/chainedbell.hpp"

namespace bellchain::analysis {

double nonsignaling_bound(double i_value)
{
    if (i_value < 0.0) {
        throw std::invalid_argument("chain value must be non-negative, got " +
                                    std::to_string(i_value));
    }
    return 1.5 * i_value;
}

namespace {

void validate_claim(const ExtensionClaim& claim)
{
    if (!(claim.claimed_distance >= 0.0 && claim.claimed_distance <= 0.5)) {
        throw std::invalid_argument("claimed distance must lie in [0, 0.5], got " +
                                    std::to_string(claim.claimed_distance));
    }
    if (!(claim.visibility >= 0.0 && claim.visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1], got " +
                                    std::to_string(claim.visibility));
    }
}

} // namespace

Verdict check_extension(const ExtensionClaim& claim)
{
    validate_claim(claim);
    const auto minimum =
        chainedbell::minimize_I_over_N(claim.visibility, claim.theta, claim.n_max);

    Verdict v;
    v.n_star = minimum.n_star;
    v.i_min = minimum.i_min;
    v.bound = nonsignaling_bound(minimum.i_min);
    v.contradictory = claim.claimed_distance > v.bound;
    v.margin = claim.claimed_distance - v.bound;
    return v;
}

EmpiricalVerdict check_extension_empirical(double claimed_distance,
                                           const montecarlo::EstimateWithError& i_hat,
                                           double n_sigma)
{
    if (!(claimed_distance >= 0.0 && claimed_distance <= 0.5)) {
        throw std::invalid_argument("claimed distance must lie in [0, 0.5]");
    }
    EmpiricalVerdict v;
    v.bound = nonsignaling_bound(i_hat.value);
    v.bound_std_error = 1.5 * i_hat.std_error;
    v.contradictory = claimed_distance > v.bound + n_sigma * v.bound_std_error;
    v.margin = claimed_distance - v.bound;
    return v;
}

std::vector<std::pair<int, double>> admissible_envelope(double visibility, double theta,
                                                        int n_min, int n_max)
{
    if (n_min < 2 || n_max < n_min) {
        throw std::invalid_argument("admissible_envelope requires 2 <= n_min <= n_max");
    }
    std::vector<std::pair<int, double>> envelope;
    envelope.reserve(std::size_t(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        const double i_value =
            chainedbell::closed_form_I(chainedbell::ChainedConfig(n, theta, visibility)).value;
        envelope.emplace_back(n, nonsignaling_bound(i_value));
    }
    return envelope;
}

} // namespace bellchain::analysis
