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

#include "bellchain/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellchain/rng.hpp"

namespace bellchain::models {

namespace {

int sign_from(double r) noexcept
{
    return r >= 0.5 ? +1 : -1;
}

// Draw the partner outcome from P(other = fixed | phi) = (1 + V cos phi)/2.
int conditional_partner(int fixed, double phi, double visibility, double r) noexcept
{
    return r < 0.5 * (1.0 + visibility * std::cos(phi)) ? fixed : -fixed;
}

void require_visibility(double visibility)
{
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1], got " +
                                    std::to_string(visibility));
    }
}

int local_sign(double own_phase, double local_r, double shared_lambda,
               LocalStrategy strategy) noexcept
{
    if (strategy == LocalStrategy::SharedRandomness) {
        const double lambda = 2.0 * std::numbers::pi * shared_lambda;
        return std::cos(own_phase + lambda) >= 0.0 ? +1 : -1;
    }
    return sign_from(local_r);
}

} // namespace

HiddenState HiddenState::from_trial(std::uint64_t seed, std::uint64_t trial) noexcept
{
    using rng::Slot;
    return {rng::uniform01(seed, trial, Slot::AliceLocal),
            rng::uniform01(seed, trial, Slot::BobLocal),
            rng::uniform01(seed, trial, Slot::AliceNonlocal),
            rng::uniform01(seed, trial, Slot::BobNonlocal),
            rng::uniform01(seed, trial, Slot::SharedLambda)};
}

JointOutcome quantum_sample(const TrialInput& in, double visibility)
{
    require_visibility(visibility);
    const int a = sign_from(in.hidden.u);
    const int b = conditional_partner(a, in.phi, visibility, in.hidden.alpha);
    return {a, b};
}

JointOutcome suarez_scarani_sample(const TrialInput& in, double visibility,
                                   LocalStrategy strategy)
{
    require_visibility(visibility);
    const auto& h = in.hidden;

    switch (in.timing.kind()) {
    case spacetime::TimingKind::BeforeBefore: {
        // Both parties select first in their own frames: the nonlocal
        // dependencies drop out and only the local functions act.
        const int a = local_sign(in.alice_phase, h.u, h.shared_lambda, strategy);
        const int b = local_sign(in.bob_phase, h.v, h.shared_lambda, strategy);
        return {a, b};
    }
    case spacetime::TimingKind::AliceBeforeOnly: {
        const int a = local_sign(in.alice_phase, h.u, h.shared_lambda, strategy);
        const int b = conditional_partner(a, in.phi, visibility, h.beta_nl);
        return {a, b};
    }
    case spacetime::TimingKind::BobBeforeOnly: {
        const int b = local_sign(in.bob_phase, h.v, h.shared_lambda, strategy);
        const int a = conditional_partner(b, in.phi, visibility, h.alpha);
        return {a, b};
    }
    case spacetime::TimingKind::AfterAfter: break;
    }
    // Neither party is before: the joint reproduces the quantum statistics.
    return quantum_sample(in, visibility);
}

JointOutcome local_deterministic_sample(const TrialInput& in)
{
    return {sign_from(in.hidden.u), sign_from(in.hidden.v)};
}

JointOutcome signaling_toy_sample(const TrialInput& in, double delta)
{
    if (!(delta >= 0.0 && delta <= 0.25)) {
        throw std::invalid_argument("signaling toy bias must lie in [0, 1/4], got " +
                                    std::to_string(delta));
    }
    const double p_plus = 0.5 + delta * std::cos(in.bob_phase);
    const int a = in.hidden.u < p_plus ? +1 : -1;
    return {a, sign_from(in.hidden.v)};
}

QuantumModel::QuantumModel(double visibility) : visibility_(visibility)
{
    require_visibility(visibility);
}

JointOutcome QuantumModel::sample(const TrialInput& in) const
{
    return quantum_sample(in, visibility_);
}

SuarezScaraniModel::SuarezScaraniModel(double visibility, LocalStrategy strategy)
    : visibility_(visibility), strategy_(strategy)
{
    require_visibility(visibility);
}

JointOutcome SuarezScaraniModel::sample(const TrialInput& in) const
{
    return suarez_scarani_sample(in, visibility_, strategy_);
}

JointOutcome LocalDeterministicModel::sample(const TrialInput& in) const
{
    return local_deterministic_sample(in);
}

SignalingToyModel::SignalingToyModel(double delta) : delta_(delta)
{
    if (!(delta >= 0.0 && delta <= 0.25)) {
        throw std::invalid_argument("signaling toy bias must lie in [0, 1/4], got " +
                                    std::to_string(delta));
    }
}

JointOutcome SignalingToyModel::sample(const TrialInput& in) const
{
    return signaling_toy_sample(in, delta_);
}

} // namespace bellchain::models
