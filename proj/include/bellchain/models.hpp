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
#include <memory>
#include <string_view>

#include "bellchain/spacetime.hpp"

namespace bellchain::models {

/// Per-trial randomness, one slot per hidden variable, all in [0, 1).
/// u and v are the party-local variables; alpha and beta_nl feed the
/// respective nonlocal branches; shared_lambda is the common hidden phase of
/// the classical shared-randomness strategy. Everything derives
/// deterministically from (seed, trial), so samplers stay pure functions.
struct HiddenState {
    double u{};
    double v{};
    double alpha{};
    double beta_nl{};
    double shared_lambda{};

    static HiddenState from_trial(std::uint64_t seed, std::uint64_t trial) noexcept;
};

/// Everything a sampler may read for one trial. The settings enter through
/// the total phase phi plus the per-side contributions (phi ==
/// alice_phase + bob_phase mod 2pi); the per-side split is what a
/// deliberately signaling model needs to peek at the remote setting.
struct TrialInput {
    double phi{};         // [0, 2*pi)
    double alice_phase{}; // Alice's contribution, [0, 2*pi)
    double bob_phase{};   // Bob's contribution, [0, 2*pi)
    int alice_setting{};
    int bob_setting{};
    spacetime::TimingClass timing;
    HiddenState hidden;
};

struct JointOutcome {
    int a{}; // +1 or -1
    int b{};

    friend bool operator==(const JointOutcome&, const JointOutcome&) = default;
};

/// Local functions used on a party's "before" branch.
///  - Product: independent uniform signs from u resp. v (setting ignored).
///  - SharedRandomness: a classical hidden-phase strategy, outcome =
///    sign(cos(own_phase + 2*pi*shared_lambda)); local by construction, so
///    the before-before joint satisfies every chain inequality.
enum class LocalStrategy { Product, SharedRandomness };

/// Timing-independent quantum interference statistics:
/// P(a=b | phi) = (1 + V cos phi)/2 with exactly uniform marginals,
/// realized by inverse transform on (u, alpha).
JointOutcome quantum_sample(const TrialInput& in, double visibility);

/// Frame-dependent model. A party that selects first in its own device frame
/// outputs a local function of its setting and local randomness; a party
/// that selects after (or simultaneously) outputs the quantum conditional
/// given the other outcome, so every non-before-before ensemble reproduces
/// the quantum statistics while before-before reduces to the local strategy.
JointOutcome suarez_scarani_sample(const TrialInput& in, double visibility,
                                   LocalStrategy strategy);

/// Setting- and timing-independent product of uniform signs:
/// a = sign(u - 1/2), b = sign(v - 1/2).
JointOutcome local_deterministic_sample(const TrialInput& in);

/// Positive control for the non-signaling detector: Alice's marginal is
/// P(a=+1) = 1/2 + delta * cos(bob_phase), b uniform. Rejects delta outside
/// [0, 1/4].
JointOutcome signaling_toy_sample(const TrialInput& in, double delta);

/// Sampler contract: a deterministic function of TrialInput (all randomness
/// flows through HiddenState).
class OutcomeModel {
public:
    virtual ~OutcomeModel() = default;

    virtual std::string_view name() const noexcept = 0;
    virtual bool timing_sensitive() const noexcept = 0;
    virtual JointOutcome sample(const TrialInput& in) const = 0;
};

class QuantumModel final : public OutcomeModel {
public:
    explicit QuantumModel(double visibility);

    std::string_view name() const noexcept override { return "quantum"; }
    bool timing_sensitive() const noexcept override { return false; }
    JointOutcome sample(const TrialInput& in) const override;

    double visibility() const noexcept { return visibility_; }

private:
    double visibility_;
};

class SuarezScaraniModel final : public OutcomeModel {
public:
    SuarezScaraniModel(double visibility, LocalStrategy strategy = LocalStrategy::Product);

    std::string_view name() const noexcept override { return "suarez-scarani"; }
    bool timing_sensitive() const noexcept override { return true; }
    JointOutcome sample(const TrialInput& in) const override;

    double visibility() const noexcept { return visibility_; }
    LocalStrategy strategy() const noexcept { return strategy_; }

private:
    double visibility_;
    LocalStrategy strategy_;
};

class LocalDeterministicModel final : public OutcomeModel {
public:
    std::string_view name() const noexcept override { return "local"; }
    bool timing_sensitive() const noexcept override { return false; }
    JointOutcome sample(const TrialInput& in) const override;
};

class SignalingToyModel final : public OutcomeModel {
public:
    explicit SignalingToyModel(double delta);

    std::string_view name() const noexcept override { return "signaling-toy"; }
    bool timing_sensitive() const noexcept override { return false; }
    JointOutcome sample(const TrialInput& in) const override;

    double delta() const noexcept { return delta_; }

private:
    double delta_;
};

} // namespace bellchain::models
