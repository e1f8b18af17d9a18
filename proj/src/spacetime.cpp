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

#include "bellchain/spacetime.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bellchain::spacetime {

Event::Event(double t_, double x_) : t(t_), x(x_)
{
    if (!std::isfinite(t) || !std::isfinite(x)) {
        throw std::invalid_argument("Event coordinates must be finite (t=" +
                                    std::to_string(t_) + ", x=" + std::to_string(x_) + ")");
    }
}

Boost::Boost(double beta) : beta_(beta)
{
    if (!(std::fabs(beta) < 1.0)) {
        throw std::invalid_argument("Boost requires |beta| < 1, got " + std::to_string(beta));
    }
    // (1-b)(1+b) keeps precision for |beta| near 1.
    gamma_ = 1.0 / std::sqrt((1.0 - beta_) * (1.0 + beta_));
}

std::string_view to_string(IntervalKind k) noexcept
{
    switch (k) {
    case IntervalKind::Spacelike: return "spacelike";
    case IntervalKind::Timelike: return "timelike";
    case IntervalKind::Lightlike: return "lightlike";
    }
    return "unknown";
}

std::string_view to_string(TimingKind k) noexcept
{
    switch (k) {
    case TimingKind::BeforeBefore: return "BeforeBefore";
    case TimingKind::AfterAfter: return "AfterAfter";
    case TimingKind::AliceBeforeOnly: return "AliceBeforeOnly";
    case TimingKind::BobBeforeOnly: return "BobBeforeOnly";
    }
    return "unknown";
}

TimingKind TimingClass::kind() const noexcept
{
    if (alice_is_before && bob_is_before) return TimingKind::BeforeBefore;
    if (alice_is_before) return TimingKind::AliceBeforeOnly;
    if (bob_is_before) return TimingKind::BobBeforeOnly;
    return TimingKind::AfterAfter;
}

TimingClass TimingClass::from_kind(TimingKind k) noexcept
{
    switch (k) {
    case TimingKind::BeforeBefore: return {true, true};
    case TimingKind::AliceBeforeOnly: return {true, false};
    case TimingKind::BobBeforeOnly: return {false, true};
    case TimingKind::AfterAfter: break;
    }
    return {false, false};
}

double time_in_frame(const Event& e, const Boost& b) noexcept
{
    return b.gamma() * (e.t - b.beta() * e.x);
}

IntervalKind interval_class(const Event& e1, const Event& e2) noexcept
{
    const double dt = e2.t - e1.t;
    const double dx = e2.x - e1.x;
    // Factored form (dt-dx)(dt+dx) avoids the cancellation of dt^2 - dx^2.
    const double interval_sq = (dt - dx) * (dt + dx);
    if (std::fabs(interval_sq) <= kIntervalTolerance) return IntervalKind::Lightlike;
    return interval_sq > 0.0 ? IntervalKind::Timelike : IntervalKind::Spacelike;
}

TimingDiagnostics classify_timing_detailed(const ApparatusGeometry& g)
{
    if (interval_class(g.alice_event, g.bob_event) != IntervalKind::Spacelike) {
        throw std::invalid_argument(
            "classify_timing requires spacelike-separated events; got a " +
            std::string(to_string(interval_class(g.alice_event, g.bob_event))) +
            " separation");
    }

    TimingDiagnostics d;
    d.alice_time_in_frame_A = time_in_frame(g.alice_event, g.beta_A);
    d.bob_time_in_frame_A = time_in_frame(g.bob_event, g.beta_A);
    d.alice_time_in_frame_B = time_in_frame(g.alice_event, g.beta_B);
    d.bob_time_in_frame_B = time_in_frame(g.bob_event, g.beta_B);

    // A tie (within tolerance) counts as NOT before: the nonlocal branch owns
    // "after or simultaneously".
    d.alice_tie = std::fabs(d.alice_time_in_frame_A - d.bob_time_in_frame_A) <= kTimeTolerance;
    d.bob_tie = std::fabs(d.bob_time_in_frame_B - d.alice_time_in_frame_B) <= kTimeTolerance;
    d.timing.alice_is_before =
        d.alice_time_in_frame_A < d.bob_time_in_frame_A - kTimeTolerance;
    d.timing.bob_is_before =
        d.bob_time_in_frame_B < d.alice_time_in_frame_B - kTimeTolerance;
    return d;
}

TimingClass classify_timing(const ApparatusGeometry& g)
{
    return classify_timing_detailed(g).timing;
}

} // namespace bellchain::spacetime
