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

#include <string_view>

namespace bellchain::spacetime {

/// Tie tolerance on frame-time comparisons (seconds). Ties resolve to the
/// nonlocal ("not before") branch.
inline constexpr double kTimeTolerance = 1e-12;

/// Tolerance on squared-interval comparisons for the lightlike band.
inline constexpr double kIntervalTolerance = 1e-12;

/// Spacetime point in 1+1 dimensions, natural units c=1:
/// t in seconds, x in light-seconds.
struct Event {
    double t{};
    double x{};

    Event() = default;
    Event(double t_, double x_); // rejects non-finite coordinates
};

/// Inertial frame moving with velocity fraction beta along x, |beta| < 1.
class Boost {
public:
    Boost() = default;
    explicit Boost(double beta); // rejects |beta| >= 1

    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }

private:
    double beta_ = 0.0;
    double gamma_ = 1.0;
};

enum class IntervalKind { Spacelike, Timelike, Lightlike };

std::string_view to_string(IntervalKind k) noexcept;

/// The two detection events and the rest frames of the two moving
/// beam-splitters. The events must be spacelike separated.
struct ApparatusGeometry {
    Event alice_event;
    Event bob_event;
    Boost beta_A;
    Boost beta_B;
};

enum class TimingKind { BeforeBefore, AfterAfter, AliceBeforeOnly, BobBeforeOnly };

std::string_view to_string(TimingKind k) noexcept;

/// Per-party "chooses first in its own device frame" flags. Exactly one of
/// the four TimingKind configurations holds.
struct TimingClass {
    bool alice_is_before{};
    bool bob_is_before{};

    TimingKind kind() const noexcept;
    static TimingClass from_kind(TimingKind k) noexcept;

    friend bool operator==(const TimingClass&, const TimingClass&) = default;
};

/// Time coordinate of `e` in the frame moving at `b`: gamma * (t - beta x).
double time_in_frame(const Event& e, const Boost& b) noexcept;

/// Sign classification of (dt)^2 - (dx)^2, with a kIntervalTolerance-wide
/// lightlike band.
IntervalKind interval_class(const Event& e1, const Event& e2) noexcept;

/// Frame times of both events in both beam-splitter frames, with tie flags.
struct TimingDiagnostics {
    double alice_time_in_frame_A{};
    double bob_time_in_frame_A{};
    double alice_time_in_frame_B{};
    double bob_time_in_frame_B{};
    bool alice_tie{}; // comparison in Alice's device frame fell within tolerance
    bool bob_tie{};
    TimingClass timing;
};

/// Classifies which branch configuration the geometry realizes.
/// Alice is "before" iff her event precedes Bob's by more than the tie
/// tolerance in the rest frame of her own beam-splitter, and symmetrically
/// for Bob. Throws std::invalid_argument unless the events are spacelike
/// separated.
TimingClass classify_timing(const ApparatusGeometry& g);

/// Same classification plus the frame times and tie flags, for reporting.
TimingDiagnostics classify_timing_detailed(const ApparatusGeometry& g);

} // namespace bellchain::spacetime
