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
#include <limits>
#include <random>
#include <stdexcept>

#include "bellchain/spacetime.hpp"

using namespace bellchain::spacetime;

namespace {

// Brute-force oracle, written independently of the library: transform both
// events explicitly and compare coordinate times with the tie rule.
struct OracleTiming {
    bool alice_before;
    bool bob_before;
};

double oracle_frame_time(double t, double x, double beta)
{
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    return gamma * t - gamma * beta * x;
}

OracleTiming oracle_classify(double ta, double xa, double tb, double xb, double beta_A,
                             double beta_B)
{
    const double eps = 1e-12;
    OracleTiming o;
    o.alice_before =
        oracle_frame_time(ta, xa, beta_A) < oracle_frame_time(tb, xb, beta_A) - eps;
    o.bob_before =
        oracle_frame_time(tb, xb, beta_B) < oracle_frame_time(ta, xa, beta_B) - eps;
    return o;
}

// Active Lorentz boost of an event's coordinates.
Event boost_event(const Event& e, double beta)
{
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    return Event(gamma * (e.t - beta * e.x), gamma * (e.x - beta * e.t));
}

} // namespace

TEST_CASE("time_in_frame matches hand Lorentz transforms")
{
    CHECK(time_in_frame(Event(0, 0), Boost(0.9)) == doctest::Approx(0.0).epsilon(1e-15));
    // gamma = 1.25 at beta = 0.6
    CHECK(time_in_frame(Event(5, 5), Boost(0.6)) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(time_in_frame(Event(5, -5), Boost(0.6)) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("time_in_frame with beta=0 is the identity on t")
{
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    for (int i = 0; i < 200; ++i) {
        const Event e(coord(gen), coord(gen));
        CHECK(time_in_frame(e, Boost(0.0)) == e.t);
    }
}

TEST_CASE("Boost validates |beta| < 1 and computes gamma")
{
    CHECK(Boost(0.6).gamma() == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(Boost(0.0).gamma() == 1.0);
    CHECK_THROWS_AS(Boost(1.0), std::invalid_argument);
    CHECK_THROWS_AS(Boost(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(Boost(1.5), std::invalid_argument);
}

TEST_CASE("Event rejects non-finite coordinates")
{
    CHECK_THROWS_AS(Event(std::nan(""), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Event(0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("interval_class on the three regimes")
{
    CHECK(interval_class(Event(0, 0), Event(5, -5)) == IntervalKind::Lightlike);
    CHECK(interval_class(Event(5, -5), Event(5, 5)) == IntervalKind::Spacelike);
    CHECK(interval_class(Event(0, 0), Event(5, 1)) == IntervalKind::Timelike);
}

TEST_CASE("interval_class is symmetric and boost-invariant")
{
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::uniform_real_distribution<double> beta(-0.95, 0.95);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const Event e1(coord(gen), coord(gen));
        const Event e2(coord(gen), coord(gen));
        const auto kind = interval_class(e1, e2);
        CHECK(interval_class(e2, e1) == kind);

        // Classification is only robust away from the lightcone; skip
        // near-lightlike pairs.
        const double dt = e2.t - e1.t;
        const double dx = e2.x - e1.x;
        const double interval_sq = dt * dt - dx * dx;
        if (std::fabs(interval_sq) < 1e-6) continue;

        const double b = beta(gen);
        const Event f1 = boost_event(e1, b);
        const Event f2 = boost_event(e2, b);
        CHECK(interval_class(f1, f2) == kind);

        const double dtf = f2.t - f1.t;
        const double dxf = f2.x - f1.x;
        const double interval_sq_f = dtf * dtf - dxf * dxf;
        CHECK(interval_sq_f ==
              doctest::Approx(interval_sq).epsilon(1e-9)); // relative tolerance
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("classify_timing on the worked geometries")
{
    ApparatusGeometry g;
    g.alice_event = Event(5, -5);
    g.bob_event = Event(5, 5);

    SUBCASE("opposed boosts give before-before")
    {
        g.beta_A = Boost(-0.5);
        g.beta_B = Boost(0.5);
        CHECK(classify_timing(g).kind() == TimingKind::BeforeBefore);
    }
    SUBCASE("lab frame ties on both sides")
    {
        g.beta_A = Boost(0.0);
        g.beta_B = Boost(0.0);
        const auto d = classify_timing_detailed(g);
        CHECK(d.timing.kind() == TimingKind::AfterAfter);
        CHECK(d.alice_tie);
        CHECK(d.bob_tie);
    }
    SUBCASE("swapped boosts give after-after")
    {
        g.beta_A = Boost(0.5);
        g.beta_B = Boost(-0.5);
        CHECK(classify_timing(g).kind() == TimingKind::AfterAfter);
    }
}

TEST_CASE("classify_timing rejects non-spacelike geometry")
{
    ApparatusGeometry g;
    g.alice_event = Event(0, 0);
    g.bob_event = Event(5, 1); // timelike
    CHECK_THROWS_AS(classify_timing(g), std::invalid_argument);

    g.bob_event = Event(5, -5); // lightlike
    CHECK_THROWS_AS(classify_timing(g), std::invalid_argument);
}

TEST_CASE("classify_timing agrees with the brute-force oracle")
{
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> coord(-20.0, 20.0);
    std::uniform_real_distribution<double> beta(-0.99, 0.99);

    int done = 0;
    while (done < 200) {
        const double ta = coord(gen);
        const double tb = coord(gen);
        const double xa = coord(gen);
        const double xb = coord(gen);
        const double dt = tb - ta;
        const double dx = xb - xa;
        if (std::fabs(dt) + 1e-6 >= std::fabs(dx)) continue; // need clear spacelike

        ApparatusGeometry g;
        g.alice_event = Event(ta, xa);
        g.bob_event = Event(tb, xb);
        const double ba = beta(gen);
        const double bb = beta(gen);
        g.beta_A = Boost(ba);
        g.beta_B = Boost(bb);

        const auto got = classify_timing(g);
        const auto expected = oracle_classify(ta, xa, tb, xb, ba, bb);
        CHECK(got.alice_is_before == expected.alice_before);
        CHECK(got.bob_is_before == expected.bob_before);
        ++done;
    }
}

TEST_CASE("opposed boosts of sufficient magnitude realize every timing class")
{
    std::mt19937 gen(37);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);

    int done = 0;
    while (done < 100) {
        const double ta = coord(gen);
        const double tb = coord(gen);
        double xa = coord(gen);
        double xb = coord(gen);
        if (xa > xb) std::swap(xa, xb); // Alice on the left
        const double dt = tb - ta;
        const double dx = xb - xa;
        if (std::fabs(dt) + 1e-3 >= std::fabs(dx)) continue;

        // Alice is before iff beta_A < r, Bob is before iff beta_B > r, with
        // r = (ta - tb)/(xa - xb) in (-1, 1) for spacelike separation.
        const double r = (ta - tb) / (xa - xb);
        REQUIRE(std::fabs(r) < 1.0);
        const double strong = (std::fabs(r) + 1.0) / 2.0;

        ApparatusGeometry g;
        g.alice_event = Event(ta, xa);
        g.bob_event = Event(tb, xb);

        g.beta_A = Boost(-strong);
        g.beta_B = Boost(strong);
        CHECK(classify_timing(g).kind() == TimingKind::BeforeBefore);

        g.beta_A = Boost(strong);
        g.beta_B = Boost(-strong);
        CHECK(classify_timing(g).kind() == TimingKind::AfterAfter);

        g.beta_A = Boost(-strong);
        g.beta_B = Boost(-strong);
        CHECK(classify_timing(g).kind() == TimingKind::AliceBeforeOnly);

        g.beta_A = Boost(strong);
        g.beta_B = Boost(strong);
        CHECK(classify_timing(g).kind() == TimingKind::BobBeforeOnly);

        ++done;
    }
}

TEST_CASE("classify_timing is invariant under a common time shift")
{
    std::mt19937 gen(41);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::uniform_real_distribution<double> beta(-0.9, 0.9);
    std::uniform_real_distribution<double> shift(-50.0, 50.0);

    int done = 0;
    while (done < 100) {
        const double ta = coord(gen);
        const double tb = coord(gen);
        const double xa = coord(gen);
        const double xb = coord(gen);
        if (std::fabs(tb - ta) + 1e-3 >= std::fabs(xb - xa)) continue;

        ApparatusGeometry g;
        g.alice_event = Event(ta, xa);
        g.bob_event = Event(tb, xb);
        g.beta_A = Boost(beta(gen));
        g.beta_B = Boost(beta(gen));

        const double s = shift(gen);
        ApparatusGeometry shifted = g;
        shifted.alice_event = Event(ta + s, xa);
        shifted.bob_event = Event(tb + s, xb);

        CHECK(classify_timing(shifted) == classify_timing(g));
        ++done;
    }
}

TEST_CASE("TimingClass round-trips through its kind")
{
    for (const auto kind : {TimingKind::BeforeBefore, TimingKind::AfterAfter,
                            TimingKind::AliceBeforeOnly, TimingKind::BobBeforeOnly}) {
        CHECK(TimingClass::from_kind(kind).kind() == kind);
    }
}
