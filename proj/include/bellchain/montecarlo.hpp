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

#include "bellchain/chainedbell.hpp"
#include "bellchain/models.hpp"
#include "bellchain/spacetime.hpp"

namespace bellchain::montecarlo {

/// Joint outcome counts for one setting pair.
struct JointCounts {
    std::uint64_t pp{}; // a=+1, b=+1
    std::uint64_t pm{}; // a=+1, b=-1
    std::uint64_t mp{};
    std::uint64_t mm{};

    std::uint64_t total() const noexcept { return pp + pm + mp + mm; }
    std::uint64_t alice_plus() const noexcept { return pp + pm; }
    std::uint64_t bob_plus() const noexcept { return pp + mp; }
    std::uint64_t equal() const noexcept { return pp + mm; }

    void add(int a, int b) noexcept;
    void merge(const JointCounts& o) noexcept;
};

/// Counts for every sampled (alice setting, bob setting) pair. Merging is
/// exact integer addition, so partial tables from any work partitioning
/// combine to the same totals.
class CountsTable {
public:
    CountsTable(int n_alice, int n_bob);

    JointCounts& at(int alice, int bob);
    const JointCounts& at(int alice, int bob) const;

    int n_alice() const noexcept { return n_alice_; }
    int n_bob() const noexcept { return n_bob_; }
    std::uint64_t total_trials() const noexcept;

    void merge(const CountsTable& o);

private:
    int n_alice_;
    int n_bob_;
    std::vector<JointCounts> cells_;
};

struct EstimateWithError {
    double value{};
    double std_error{};
    std::uint64_t n{};
};

/// How each trial picks its setting pair.
struct SettingChoice {
    enum class Mode { RandomUniform, FixedPair };

    Mode mode = Mode::RandomUniform;
    int alice = 0;
    int bob = 0;

    static SettingChoice random_uniform() noexcept { return {}; }
    static SettingChoice fixed_pair(int alice, int bob) noexcept
    {
        return {Mode::FixedPair, alice, bob};
    }
};

/// Run `trials` trials of `model` under the given timing. Random-uniform
/// choice picks both settings independently and uniformly each trial; every
/// sampled pair is recorded. Deterministic for a fixed seed regardless of
/// n_workers (0 = hardware concurrency).
CountsTable run_trials(const models::OutcomeModel& model,
                       const chainedbell::ChainedSettings& settings,
                       const spacetime::TimingClass& timing, std::uint64_t trials,
                       std::uint64_t seed,
                       const SettingChoice& choice = SettingChoice::random_uniform(),
                       unsigned n_workers = 1);

/// Plug the empirical conditional proportions of the 2N chain pairs into the
/// chain sum; binomial term errors propagate in quadrature. Throws
/// insufficient_data_error naming the starved pair if any term has fewer
/// than 100 trials.
chainedbell::InequalityReport estimate_I(const CountsTable& counts,
                                         const chainedbell::ChainedConfig& cfg);

struct ScanPoint {
    double phi{};
    double p_equal{};
    double std_error{};
    std::uint64_t n{};
};

/// Simulate P(a=b) at each phase of `phases` with `trials_per_point` trials.
std::vector<ScanPoint> scan_phase(const models::OutcomeModel& model,
                                  const std::vector<double>& phases,
                                  std::uint64_t trials_per_point, std::uint64_t seed,
                                  const spacetime::TimingClass& timing,
                                  unsigned n_workers = 1);

/// Fit the fringe law P(a=b) = 1/2 + (V/2) cos phi by least squares with the
/// intercept pinned at 1/2 (slope only), weighting points by trial count.
/// Requires >= 8 points; rejects scans whose cos(phi) design is constant.
EstimateWithError fit_visibility(const std::vector<ScanPoint>& scan);

struct ZComparison {
    char side{};       // 'A': Alice's marginal vs Bob's settings; 'B': converse
    int local_setting{};
    int remote_first{};
    int remote_second{};
    double p_first{};
    double p_second{};
    std::uint64_t n_first{};
    std::uint64_t n_second{};
    double z{};
};

struct NonsignalingReport {
    bool pass{};
    double z_threshold{};
    double max_abs_z{};
    std::vector<ZComparison> comparisons;
};

/// Two-proportion z-tests of each party's +1 marginal across the other
/// party's settings; fails when any |z| exceeds the threshold. Requires at
/// least two remote settings per side and 1e4 trials in every cell (throws
/// insufficient_data_error otherwise).
NonsignalingReport nonsignaling_test(const CountsTable& counts, double z_threshold = 4.0);

enum class Side { Alice, Bob };

/// Total-variation distance of the party's pooled +1/-1 marginal from
/// uniform: |p_hat(+1) - 1/2| with binomial error.
EstimateWithError estimate_distance(const CountsTable& counts, Side side);

/// Secondary statistic: total-variation distance of one setting pair's
/// four-cell joint distribution from the uniform joint (1/4 each).
double joint_distance(const CountsTable& counts, int alice, int bob);

} // namespace bellchain::montecarlo
