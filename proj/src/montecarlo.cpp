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

#include "bellchain/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bellchain/errors.hpp"
#include "bellchain/rng.hpp"

namespace bellchain::montecarlo {

void JointCounts::add(int a, int b) noexcept
{
    if (a > 0) {
        (b > 0 ? pp : pm) += 1;
    } else {
        (b > 0 ? mp : mm) += 1;
    }
}

void JointCounts::merge(const JointCounts& o) noexcept
{
    pp += o.pp;
    pm += o.pm;
    mp += o.mp;
    mm += o.mm;
}

CountsTable::CountsTable(int n_alice, int n_bob) : n_alice_(n_alice), n_bob_(n_bob)
{
    if (n_alice < 1 || n_bob < 1) {
        throw std::invalid_argument("CountsTable needs at least one setting per side");
    }
    cells_.resize(std::size_t(n_alice) * std::size_t(n_bob));
}

JointCounts& CountsTable::at(int alice, int bob)
{
    return cells_.at(std::size_t(alice) * std::size_t(n_bob_) + std::size_t(bob));
}

const JointCounts& CountsTable::at(int alice, int bob) const
{
    return cells_.at(std::size_t(alice) * std::size_t(n_bob_) + std::size_t(bob));
}

std::uint64_t CountsTable::total_trials() const noexcept
{
    std::uint64_t total = 0;
    for (const auto& c : cells_) total += c.total();
    return total;
}

void CountsTable::merge(const CountsTable& o)
{
    if (o.n_alice_ != n_alice_ || o.n_bob_ != n_bob_) {
        throw std::invalid_argument("cannot merge counts tables of different shapes");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i].merge(o.cells_[i]);
}

namespace {

double binomial_std_error(double p, std::uint64_t n) noexcept
{
    return n > 0 ? std::sqrt(p * (1.0 - p) / double(n)) : 0.0;
}

CountsTable run_range(const models::OutcomeModel& model,
                      const chainedbell::ChainedSettings& settings,
                      const spacetime::TimingClass& timing, std::uint64_t first,
                      std::uint64_t last, std::uint64_t seed, const SettingChoice& choice)
{
    const int n = settings.n_settings();
    CountsTable counts(n, n);
    models::TrialInput in;
    in.timing = timing;

    for (std::uint64_t t = first; t < last; ++t) {
        int j = choice.alice;
        int k = choice.bob;
        if (choice.mode == SettingChoice::Mode::RandomUniform) {
            j = int(rng::uniform_index(seed, t, rng::Slot::AliceSetting, std::size_t(n)));
            k = int(rng::uniform_index(seed, t, rng::Slot::BobSetting, std::size_t(n)));
        }
        in.alice_setting = j;
        in.bob_setting = k;
        in.alice_phase = settings.alice_phases[std::size_t(j)];
        in.bob_phase = settings.bob_phases[std::size_t(k)];
        in.phi = chainedbell::reduce_two_pi(in.alice_phase + in.bob_phase);
        in.hidden = models::HiddenState::from_trial(seed, t);

        const auto out = model.sample(in);
        counts.at(j, k).add(out.a, out.b);
    }
    return counts;
}

unsigned resolve_workers(unsigned n_workers, std::uint64_t trials)
{
    if (n_workers == 0) {
        n_workers = std::thread::hardware_concurrency();
        if (n_workers == 0) n_workers = 1;
    }
    if (std::uint64_t(n_workers) > trials) n_workers = unsigned(trials);
    return n_workers > 0 ? n_workers : 1;
}

// Contiguous trial ranges per worker; every outcome depends only on
// (seed, trial index), and the merge is integer addition, so the result is
// identical for any worker count.
CountsTable run_trial_range(const models::OutcomeModel& model,
                            const chainedbell::ChainedSettings& settings,
                            const spacetime::TimingClass& timing, std::uint64_t first,
                            std::uint64_t last, std::uint64_t seed,
                            const SettingChoice& choice, unsigned n_workers)
{
    const int n = settings.n_settings();
    const std::uint64_t trials = last - first;
    n_workers = resolve_workers(n_workers, trials);
    if (n_workers == 1) {
        return run_range(model, settings, timing, first, last, seed, choice);
    }

    std::vector<CountsTable> parts(n_workers, CountsTable(n, n));
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    const std::uint64_t chunk = trials / n_workers;
    const std::uint64_t remainder = trials % n_workers;
    std::uint64_t begin = first;
    for (unsigned w = 0; w < n_workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < remainder ? 1 : 0);
        threads.emplace_back([&, w, begin, end] {
            parts[w] = run_range(model, settings, timing, begin, end, seed, choice);
        });
        begin = end;
    }
    for (auto& th : threads) th.join();

    CountsTable counts(n, n);
    for (const auto& part : parts) counts.merge(part);
    return counts;
}

} // namespace

CountsTable run_trials(const models::OutcomeModel& model,
                       const chainedbell::ChainedSettings& settings,
                       const spacetime::TimingClass& timing, std::uint64_t trials,
                       std::uint64_t seed, const SettingChoice& choice, unsigned n_workers)
{
    if (trials < 1) {
        throw std::invalid_argument("run_trials requires at least one trial");
    }
    const int n = settings.n_settings();
    if (n < 1) {
        throw std::invalid_argument("run_trials requires non-empty settings");
    }
    if (choice.mode == SettingChoice::Mode::FixedPair &&
        (choice.alice < 0 || choice.alice >= n || choice.bob < 0 || choice.bob >= n)) {
        throw std::invalid_argument("fixed setting pair out of range");
    }
    return run_trial_range(model, settings, timing, 0, trials, seed, choice, n_workers);
}

chainedbell::InequalityReport estimate_I(const CountsTable& counts,
                                         const chainedbell::ChainedConfig& cfg)
{
    if (counts.n_alice() != cfg.N || counts.n_bob() != cfg.N) {
        throw std::invalid_argument("counts table shape does not match N=" +
                                    std::to_string(cfg.N));
    }

    chainedbell::InequalityReport report;
    report.N = cfg.N;
    report.theta = cfg.theta;
    report.visibility = cfg.visibility;
    report.terms = chainedbell::chain_terms(cfg.N);

    double value = 0.0;
    double variance = 0.0;
    for (auto& term : report.terms) {
        const auto& cell = counts.at(term.alice_setting, term.bob_setting);
        const std::uint64_t n = cell.total();
        if (n < 100) {
            throw insufficient_data_error(
                "setting pair (alice=" + std::to_string(term.alice_setting) +
                ", bob=" + std::to_string(term.bob_setting) + ") has " + std::to_string(n) +
                " trials; at least 100 required per chain term");
        }
        const double p_equal = double(cell.equal()) / double(n);
        term.probability =
            term.kind == chainedbell::TermKind::ExtremeEqual ? p_equal : 1.0 - p_equal;
        term.std_error = binomial_std_error(term.probability, n);
        term.trials = n;
        value += term.probability;
        variance += term.std_error * term.std_error;
    }

    report.value = value;
    report.std_error = std::sqrt(variance);
    report.is_violation = value < 1.0;
    return report;
}

std::vector<ScanPoint> scan_phase(const models::OutcomeModel& model,
                                  const std::vector<double>& phases,
                                  std::uint64_t trials_per_point, std::uint64_t seed,
                                  const spacetime::TimingClass& timing, unsigned n_workers)
{
    if (phases.empty()) {
        throw std::invalid_argument("scan_phase requires a non-empty phase grid");
    }
    if (trials_per_point < 1) {
        throw std::invalid_argument("scan_phase requires at least one trial per point");
    }

    // One single-setting pair per point, with globally unique trial indices
    // so the points are statistically independent.
    std::vector<ScanPoint> scan;
    scan.reserve(phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const double phi = chainedbell::reduce_two_pi(phases[i]);
        chainedbell::ChainedSettings settings;
        settings.alice_phases = {phi};
        settings.bob_phases = {0.0};
        settings.alice_long_arms = {0.0};
        settings.bob_long_arms = {0.0};

        const std::uint64_t base = std::uint64_t(i) * trials_per_point;
        const CountsTable counts =
            run_trial_range(model, settings, timing, base, base + trials_per_point, seed,
                            SettingChoice::fixed_pair(0, 0), n_workers);

        const auto& cell = counts.at(0, 0);
        const double p = double(cell.equal()) / double(cell.total());
        scan.push_back({phi, p, binomial_std_error(p, cell.total()), cell.total()});
    }
    return scan;
}

EstimateWithError fit_visibility(const std::vector<ScanPoint>& scan)
{
    if (scan.size() < 8) {
        throw std::invalid_argument("visibility fit requires at least 8 phase points, got " +
                                    std::to_string(scan.size()));
    }

    double cos_min = 1.0;
    double cos_max = -1.0;
    for (const auto& pt : scan) {
        const double c = std::cos(pt.phi);
        cos_min = std::min(cos_min, c);
        cos_max = std::max(cos_max, c);
    }
    if (cos_max - cos_min < 1e-9) {
        throw std::invalid_argument("degenerate phase scan: cos(phi) is constant across points");
    }

    // P(a=b) = 1/2 + (V/2) cos phi. Intercept pinned at 1/2; slope by least
    // squares with weights n_i (well defined even when a point has zero
    // binomial variance).
    double sxx = 0.0;
    double sxy = 0.0;
    double var_num = 0.0;
    std::uint64_t n_total = 0;
    for (const auto& pt : scan) {
        const double c = std::cos(pt.phi);
        const double w = double(pt.n);
        sxx += w * c * c;
        sxy += w * c * (pt.p_equal - 0.5);
        var_num += w * w * c * c * pt.std_error * pt.std_error;
        n_total += pt.n;
    }
    const double slope = sxy / sxx;
    const double slope_std_error = std::sqrt(var_num) / sxx;
    return {2.0 * slope, 2.0 * slope_std_error, n_total};
}

namespace {

double two_proportion_z(std::uint64_t x1, std::uint64_t n1, std::uint64_t x2,
                        std::uint64_t n2) noexcept
{
    const double p1 = double(x1) / double(n1);
    const double p2 = double(x2) / double(n2);
    const double pooled = double(x1 + x2) / double(n1 + n2);
    const double denom =
        std::sqrt(pooled * (1.0 - pooled) * (1.0 / double(n1) + 1.0 / double(n2)));
    if (denom == 0.0) return 0.0; // both proportions pinned at the same 0 or 1
    return (p1 - p2) / denom;
}

} // namespace

NonsignalingReport nonsignaling_test(const CountsTable& counts, double z_threshold)
{
    if (counts.n_alice() < 2 || counts.n_bob() < 2) {
        throw insufficient_data_error(
            "non-signaling test needs at least two settings per side");
    }
    for (int j = 0; j < counts.n_alice(); ++j) {
        for (int k = 0; k < counts.n_bob(); ++k) {
            if (counts.at(j, k).total() < 10'000) {
                throw insufficient_data_error(
                    "cell (alice=" + std::to_string(j) + ", bob=" + std::to_string(k) +
                    ") has " + std::to_string(counts.at(j, k).total()) +
                    " trials; non-signaling test needs 1e4 per cell");
            }
        }
    }

    NonsignalingReport report;
    report.z_threshold = z_threshold;
    report.max_abs_z = 0.0;

    // Alice's +1 marginal must not move across Bob's settings.
    for (int j = 0; j < counts.n_alice(); ++j) {
        for (int k1 = 0; k1 < counts.n_bob(); ++k1) {
            for (int k2 = k1 + 1; k2 < counts.n_bob(); ++k2) {
                const auto& c1 = counts.at(j, k1);
                const auto& c2 = counts.at(j, k2);
                ZComparison cmp;
                cmp.side = 'A';
                cmp.local_setting = j;
                cmp.remote_first = k1;
                cmp.remote_second = k2;
                cmp.n_first = c1.total();
                cmp.n_second = c2.total();
                cmp.p_first = double(c1.alice_plus()) / double(c1.total());
                cmp.p_second = double(c2.alice_plus()) / double(c2.total());
                cmp.z = two_proportion_z(c1.alice_plus(), c1.total(), c2.alice_plus(),
                                         c2.total());
                report.max_abs_z = std::max(report.max_abs_z, std::fabs(cmp.z));
                report.comparisons.push_back(cmp);
            }
        }
    }
    // And symmetrically for Bob across Alice's settings.
    for (int k = 0; k < counts.n_bob(); ++k) {
        for (int j1 = 0; j1 < counts.n_alice(); ++j1) {
            for (int j2 = j1 + 1; j2 < counts.n_alice(); ++j2) {
                const auto& c1 = counts.at(j1, k);
                const auto& c2 = counts.at(j2, k);
                ZComparison cmp;
                cmp.side = 'B';
                cmp.local_setting = k;
                cmp.remote_first = j1;
                cmp.remote_second = j2;
                cmp.n_first = c1.total();
                cmp.n_second = c2.total();
                cmp.p_first = double(c1.bob_plus()) / double(c1.total());
                cmp.p_second = double(c2.bob_plus()) / double(c2.total());
                cmp.z = two_proportion_z(c1.bob_plus(), c1.total(), c2.bob_plus(), c2.total());
                report.max_abs_z = std::max(report.max_abs_z, std::fabs(cmp.z));
                report.comparisons.push_back(cmp);
            }
        }
    }

    report.pass = report.max_abs_z <= z_threshold;
    return report;
}

EstimateWithError estimate_distance(const CountsTable& counts, Side side)
{
    std::uint64_t plus = 0;
    std::uint64_t total = 0;
    for (int j = 0; j < counts.n_alice(); ++j) {
        for (int k = 0; k < counts.n_bob(); ++k) {
            const auto& c = counts.at(j, k);
            plus += side == Side::Alice ? c.alice_plus() : c.bob_plus();
            total += c.total();
        }
    }
    if (total == 0) {
        throw std::invalid_argument("estimate_distance needs a non-empty counts table");
    }
    const double p = double(plus) / double(total);
    return {std::fabs(p - 0.5), binomial_std_error(p, total), total};
}

double joint_distance(const CountsTable& counts, int alice, int bob)
{
    const auto& c = counts.at(alice, bob);
    const std::uint64_t n = c.total();
    if (n == 0) {
        throw std::invalid_argument("joint_distance needs a sampled setting pair");
    }
    const double quarter = 0.25;
    return 0.5 * (std::fabs(double(c.pp) / double(n) - quarter) +
                  std::fabs(double(c.pm) / double(n) - quarter) +
                  std::fabs(double(c.mp) / double(n) - quarter) +
                  std::fabs(double(c.mm) / double(n) - quarter));
}

} // namespace bellchain::montecarlo
