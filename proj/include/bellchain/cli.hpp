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

#include <iosfwd>
#include <string>
#include <vector>

#include "bellchain/config.hpp"

namespace bellchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // unexpected error
inline constexpr int kExitConfig = 2;        // config / argument validation
inline constexpr int kExitContradictory = 3; // contradictory verdict / signaling detected
inline constexpr int kExitInsufficient = 4;  // starved estimator

/// Frame times of both events in both device frames plus the timing class.
int cmd_timing(const config::ExperimentConfig& cfg, std::ostream& out);

/// Run trials, estimate the chain value, write counts.csv and inequality.csv.
int cmd_simulate(const config::ExperimentConfig& cfg, std::ostream& out);

/// Simulate P(a=b) over a uniform phase grid, fit the visibility, write
/// phase_scan.csv. `cfg.trials` is the trial count per grid point.
int cmd_scan_phase(const config::ExperimentConfig& cfg, std::ostream& out);

/// Chain-value curves I(N, pi) for each visibility (one CSV per value) plus
/// an argmin table (stdout and figure3_minima.csv).
int cmd_figure3(const std::vector<double>& visibilities, int n_max,
                const std::string& out_dir, std::ostream& out);

/// Verdict on a claimed N-independent variational distance. Returns
/// kExitContradictory when the claim exceeds the bound. Optionally appends a
/// CSV row to `csv_path`.
int cmd_check_extension(double claimed_distance, double visibility, double theta, int n_max,
                        const std::string& csv_path, std::ostream& out);

/// Run trials with random-uniform settings and z-test both marginals across
/// remote settings; writes nonsignaling.txt. Returns kExitContradictory when
/// signaling is detected.
int cmd_nonsignaling(const config::ExperimentConfig& cfg, double z_threshold,
                     std::ostream& out);

/// Full argv-level entry point used by the binary and by tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bellchain::cli
