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

#include "bellchain/cli.hpp"

#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "bellchain/analysis.hpp"
#include "bellchain/csv.hpp"
#include "bellchain/errors.hpp"

namespace bellchain::cli {

namespace fs = std::filesystem;
using csvio::format_double;
using csvio::format_u64;

namespace {

std::string fmt(double x)
{
    return format_double(x);
}

fs::path ensure_out_dir(const std::string& out_dir)
{
    const fs::path dir(out_dir);
    if (!dir.empty()) fs::create_directories(dir);
    return dir;
}

void write_counts_csv(const fs::path& path, const montecarlo::CountsTable& counts)
{
    csvio::CsvWriter csv(path,
                         {"alice_setting", "bob_setting", "n_pp", "n_pm", "n_mp", "n_mm"});
    for (int j = 0; j < counts.n_alice(); ++j) {
        for (int k = 0; k < counts.n_bob(); ++k) {
            const auto& c = counts.at(j, k);
            csv.row({std::to_string(j), std::to_string(k), format_u64(c.pp), format_u64(c.pm),
                     format_u64(c.mp), format_u64(c.mm)});
        }
    }
}

std::string describe_model(const config::ExperimentConfig& cfg)
{
    std::string s(config::to_string(cfg.model));
    switch (cfg.model) {
    case config::ModelKind::Quantum:
        s += " (V=" + fmt(cfg.visibility * (1.0 - cfg.noise_fraction)) + ")";
        break;
    case config::ModelKind::SuarezScarani:
        s += " (V=" + fmt(cfg.visibility * (1.0 - cfg.noise_fraction)) + ", " +
             (cfg.local_strategy == models::LocalStrategy::Product ? "product"
                                                                   : "shared_randomness") +
             ")";
        break;
    case config::ModelKind::SignalingToy:
        s += " (delta=" + fmt(cfg.delta) + ")";
        break;
    case config::ModelKind::LocalDeterministic: break;
    }
    return s;
}

} // namespace

int cmd_timing(const config::ExperimentConfig& cfg, std::ostream& out)
{
    if (!cfg.geometry) {
        throw config_error("the timing command requires a \"geometry\" config block");
    }
    spacetime::TimingDiagnostics d;
    try {
        d = spacetime::classify_timing_detailed(*cfg.geometry);
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("config key \"geometry\": ") + e.what());
    }

    const auto& g = *cfg.geometry;
    out << "alice event: t=" << fmt(g.alice_event.t) << " x=" << fmt(g.alice_event.x) << "\n";
    out << "bob event:   t=" << fmt(g.bob_event.t) << " x=" << fmt(g.bob_event.x) << "\n";
    out << "frame of Alice's beam-splitter (beta=" << fmt(g.beta_A.beta())
        << "): t_alice=" << fmt(d.alice_time_in_frame_A)
        << " t_bob=" << fmt(d.bob_time_in_frame_A) << "\n";
    out << "frame of Bob's beam-splitter (beta=" << fmt(g.beta_B.beta())
        << "): t_alice=" << fmt(d.alice_time_in_frame_B)
        << " t_bob=" << fmt(d.bob_time_in_frame_B) << "\n";
    out << "timing class: " << spacetime::to_string(d.timing.kind());
    if (d.alice_tie || d.bob_tie) out << " (simultaneity tie)";
    out << "\n";
    return kExitOk;
}

int cmd_simulate(const config::ExperimentConfig& cfg, std::ostream& out)
{
    const auto timing = config::resolve_timing(cfg);
    const auto model = config::make_model(cfg);
    const chainedbell::ChainedConfig chain(cfg.N, cfg.theta, cfg.visibility);
    const auto settings = chainedbell::equipartition_settings(chain, cfg.interferometer);

    const auto counts = montecarlo::run_trials(*model, settings, timing, cfg.trials, cfg.seed,
                                               cfg.setting_choice, cfg.threads);
    const auto report = montecarlo::estimate_I(counts, chain);
    const auto closed = chainedbell::closed_form_I(chain);

    const auto dir = ensure_out_dir(cfg.out_dir);
    write_counts_csv(dir / "counts.csv", counts);
    {
        csvio::CsvWriter csv(dir / "inequality.csv", {"N", "I_hat", "std_err"});
        csv.row({std::to_string(report.N), fmt(report.value), fmt(report.std_error)});
    }

    out << "model: " << describe_model(cfg) << "\n";
    out << "timing: " << spacetime::to_string(timing.kind()) << "\n";
    out << "N=" << cfg.N << " theta=" << fmt(cfg.theta) << " trials=" << cfg.trials
        << " seed=" << cfg.seed << "\n";
    out << "I_hat = " << fmt(report.value) << " +/- " << fmt(report.std_error)
        << " (quantum closed form " << fmt(closed.value) << ")\n";
    out << "violation: " << (report.is_violation ? "yes (I < 1)" : "no (I >= 1)") << "\n";
    out << "wrote " << (dir / "counts.csv").string() << "\n";
    out << "wrote " << (dir / "inequality.csv").string() << "\n";
    return kExitOk;
}

int cmd_scan_phase(const config::ExperimentConfig& cfg, std::ostream& out)
{
    if (cfg.scan_points < 8) {
        throw config_error("scan-phase needs at least 8 grid points, got " +
                           std::to_string(cfg.scan_points));
    }
    const auto timing = config::resolve_timing(cfg);
    const auto model = config::make_model(cfg);

    std::vector<double> phases;
    phases.reserve(std::size_t(cfg.scan_points));
    for (int i = 0; i < cfg.scan_points; ++i) {
        phases.push_back(2.0 * std::numbers::pi * double(i) / double(cfg.scan_points));
    }

    const auto scan =
        montecarlo::scan_phase(*model, phases, cfg.trials, cfg.seed, timing, cfg.threads);
    const auto visibility = montecarlo::fit_visibility(scan);

    const auto dir = ensure_out_dir(cfg.out_dir);
    {
        csvio::CsvWriter csv(dir / "phase_scan.csv", {"phi", "p_equal", "std_err", "n"});
        for (const auto& pt : scan) {
            csv.row({fmt(pt.phi), fmt(pt.p_equal), fmt(pt.std_error), format_u64(pt.n)});
        }
    }

    out << "model: " << describe_model(cfg) << "\n";
    out << "points=" << cfg.scan_points << " trials/point=" << cfg.trials
        << " seed=" << cfg.seed << "\n";
    out << "V_hat = " << fmt(visibility.value) << " +/- " << fmt(visibility.std_error) << "\n";
    out << "wrote " << (dir / "phase_scan.csv").string() << "\n";
    return kExitOk;
}

int cmd_figure3(const std::vector<double>& visibilities, int n_max,
                const std::string& out_dir, std::ostream& out)
{
    if (visibilities.empty()) {
        throw config_error("figure3 needs at least one --visibility value");
    }
    for (const double v : visibilities) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw config_error("figure3 visibility must lie in [0, 1], got " + fmt(v));
        }
    }
    if (n_max < 2) {
        throw config_error("figure3 requires --n-max >= 2");
    }

    const auto dir = ensure_out_dir(out_dir);
    csvio::CsvWriter minima_csv(dir / "figure3_minima.csv",
                                {"V", "N_star", "I_min", "monotone"});
    out << "V,N_star,I_min,monotone\n";
    for (const double v : visibilities) {
        const fs::path curve_path = dir / ("figure3_V" + fmt(v) + ".csv");
        csvio::CsvWriter curve(curve_path, {"N", "I(N,pi)"});
        for (int n = 2; n <= n_max; ++n) {
            const auto report =
                chainedbell::closed_form_I(chainedbell::ChainedConfig(n, std::numbers::pi, v));
            curve.row({std::to_string(n), fmt(report.value)});
        }
        const auto minimum = chainedbell::minimize_I_over_N(v, std::numbers::pi, n_max);
        const std::string monotone = minimum.monotone ? "true" : "false";
        minima_csv.row(
            {fmt(v), std::to_string(minimum.n_star), fmt(minimum.i_min), monotone});
        out << fmt(v) << "," << minimum.n_star << "," << fmt(minimum.i_min) << ","
            << monotone << "\n";
    }
    return kExitOk;
}

int cmd_check_extension(double claimed_distance, double visibility, double theta, int n_max,
                        const std::string& csv_path, std::ostream& out)
{
    analysis::ExtensionClaim claim;
    claim.claimed_distance = claimed_distance;
    claim.visibility = visibility;
    claim.theta = theta;
    claim.n_max = n_max;

    analysis::Verdict verdict;
    try {
        verdict = analysis::check_extension(claim);
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }

    out << "claim: D=" << fmt(claimed_distance) << " V=" << fmt(visibility)
        << " theta=" << fmt(theta) << " N_max=" << n_max << "\n";
    out << "minimum: I(" << verdict.n_star << ") = " << fmt(verdict.i_min) << "\n";
    out << "bound: D <= " << fmt(verdict.bound) << "\n";
    if (verdict.contradictory) {
        out << "verdict: CONTRADICTORY (bound " << fmt(verdict.bound) << " < claimed "
            << fmt(claimed_distance) << ")\n";
    } else {
        out << "verdict: consistent (claimed " << fmt(claimed_distance) << " <= bound "
            << fmt(verdict.bound) << ")\n";
    }

    if (!csv_path.empty()) {
        csvio::CsvWriter csv(csv_path,
                             {"claimed_D", "V", "N_star", "I_min", "bound", "contradictory"});
        csv.row({fmt(claimed_distance), fmt(visibility), std::to_string(verdict.n_star),
                 fmt(verdict.i_min), fmt(verdict.bound),
                 verdict.contradictory ? "true" : "false"});
        out << "wrote " << csv_path << "\n";
    }
    return verdict.contradictory ? kExitContradictory : kExitOk;
}

int cmd_nonsignaling(const config::ExperimentConfig& cfg, double z_threshold,
                     std::ostream& out)
{
    if (cfg.setting_choice.mode != montecarlo::SettingChoice::Mode::RandomUniform) {
        throw config_error("the nonsignaling command requires setting_choice random-uniform");
    }
    const auto timing = config::resolve_timing(cfg);
    const auto model = config::make_model(cfg);
    const chainedbell::ChainedConfig chain(cfg.N, cfg.theta, cfg.visibility);
    const auto settings = chainedbell::equipartition_settings(chain, cfg.interferometer);

    const auto counts = montecarlo::run_trials(*model, settings, timing, cfg.trials, cfg.seed,
                                               cfg.setting_choice, cfg.threads);
    const auto report = montecarlo::nonsignaling_test(counts, z_threshold);

    const auto render = [&](std::ostream& o) {
        o << "non-signaling test: model=" << describe_model(cfg)
          << " timing=" << spacetime::to_string(timing.kind()) << " N=" << cfg.N
          << " trials=" << cfg.trials << " seed=" << cfg.seed << "\n";
        o << "z_threshold=" << fmt(report.z_threshold) << "\n";
        for (const auto& c : report.comparisons) {
            o << "side " << c.side << " local=" << c.local_setting << " remote "
              << c.remote_first << " vs " << c.remote_second << ": p=" << fmt(c.p_first)
              << " vs " << fmt(c.p_second) << " z=" << fmt(c.z) << "\n";
        }
        o << "max |z| = " << fmt(report.max_abs_z) << "\n";
        o << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
    };

    const auto dir = ensure_out_dir(cfg.out_dir);
    {
        std::ofstream txt(dir / "nonsignaling.txt", std::ios::binary);
        if (!txt) {
            throw std::runtime_error("cannot open " + (dir / "nonsignaling.txt").string());
        }
        render(txt);
    }
    render(out);
    out << "wrote " << (dir / "nonsignaling.txt").string() << "\n";
    return report.pass ? kExitOk : kExitContradictory;
}

namespace {

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> out_dir;
    std::optional<unsigned> threads;
};

config::ExperimentConfig load_with_overrides(const GlobalOptions& g)
{
    if (g.config_path.empty()) {
        throw config_error("this command requires --config FILE");
    }
    auto cfg = config::load_config_file(g.config_path);
    if (g.seed) cfg.seed = *g.seed;
    if (g.trials) cfg.trials = *g.trials;
    if (g.out_dir) cfg.out_dir = *g.out_dir;
    if (g.threads) cfg.threads = *g.threads;
    return cfg;
}

void add_global_options(CLI::App* cmd, GlobalOptions& g, bool needs_config)
{
    auto* config_opt =
        cmd->add_option("--config", g.config_path, "JSON experiment config file");
    if (needs_config) config_opt->required();
    cmd->add_option("--seed", g.seed, "override the config seed");
    cmd->add_option("--trials", g.trials, "override the config trial count");
    cmd->add_option("--out-dir", g.out_dir, "override the config output directory");
    cmd->add_option("--threads", g.threads, "override the worker count (0 = hardware)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"chained Bell experiment simulator and analysis toolkit", "bellchain"};
    app.require_subcommand(1);

    GlobalOptions g;

    auto* timing_cmd =
        app.add_subcommand("timing", "classify the timing configuration of a geometry");
    add_global_options(timing_cmd, g, true);

    auto* simulate_cmd =
        app.add_subcommand("simulate", "run trials and estimate the chain value");
    add_global_options(simulate_cmd, g, true);

    auto* scan_cmd =
        app.add_subcommand("scan-phase", "simulate a fringe scan and fit the visibility");
    add_global_options(scan_cmd, g, true);
    std::optional<int> scan_points;
    scan_cmd->add_option("--points", scan_points, "grid points over [0, 2pi)");

    auto* figure3_cmd =
        app.add_subcommand("figure3", "chain-value curves and minima over N");
    std::vector<double> visibilities;
    int n_max = 1000;
    std::string fig_out_dir = ".";
    figure3_cmd->add_option("--visibility", visibilities, "visibility value (repeatable)")
        ->required();
    figure3_cmd->add_option("--n-max", n_max, "largest chain size scanned");
    figure3_cmd->add_option("--out-dir", fig_out_dir, "output directory");

    auto* check_cmd =
        app.add_subcommand("check-extension", "verdict on a claimed variational distance");
    double claimed_distance = 0.0;
    double check_visibility = 0.0;
    double check_theta = std::numbers::pi;
    int check_n_max = 1000;
    std::string check_csv;
    check_cmd->add_option("--distance", claimed_distance, "claimed N-independent distance")
        ->required();
    check_cmd->add_option("--visibility", check_visibility, "visibility of the claim")
        ->required();
    check_cmd->add_option("--theta", check_theta, "total phase budget (default pi)");
    check_cmd->add_option("--n-max", check_n_max, "largest chain size scanned");
    check_cmd->add_option("--csv", check_csv, "also write the verdict as a CSV row");

    auto* nonsignaling_cmd =
        app.add_subcommand("nonsignaling", "z-test marginals across remote settings");
    add_global_options(nonsignaling_cmd, g, true);
    double z_threshold = 4.0;
    nonsignaling_cmd->add_option("--z-threshold", z_threshold, "failure threshold on |z|");

    std::vector<std::string> cli_args(args.rbegin(), args.rend()); // CLI11 wants reversed
    try {
        app.parse(cli_args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (timing_cmd->parsed()) {
            return cmd_timing(load_with_overrides(g), out);
        }
        if (simulate_cmd->parsed()) {
            return cmd_simulate(load_with_overrides(g), out);
        }
        if (scan_cmd->parsed()) {
            auto cfg = load_with_overrides(g);
            if (scan_points) cfg.scan_points = *scan_points;
            return cmd_scan_phase(cfg, out);
        }
        if (figure3_cmd->parsed()) {
            return cmd_figure3(visibilities, n_max, fig_out_dir, out);
        }
        if (check_cmd->parsed()) {
            return cmd_check_extension(claimed_distance, check_visibility, check_theta,
                                       check_n_max, check_csv, out);
        }
        if (nonsignaling_cmd->parsed()) {
            return cmd_nonsignaling(load_with_overrides(g), z_threshold, out);
        }
        err << "error: no subcommand selected\n";
        return kExitConfig;
    } catch (const config_error& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const insufficient_data_error& e) {
        err << "insufficient data: " << e.what() << "\n";
        return kExitInsufficient;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace bellchain::cli
