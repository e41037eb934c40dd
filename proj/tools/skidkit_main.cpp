// skidkit — braking-test analysis toolkit.
//
//   skidkit simulate [--tests N --mu F --v0-kmh F --seed N ...]
//   skidkit analyze  <files-or-dirs>... [--reference accel ...]
//   skidkit report   <report.json> [--out DIR]
//
// Exit codes: 0 ok, 2 usage or data error, 3 internal failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skidkit/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Forensic braking-test analysis toolkit"};
    app.require_subcommand(1);

    // --- analyze ---------------------------------------------------------
    skidkit::RunConfig run;
    std::vector<std::string> input_paths;
    std::string format;
    std::string device;
    std::string axis = "x";

    CLI::App* analyze =
        app.add_subcommand("analyze", "Analyze deceleration logs");
    analyze->add_option("inputs", input_paths, "CSV files or dataset directories")
        ->required();
    analyze->add_option("--format", format, "Force input format")
        ->check(CLI::IsMember({"accel", "phone", "tracker"}));
    analyze->add_option("--device", device,
                        "Device label (default: the format token)");
    analyze->add_option("--reference", run.reference,
                        "Reference device for comparisons")
                            ->capture_default_str();
    analyze->add_option("--axis", axis, "Smartphone axis to use")
        ->check(CLI::IsMember({"x", "y", "z"}));
    analyze->add_option("--g", run.g, "Gravitational acceleration, m/s^2")
        ->capture_default_str();
    analyze->add_option("--alpha", run.alpha, "Significance level")
        ->capture_default_str();
    analyze->add_option("--ma-window", run.ma_window,
                        "Moving-average window: samples (25) or seconds "
                        "(0.25s); default 1/4 s");
    analyze->add_option("--sz-start", run.sz_start_s,
                        "Manual stabilization-zone start, s");
    analyze->add_option("--sz-end", run.sz_end_s,
                        "Manual stabilization-zone end, s");
    analyze->add_option("--diff-window", run.diff_window,
                        "Differentiation window for tracker input (odd)")
                            ->capture_default_str();
    analyze->add_option("--bias-window", run.bias_window,
                        "Smartphone bias-estimation window, s")
                            ->capture_default_str();
    analyze->add_option("--out", run.out_dir, "Output directory")
        ->capture_default_str();
    analyze->add_option("--out-format", run.out_format, "Table format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    analyze->add_option("--id", run.experiment_id, "Experiment id")
        ->capture_default_str();

    // --- simulate --------------------------------------------------------
    skidkit::SimulateConfig sim;
    double v0_kmh = 45.0;

    CLI::App* simulate =
        app.add_subcommand("simulate", "Generate a synthetic dataset");
    simulate->add_option("--tests", sim.tests, "Number of tests")
        ->capture_default_str();
    simulate->add_option("--mu", sim.spec.mu_true, "True friction coefficient")
        ->capture_default_str();
    simulate->add_option("--v0-kmh", v0_kmh, "Initial speed, km/h")
        ->capture_default_str();
    simulate->add_option("--seed", sim.spec.seed, "Random seed")
        ->capture_default_str();
    simulate->add_option("--g", sim.spec.g, "Gravitational acceleration, m/s^2")
        ->capture_default_str();
    simulate->add_option("--t-idle", sim.spec.t_idle,
                         "Constant-speed lead-in, s")->capture_default_str();
    simulate->add_option("--t-rise", sim.spec.t_rise,
                         "Deceleration ramp duration, s")
                             ->capture_default_str();
    simulate->add_option("--ripple-amp", sim.spec.abs_ripple_amp,
                         "ABS ripple amplitude, m/s^2")->capture_default_str();
    simulate->add_option("--ripple-hz", sim.spec.abs_ripple_hz,
                         "ABS ripple frequency, Hz")->capture_default_str();
    simulate->add_option("--noise-accel", sim.spec.noise_sigma.accel,
                         "Reference accelerometer noise sigma, m/s^2")
                             ->capture_default_str();
    simulate->add_option("--noise-phone", sim.spec.noise_sigma.phone,
                         "Smartphone noise sigma, m/s^2")
                             ->capture_default_str();
    simulate->add_option("--pixel-sigma", sim.spec.pixel_sigma,
                         "Video tracking noise sigma, px")
                             ->capture_default_str();
    simulate->add_option("--scale", sim.spec.scale, "Video scale, m/px")
        ->capture_default_str();
    simulate->add_option("--rate-accel", sim.spec.rates.accel,
                         "Reference accelerometer rate, Hz")
                             ->capture_default_str();
    simulate->add_option("--rate-phone", sim.spec.rates.phone,
                         "Smartphone rate, Hz")->capture_default_str();
    simulate->add_option("--fps", sim.spec.rates.video, "Video frame rate")
        ->capture_default_str();
    simulate->add_option("--out", sim.out_dir, "Output directory")
        ->capture_default_str();

    // --- report ----------------------------------------------------------
    skidkit::ReportConfig rep;

    CLI::App* report =
        app.add_subcommand("report", "Re-render tables and plots from report.json");
    report->add_option("json", rep.json_path, "Path to report.json")->required();
    report->add_option("--out", rep.out_dir, "Output directory")
        ->capture_default_str();
    report->add_option("--out-format", rep.out_format, "Table format")
        ->check(CLI::IsMember({"csv", "json", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0, bad usage exits 2
    }

    if (*analyze) {
        for (const auto& path : input_paths) {
            run.inputs.push_back({path, format, device});
        }
        run.axis = axis[0];
        return skidkit::cmd_analyze(run, std::cout, std::cerr);
    }
    if (*simulate) {
        sim.spec.v0 = v0_kmh / 3.6;
        return skidkit::cmd_simulate(sim, std::cout, std::cerr);
    }
    return skidkit::cmd_report(rep, std::cout, std::cerr);
}
