#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skidkit/report.hpp"
#include "skidkit/segmentation.hpp"
#include "skidkit/simulator.hpp"
#include "skidkit/types.hpp"

namespace skidkit {

// One input file for analysis. format/device may stay empty to be inferred
// from the file name (…_accel.csv, …_phone.csv, …_tracker.csv).
struct InputSpec {
    std::string path;
    std::string format;  // accel | phone | tracker
    std::string device;  // defaults to the format token
};

struct RunConfig {
    std::vector<InputSpec> inputs;  // files or dataset directories
    std::string reference = "accel";
    char axis = 'x';
    double g = kStandardGravity;
    double alpha = 0.05;
    // "" = automatic (1/4 s), "25" = samples, "0.25s" = seconds.
    std::string ma_window;
    std::optional<double> sz_start_s;
    std::optional<double> sz_end_s;
    std::size_t diff_window = 9;
    double bias_window = 1.5;
    std::string out_dir = "skidkit_out";
    std::string out_format = "both";  // csv | json | both
    std::string experiment_id = "exp";
};

// Full pipeline result, before any file is written.
struct AnalysisOutput {
    ExperimentReport report;
    // Trace behind the deceleration plot (the first reference-device
    // input, or the first input when the reference is absent).
    DecelTrace plot_trace;
    Segmentation plot_seg;
    std::vector<std::string> warnings;
};

AnalysisOutput run_analysis(const RunConfig& cfg);

struct SimulateConfig {
    SimulationSpec spec;
    int tests = 10;
    std::string out_dir = "skidkit_sim";
};

struct ReportConfig {
    std::string json_path;
    std::string out_dir = "skidkit_out";
    std::string out_format = "both";
};

// Subcommand drivers: run, write outputs, print a manifest to `out` and
// diagnostics to `err`. Return the process exit code (0 ok, 2 usage/data
// error, 3 internal failure).
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateConfig& cfg, std::ostream& out,
                 std::ostream& err);
int cmd_report(const ReportConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace skidkit
