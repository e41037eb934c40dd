#include "skidkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <utility>

#include "skidkit/error.hpp"
#include "skidkit/friction.hpp"
#include "skidkit/inference.hpp"
#include "skidkit/ingest.hpp"
#include "skidkit/kinematics.hpp"
#include "skidkit/numfmt.hpp"

namespace skidkit {

namespace {

namespace fs = std::filesystem;

// One fully processed input file.
struct TestRecord {
    std::string test_id;
    std::string device;
    DecelTrace trace;
    Segmentation seg;
    double a_sz = 0.0;    // per-test SZ mean deceleration
    TestSummary summary;  // over the smoothed SZ samples
    double d_sz = 0.0;    // sliding distance across the SZ
};

std::string infer_format(const std::string& path) {
    const std::string stem = fs::path(path).stem().string();
    for (const char* token : {"accel", "phone", "tracker"}) {
        if (stem.find(token) != std::string::npos) return token;
    }
    return "";
}

std::string test_id_of(const std::string& path, const std::string& format) {
    std::string stem = fs::path(path).stem().string();
    const std::string suffix = "_" + format;
    if (stem.size() > suffix.size() &&
        stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) ==
            0) {
        stem.erase(stem.size() - suffix.size());
    }
    return stem;
}

// Expand dataset directories into their CSV files, keeping explicit files
// as given. Directory listings are sorted for reproducible reports.
std::vector<InputSpec> expand_inputs(const std::vector<InputSpec>& inputs) {
    std::vector<InputSpec> out;
    for (const auto& in : inputs) {
        if (fs::is_directory(in.path)) {
            std::vector<std::string> names;
            for (const auto& e : fs::directory_iterator(in.path)) {
                if (e.path().extension() == ".csv") {
                    names.push_back(e.path().string());
                }
            }
            std::sort(names.begin(), names.end());
            for (auto& n : names) {
                out.push_back({std::move(n), in.format, in.device});
            }
        } else {
            out.push_back(in);
        }
    }
    return out;
}

std::size_t resolve_ma_window(const std::string& text, double rate) {
    if (text.empty()) return 0;  // automatic
    double value = 0.0;
    if (text.back() == 's') {
        if (!parse_double(text.substr(0, text.size() - 1), value) ||
            !(value > 0.0)) {
            throw Error(errc::domain_error,
                        "--ma-window seconds must be positive, got '" + text +
                            "'");
        }
        const auto w = static_cast<std::size_t>(std::lround(value * rate));
        return std::max<std::size_t>(w, 1);
    }
    if (!parse_double(text, value) || !(value >= 1.0) ||
        value != std::floor(value)) {
        throw Error(errc::domain_error,
                    "--ma-window must be a positive sample count or '<sec>s', "
                    "got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
}

// Speed at SZ onset and distance across the SZ, integrating backward from
// the stop (v = 0 at sz.end). This needs no initial speed, so it works
// identically for all three devices.
std::pair<double, double> sz_backward_motion(const DecelTrace& d,
                                             const Segmentation& seg) {
    const double dt = 1.0 / d.sample_rate;
    double v = 0.0, dist = 0.0;
    for (std::size_t j = seg.sz.end - 1; j > seg.sz.start; --j) {
        const double v_prev = v + 0.5 * (d.samples[j] + d.samples[j - 1]) * dt;
        dist += 0.5 * (v + v_prev) * dt;
        v = v_prev;
    }
    return {v, dist};
}

TestRecord process_input(const InputSpec& in, const RunConfig& cfg,
                         std::vector<std::string>& warnings) {
    std::string format = in.format.empty() ? infer_format(in.path) : in.format;
    if (format.empty()) {
        throw Error(errc::domain_error,
                    "cannot infer format of '" + in.path +
                        "'; pass --format accel|phone|tracker");
    }
    if (format != "accel" && format != "phone" && format != "tracker") {
        throw Error(errc::domain_error,
                    "unknown format '" + format + "'");
    }

    std::ifstream file(in.path, std::ios::binary);
    if (!file) {
        throw Error(errc::io_error, "cannot open '" + in.path + "'");
    }

    WarningSink local;
    TestRecord rec;
    try {
        if (format == "accel") {
            rec.trace = parse_accel_csv(file, cfg.g, &local);
        } else if (format == "phone") {
            rec.trace = parse_phone_csv(file, cfg.axis, cfg.bias_window,
                                        &local);
        } else {
            const PositionTrace p = parse_tracker_csv(file, &local);
            DiffConfig diff;
            diff.window = cfg.diff_window;
            rec.trace = accel_from_positions(p, diff);
        }

        rec.device = in.device.empty() ? format : in.device;
        device_from_token(rec.device);  // validate the token
        rec.test_id = test_id_of(in.path, format);

        const std::size_t ma =
            resolve_ma_window(cfg.ma_window, rec.trace.sample_rate);
        if (cfg.sz_start_s && cfg.sz_end_s) {
            rec.seg = manual_zones(rec.trace, *cfg.sz_start_s, *cfg.sz_end_s);
        } else if (cfg.sz_start_s || cfg.sz_end_s) {
            throw Error(errc::domain_error,
                        "--sz-start and --sz-end must be given together");
        } else {
            SzConfig sz;
            sz.ma_window = ma;
            rec.seg = detect_zones(rec.trace, sz);
        }

        rec.a_sz = sz_expected_value(rec.trace, rec.seg, ma);
        const std::vector<double> sz_slice(
            rec.trace.samples.begin() + rec.seg.sz.start,
            rec.trace.samples.begin() + rec.seg.sz.end);
        const std::size_t w =
            ma != 0 ? ma
                    : std::max<std::size_t>(
                          static_cast<std::size_t>(
                              std::lround(0.25 * rec.trace.sample_rate)),
                          3);
        rec.summary = summarize(moving_average(sz_slice, w));
        const auto [v_sz, d_sz] = sz_backward_motion(rec.trace, rec.seg);
        (void)v_sz;
        rec.d_sz = d_sz;
    } catch (const Error& e) {
        // Re-raise with the file named. what() already carries the error
        // name and line suffix, so peel the name off before re-wrapping.
        std::string msg = e.what();
        const std::string prefix = std::string(errc_name(e.code())) + ": ";
        if (msg.compare(0, prefix.size(), prefix) == 0) {
            msg.erase(0, prefix.size());
        }
        throw Error(e.code(), in.path + ": " + msg);
    }

    for (auto& w : local) {
        warnings.push_back(in.path + ": " + w);
    }
    return rec;
}

void require_config(const RunConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
        throw Error(errc::domain_error, "--alpha must lie in (0,1)");
    }
    if (!(cfg.g > 0.0)) {
        throw Error(errc::domain_error, "--g must be positive");
    }
    if (cfg.axis != 'x' && cfg.axis != 'y' && cfg.axis != 'z') {
        throw Error(errc::domain_error, "--axis must be x, y or z");
    }
    if (cfg.out_format != "csv" && cfg.out_format != "json" &&
        cfg.out_format != "both") {
        throw Error(errc::domain_error,
                    "--out-format must be csv, json or both");
    }
    if (cfg.reference != "accel" && cfg.reference != "phone" &&
        cfg.reference != "tracker") {
        throw Error(errc::domain_error,
                    "--reference must be accel, phone or tracker");
    }
    if (cfg.sz_start_s && cfg.sz_end_s && !(*cfg.sz_start_s < *cfg.sz_end_s)) {
        throw Error(errc::domain_error, "--sz-start must be before --sz-end");
    }
}

}  // namespace

AnalysisOutput run_analysis(const RunConfig& cfg) {
    require_config(cfg);
    const std::vector<InputSpec> inputs = expand_inputs(cfg.inputs);
    if (inputs.empty()) {
        throw Error(errc::empty_input, "no input files given");
    }

    AnalysisOutput out;
    std::vector<TestRecord> records;
    records.reserve(inputs.size());
    for (const auto& in : inputs) {
        records.push_back(process_input(in, cfg, out.warnings));
    }

    ExperimentReport& rep = out.report;
    rep.experiment_id = cfg.experiment_id;
    rep.g = cfg.g;
    rep.alpha = cfg.alpha;

    for (const auto& rec : records) {
        rep.per_test.push_back({rec.test_id, rec.device, rec.summary});
        const FrictionEstimate mu = friction_coefficient(rec.a_sz, cfg.g);
        SpeedRow speed;
        speed.test_id = rec.test_id;
        speed.device = rec.device;
        speed.estimate = speed_at_sz(mu.mu, rec.d_sz, cfg.g);
        speed.basis = "energy";
        rep.speeds.push_back(std::move(speed));
    }

    // Group per device; std::map keeps device order stable across runs.
    std::map<std::string, std::vector<const TestRecord*>> by_device;
    for (const auto& rec : records) {
        by_device[rec.device].push_back(&rec);
    }

    for (const auto& [device, recs] : by_device) {
        if (recs.size() < 2) continue;  // no spread to summarize
        std::vector<double> means;
        means.reserve(recs.size());
        for (const auto* r : recs) means.push_back(r->a_sz);
        PerMethodRow row;
        row.device = device;
        row.summary = summarize(means);
        row.friction = friction_coefficient(
            row.summary.mean, cfg.g,
            std::make_pair(row.summary.mean - row.summary.cl95,
                           row.summary.mean + row.summary.cl95));
        rep.per_method.push_back(std::move(row));
    }

    const auto ref_it = by_device.find(cfg.reference);
    if (ref_it != by_device.end() && ref_it->second.size() >= 2) {
        std::vector<double> ref_means;
        std::map<std::string, double> ref_by_test;
        for (const auto* r : ref_it->second) {
            ref_means.push_back(r->a_sz);
            ref_by_test[r->test_id] = r->a_sz;
        }
        for (const auto& [device, recs] : by_device) {
            if (device == cfg.reference || recs.size() < 2) continue;
            std::vector<double> alt_means;
            for (const auto* r : recs) alt_means.push_back(r->a_sz);

            ComparisonResult cmp;
            cmp.device_ref = cfg.reference;
            cmp.device_alt = device;
            cmp.anova = anova_oneway({ref_means, alt_means}, cfg.alpha);
            cmp.ci = ci_two_sample(ref_means, alt_means, cfg.alpha);
            cmp.precision_ref = information_quantity(ref_means);
            cmp.precision_alt = information_quantity(alt_means);
            cmp.precision_alt.estimation_number = estimation_number(
                cmp.precision_ref.iq, cmp.precision_alt.iq);

            // Pair tests by id for the regression scatter.
            for (const auto* r : recs) {
                auto it = ref_by_test.find(r->test_id);
                if (it != ref_by_test.end()) {
                    cmp.points.emplace_back(it->second, r->a_sz);
                }
            }
            if (cmp.points.size() >= 3) {
                cmp.reg_with_intercept = linear_regression(
                    cmp.points, RegressionModel::WithIntercept);
            }
            if (cmp.points.size() >= 2) {
                cmp.reg_through_origin = linear_regression(
                    cmp.points, RegressionModel::ThroughOrigin);
            }
            rep.comparisons.push_back(std::move(cmp));
        }
    }

    const TestRecord* plot_rec = &records.front();
    for (const auto& rec : records) {
        if (rec.device == cfg.reference) {
            plot_rec = &rec;
            break;
        }
    }
    out.plot_trace = plot_rec->trace;
    out.plot_seg = plot_rec->seg;
    return out;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        AnalysisOutput result = run_analysis(cfg);
        for (const auto& w : result.warnings) {
            err << "warning: " << w << '\n';
        }
        TableFormat format = TableFormat::Both;
        if (cfg.out_format == "csv") format = TableFormat::Csv;
        if (cfg.out_format == "json") format = TableFormat::Json;
        auto files = emit_tables(result.report, cfg.out_dir, format);
        auto plots = emit_plots(result.plot_trace, result.plot_seg,
                                result.report, cfg.out_dir);
        files.insert(files.end(), plots.begin(), plots.end());
        for (const auto& f : files) {
            out << f << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

int cmd_simulate(const SimulateConfig& cfg, std::ostream& out,
                 std::ostream& err) {
    try {
        const auto files = write_dataset(cfg.spec, cfg.tests, cfg.out_dir);
        for (const auto& f : files) {
            out << f << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

int cmd_report(const ReportConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ifstream file(cfg.json_path, std::ios::binary);
        if (!file) {
            throw Error(errc::io_error, "cannot open '" + cfg.json_path + "'");
        }
        std::string text((std::istreambuf_iterator<char>(file)),
                         std::istreambuf_iterator<char>());
        const ExperimentReport rep = report_from_json(text);

        TableFormat format = TableFormat::Both;
        if (cfg.out_format == "csv") format = TableFormat::Csv;
        if (cfg.out_format == "json") format = TableFormat::Json;
        if (cfg.out_format != "csv" && cfg.out_format != "json" &&
            cfg.out_format != "both") {
            throw Error(errc::domain_error,
                        "--out-format must be csv, json or both");
        }
        auto files = emit_tables(rep, cfg.out_dir, format);
        auto plots = emit_summary_plots(rep, cfg.out_dir);
        files.insert(files.end(), plots.begin(), plots.end());
        for (const auto& f : files) {
            out << f << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace skidkit
