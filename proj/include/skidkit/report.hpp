#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skidkit/friction.hpp"
#include "skidkit/inference.hpp"
#include "skidkit/segmentation.hpp"
#include "skidkit/types.hpp"

namespace skidkit {

struct PerTestRow {
    std::string test_id;
    std::string device;  // accel | phone | tracker
    TestSummary summary;

    friend bool operator==(const PerTestRow&, const PerTestRow&) = default;
};

struct PerMethodRow {
    std::string device;
    TestSummary summary;  // over the per-test SZ means
    FrictionEstimate friction;

    friend bool operator==(const PerMethodRow&, const PerMethodRow&) = default;
};

struct SpeedRow {
    std::string test_id;
    std::string device;
    SpeedEstimate estimate;
    std::string basis;  // how v was obtained, e.g. "energy"

    friend bool operator==(const SpeedRow&, const SpeedRow&) = default;
};

// Everything computed for one device pair: reference method vs alternative.
struct ComparisonResult {
    std::string device_ref;
    std::string device_alt;
    AnovaResult anova;
    RegressionResult reg_with_intercept;
    RegressionResult reg_through_origin;
    CiResult ci;
    PrecisionResult precision_ref;
    PrecisionResult precision_alt;  // carries the estimation number
    // Paired per-test means (ref, alt) behind the regressions.
    std::vector<std::pair<double, double>> points;

    friend bool operator==(const ComparisonResult&,
                           const ComparisonResult&) = default;
};

struct ExperimentReport {
    std::string experiment_id;
    double g = kStandardGravity;
    double alpha = 0.05;
    std::vector<PerTestRow> per_test;
    std::vector<PerMethodRow> per_method;
    std::vector<ComparisonResult> comparisons;
    std::vector<SpeedRow> speeds;

    friend bool operator==(const ExperimentReport&,
                           const ExperimentReport&) = default;
};

enum class TableFormat {
    Csv,
    Json,
    Both,
};

// Writes one CSV per table (4-decimal cells, '#' schema comment) and the
// lossless report.json. Returns the written paths.
std::vector<std::string> emit_tables(const ExperimentReport& r,
                                     const std::string& dir,
                                     TableFormat format = TableFormat::Both);

// Deterministic self-contained SVG plots: the trace with IZ/SZ shading and
// the plateau line, the paired-means regression scatter (omitted when there
// are no comparisons), and the per-method friction bars.
std::vector<std::string> emit_plots(const DecelTrace& trace,
                                    const Segmentation& seg,
                                    const ExperimentReport& r,
                                    const std::string& dir);

// The plots that need no trace (regression scatter + friction bars), for
// re-rendering from a stored report.json.
std::vector<std::string> emit_summary_plots(const ExperimentReport& r,
                                            const std::string& dir);

// Lossless JSON round-trip (report_from_json(report_to_json(r)) == r).
std::string report_to_json(const ExperimentReport& r);
ExperimentReport report_from_json(const std::string& text);

}  // namespace skidkit
