#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace skidkit {

// Descriptive summary of one set of deceleration values. All spreads use
// the unbiased (n-1) sample variance; cl95 is the half-width of the 95%
// confidence interval of the mean, t_{n-1,0.975} * std_error.
struct TestSummary {
    double mean = 0.0;
    double variance = 0.0;
    double std_error = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
    double cl95 = 0.0;

    friend bool operator==(const TestSummary&, const TestSummary&) = default;
};

struct AnovaResult {
    double ss_total = 0.0;
    double ss_between = 0.0;
    double ss_within = 0.0;
    std::size_t df_between = 0;
    std::size_t df_within = 0;
    double f_value = 0.0;
    double f_critical = 0.0;
    double alpha = 0.0;
    bool reject_h0 = false;

    friend bool operator==(const AnovaResult&, const AnovaResult&) = default;
};

enum class RegressionModel {
    WithIntercept,
    ThroughOrigin,
};

struct RegressionResult {
    RegressionModel model = RegressionModel::WithIntercept;
    double beta0 = 0.0;  // 0 for ThroughOrigin
    double beta1 = 0.0;
    double r2 = 0.0;   // centered for WithIntercept, uncentered otherwise
    double rse = 0.0;  // sqrt(SS_res / (n - p))
    std::size_t n = 0;

    friend bool operator==(const RegressionResult&, const RegressionResult&) = default;
};

// Pooled two-sample t confidence interval for the difference of means,
// plus the absolute/relative error measures derived from it.
struct CiResult {
    double diff_mean = 0.0;
    double low = 0.0;
    double high = 0.0;
    double eps_abs = 0.0;
    double eps_rel = 0.0;  // eps_abs / reference mean
    double alpha = 0.0;

    friend bool operator==(const CiResult&, const CiResult&) = default;
};

// Information quantity n/S^2; estimation_number is filled in only when the
// result has been compared against a reference method.
struct PrecisionResult {
    double iq = 0.0;
    std::size_t n = 0;
    double s2 = 0.0;
    std::optional<long long> estimation_number;

    friend bool operator==(const PrecisionResult&, const PrecisionResult&) = default;
};

TestSummary summarize(const std::vector<double>& values);

PrecisionResult information_quantity(const std::vector<double>& values);
// Pooled form: S^2 is the pooled unbiased variance across groups and
// n the total count.
PrecisionResult information_quantity(
    const std::vector<std::vector<double>>& groups);

// Number of tests the compared method needs to reach the reference
// precision: ceil(iq_ref / iq_method).
long long estimation_number(double iq_ref, double iq_method);

AnovaResult anova_oneway(const std::vector<std::vector<double>>& groups,
                         double alpha);

RegressionResult linear_regression(
    const std::vector<std::pair<double, double>>& points,
    RegressionModel model);

CiResult ci_two_sample(const std::vector<double>& ref,
                       const std::vector<double>& alt, double alpha);

}  // namespace skidkit
