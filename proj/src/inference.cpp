#include "skidkit/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "skidkit/distributions.hpp"
#include "skidkit/error.hpp"

namespace skidkit {

namespace {

double mean_of(const std::vector<double>& values) {
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

// Unbiased sample variance about a precomputed mean.
double variance_about(const std::vector<double>& values, double mean) {
    double ss = 0.0;
    for (double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(values.size() - 1);
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(errc::domain_error, "alpha must lie in (0,1)");
    }
}

void require_group_sizes(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2) {
        throw Error(errc::too_few_groups, "need at least 2 groups, got " +
                                              std::to_string(groups.size()));
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i].size() < 2) {
            throw Error(errc::too_few_samples,
                        "group " + std::to_string(i) + " has " +
                            std::to_string(groups[i].size()) +
                            " values, need at least 2");
        }
    }
}

}  // namespace

TestSummary summarize(const std::vector<double>& values) {
    if (values.size() < 2) {
        throw Error(errc::too_few_samples, "summarize needs at least 2 values, got " +
                                               std::to_string(values.size()));
    }
    TestSummary s;
    s.count = values.size();
    s.mean = mean_of(values);
    s.variance = variance_about(values, s.mean);
    s.std_error = std::sqrt(s.variance / static_cast<double>(s.count));
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    s.min = *mn;
    s.max = *mx;
    s.cl95 = t_quantile(0.975, static_cast<double>(s.count - 1)) * s.std_error;
    return s;
}

PrecisionResult information_quantity(const std::vector<double>& values) {
    if (values.size() < 2) {
        throw Error(errc::too_few_samples,
                    "information_quantity needs at least 2 values");
    }
    PrecisionResult r;
    r.n = values.size();
    r.s2 = variance_about(values, mean_of(values));
    if (r.s2 <= 0.0) {
        throw Error(errc::zero_variance,
                    "information quantity undefined for constant values");
    }
    r.iq = static_cast<double>(r.n) / r.s2;
    return r;
}

PrecisionResult information_quantity(
    const std::vector<std::vector<double>>& groups) {
    require_group_sizes(groups);
    std::size_t n_total = 0;
    double ss = 0.0;
    for (const auto& g : groups) {
        const double m = mean_of(g);
        for (double v : g) {
            const double d = v - m;
            ss += d * d;
        }
        n_total += g.size();
    }
    PrecisionResult r;
    r.n = n_total;
    r.s2 = ss / static_cast<double>(n_total - groups.size());
    if (r.s2 <= 0.0) {
        throw Error(errc::zero_variance,
                    "information quantity undefined for constant groups");
    }
    r.iq = static_cast<double>(r.n) / r.s2;
    return r;
}

long long estimation_number(double iq_ref, double iq_method) {
    if (!(iq_ref > 0.0) || !(iq_method > 0.0) || !std::isfinite(iq_ref) ||
        !std::isfinite(iq_method)) {
        throw Error(errc::domain_error,
                    "estimation_number requires positive finite IQ values");
    }
    const double ratio = iq_ref / iq_method;
    // Guard ceil() against ratios that are integers up to roundoff
    // (e.g. 3 + 4e-16 must give 3, not 4).
    const double snapped = std::floor(ratio);
    if (ratio - snapped <= 1e-9 * std::max(1.0, ratio)) {
        return static_cast<long long>(snapped);
    }
    return static_cast<long long>(std::ceil(ratio));
}

AnovaResult anova_oneway(const std::vector<std::vector<double>>& groups,
                         double alpha) {
    require_group_sizes(groups);
    require_alpha(alpha);

    std::size_t n_total = 0;
    double grand_sum = 0.0;
    for (const auto& g : groups) {
        grand_sum = std::accumulate(g.begin(), g.end(), grand_sum);
        n_total += g.size();
    }
    const double grand_mean = grand_sum / static_cast<double>(n_total);

    AnovaResult r;
    r.alpha = alpha;
    for (const auto& g : groups) {
        const double gm = mean_of(g);
        const double dg = gm - grand_mean;
        r.ss_between += static_cast<double>(g.size()) * dg * dg;
        for (double v : g) {
            const double d = v - gm;
            r.ss_within += d * d;
        }
    }
    r.ss_total = r.ss_between + r.ss_within;
    r.df_between = groups.size() - 1;
    r.df_within = n_total - groups.size();

    const double ms_between =
        r.ss_between / static_cast<double>(r.df_between);
    const double ms_within = r.ss_within / static_cast<double>(r.df_within);
    if (r.ss_between == 0.0) {
        r.f_value = 0.0;  // identical group means; avoids 0/0 when pooled too
    } else if (ms_within == 0.0) {
        r.f_value = std::numeric_limits<double>::infinity();
    } else {
        r.f_value = ms_between / ms_within;
    }
    r.f_critical = f_critical(alpha, static_cast<double>(r.df_between),
                              static_cast<double>(r.df_within));
    r.reject_h0 = r.f_value > r.f_critical;
    return r;
}

RegressionResult linear_regression(
    const std::vector<std::pair<double, double>>& points,
    RegressionModel model) {
    const std::size_t n = points.size();
    const std::size_t min_n = model == RegressionModel::WithIntercept ? 3 : 2;
    if (n < min_n) {
        throw Error(errc::too_few_samples,
                    "regression needs at least " + std::to_string(min_n) +
                        " points, got " + std::to_string(n));
    }

    RegressionResult r;
    r.model = model;
    r.n = n;

    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
    }
    const double nx = static_cast<double>(n);

    if (model == RegressionModel::WithIntercept) {
        const double mx = sx / nx;
        const double my = sy / nx;
        double sxx = 0.0, sxy = 0.0;
        for (const auto& [x, y] : points) {
            sxx += (x - mx) * (x - mx);
            sxy += (x - mx) * (y - my);
        }
        if (sxx <= 0.0) {
            throw Error(errc::degenerate_x,
                        "all x values identical; slope undefined");
        }
        r.beta1 = sxy / sxx;
        r.beta0 = my - r.beta1 * mx;

        double ss_res = 0.0, ss_tot = 0.0;
        for (const auto& [x, y] : points) {
            const double e = y - (r.beta0 + r.beta1 * x);
            ss_res += e * e;
            ss_tot += (y - my) * (y - my);
        }
        r.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
        r.rse = std::sqrt(ss_res / static_cast<double>(n - 2));
    } else {
        double sxx = 0.0, sxy = 0.0;
        for (const auto& [x, y] : points) {
            sxx += x * x;
            sxy += x * y;
        }
        if (sxx <= 0.0) {
            throw Error(errc::degenerate_x,
                        "all x values zero; slope undefined");
        }
        r.beta0 = 0.0;
        r.beta1 = sxy / sxx;

        double ss_res = 0.0, ss_tot = 0.0;
        for (const auto& [x, y] : points) {
            const double e = y - r.beta1 * x;
            ss_res += e * e;
            ss_tot += y * y;  // uncentered: no intercept to center about
        }
        r.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
        r.rse = std::sqrt(ss_res / static_cast<double>(n - 1));
    }
    return r;
}

CiResult ci_two_sample(const std::vector<double>& ref,
                       const std::vector<double>& alt, double alpha) {
    if (ref.size() < 2 || alt.size() < 2) {
        throw Error(errc::too_few_samples,
                    "ci_two_sample needs at least 2 values per sample");
    }
    require_alpha(alpha);

    const double n1 = static_cast<double>(ref.size());
    const double n2 = static_cast<double>(alt.size());
    const double m1 = mean_of(ref);
    const double m2 = mean_of(alt);
    const double v1 = variance_about(ref, m1);
    const double v2 = variance_about(alt, m2);

    const double pooled = ((n1 - 1.0) * v1 + (n2 - 1.0) * v2) / (n1 + n2 - 2.0);
    const double half = t_quantile(1.0 - alpha / 2.0, n1 + n2 - 2.0) *
                        std::sqrt(pooled) * std::sqrt(1.0 / n1 + 1.0 / n2);

    CiResult r;
    r.alpha = alpha;
    r.diff_mean = m1 - m2;
    r.low = r.diff_mean - half;
    r.high = r.diff_mean + half;
    r.eps_abs = std::fabs(r.diff_mean);
    r.eps_rel = r.eps_abs / m1;
    return r;
}

}  // namespace skidkit
