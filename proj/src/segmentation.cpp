#include "skidkit/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skidkit/error.hpp"
#include "skidkit/numfmt.hpp"

namespace skidkit {

namespace {

std::size_t auto_window(double sample_rate) {
    const auto w = static_cast<std::size_t>(std::lround(0.25 * sample_rate));
    return std::max<std::size_t>(w, 3);
}

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    std::nth_element(v.begin(), v.begin() + n / 2, v.end());
    double m = v[n / 2];
    if (n % 2 == 0) {
        m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + n / 2));
    }
    return m;
}

// Median of the top tail_frac share of the given values: first locate the
// (1 - tail_frac) order statistic, then take the median of everything at or
// above it. Robust against both the rise/fall flanks and noise spikes.
double plateau_estimate(const std::vector<double>& values, double tail_frac) {
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    const auto cut = static_cast<std::size_t>(
        std::floor((1.0 - tail_frac) * static_cast<double>(sorted.size() - 1)));
    const double threshold = sorted[cut];
    std::vector<double> top;
    for (double v : values) {
        if (v >= threshold) top.push_back(v);
    }
    return median_of(std::move(top));
}

void require_config(const SzConfig& cfg) {
    const bool fracs_ok =
        cfg.enter_frac > 0.0 && cfg.enter_frac < 1.0 && cfg.hold_frac > 0.0 &&
        cfg.hold_frac < 1.0 && cfg.stop_frac > 0.0 && cfg.stop_frac < 1.0 &&
        cfg.tail_frac > 0.0 && cfg.tail_frac < 1.0;
    if (!fracs_ok || !(cfg.enter_frac > cfg.hold_frac) ||
        !(cfg.hold_frac > cfg.stop_frac)) {
        throw Error(errc::domain_error,
                    "SzConfig fractions must lie in (0,1) with "
                    "enter > hold > stop");
    }
}

// Raw index under the center of smoothed sample j (window w).
std::size_t smoothed_center(std::size_t j, std::size_t w) {
    return j + (w - 1) / 2;
}

// First/last raw sample at or above `level` within `radius` of `around`.
// Returns `around` when nothing qualifies.
std::size_t refine_first(const std::vector<double>& raw, std::size_t around,
                         std::size_t radius, double level,
                         std::size_t hard_end) {
    const std::size_t lo = around > radius ? around - radius : 0;
    const std::size_t hi = std::min(around + radius, hard_end);
    for (std::size_t r = lo; r <= hi; ++r) {
        if (raw[r] >= level) return r;
    }
    return around;
}

std::size_t refine_last(const std::vector<double>& raw, std::size_t around,
                        std::size_t radius, double level,
                        std::size_t hard_end) {
    const std::size_t lo = around > radius ? around - radius : 0;
    const std::size_t hi = std::min(around + radius, hard_end);
    for (std::size_t r = hi + 1; r-- > lo;) {
        if (raw[r] >= level) return r;
    }
    return around;
}

}  // namespace

std::vector<double> moving_average(const std::vector<double>& x,
                                   std::size_t window) {
    if (x.empty()) {
        throw Error(errc::empty_input, "moving_average input is empty");
    }
    if (window < 1) {
        throw Error(errc::domain_error, "window must be >= 1");
    }
    if (window > x.size()) {
        throw Error(errc::window_too_large,
                    "window " + std::to_string(window) +
                        " exceeds series length " + std::to_string(x.size()));
    }
    std::vector<double> out;
    out.reserve(x.size() - window + 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i];
        if (i + 1 >= window) {
            out.push_back(acc / static_cast<double>(window));
            acc -= x[i + 1 - window];
        }
    }
    return out;
}

Segmentation detect_zones(const DecelTrace& d, const SzConfig& cfg) {
    require_config(cfg);
    if (d.samples.empty()) {
        throw Error(errc::empty_input, "trace has no samples");
    }
    if (!(d.sample_rate > 0.0)) {
        throw Error(errc::domain_error, "sample rate must be positive");
    }
    const std::size_t w =
        cfg.ma_window != 0 ? cfg.ma_window : auto_window(d.sample_rate);
    const std::vector<double> smooth = moving_average(d.samples, w);
    const std::size_t m = smooth.size();

    const double smax = *std::max_element(smooth.begin(), smooth.end());
    if (!(smax > 0.0)) {
        throw Error(errc::no_braking_event,
                    "trace never shows positive deceleration");
    }

    // Provisional plateau over the whole smoothed trace locates the stop;
    // the final estimate then uses only pre-stop values.
    const double provisional = plateau_estimate(smooth, cfg.tail_frac);
    std::size_t sz_end_s = m;  // last smoothed index still >= stop level
    while (sz_end_s-- > 0) {
        if (smooth[sz_end_s] >= cfg.stop_frac * provisional) break;
    }
    const std::vector<double> pre_stop(smooth.begin(),
                                       smooth.begin() + sz_end_s + 1);
    const double plateau = plateau_estimate(pre_stop, cfg.tail_frac);
    if (!(plateau > 0.0)) {
        throw Error(errc::no_braking_event,
                    "plateau estimate " + format_general(plateau) +
                        " is not positive");
    }

    // A braking event either rises well above the initial level or starts
    // on the plateau outright (pre-cropped logs).
    const bool starts_on_plateau = smooth.front() >= cfg.enter_frac * plateau;
    if (!(smax > 2.0 * smooth.front()) && !starts_on_plateau) {
        throw Error(errc::no_braking_event,
                    "smoothed maximum " + format_general(smax) +
                        " never exceeds twice the initial level " +
                        format_general(smooth.front()));
    }

    // SZ opens at the first smoothed sample that reaches enter_frac and
    // keeps the suffix at or above hold_frac until the terminal fall. The
    // fall itself (everything past the last hold-level sample) is excluded:
    // the smoothed stop always sweeps through the band between hold and
    // stop level, and that must not disqualify the plateau before it.
    std::size_t hold_end = sz_end_s;
    while (smooth[hold_end] < cfg.hold_frac * plateau) --hold_end;
    std::vector<double> suffix_min(hold_end + 1);
    double running = smooth[hold_end];
    for (std::size_t j = hold_end + 1; j-- > 0;) {
        running = std::min(running, smooth[j]);
        suffix_min[j] = running;
    }
    std::size_t sz_start_s = m;
    for (std::size_t j = 0; j <= hold_end; ++j) {
        if (smooth[j] >= cfg.enter_frac * plateau &&
            suffix_min[j] >= cfg.hold_frac * plateau) {
            sz_start_s = j;
            break;
        }
    }
    if (sz_start_s == m) {
        throw Error(errc::plateau_not_reached,
                    "no sample reaches " + format_general(cfg.enter_frac) +
                        " of the plateau and holds until the stop");
    }

    // Reject pseudo-plateaus (e.g. a ramp that never flattens): inside a
    // genuine SZ the median sits at the plateau.
    const double sz_median = median_of(std::vector<double>(
        smooth.begin() + sz_start_s, smooth.begin() + sz_end_s + 1));
    if (std::fabs(sz_median - plateau) > (1.0 - cfg.enter_frac) * plateau) {
        throw Error(errc::plateau_not_reached,
                    "candidate zone median " + format_general(sz_median) +
                        " is inconsistent with plateau " +
                        format_general(plateau));
    }

    // Map the smoothed hits back to raw indices. Smoothing delays edges by
    // about half a window, so anchor at window centers and snap to the raw
    // crossings nearby.
    const std::size_t n = d.samples.size();
    std::size_t sz_start_raw;
    if (sz_start_s == 0 && starts_on_plateau) {
        sz_start_raw = 0;
    } else {
        sz_start_raw = refine_first(d.samples, smoothed_center(sz_start_s, w),
                                    w, plateau, n - 1);
    }
    std::size_t sz_end_raw =
        refine_last(d.samples, smoothed_center(sz_end_s, w), w,
                    cfg.enter_frac * plateau, n - 1);
    if (sz_end_raw <= sz_start_raw) sz_end_raw = std::min(sz_start_raw + 1, n - 1);

    std::size_t iz_start_s = 0;
    while (iz_start_s < sz_start_s && smooth[iz_start_s] <= 0.05 * plateau) {
        ++iz_start_s;
    }
    std::size_t iz_start_raw =
        iz_start_s == 0 ? 0 : smoothed_center(iz_start_s, w);
    iz_start_raw = std::min(iz_start_raw, sz_start_raw);

    Segmentation seg;
    seg.iz = {iz_start_raw, sz_start_raw};
    seg.sz = {sz_start_raw, sz_end_raw + 1};
    seg.plateau_level = plateau;
    seg.auto_detected = true;
    return seg;
}

Segmentation manual_zones(const DecelTrace& d, double sz_start_s,
                          double sz_end_s) {
    if (d.samples.empty()) {
        throw Error(errc::empty_input, "trace has no samples");
    }
    if (!(d.sample_rate > 0.0)) {
        throw Error(errc::domain_error, "sample rate must be positive");
    }
    if (!(sz_start_s >= 0.0) || !(sz_end_s > sz_start_s)) {
        throw Error(errc::domain_error,
                    "need 0 <= sz-start < sz-end, got " +
                        format_general(sz_start_s) + " and " +
                        format_general(sz_end_s));
    }
    const double rate = d.sample_rate;
    const auto start =
        static_cast<std::size_t>(std::lround(sz_start_s * rate));
    auto end = static_cast<std::size_t>(std::lround(sz_end_s * rate)) + 1;
    end = std::min(end, d.samples.size());
    if (start >= d.samples.size() || end <= start + 1) {
        throw Error(errc::domain_error,
                    "SZ range lies outside the trace");
    }

    const double plateau = median_of(std::vector<double>(
        d.samples.begin() + start, d.samples.begin() + end));
    if (!(plateau > 0.0)) {
        throw Error(errc::domain_error,
                    "selected range holds no positive deceleration");
    }

    Segmentation seg;
    seg.iz = {0, start};
    seg.sz = {start, end};
    seg.plateau_level = plateau;
    seg.auto_detected = false;
    return seg;
}

double sz_expected_value(const DecelTrace& d, const Segmentation& seg,
                         std::size_t ma_window) {
    if (seg.sz.end > d.samples.size() || seg.sz.start >= seg.sz.end) {
        throw Error(errc::domain_error, "segmentation does not fit the trace");
    }
    const std::size_t w =
        ma_window != 0 ? ma_window : auto_window(d.sample_rate);
    const std::vector<double> sz(d.samples.begin() + seg.sz.start,
                                 d.samples.begin() + seg.sz.end);
    const std::vector<double> smooth = moving_average(sz, w);
    double sum = 0.0;
    for (double v : smooth) sum += v;
    return sum / static_cast<double>(smooth.size());
}

}  // namespace skidkit
