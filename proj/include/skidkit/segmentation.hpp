#pragma once

#include <cstddef>
#include <vector>

#include "skidkit/types.hpp"

namespace skidkit {

// Half-open index range into a raw trace.
struct IndexRange {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start; }
};

// Result of splitting a braking trace into the Increasing Zone (deceleration
// builds up) and the Stabilization Zone (deceleration fluctuates around the
// plateau until the vehicle stops). iz.end == sz.start always.
struct Segmentation {
    IndexRange iz;
    IndexRange sz;
    double plateau_level = 0.0;  // m/s^2
    bool auto_detected = true;   // false when the range was user-supplied
};

// Thresholds for automatic zone detection, all relative to the estimated
// plateau level so detection is independent of the absolute signal scale.
struct SzConfig {
    double enter_frac = 0.90;  // smoothed value that opens the SZ
    double hold_frac = 0.80;   // smoothed floor the SZ must keep until stop
    double stop_frac = 0.50;   // falling below this at the end = stop
    double tail_frac = 0.60;   // top quantile share used for the plateau
    // Smoothing window in samples; 0 picks 1/4 second at the trace rate
    // (never below 3 samples).
    std::size_t ma_window = 0;
};

// Trailing moving average: y_k = mean(x_k .. x_{k+window-1}), output length
// len(x) - window + 1.
std::vector<double> moving_average(const std::vector<double>& x,
                                   std::size_t window);

Segmentation detect_zones(const DecelTrace& d, const SzConfig& cfg = {});

// Segmentation from an explicit SZ time range (seconds relative to the
// trace start), for operators who prefer to pick the zone by eye.
Segmentation manual_zones(const DecelTrace& d, double sz_start_s,
                          double sz_end_s);

// Per-test deceleration: mean of the smoothed samples inside the SZ.
// ma_window = 0 means the same 1/4-second default as SzConfig.
double sz_expected_value(const DecelTrace& d, const Segmentation& seg,
                         std::size_t ma_window = 0);

}  // namespace skidkit
