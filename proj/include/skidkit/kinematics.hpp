#pragma once

#include <cstddef>
#include <vector>

#include "skidkit/types.hpp"

namespace skidkit {

enum class DiffMethod {
    QuadraticFit,
    CentralDifference,
};

// Local differentiation settings for video position traces. The window is
// the number of samples per local fit; it must be odd so fits are centered.
struct DiffConfig {
    std::size_t window = 9;
    DiffMethod method = DiffMethod::QuadraticFit;
};

// Deceleration from tracked positions. For QuadraticFit each output sample
// comes from a least-squares parabola over the centered window and equals
// -2*c2 (braking positive when positions increase); CentralDifference uses
// the 3-point second difference. Half-window edge samples are dropped and
// t0 advanced to match; sample_rate equals the frame rate.
DecelTrace accel_from_positions(const PositionTrace& p, const DiffConfig& cfg);

// Speed and cumulative distance at each sample time.
struct MotionSeries {
    std::vector<double> speeds;     // m/s, same length as the trace
    std::vector<double> distances;  // m, distances[0] == 0
};

// Trapezoidal integration of v' = -a from v(t0) = v0. Speed is clamped at
// zero (the vehicle stays stopped) and distance freezes there; the clamp
// step integrates up to the exact sub-sample zero crossing.
MotionSeries speed_distance_from_trace(const DecelTrace& d, double v0);

}  // namespace skidkit
