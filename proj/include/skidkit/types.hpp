#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skidkit {

inline constexpr double kStandardGravity = 9.80665;  // m/s^2

enum class DeviceKind {
    ReferenceAccelerometer,
    Smartphone,
    VideoTracker,
};

// Serialized tokens: accel | phone | tracker
std::string device_token(DeviceKind device);
DeviceKind device_from_token(const std::string& token);

// A uniformly sampled deceleration time series. Sample i is at
// t0 + i / sample_rate; values are in m/s^2, braking positive.
struct DecelTrace {
    DeviceKind device = DeviceKind::ReferenceAccelerometer;
    double sample_rate = 0.0;  // Hz
    double t0 = 0.0;           // s, offset of first sample
    std::vector<double> samples;
    std::map<std::string, std::string> meta;

    std::size_t size() const { return samples.size(); }
    double time_at(std::size_t i) const {
        return t0 + static_cast<double>(i) / sample_rate;
    }
    double duration() const {
        return samples.empty() ? 0.0
                               : static_cast<double>(samples.size()) / sample_rate;
    }
};

// Longitudinal vehicle positions from video tracking, one per frame,
// already converted to meters. `scale` records the calibration used
// (1.0 when the source was metric).
struct PositionTrace {
    double frame_rate = 30.0;  // fps
    std::vector<double> positions;
    double scale = 1.0;  // meters per pixel of the source
    std::map<std::string, std::string> meta;

    std::size_t size() const { return positions.size(); }
};

}  // namespace skidkit
