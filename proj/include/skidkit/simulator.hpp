#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skidkit/types.hpp"

namespace skidkit {

// Per-device sample rates (Hz for the accelerometers, fps for video).
struct PerDeviceRates {
    double accel = 100.0;
    double phone = 30.0;
    double video = 30.0;
};

// Additive Gaussian noise per accelerometer channel, m/s^2. The video
// channel's noise lives in pixel space (see pixel_sigma).
struct PerDeviceNoise {
    double accel = 0.3;
    double phone = 0.3;
};

// A synthetic braking test: constant speed for t_idle, deceleration ramping
// linearly over t_rise, then a plateau at mu_true*g (optionally with a
// sinusoidal ABS ripple) until the vehicle stops, then ~0.5 s at rest.
struct SimulationSpec {
    double mu_true = 0.8;
    double g = kStandardGravity;
    double v0 = 12.5;  // m/s (45 km/h, the protocol's upper test speed)
    double t_idle = 1.5;
    double t_rise = 0.3;
    double abs_ripple_amp = 0.0;  // m/s^2
    double abs_ripple_hz = 12.0;
    PerDeviceNoise noise_sigma;
    double pixel_sigma = 0.5;  // px
    double scale = 0.02;       // m/px
    PerDeviceRates rates;
    std::uint64_t seed = 1;
};

// Ground truth of one simulated test. phone_bias is kept for in-process
// verification; the truth.json sidecar carries only the documented fields.
struct SimulationTruth {
    double mu_true = 0.0;
    double sz_start_s = 0.0;      // plateau onset
    double sz_end_s = 0.0;        // vehicle stop
    double v_sz_ms = 0.0;         // speed at plateau onset
    double stop_distance_m = 0.0; // distance covered inside the SZ
    std::uint64_t seed = 0;
    double phone_bias = 0.0;      // m/s^2
};

struct SimulationResult {
    DecelTrace accel;
    // Raw smartphone log: the chosen axis reads bias - a(t) + noise, as a
    // phone mounted backwards would record it. parse_phone_csv undoes that.
    DecelTrace phone;
    PositionTrace video;  // pixel-quantized positions, already in meters
    SimulationTruth truth;
};

SimulationResult simulate(const SimulationSpec& spec);

// Writes `testNN_{accel,phone,tracker}.csv` and `testNN_truth.json` for
// tests 1..n into dir (created if missing), deriving one child seed per
// test from spec.seed. Returns the written paths in order.
std::vector<std::string> write_dataset(const SimulationSpec& spec, int n,
                                       const std::string& dir);

// The seeded generator behind all simulator randomness (documented so the
// golden files are reproducible anywhere): splitmix64 over a 64-bit state.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

}  // namespace skidkit
