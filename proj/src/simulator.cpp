#include "skidkit/simulator.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#include "skidkit/error.hpp"
#include "skidkit/ingest.hpp"
#include "skidkit/numfmt.hpp"

namespace skidkit {

namespace {

// Box-Muller transform on top of SplitMix64. std::normal_distribution is
// implementation-defined, which would break cross-platform golden files.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_{seed} {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log stays finite.
        const double u1 = 1.0 - rng_.uniform01();
        const double u2 = rng_.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

void require_spec(const SimulationSpec& s) {
    const bool ok =
        std::isfinite(s.mu_true) && s.mu_true > 0.0 && s.mu_true <= 1.5 &&
        std::isfinite(s.g) && s.g > 0.0 && std::isfinite(s.v0) && s.v0 > 0.0 &&
        s.t_idle >= 0.0 && s.t_rise >= 0.0 && s.noise_sigma.accel >= 0.0 &&
        s.noise_sigma.phone >= 0.0 && s.pixel_sigma >= 0.0 && s.scale > 0.0 &&
        s.rates.accel > 0.0 && s.rates.phone > 0.0 && s.rates.video > 0.0 &&
        s.abs_ripple_amp >= 0.0;
    if (!ok) {
        throw Error(errc::invalid_spec,
                    "simulation parameters out of range (need 0 < mu <= 1.5, "
                    "v0 > 0, nonnegative durations/noise, positive rates)");
    }
    if (s.abs_ripple_amp > 0.0) {
        if (!(s.abs_ripple_hz > 0.0)) {
            throw Error(errc::invalid_spec,
                        "ABS ripple needs a positive frequency");
        }
        if (s.abs_ripple_amp >= s.mu_true * s.g) {
            throw Error(errc::invalid_spec,
                        "ABS ripple amplitude must stay below the plateau "
                        "deceleration");
        }
    }
}

// Piecewise-analytic ground truth: idle / linear rise / rippled plateau /
// at rest. All three device channels sample these closed forms, so truth
// values carry no integration error.
struct GroundTruth {
    double t1 = 0.0;   // idle end = rise start
    double t2 = 0.0;   // plateau onset (SZ start)
    double t3 = 0.0;   // stop time (SZ end)
    double a_plateau = 0.0;
    double v_p = 0.0;  // speed at plateau onset
    double amp = 0.0;
    double omega = 0.0;
    double v0 = 0.0;
    double t_rise = 0.0;
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;

    double accel_at(double t) const {
        if (t < t1) return 0.0;
        if (t < t2) return a_plateau * (t - t1) / t_rise;
        if (t < t3) {
            return a_plateau + (amp > 0.0
                                    ? amp * std::sin(omega * (t - t2))
                                    : 0.0);
        }
        return 0.0;
    }

    double speed_at(double t) const {
        if (t < t1) return v0;
        if (t < t2) {
            const double u = t - t1;
            return v0 - a_plateau * u * u / (2.0 * t_rise);
        }
        if (t < t3) {
            const double tau = t - t2;
            double v = v_p - a_plateau * tau;
            if (amp > 0.0) {
                v -= amp / omega * (1.0 - std::cos(omega * tau));
            }
            return v;
        }
        return 0.0;
    }

    double position_at(double t) const {
        if (t < t1) return v0 * t;
        if (t < t2) {
            const double u = t - t1;
            return x1 + v0 * u - a_plateau * u * u * u / (6.0 * t_rise);
        }
        if (t < t3) {
            const double tau = t - t2;
            double x = x2 + v_p * tau - 0.5 * a_plateau * tau * tau;
            if (amp > 0.0) {
                x -= amp / omega * (tau - std::sin(omega * tau) / omega);
            }
            return x;
        }
        return x3;
    }
};

GroundTruth solve_truth(const SimulationSpec& s) {
    GroundTruth g;
    g.v0 = s.v0;
    g.t_rise = s.t_rise;
    g.a_plateau = s.mu_true * s.g;
    g.amp = s.abs_ripple_amp;
    g.omega = 2.0 * std::numbers::pi * s.abs_ripple_hz;
    g.t1 = s.t_idle;
    g.t2 = s.t_idle + s.t_rise;
    g.v_p = s.v0 - 0.5 * g.a_plateau * s.t_rise;
    if (!(g.v_p > 0.0)) {
        throw Error(errc::invalid_spec,
                    "vehicle would stop during the rise; raise v0 or shorten "
                    "t_rise");
    }
    g.x1 = s.v0 * g.t1;
    g.x2 = g.x1 + s.v0 * s.t_rise -
           g.a_plateau * s.t_rise * s.t_rise / 6.0;

    // Stop time: v(tau) is strictly decreasing on the plateau, so bisect;
    // without ripple the root is closed-form.
    double tau_stop = g.v_p / g.a_plateau;
    if (g.amp > 0.0) {
        double lo = 0.0, hi = tau_stop;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double v = g.v_p - g.a_plateau * mid -
                             g.amp / g.omega * (1.0 - std::cos(g.omega * mid));
            (v > 0.0 ? lo : hi) = mid;
        }
        tau_stop = 0.5 * (lo + hi);
    }
    g.t3 = g.t2 + tau_stop;
    double d_sz = g.v_p * tau_stop - 0.5 * g.a_plateau * tau_stop * tau_stop;
    if (g.amp > 0.0) {
        d_sz -= g.amp / g.omega *
                (tau_stop - std::sin(g.omega * tau_stop) / g.omega);
    }
    g.x3 = g.x2 + d_sz;
    return g;
}

}  // namespace

SimulationResult simulate(const SimulationSpec& spec) {
    require_spec(spec);
    const GroundTruth truth = solve_truth(spec);
    const double t_end = truth.t3 + 0.5;

    // One independent child generator per channel (and one bias draw) so
    // changing one channel's sample count never disturbs the others.
    SplitMix64 root{spec.seed};
    const std::uint64_t accel_seed = root.next();
    const std::uint64_t phone_seed = root.next();
    const std::uint64_t video_seed = root.next();
    const double phone_bias = root.uniform01() - 0.5;  // U[-0.5, 0.5) m/s^2

    SimulationResult out;
    out.truth.mu_true = spec.mu_true;
    out.truth.sz_start_s = truth.t2;
    out.truth.sz_end_s = truth.t3;
    out.truth.v_sz_ms = truth.v_p;
    out.truth.stop_distance_m = truth.x3 - truth.x2;
    out.truth.seed = spec.seed;
    out.truth.phone_bias = phone_bias;

    {
        GaussianStream noise(accel_seed);
        DecelTrace& tr = out.accel;
        tr.device = DeviceKind::ReferenceAccelerometer;
        tr.sample_rate = spec.rates.accel;
        const auto n = static_cast<std::size_t>(
            std::floor(t_end * spec.rates.accel)) + 1;
        tr.samples.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / spec.rates.accel;
            tr.samples.push_back(truth.accel_at(t) +
                                 spec.noise_sigma.accel * noise.next());
        }
    }
    {
        GaussianStream noise(phone_seed);
        DecelTrace& tr = out.phone;
        tr.device = DeviceKind::Smartphone;
        tr.sample_rate = spec.rates.phone;
        const auto n = static_cast<std::size_t>(
            std::floor(t_end * spec.rates.phone)) + 1;
        tr.samples.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / spec.rates.phone;
            tr.samples.push_back(phone_bias - truth.accel_at(t) +
                                 spec.noise_sigma.phone * noise.next());
        }
    }
    {
        GaussianStream noise(video_seed);
        PositionTrace& tr = out.video;
        tr.frame_rate = spec.rates.video;
        tr.scale = spec.scale;
        const auto n = static_cast<std::size_t>(
            std::floor(t_end * spec.rates.video)) + 1;
        tr.positions.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / spec.rates.video;
            const double px = std::round(truth.position_at(t) / spec.scale +
                                         spec.pixel_sigma * noise.next());
            tr.positions.push_back(px * spec.scale);
        }
    }
    return out;
}

std::vector<std::string> write_dataset(const SimulationSpec& spec, int n,
                                       const std::string& dir) {
    if (n < 1) {
        throw Error(errc::invalid_spec,
                    "need at least 1 test, got " + std::to_string(n));
    }
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Error(errc::io_error,
                    "cannot create '" + dir + "': " + ec.message());
    }

    auto open = [&](const std::string& path) {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw Error(errc::io_error, "cannot write '" + path + "'");
        }
        return f;
    };

    SplitMix64 root{spec.seed};
    std::vector<std::string> written;
    for (int k = 1; k <= n; ++k) {
        SimulationSpec test = spec;
        test.seed = root.next();
        const SimulationResult sim = simulate(test);

        std::string stem = "test";
        if (k < 10) stem += '0';
        stem += std::to_string(k);
        const std::string base = (fs::path(dir) / stem).string();

        {
            auto f = open(base + "_accel.csv");
            write_accel_csv(sim.accel, f);
            written.push_back(base + "_accel.csv");
        }
        {
            auto f = open(base + "_phone.csv");
            write_phone_csv(sim.phone, 'x', f);
            written.push_back(base + "_phone.csv");
        }
        {
            auto f = open(base + "_tracker.csv");
            f << "# fps: " << format_general(sim.video.frame_rate) << "\n";
            f << "# unit: px\n";
            f << "# scale_m_per_px: " << format_general(sim.video.scale)
              << "\n";
            f << "frame,x\n";
            for (std::size_t i = 0; i < sim.video.positions.size(); ++i) {
                f << i << ','
                  << static_cast<long long>(
                         std::llround(sim.video.positions[i] / sim.video.scale))
                  << '\n';
            }
            written.push_back(base + "_tracker.csv");
        }
        {
            nlohmann::json j;
            j["mu_true"] = sim.truth.mu_true;
            j["sz_start_s"] = sim.truth.sz_start_s;
            j["sz_end_s"] = sim.truth.sz_end_s;
            j["v_sz_ms"] = sim.truth.v_sz_ms;
            j["stop_distance_m"] = sim.truth.stop_distance_m;
            j["seed"] = sim.truth.seed;
            auto f = open(base + "_truth.json");
            f << j.dump(2) << '\n';
            written.push_back(base + "_truth.json");
        }
    }
    return written;
}

}  // namespace skidkit
