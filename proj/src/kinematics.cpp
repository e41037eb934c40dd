#include "skidkit/kinematics.hpp"

#include <cmath>
#include <string>

#include "skidkit/error.hpp"

namespace skidkit {

namespace {

void require_window(const DiffConfig& cfg, std::size_t n) {
    if (cfg.window < 5 || cfg.window % 2 == 0) {
        throw Error(errc::domain_error,
                    "differentiation window must be odd and >= 5, got " +
                        std::to_string(cfg.window));
    }
    if (cfg.window > n) {
        throw Error(errc::window_too_large,
                    "window " + std::to_string(cfg.window) +
                        " exceeds trace length " + std::to_string(n));
    }
}

// Least-squares parabola x(t) = c0 + c1 t + c2 t^2 over a centered window.
// With t symmetric about 0 the odd moments vanish and c2 decouples:
//   c2 = (n*Sxt2 - St2*Sx) / (n*St4 - St2^2)
double parabola_c2(const std::vector<double>& x, std::size_t center,
                   std::size_t half, double dt) {
    const double n = static_cast<double>(2 * half + 1);
    double st2 = 0.0, st4 = 0.0, sx = 0.0, sxt2 = 0.0;
    for (std::size_t j = center - half; j <= center + half; ++j) {
        const double t =
            (static_cast<double>(j) - static_cast<double>(center)) * dt;
        const double t2 = t * t;
        st2 += t2;
        st4 += t2 * t2;
        sx += x[j];
        sxt2 += x[j] * t2;
    }
    const double det = n * st4 - st2 * st2;
    if (!(det > 0.0)) {
        throw Error(errc::degenerate_fit,
                    "singular normal equations in parabola fit");
    }
    return (n * sxt2 - st2 * sx) / det;
}

}  // namespace

DecelTrace accel_from_positions(const PositionTrace& p, const DiffConfig& cfg) {
    if (p.positions.empty()) {
        throw Error(errc::empty_input, "position trace has no samples");
    }
    if (!(p.frame_rate > 0.0)) {
        throw Error(errc::domain_error, "frame rate must be positive");
    }

    DecelTrace out;
    out.device = DeviceKind::VideoTracker;
    out.sample_rate = p.frame_rate;
    out.meta = p.meta;
    const double dt = 1.0 / p.frame_rate;

    if (cfg.method == DiffMethod::QuadraticFit) {
        require_window(cfg, p.positions.size());
        const std::size_t half = (cfg.window - 1) / 2;
        out.t0 = static_cast<double>(half) * dt;
        for (std::size_t i = half; i + half < p.positions.size(); ++i) {
            out.samples.push_back(-2.0 * parabola_c2(p.positions, i, half, dt));
        }
    } else {
        if (p.positions.size() < 3) {
            throw Error(errc::window_too_large,
                        "central difference needs at least 3 samples, got " +
                            std::to_string(p.positions.size()));
        }
        out.t0 = dt;
        for (std::size_t i = 1; i + 1 < p.positions.size(); ++i) {
            const double xdd = (p.positions[i + 1] - 2.0 * p.positions[i] +
                                p.positions[i - 1]) /
                               (dt * dt);
            out.samples.push_back(-xdd);
        }
    }
    return out;
}

MotionSeries speed_distance_from_trace(const DecelTrace& d, double v0) {
    if (d.samples.empty()) {
        throw Error(errc::empty_input, "trace has no samples");
    }
    if (!(d.sample_rate > 0.0)) {
        throw Error(errc::domain_error, "sample rate must be positive");
    }
    if (!(v0 >= 0.0) || !std::isfinite(v0)) {
        throw Error(errc::domain_error, "v0 must be >= 0");
    }

    MotionSeries m;
    m.speeds.reserve(d.samples.size());
    m.distances.reserve(d.samples.size());
    const double dt = 1.0 / d.sample_rate;

    double v = v0;
    double s = 0.0;
    bool stopped = (v == 0.0);
    m.speeds.push_back(v);
    m.distances.push_back(s);
    for (std::size_t i = 1; i < d.samples.size(); ++i) {
        if (!stopped) {
            const double step = 0.5 * (d.samples[i - 1] + d.samples[i]) * dt;
            const double v_next = v - step;
            if (v_next <= 0.0) {
                // Speed crosses zero inside this step; v is linear across
                // the step, so the remaining distance is a triangle.
                const double frac = v_next < 0.0 ? v / (v - v_next) : 1.0;
                s += 0.5 * v * frac * dt;
                v = 0.0;
                stopped = true;
            } else {
                s += 0.5 * (v + v_next) * dt;
                v = v_next;
            }
        }
        m.speeds.push_back(v);
        m.distances.push_back(s);
    }
    return m;
}

}  // namespace skidkit
