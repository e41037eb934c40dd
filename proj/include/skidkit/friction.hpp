#pragma once

#include <optional>
#include <utility>

#include "skidkit/types.hpp"

namespace skidkit {

// Friction coefficient from the SZ expected deceleration, mu = a/g.
struct FrictionEstimate {
    double mu = 0.0;
    double a_sz = 0.0;  // m/s^2
    double g = kStandardGravity;
    // Deceleration confidence bounds divided by g, when available.
    std::optional<std::pair<double, double>> ci_mu;

    friend bool operator==(const FrictionEstimate&, const FrictionEstimate&) = default;
};

// Speed at SZ onset from energy balance over the sliding distance.
struct SpeedEstimate {
    double v_sz = 0.0;  // m/s
    double d_sz = 0.0;  // m
    double mu = 0.0;

    double v_kmh() const { return 3.6 * v_sz; }

    friend bool operator==(const SpeedEstimate&, const SpeedEstimate&) = default;
};

FrictionEstimate friction_coefficient(
    double a_sz, double g,
    std::optional<std::pair<double, double>> a_ci = std::nullopt);

// v_sz = sqrt(2 * mu * g * d_sz).
SpeedEstimate speed_at_sz(double mu, double d_sz, double g);

// First-order uncertainty of that speed: dv = v/2 * (dmu/mu + dd/d_sz).
double speed_propagated_error(double mu, double d_sz, double dmu, double dd,
                              double g);

}  // namespace skidkit
