#include "skidkit/friction.hpp"

#include <cmath>

#include "skidkit/error.hpp"

namespace skidkit {

namespace {

void require_nonneg_finite(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw Error(errc::domain_error,
                    std::string(what) + " must be finite and >= 0");
    }
}

void require_g(double g) {
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw Error(errc::domain_error, "g must be positive");
    }
}

}  // namespace

FrictionEstimate friction_coefficient(
    double a_sz, double g, std::optional<std::pair<double, double>> a_ci) {
    require_nonneg_finite(a_sz, "a_sz");
    require_g(g);
    FrictionEstimate e;
    e.a_sz = a_sz;
    e.g = g;
    e.mu = a_sz / g;
    if (a_ci) {
        e.ci_mu = std::make_pair(a_ci->first / g, a_ci->second / g);
    }
    return e;
}

SpeedEstimate speed_at_sz(double mu, double d_sz, double g) {
    require_nonneg_finite(mu, "mu");
    require_nonneg_finite(d_sz, "d_sz");
    require_g(g);
    SpeedEstimate e;
    e.mu = mu;
    e.d_sz = d_sz;
    e.v_sz = std::sqrt(2.0 * mu * g * d_sz);
    return e;
}

double speed_propagated_error(double mu, double d_sz, double dmu, double dd,
                              double g) {
    require_nonneg_finite(mu, "mu");
    require_nonneg_finite(d_sz, "d_sz");
    require_nonneg_finite(dmu, "dmu");
    require_nonneg_finite(dd, "dd");
    require_g(g);
    if (dmu == 0.0 && dd == 0.0) return 0.0;
    if (mu == 0.0 || d_sz == 0.0) {
        throw Error(errc::domain_error,
                    "cannot propagate uncertainty through zero mu or d_sz");
    }
    const double v = std::sqrt(2.0 * mu * g * d_sz);
    return 0.5 * v * (dmu / mu + dd / d_sz);
}

}  // namespace skidkit
