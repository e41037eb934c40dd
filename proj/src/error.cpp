#include "skidkit/error.hpp"

namespace skidkit {

const char* errc_name(errc code) {
    switch (code) {
        case errc::malformed_header: return "MalformedHeader";
        case errc::non_monotonic_time: return "NonMonotonicTime";
        case errc::non_finite_value: return "NonFiniteValue";
        case errc::bias_window_too_long: return "BiasWindowTooLong";
        case errc::missing_scale: return "MissingScale";
        case errc::window_too_large: return "WindowTooLarge";
        case errc::degenerate_fit: return "DegenerateFit";
        case errc::empty_input: return "EmptyInput";
        case errc::no_braking_event: return "NoBrakingEvent";
        case errc::plateau_not_reached: return "PlateauNotReached";
        case errc::domain_error: return "DomainError";
        case errc::too_few_samples: return "TooFewSamples";
        case errc::too_few_groups: return "TooFewGroups";
        case errc::zero_variance: return "ZeroVariance";
        case errc::degenerate_x: return "DegenerateX";
        case errc::invalid_spec: return "InvalidSpec";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace skidkit
