#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skidkit/types.hpp"

namespace skidkit {

// Non-fatal observations made while parsing (e.g. a sample rate far from
// the device's nominal one). Callers pass nullptr to discard them.
using WarningSink = std::vector<std::string>;

// `accel` dialect: header `t_s,decel[,speed_kmh,dist_m]`, optional
// comments `# unit: g|ms2` (default ms2) and `# rate: <Hz>`.
// Values declared in g are converted using the supplied g.
DecelTrace parse_accel_csv(std::istream& in, double g = kStandardGravity,
                           WarningSink* warnings = nullptr);

// `phone` dialect: header `t_s,ax_ms2,ay_ms2,az_ms2`, optional `# rate:`.
// Selects one axis, removes constant sensor bias estimated over the
// leading bias_window seconds, and normalizes sign so braking is positive.
DecelTrace parse_phone_csv(std::istream& in, char axis = 'x',
                           double bias_window = 1.5,
                           WarningSink* warnings = nullptr);

// `tracker` dialect: header `frame,x`, comments `# fps: <n>`,
// `# unit: m|px` and `# scale_m_per_px: <v>` (required iff unit=px).
PositionTrace parse_tracker_csv(std::istream& in,
                                WarningSink* warnings = nullptr);

// Canonical serializers for the same dialects (metric units, 9 significant
// digits). write_phone_csv places the trace on the requested axis and
// zeroes the other two.
void write_accel_csv(const DecelTrace& trace, std::ostream& out);
void write_phone_csv(const DecelTrace& trace, char axis, std::ostream& out);
void write_tracker_csv(const PositionTrace& trace, std::ostream& out);

}  // namespace skidkit
