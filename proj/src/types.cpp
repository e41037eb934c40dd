#include "skidkit/types.hpp"

#include "skidkit/error.hpp"

namespace skidkit {

std::string device_token(DeviceKind device) {
    switch (device) {
        case DeviceKind::ReferenceAccelerometer: return "accel";
        case DeviceKind::Smartphone: return "phone";
        case DeviceKind::VideoTracker: return "tracker";
    }
    throw Error(errc::domain_error, "invalid DeviceKind");
}

DeviceKind device_from_token(const std::string& token) {
    if (token == "accel") return DeviceKind::ReferenceAccelerometer;
    if (token == "phone") return DeviceKind::Smartphone;
    if (token == "tracker") return DeviceKind::VideoTracker;
    throw Error(errc::domain_error, "unknown device token '" + token + "'");
}

}  // namespace skidkit
