#include "skidkit/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace skidkit {

std::string format_general(double value, int significant_digits) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value,
                             std::chars_format::general, significant_digits);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value,
                             std::chars_format::fixed, decimals);
    std::string s(buf, res.ptr);
    // Tiny negatives round to "-0.0000"; drop the sign of an all-zero cell.
    if (!s.empty() && s[0] == '-' &&
        s.find_first_not_of("0.", 1) == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

bool parse_double(const std::string& token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t' ||
                             *(last - 1) == '\r'))
        --last;
    if (first == last) return false;
    // std::from_chars rejects a leading '+'; accept it as CSV tools emit it.
    if (*first == '+' && last - first > 1 && *(first + 1) != '-') ++first;
    double value = 0.0;
    auto res = std::from_chars(first, last, value, std::chars_format::general);
    if (res.ec != std::errc() || res.ptr != last) return false;
    out = value;
    return true;
}

}  // namespace skidkit
