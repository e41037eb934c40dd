#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace skidkit {

// Error categories surfaced by the toolkit. Parse errors carry the
// 1-based line number of the offending input line.
enum class errc {
    malformed_header,
    non_monotonic_time,
    non_finite_value,
    bias_window_too_long,
    missing_scale,
    window_too_large,
    degenerate_fit,
    empty_input,
    no_braking_event,
    plateau_not_reached,
    domain_error,
    too_few_samples,
    too_few_groups,
    zero_variance,
    degenerate_x,
    invalid_spec,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Error(errc code, std::string message, std::size_t line)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message +
                             " (line " + std::to_string(line) + ")"),
          code_(code),
          line_(line) {}

    errc code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    errc code_;
    std::optional<std::size_t> line_;
};

}  // namespace skidkit
