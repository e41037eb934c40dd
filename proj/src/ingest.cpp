#include "skidkit/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "skidkit/error.hpp"
#include "skidkit/numfmt.hpp"

namespace skidkit {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

struct Row {
    std::size_t line = 0;  // 1-based physical line in the input
    std::vector<double> cells;
};

struct CsvDoc {
    std::vector<std::string> header;
    std::size_t header_line = 0;
    std::vector<Row> rows;
    std::map<std::string, std::string> meta;
};

// Reads `#`-comment metadata, one header line, and numeric data rows.
// Every cell must parse as a finite double; rows must match the header
// width. Physical line numbers (1-based, comments included) are tracked
// for error reporting.
CsvDoc read_csv(std::istream& in) {
    CsvDoc doc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            const std::size_t colon = t.find(':');
            if (colon != std::string::npos) {
                const std::string key = trim(t.substr(1, colon - 1));
                const std::string value = trim(t.substr(colon + 1));
                if (!key.empty() && !value.empty()) doc.meta[key] = value;
            }
            continue;
        }
        if (doc.header.empty()) {
            doc.header = split_fields(t);
            doc.header_line = lineno;
            continue;
        }
        Row row;
        row.line = lineno;
        const auto fields = split_fields(t);
        if (fields.size() != doc.header.size()) {
            throw Error(errc::malformed_header,
                        "expected " + std::to_string(doc.header.size()) +
                            " fields, got " + std::to_string(fields.size()),
                        lineno);
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            double v = 0.0;
            if (!parse_double(fields[c], v) || !std::isfinite(v)) {
                throw Error(errc::non_finite_value,
                            "column '" + doc.header[c] +
                                "' has non-finite value '" + fields[c] + "'",
                            lineno);
            }
            row.cells.push_back(v);
        }
        doc.rows.push_back(std::move(row));
    }
    if (doc.header.empty()) {
        throw Error(errc::empty_input, "no header line found");
    }
    if (doc.rows.empty()) {
        throw Error(errc::empty_input, "no data rows after header");
    }
    return doc;
}

void require_header(const CsvDoc& doc,
                    const std::vector<std::string>& required,
                    std::size_t max_cols) {
    bool ok = doc.header.size() >= required.size() &&
              doc.header.size() <= max_cols;
    for (std::size_t i = 0; ok && i < required.size(); ++i) {
        ok = doc.header[i] == required[i];
    }
    if (!ok) {
        std::string want;
        for (std::size_t i = 0; i < required.size(); ++i) {
            if (i) want += ',';
            want += required[i];
        }
        throw Error(errc::malformed_header,
                    "expected header '" + want + "', got '" +
                        (doc.header.empty() ? std::string("<none>")
                                            : trim(doc.header[0])) +
                        ",...'",
                    doc.header_line);
    }
}

void check_time_increasing(const CsvDoc& doc, std::size_t col) {
    for (std::size_t i = 1; i < doc.rows.size(); ++i) {
        if (!(doc.rows[i].cells[col] > doc.rows[i - 1].cells[col])) {
            throw Error(errc::non_monotonic_time,
                        "value " + format_general(doc.rows[i].cells[col]) +
                            " does not increase past " +
                            format_general(doc.rows[i - 1].cells[col]),
                        doc.rows[i].line);
        }
    }
}

double meta_number(const CsvDoc& doc, const std::string& key,
                   double fallback) {
    auto it = doc.meta.find(key);
    if (it == doc.meta.end()) return fallback;
    double v = 0.0;
    if (!parse_double(it->second, v) || !std::isfinite(v) || v <= 0.0) {
        throw Error(errc::malformed_header,
                    "comment '" + key + "' must be a positive number, got '" +
                        it->second + "'");
    }
    return v;
}

void warn(WarningSink* warnings, const std::string& message) {
    if (warnings) warnings->push_back(message);
}

// Sample rate from an explicit `# rate:` comment, else inferred from the
// first/last timestamps.
double resolve_rate(const CsvDoc& doc, WarningSink* warnings,
                    double nominal) {
    double rate = meta_number(doc, "rate", 0.0);
    if (rate == 0.0) {
        if (doc.rows.size() < 2) {
            warn(warnings, "single-row trace without '# rate:'; assuming " +
                               format_general(nominal) + " Hz");
            return nominal;
        }
        const double span =
            doc.rows.back().cells[0] - doc.rows.front().cells[0];
        rate = static_cast<double>(doc.rows.size() - 1) / span;
    }
    if (std::fabs(rate - nominal) > 0.01 * nominal) {
        warn(warnings, "sample rate " + format_general(rate) +
                           " Hz deviates from the nominal " +
                           format_general(nominal) + " Hz");
    }
    return rate;
}

}  // namespace

DecelTrace parse_accel_csv(std::istream& in, double g, WarningSink* warnings) {
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw Error(errc::domain_error, "g must be positive");
    }
    CsvDoc doc = read_csv(in);
    require_header(doc, {"t_s", "decel"}, 4);
    if (doc.header.size() >= 3 && doc.header[2] != "speed_kmh") {
        throw Error(errc::malformed_header,
                    "third column must be 'speed_kmh', got '" + doc.header[2] +
                        "'",
                    doc.header_line);
    }
    if (doc.header.size() == 4 && doc.header[3] != "dist_m") {
        throw Error(errc::malformed_header,
                    "fourth column must be 'dist_m', got '" + doc.header[3] +
                        "'",
                    doc.header_line);
    }
    check_time_increasing(doc, 0);

    double unit_factor = 1.0;
    if (auto it = doc.meta.find("unit"); it != doc.meta.end()) {
        if (it->second == "g") {
            unit_factor = g;
        } else if (it->second != "ms2") {
            throw Error(errc::malformed_header,
                        "unit must be 'g' or 'ms2', got '" + it->second + "'");
        }
    }

    DecelTrace trace;
    trace.device = DeviceKind::ReferenceAccelerometer;
    trace.t0 = doc.rows.front().cells[0];
    trace.sample_rate = resolve_rate(doc, warnings, 100.0);
    trace.meta = doc.meta;
    trace.samples.reserve(doc.rows.size());
    for (const Row& row : doc.rows) {
        trace.samples.push_back(row.cells[1] * unit_factor);
    }
    return trace;
}

DecelTrace parse_phone_csv(std::istream& in, char axis, double bias_window,
                           WarningSink* warnings) {
    std::size_t axis_col = 0;
    switch (axis) {
        case 'x': axis_col = 1; break;
        case 'y': axis_col = 2; break;
        case 'z': axis_col = 3; break;
        default:
            throw Error(errc::domain_error,
                        std::string("axis must be x, y or z, got '") + axis +
                            "'");
    }
    if (!(bias_window >= 0.0) || !std::isfinite(bias_window)) {
        throw Error(errc::domain_error, "bias_window must be >= 0");
    }

    CsvDoc doc = read_csv(in);
    require_header(doc, {"t_s", "ax_ms2", "ay_ms2", "az_ms2"}, 4);
    check_time_increasing(doc, 0);

    DecelTrace trace;
    trace.device = DeviceKind::Smartphone;
    trace.t0 = doc.rows.front().cells[0];
    trace.sample_rate = resolve_rate(doc, warnings, 30.0);
    trace.meta = doc.meta;
    trace.samples.reserve(doc.rows.size());
    for (const Row& row : doc.rows) {
        trace.samples.push_back(row.cells[axis_col]);
    }

    const double duration =
        static_cast<double>(trace.samples.size()) / trace.sample_rate;
    if (bias_window >= duration) {
        throw Error(errc::bias_window_too_long,
                    "bias window " + format_general(bias_window) +
                        " s covers the whole " + format_general(duration) +
                        " s trace");
    }
    if (bias_window > 0.0) {
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < doc.rows.size(); ++i) {
            if (doc.rows[i].cells[0] - trace.t0 >= bias_window) break;
            sum += trace.samples[i];
            ++n;
        }
        const double bias = sum / static_cast<double>(n);
        for (double& v : trace.samples) v -= bias;
    }

    // Braking must come out positive regardless of how the phone was
    // mounted; flip when the dominant excursion is negative.
    double lo = trace.samples.front(), hi = trace.samples.front();
    for (double v : trace.samples) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (-lo > hi) {
        for (double& v : trace.samples) v = -v;
    }
    return trace;
}

PositionTrace parse_tracker_csv(std::istream& in, WarningSink* warnings) {
    CsvDoc doc = read_csv(in);
    require_header(doc, {"frame", "x"}, 2);
    check_time_increasing(doc, 0);

    PositionTrace trace;
    trace.frame_rate = meta_number(doc, "fps", 30.0);
    trace.meta = doc.meta;

    std::string unit = "m";
    if (auto it = doc.meta.find("unit"); it != doc.meta.end()) unit = it->second;
    if (unit == "px") {
        if (doc.meta.find("scale_m_per_px") == doc.meta.end()) {
            throw Error(errc::missing_scale,
                        "unit is 'px' but no '# scale_m_per_px:' comment");
        }
        trace.scale = meta_number(doc, "scale_m_per_px", 0.0);
    } else if (unit != "m") {
        throw Error(errc::malformed_header,
                    "unit must be 'm' or 'px', got '" + unit + "'");
    }

    // Frame indices should advance by one; gaps would silently stretch
    // the time base, so call them out.
    for (std::size_t i = 1; i < doc.rows.size(); ++i) {
        const double step = doc.rows[i].cells[0] - doc.rows[i - 1].cells[0];
        const double first_step = doc.rows[1].cells[0] - doc.rows[0].cells[0];
        if (std::fabs(step - first_step) > 1e-9) {
            warn(warnings, "uneven frame spacing near line " +
                               std::to_string(doc.rows[i].line));
            break;
        }
    }

    trace.positions.reserve(doc.rows.size());
    for (const Row& row : doc.rows) {
        trace.positions.push_back(row.cells[1] * trace.scale);
    }

    // The vehicle travels one way; normalize direction and flag dips
    // beyond plausible tracking noise.
    if (trace.positions.back() < trace.positions.front()) {
        for (double& p : trace.positions) p = -p;
        warn(warnings, "positions decrease overall; direction normalized");
    }
    const double span = trace.positions.back() - trace.positions.front();
    double worst_dip = 0.0;
    for (std::size_t i = 1; i < trace.positions.size(); ++i) {
        worst_dip = std::max(worst_dip,
                             trace.positions[i - 1] - trace.positions[i]);
    }
    if (span > 0.0 && worst_dip > 0.05 * span) {
        warn(warnings, "position dips exceed 5% of total travel; check the "
                       "tracking export");
    }
    return trace;
}

void write_accel_csv(const DecelTrace& trace, std::ostream& out) {
    out << "# rate: " << format_general(trace.sample_rate) << "\n";
    out << "# unit: ms2\n";
    out << "t_s,decel\n";
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        out << format_general(trace.time_at(i)) << ','
            << format_general(trace.samples[i]) << '\n';
    }
}

void write_phone_csv(const DecelTrace& trace, char axis, std::ostream& out) {
    if (axis != 'x' && axis != 'y' && axis != 'z') {
        throw Error(errc::domain_error,
                    std::string("axis must be x, y or z, got '") + axis + "'");
    }
    out << "# rate: " << format_general(trace.sample_rate) << "\n";
    out << "t_s,ax_ms2,ay_ms2,az_ms2\n";
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const std::string v = format_general(trace.samples[i]);
        out << format_general(trace.time_at(i)) << ','
            << (axis == 'x' ? v : "0") << ',' << (axis == 'y' ? v : "0") << ','
            << (axis == 'z' ? v : "0") << '\n';
    }
}

void write_tracker_csv(const PositionTrace& trace, std::ostream& out) {
    out << "# fps: " << format_general(trace.frame_rate) << "\n";
    out << "# unit: m\n";
    out << "frame,x\n";
    for (std::size_t i = 0; i < trace.positions.size(); ++i) {
        out << i << ',' << format_general(trace.positions[i]) << '\n';
    }
}

}  // namespace skidkit
