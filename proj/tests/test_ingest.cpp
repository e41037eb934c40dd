#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "skidkit/error.hpp"
#include "skidkit/ingest.hpp"
#include "skidkit/types.hpp"

using namespace skidkit;

namespace {

DecelTrace accel_of(const std::string& text, WarningSink* w = nullptr) {
    std::istringstream in(text);
    return parse_accel_csv(in, kStandardGravity, w);
}

}  // namespace

TEST_CASE("accel: plain three-row file") {
    auto t = accel_of(
        "t_s,decel\n"
        "0.00,0.0\n"
        "0.01,1.0\n"
        "0.02,2.0\n");
    CHECK(t.device == DeviceKind::ReferenceAccelerometer);
    CHECK(t.sample_rate == doctest::Approx(100.0));  // inferred from span
    CHECK(t.t0 == 0.0);
    REQUIRE(t.samples.size() == 3);
    CHECK(t.samples[0] == 0.0);
    CHECK(t.samples[1] == 1.0);
    CHECK(t.samples[2] == 2.0);
}

TEST_CASE("accel: explicit rate comment wins") {
    WarningSink w;
    auto t = accel_of(
        "# rate: 100\n"
        "t_s,decel\n"
        "0.00,0.5\n"
        "0.01,0.6\n",
        &w);
    CHECK(t.sample_rate == 100.0);
    CHECK(w.empty());
}

TEST_CASE("accel: unit g converts through the configured gravity") {
    auto t = accel_of(
        "# unit: g\n"
        "# rate: 100\n"
        "t_s,decel\n"
        "0.00,1.0\n"
        "0.01,0.5\n");
    CHECK(t.samples[0] == doctest::Approx(9.80665));
    CHECK(t.samples[1] == doctest::Approx(4.903325));
}

TEST_CASE("accel: optional speed/distance columns are tolerated") {
    auto t = accel_of(
        "# rate: 100\n"
        "t_s,decel,speed_kmh,dist_m\n"
        "0.00,1.0,45.0,0.0\n"
        "0.01,1.1,44.9,0.12\n");
    CHECK(t.samples.size() == 2);
    CHECK(t.samples[1] == 1.1);

    CHECK_THROWS_AS(accel_of("t_s,decel,velocity\n0,1\n"), Error);
}

TEST_CASE("accel: non-monotonic time names the physical line") {
    try {
        accel_of(
            "t_s,decel\n"
            "0.00,0.1\n"
            "0.02,0.2\n"
            "0.01,0.3\n");
        FAIL("expected NonMonotonicTime");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_monotonic_time);
        REQUIRE(e.line().has_value());
        CHECK(*e.line() == 4);
    }
    // comment lines count toward the physical line number
    try {
        accel_of(
            "# rate: 100\n"
            "t_s,decel\n"
            "0.00,0.1\n"
            "0.02,0.2\n"
            "0.01,0.3\n");
        FAIL("expected NonMonotonicTime");
    } catch (const Error& e) {
        CHECK(*e.line() == 5);
    }
}

TEST_CASE("accel: malformed input") {
    CHECK_THROWS_AS(accel_of("time,decel\n0,1\n0.01,2\n"), Error);
    CHECK_THROWS_AS(accel_of(""), Error);
    CHECK_THROWS_AS(accel_of("t_s,decel\n"), Error);

    try {
        accel_of("t_s,decel\n0.00,0.1\n0.01\n");
        FAIL("expected field-count error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::malformed_header);
        CHECK(*e.line() == 3);
    }
    try {
        accel_of("t_s,decel\n0.00,0.1\n0.01,oops\n");
        FAIL("expected NonFiniteValue");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_finite_value);
        CHECK(*e.line() == 3);
    }
    CHECK_THROWS_AS(accel_of("t_s,decel\n0.00,nan\n0.01,1\n"), Error);
    CHECK_THROWS_AS(accel_of("# unit: pounds\nt_s,decel\n0,1\n0.01,2\n"),
                    Error);
}

TEST_CASE("accel: off-nominal rate warns but parses") {
    WarningSink w;
    auto t = accel_of(
        "# rate: 90\n"
        "t_s,decel\n"
        "0.00,0.5\n"
        "0.02,0.6\n",
        &w);
    CHECK(t.sample_rate == 90.0);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("90") != std::string::npos);
    CHECK(w[0].find("100") != std::string::npos);
}

TEST_CASE("phone: constant bias is removed over the lead-in window") {
    std::ostringstream text;
    text << "# rate: 30\nt_s,ax_ms2,ay_ms2,az_ms2\n";
    for (int i = 0; i < 90; ++i) {
        double t = i / 30.0;
        double ax = t < 1.5 ? 0.2 : 9.0;
        text << t << ',' << ax << ",0,0\n";
    }
    std::istringstream in(text.str());
    auto trace = parse_phone_csv(in, 'x', 1.5);
    CHECK(trace.device == DeviceKind::Smartphone);
    CHECK(trace.samples[0] == doctest::Approx(0.0));
    CHECK(trace.samples[50] == doctest::Approx(8.8));
}

TEST_CASE("phone: backwards mounting is sign-normalized") {
    std::ostringstream text;
    text << "# rate: 30\nt_s,ax_ms2,ay_ms2,az_ms2\n";
    for (int i = 0; i < 90; ++i) {
        double t = i / 30.0;
        double ay = t < 1.5 ? 0.2 : -9.0;
        text << t << ",0," << ay << ",0\n";
    }
    std::istringstream in(text.str());
    auto trace = parse_phone_csv(in, 'y', 1.5);
    CHECK(trace.samples[60] == doctest::Approx(9.2));
}

TEST_CASE("phone: zero bias window passes samples through") {
    std::istringstream in(
        "# rate: 30\n"
        "t_s,ax_ms2,ay_ms2,az_ms2\n"
        "0.0,1.5,0,0\n"
        "0.0333333333,2.5,0,0\n"
        "0.0666666667,3.5,0,0\n");
    auto trace = parse_phone_csv(in, 'x', 0.0);
    CHECK(trace.samples == std::vector<double>{1.5, 2.5, 3.5});
}

TEST_CASE("phone: bias window must leave data after it") {
    std::istringstream in(
        "# rate: 30\n"
        "t_s,ax_ms2,ay_ms2,az_ms2\n"
        "0.0,1,0,0\n"
        "0.0333333333,2,0,0\n");
    try {
        parse_phone_csv(in, 'x', 1.5);
        FAIL("expected BiasWindowTooLong");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bias_window_too_long);
    }
    std::istringstream bad(
        "t_s,ax_ms2\n"
        "0,1\n");
    CHECK_THROWS_AS(parse_phone_csv(bad, 'x', 0.0), Error);
    std::istringstream in2(
        "# rate: 30\nt_s,ax_ms2,ay_ms2,az_ms2\n0,1,0,0\n0.1,2,0,0\n");
    CHECK_THROWS_AS(parse_phone_csv(in2, 'q', 0.0), Error);
}

TEST_CASE("tracker: metric positions pass through") {
    std::istringstream in(
        "# fps: 30\n"
        "# unit: m\n"
        "frame,x\n"
        "0,0.0\n"
        "1,0.5\n"
        "2,1.0\n");
    auto p = parse_tracker_csv(in);
    CHECK(p.frame_rate == 30.0);
    CHECK(p.scale == 1.0);
    CHECK(p.positions == std::vector<double>{0.0, 0.5, 1.0});
}

TEST_CASE("tracker: pixel positions scale to meters") {
    std::istringstream in(
        "# fps: 30\n"
        "# unit: px\n"
        "# scale_m_per_px: 0.02\n"
        "frame,x\n"
        "0,100\n"
        "1,110\n");
    auto p = parse_tracker_csv(in);
    CHECK(p.scale == 0.02);
    CHECK(p.positions[0] == doctest::Approx(2.0));
    CHECK(p.positions[1] == doctest::Approx(2.2));
}

TEST_CASE("tracker: pixel unit without scale fails") {
    std::istringstream in(
        "# unit: px\n"
        "frame,x\n"
        "0,100\n"
        "1,110\n");
    try {
        parse_tracker_csv(in);
        FAIL("expected MissingScale");
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_scale);
    }
}

TEST_CASE("tracker: warnings for gaps, direction and dips") {
    WarningSink w;
    std::istringstream gaps(
        "frame,x\n"
        "0,0.0\n"
        "1,0.5\n"
        "3,1.5\n");
    parse_tracker_csv(gaps, &w);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("spacing") != std::string::npos);

    w.clear();
    std::istringstream reversed(
        "frame,x\n"
        "0,5.0\n"
        "1,4.0\n"
        "2,3.0\n");
    auto p = parse_tracker_csv(reversed, &w);
    CHECK(p.positions.front() < p.positions.back());
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("direction") != std::string::npos);

    w.clear();
    std::istringstream dippy(
        "frame,x\n"
        "0,0.0\n"
        "1,1.0\n"
        "2,0.2\n"
        "3,2.0\n");
    parse_tracker_csv(dippy, &w);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("dip") != std::string::npos);
}

TEST_CASE("round trip: accel serialization is a fixed point") {
    DecelTrace t;
    t.device = DeviceKind::ReferenceAccelerometer;
    t.sample_rate = 100.0;
    t.t0 = 0.0;
    t.samples = {0.123456789123, 9.80665, 1.0 / 3.0, 7.7215, 0.0};

    std::ostringstream s1;
    write_accel_csv(t, s1);
    std::istringstream r1(s1.str());
    auto t1 = parse_accel_csv(r1);

    std::ostringstream s2;
    write_accel_csv(t1, s2);
    std::istringstream r2(s2.str());
    auto t2 = parse_accel_csv(r2);

    CHECK(s1.str() == s2.str());  // 9-digit text is already canonical
    REQUIRE(t1.samples.size() == t2.samples.size());
    for (std::size_t i = 0; i < t1.samples.size(); ++i) {
        CHECK(t1.samples[i] == t2.samples[i]);  // bit-for-bit
    }
    CHECK(t1.sample_rate == 100.0);
}

TEST_CASE("round trip: phone axis placement and recovery") {
    DecelTrace t;
    t.device = DeviceKind::Smartphone;
    t.sample_rate = 30.0;
    t.samples = {0.5, 1.25, 8.875, 9.0625};

    for (char axis : {'x', 'y', 'z'}) {
        std::ostringstream out;
        write_phone_csv(t, axis, out);
        std::istringstream in(out.str());
        auto back = parse_phone_csv(in, axis, 0.0);
        CHECK(back.samples == t.samples);
    }
    std::ostringstream out;
    CHECK_THROWS_AS(write_phone_csv(t, 'w', out), Error);
}

TEST_CASE("round trip: tracker positions") {
    PositionTrace p;
    p.frame_rate = 30.0;
    p.scale = 0.02;
    p.positions = {0.0, 0.04, 0.16, 0.36, 0.64};

    std::ostringstream out;
    write_tracker_csv(p, out);
    std::istringstream in(out.str());
    auto back = parse_tracker_csv(in);
    CHECK(back.positions == p.positions);
    CHECK(back.frame_rate == 30.0);
    CHECK(back.scale == 1.0);  // canonical form is metric
}

TEST_CASE("meta comments are preserved on the trace") {
    auto t = accel_of(
        "# rate: 100\n"
        "# surface: dry asphalt\n"
        "t_s,decel\n"
        "0.00,1\n"
        "0.01,2\n");
    CHECK(t.meta.at("surface") == "dry asphalt");
}
