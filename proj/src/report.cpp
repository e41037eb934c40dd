#include "skidkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "skidkit/error.hpp"
#include "skidkit/numfmt.hpp"

namespace skidkit {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "skidkit/1";

// ---------------------------------------------------------------- JSON --

json to_json(const TestSummary& s) {
    return json{{"mean", s.mean},     {"variance", s.variance},
                {"std_error", s.std_error}, {"min", s.min},
                {"max", s.max},       {"count", s.count},
                {"cl95", s.cl95}};
}

TestSummary summary_from(const json& j) {
    TestSummary s;
    s.mean = j.at("mean").get<double>();
    s.variance = j.at("variance").get<double>();
    s.std_error = j.at("std_error").get<double>();
    s.min = j.at("min").get<double>();
    s.max = j.at("max").get<double>();
    s.count = j.at("count").get<std::size_t>();
    s.cl95 = j.at("cl95").get<double>();
    return s;
}

json to_json(const FrictionEstimate& f) {
    json j{{"mu", f.mu}, {"a_sz", f.a_sz}, {"g", f.g}};
    if (f.ci_mu) {
        j["ci_mu"] = json::array({f.ci_mu->first, f.ci_mu->second});
    } else {
        j["ci_mu"] = nullptr;
    }
    return j;
}

FrictionEstimate friction_from(const json& j) {
    FrictionEstimate f;
    f.mu = j.at("mu").get<double>();
    f.a_sz = j.at("a_sz").get<double>();
    f.g = j.at("g").get<double>();
    if (!j.at("ci_mu").is_null()) {
        f.ci_mu = std::make_pair(j.at("ci_mu").at(0).get<double>(),
                                 j.at("ci_mu").at(1).get<double>());
    }
    return f;
}

json to_json(const AnovaResult& a) {
    return json{{"ss_total", a.ss_total},
                {"ss_between", a.ss_between},
                {"ss_within", a.ss_within},
                {"df_between", a.df_between},
                {"df_within", a.df_within},
                {"f_value", a.f_value},
                {"f_critical", a.f_critical},
                {"alpha", a.alpha},
                {"reject_h0", a.reject_h0}};
}

AnovaResult anova_from(const json& j) {
    AnovaResult a;
    a.ss_total = j.at("ss_total").get<double>();
    a.ss_between = j.at("ss_between").get<double>();
    a.ss_within = j.at("ss_within").get<double>();
    a.df_between = j.at("df_between").get<std::size_t>();
    a.df_within = j.at("df_within").get<std::size_t>();
    a.f_value = j.at("f_value").get<double>();
    a.f_critical = j.at("f_critical").get<double>();
    a.alpha = j.at("alpha").get<double>();
    a.reject_h0 = j.at("reject_h0").get<bool>();
    return a;
}

const char* model_token(RegressionModel m) {
    return m == RegressionModel::WithIntercept ? "with_intercept"
                                               : "through_origin";
}

json to_json(const RegressionResult& r) {
    return json{{"model", model_token(r.model)},
                {"beta0", r.beta0},
                {"beta1", r.beta1},
                {"r2", r.r2},
                {"rse", r.rse},
                {"n", r.n}};
}

RegressionResult regression_from(const json& j) {
    RegressionResult r;
    const auto model = j.at("model").get<std::string>();
    if (model == "with_intercept") {
        r.model = RegressionModel::WithIntercept;
    } else if (model == "through_origin") {
        r.model = RegressionModel::ThroughOrigin;
    } else {
        throw Error(errc::invalid_spec,
                    "unknown regression model '" + model + "'");
    }
    r.beta0 = j.at("beta0").get<double>();
    r.beta1 = j.at("beta1").get<double>();
    r.r2 = j.at("r2").get<double>();
    r.rse = j.at("rse").get<double>();
    r.n = j.at("n").get<std::size_t>();
    return r;
}

json to_json(const CiResult& c) {
    return json{{"diff_mean", c.diff_mean}, {"low", c.low},
                {"high", c.high},           {"eps_abs", c.eps_abs},
                {"eps_rel", c.eps_rel},     {"alpha", c.alpha}};
}

CiResult ci_from(const json& j) {
    CiResult c;
    c.diff_mean = j.at("diff_mean").get<double>();
    c.low = j.at("low").get<double>();
    c.high = j.at("high").get<double>();
    c.eps_abs = j.at("eps_abs").get<double>();
    c.eps_rel = j.at("eps_rel").get<double>();
    c.alpha = j.at("alpha").get<double>();
    return c;
}

json to_json(const PrecisionResult& p) {
    json j{{"iq", p.iq}, {"n", p.n}, {"s2", p.s2}};
    if (p.estimation_number) {
        j["estimation_number"] = *p.estimation_number;
    } else {
        j["estimation_number"] = nullptr;
    }
    return j;
}

PrecisionResult precision_from(const json& j) {
    PrecisionResult p;
    p.iq = j.at("iq").get<double>();
    p.n = j.at("n").get<std::size_t>();
    p.s2 = j.at("s2").get<double>();
    if (!j.at("estimation_number").is_null()) {
        p.estimation_number = j.at("estimation_number").get<long long>();
    }
    return p;
}

json to_json(const ComparisonResult& c) {
    json points = json::array();
    for (const auto& [x, y] : c.points) {
        points.push_back(json::array({x, y}));
    }
    return json{{"ref", c.device_ref},
                {"method", c.device_alt},
                {"anova", to_json(c.anova)},
                {"regression_with_intercept", to_json(c.reg_with_intercept)},
                {"regression_through_origin", to_json(c.reg_through_origin)},
                {"ci", to_json(c.ci)},
                {"precision_ref", to_json(c.precision_ref)},
                {"precision_method", to_json(c.precision_alt)},
                {"points", points}};
}

ComparisonResult comparison_from(const json& j) {
    ComparisonResult c;
    c.device_ref = j.at("ref").get<std::string>();
    c.device_alt = j.at("method").get<std::string>();
    c.anova = anova_from(j.at("anova"));
    c.reg_with_intercept = regression_from(j.at("regression_with_intercept"));
    c.reg_through_origin = regression_from(j.at("regression_through_origin"));
    c.ci = ci_from(j.at("ci"));
    c.precision_ref = precision_from(j.at("precision_ref"));
    c.precision_alt = precision_from(j.at("precision_method"));
    for (const auto& pt : j.at("points")) {
        c.points.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>());
    }
    return c;
}

// --------------------------------------------------------------- files --

std::ofstream open_out(const std::string& dir, const std::string& name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Error(errc::io_error,
                    "cannot create '" + dir + "': " + ec.message());
    }
    const std::string path = (fs::path(dir) / name).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error(errc::io_error, "cannot write '" + path + "'");
    }
    return f;
}

std::string path_of(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

std::string fx(double v) { return format_fixed(v, 4); }

void put_summary_cells(std::ostream& out, const TestSummary& s) {
    out << fx(s.mean) << ',' << fx(s.variance) << ',' << fx(s.std_error)
        << ',' << fx(s.min) << ',' << fx(s.max) << ',' << s.count << ','
        << fx(s.cl95);
}

// ---------------------------------------------------------------- SVG --

// Linear map from a value range onto a pixel range.
struct Axis {
    double v0 = 0.0, v1 = 1.0;
    double p0 = 0.0, p1 = 1.0;

    double operator()(double v) const {
        return p0 + (v - v0) / (v1 - v0) * (p1 - p0);
    }
};

std::string px(double v) { return format_fixed(v, 2); }

void svg_open(std::ostream& out, int w, int h) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
}

void svg_rect(std::ostream& out, double x, double y, double w, double h,
              const std::string& fill, const std::string& extra = "") {
    out << "<rect x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\""
        << px(w) << "\" height=\"" << px(h) << "\" fill=\"" << fill << "\"";
    if (!extra.empty()) out << ' ' << extra;
    out << "/>\n";
}

void svg_line(std::ostream& out, double x1, double y1, double x2, double y2,
              const std::string& stroke, const std::string& extra = "") {
    out << "<line x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\""
        << px(x2) << "\" y2=\"" << px(y2) << "\" stroke=\"" << stroke << "\"";
    if (!extra.empty()) out << ' ' << extra;
    out << "/>\n";
}

void svg_text(std::ostream& out, double x, double y, const std::string& s,
              const std::string& extra = "") {
    out << "<text x=\"" << px(x) << "\" y=\"" << px(y) << "\"";
    if (!extra.empty()) out << ' ' << extra;
    out << ">" << s << "</text>\n";
}

// Plot frame with min/max tick labels on both axes.
void svg_frame(std::ostream& out, const Axis& xa, const Axis& ya,
               const std::string& xlab, const std::string& ylab) {
    svg_line(out, xa.p0, ya.p1, xa.p0, ya.p0, "#000");
    svg_line(out, xa.p0, ya.p0, xa.p1, ya.p0, "#000");
    svg_text(out, xa.p0, ya.p0 + 16, px(xa.v0));
    svg_text(out, xa.p1 - 30, ya.p0 + 16, px(xa.v1));
    svg_text(out, xa.p0 - 55, ya.p0 + 4, px(ya.v0));
    svg_text(out, xa.p0 - 55, ya.p1 + 4, px(ya.v1));
    svg_text(out, 0.5 * (xa.p0 + xa.p1) - 30, ya.p0 + 32, xlab);
    svg_text(out, 8, ya.p1 - 6, ylab);
}

const char* series_color(std::size_t i) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#8c564b", "#e377c2"};
    return kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
}

void write_decel_plot(const DecelTrace& trace, const Segmentation& seg,
                      const std::string& dir) {
    if (trace.samples.empty()) {
        throw Error(errc::empty_input, "cannot plot an empty trace");
    }
    auto out = open_out(dir, "decel_time.svg");

    const double t_last = trace.time_at(trace.samples.size() - 1);
    double vmin = 0.0, vmax = seg.plateau_level;
    for (double v : trace.samples) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    vmax *= 1.05;

    Axis xa{trace.t0, t_last, 60, 780};
    Axis ya{vmin, vmax, 380, 20};

    svg_open(out, 800, 420);
    const double t_iz0 = trace.t0 + static_cast<double>(seg.iz.start) /
                                        trace.sample_rate;
    const double t_sz0 = trace.t0 + static_cast<double>(seg.sz.start) /
                                        trace.sample_rate;
    const double t_sz1 = trace.t0 + static_cast<double>(seg.sz.end) /
                                        trace.sample_rate;
    if (seg.iz.start < seg.iz.end) {
        svg_rect(out, xa(t_iz0), ya.p1, xa(t_sz0) - xa(t_iz0), ya.p0 - ya.p1,
                 "#ffe1a8", "opacity=\"0.6\"");
    }
    svg_rect(out, xa(t_sz0), ya.p1, xa(t_sz1) - xa(t_sz0), ya.p0 - ya.p1,
             "#c5e8c5", "opacity=\"0.6\"");

    svg_line(out, xa.p0, ya(seg.plateau_level), xa.p1, ya(seg.plateau_level),
             "#d62728",
             "stroke-dasharray=\"6 3\" data-plateau=\"" +
                 format_general(seg.plateau_level) + "\"");

    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" "
           "points=\"";
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        if (i) out << ' ';
        out << px(xa(trace.time_at(i))) << ',' << px(ya(trace.samples[i]));
    }
    out << "\"/>\n";

    svg_frame(out, xa, ya, "t [s]", "a [m/s2]");
    svg_text(out, xa(0.5 * (t_iz0 + t_sz0)) - 8, 36, "IZ");
    svg_text(out, xa(0.5 * (t_sz0 + t_sz1)) - 8, 36, "SZ");
    out << "</svg>\n";
}

void write_regression_plot(const ExperimentReport& r, const std::string& dir) {
    auto out = open_out(dir, "regression.svg");

    double lo = 0.0, hi = 1.0;
    bool first = true;
    for (const auto& c : r.comparisons) {
        for (const auto& [x, y] : c.points) {
            if (first) {
                lo = std::min(x, y);
                hi = std::max(x, y);
                first = false;
            }
            lo = std::min({lo, x, y});
            hi = std::max({hi, x, y});
        }
    }
    const double pad = 0.05 * (hi - lo == 0.0 ? 1.0 : hi - lo);
    Axis xa{lo - pad, hi + pad, 60, 780};
    Axis ya{lo - pad, hi + pad, 380, 20};

    svg_open(out, 800, 420);
    double label_y = 36;
    for (std::size_t ci = 0; ci < r.comparisons.size(); ++ci) {
        const auto& c = r.comparisons[ci];
        const char* color = series_color(ci);
        for (const auto& [x, y] : c.points) {
            out << "<circle cx=\"" << px(xa(x)) << "\" cy=\"" << px(ya(y))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        const auto& wi = c.reg_with_intercept;
        const auto& to = c.reg_through_origin;
        if (wi.n == 0 && to.n == 0) continue;  // pair had too few tests
        svg_line(out, xa(xa.v0), ya(wi.beta0 + wi.beta1 * xa.v0), xa(xa.v1),
                 ya(wi.beta0 + wi.beta1 * xa.v1), color);
        svg_line(out, xa(xa.v0), ya(to.beta1 * xa.v0), xa(xa.v1),
                 ya(to.beta1 * xa.v1), color, "stroke-dasharray=\"4 3\"");
        svg_text(out, 70, label_y,
                 c.device_ref + " vs " + c.device_alt + ": R2=" + fx(wi.r2) +
                     " RSE=" + fx(wi.rse) + " (intercept), R2=" + fx(to.r2) +
                     " RSE=" + fx(to.rse) + " (origin)",
                 "fill=\"" + std::string(color) + "\"");
        label_y += 16;
    }
    svg_frame(out, xa, ya, r.comparisons.empty()
                               ? std::string("reference")
                               : r.comparisons.front().device_ref + " [m/s2]",
              "method [m/s2]");
    out << "</svg>\n";
}

void write_friction_plot(const ExperimentReport& r, const std::string& dir) {
    auto out = open_out(dir, "friction.svg");

    double mu_max = 1.0;
    for (const auto& m : r.per_method) {
        mu_max = std::max(mu_max, m.friction.mu);
    }
    Axis ya{0.0, mu_max * 1.1, 380, 20};

    svg_open(out, 800, 420);
    const double slot = 720.0 / static_cast<double>(
                                    std::max<std::size_t>(r.per_method.size(), 1));
    for (std::size_t i = 0; i < r.per_method.size(); ++i) {
        const auto& m = r.per_method[i];
        const double x = 60 + slot * (static_cast<double>(i) + 0.25);
        const double w = slot * 0.5;
        svg_rect(out, x, ya(m.friction.mu), w, ya(0.0) - ya(m.friction.mu),
                 series_color(i));
        svg_text(out, x + w / 2 - 22, ya(m.friction.mu) - 6,
                 fx(m.friction.mu));
        svg_text(out, x + w / 2 - 20, 398, m.device);
    }
    svg_line(out, 60, 380, 780, 380, "#000");
    svg_line(out, 60, 380, 60, 20, "#000");
    svg_text(out, 5, 24, fx(ya.v1));
    svg_text(out, 5, 384, "0");
    svg_text(out, 8, 14, "mu");
    out << "</svg>\n";
}

}  // namespace

std::string report_to_json(const ExperimentReport& r) {
    json j;
    j["schema"] = kSchema;
    j["experiment_id"] = r.experiment_id;
    j["g"] = r.g;
    j["alpha"] = r.alpha;
    j["per_test"] = json::array();
    for (const auto& t : r.per_test) {
        j["per_test"].push_back(json{{"test_id", t.test_id},
                                     {"device", t.device},
                                     {"summary", to_json(t.summary)}});
    }
    j["per_method"] = json::array();
    for (const auto& m : r.per_method) {
        j["per_method"].push_back(json{{"device", m.device},
                                       {"summary", to_json(m.summary)},
                                       {"friction", to_json(m.friction)}});
    }
    j["comparisons"] = json::array();
    for (const auto& c : r.comparisons) {
        j["comparisons"].push_back(to_json(c));
    }
    j["speeds"] = json::array();
    for (const auto& s : r.speeds) {
        j["speeds"].push_back(json{{"test_id", s.test_id},
                                   {"device", s.device},
                                   {"mu", s.estimate.mu},
                                   {"d_sz_m", s.estimate.d_sz},
                                   {"v_ms", s.estimate.v_sz},
                                   {"basis", s.basis}});
    }
    return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        if (!j.contains("schema") || j.at("schema") != kSchema) {
            throw Error(errc::invalid_spec,
                        "not a " + std::string(kSchema) + " report");
        }
        ExperimentReport r;
        r.experiment_id = j.at("experiment_id").get<std::string>();
        r.g = j.at("g").get<double>();
        r.alpha = j.at("alpha").get<double>();
        for (const auto& t : j.at("per_test")) {
            r.per_test.push_back({t.at("test_id").get<std::string>(),
                                  t.at("device").get<std::string>(),
                                  summary_from(t.at("summary"))});
        }
        for (const auto& m : j.at("per_method")) {
            r.per_method.push_back({m.at("device").get<std::string>(),
                                    summary_from(m.at("summary")),
                                    friction_from(m.at("friction"))});
        }
        for (const auto& c : j.at("comparisons")) {
            r.comparisons.push_back(comparison_from(c));
        }
        for (const auto& s : j.at("speeds")) {
            SpeedRow row;
            row.test_id = s.at("test_id").get<std::string>();
            row.device = s.at("device").get<std::string>();
            row.estimate.mu = s.at("mu").get<double>();
            row.estimate.d_sz = s.at("d_sz_m").get<double>();
            row.estimate.v_sz = s.at("v_ms").get<double>();
            row.basis = s.at("basis").get<std::string>();
            r.speeds.push_back(std::move(row));
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(errc::invalid_spec,
                    std::string("malformed report JSON: ") + e.what());
    }
}

std::vector<std::string> emit_tables(const ExperimentReport& r,
                                     const std::string& dir,
                                     TableFormat format) {
    std::vector<std::string> written;
    const std::string& exp = r.experiment_id;

    if (format != TableFormat::Json) {
        {
            auto f = open_out(dir, "per_test.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,test,device,mean,variance,std_error,min,max,"
                 "count,cl95\n";
            for (const auto& t : r.per_test) {
                f << exp << ',' << t.test_id << ',' << t.device << ',';
                put_summary_cells(f, t.summary);
                f << '\n';
            }
            written.push_back(path_of(dir, "per_test.csv"));
        }
        {
            auto f = open_out(dir, "per_method.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,device,mean,variance,std_error,min,max,count,"
                 "cl95\n";
            for (const auto& m : r.per_method) {
                f << exp << ',' << m.device << ',';
                put_summary_cells(f, m.summary);
                f << '\n';
            }
            written.push_back(path_of(dir, "per_method.csv"));
        }
        {
            auto f = open_out(dir, "friction.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,device,a_sz,g,mu,mu_low,mu_high\n";
            for (const auto& m : r.per_method) {
                const auto& fr = m.friction;
                f << exp << ',' << m.device << ',' << fx(fr.a_sz) << ','
                  << fx(fr.g) << ',' << fx(fr.mu) << ',';
                if (fr.ci_mu) {
                    f << fx(fr.ci_mu->first) << ',' << fx(fr.ci_mu->second);
                } else {
                    f << ',';
                }
                f << '\n';
            }
            written.push_back(path_of(dir, "friction.csv"));
        }
        {
            auto f = open_out(dir, "anova.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,ref,method,ss_between,ss_within,ss_total,"
                 "df_between,df_within,f_value,f_critical,alpha,reject_h0\n";
            for (const auto& c : r.comparisons) {
                const auto& a = c.anova;
                f << exp << ',' << c.device_ref << ',' << c.device_alt << ','
                  << fx(a.ss_between) << ',' << fx(a.ss_within) << ','
                  << fx(a.ss_total) << ',' << a.df_between << ','
                  << a.df_within << ',' << fx(a.f_value) << ','
                  << fx(a.f_critical) << ',' << fx(a.alpha) << ','
                  << (a.reject_h0 ? "true" : "false") << '\n';
            }
            written.push_back(path_of(dir, "anova.csv"));
        }
        {
            auto f = open_out(dir, "confidence.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,ref,method,diff_mean,low,high,eps_abs,eps_rel,"
                 "alpha\n";
            for (const auto& c : r.comparisons) {
                f << exp << ',' << c.device_ref << ',' << c.device_alt << ','
                  << fx(c.ci.diff_mean) << ',' << fx(c.ci.low) << ','
                  << fx(c.ci.high) << ',' << fx(c.ci.eps_abs) << ','
                  << fx(c.ci.eps_rel) << ',' << fx(c.ci.alpha) << '\n';
            }
            written.push_back(path_of(dir, "confidence.csv"));
        }
        {
            auto f = open_out(dir, "precision.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,ref,method,n_ref,s2_ref,iq_ref,n_method,"
                 "s2_method,iq_method,estimation_number\n";
            for (const auto& c : r.comparisons) {
                f << exp << ',' << c.device_ref << ',' << c.device_alt << ','
                  << c.precision_ref.n << ',' << fx(c.precision_ref.s2) << ','
                  << fx(c.precision_ref.iq) << ',' << c.precision_alt.n << ','
                  << fx(c.precision_alt.s2) << ',' << fx(c.precision_alt.iq)
                  << ',';
                if (c.precision_alt.estimation_number) {
                    f << *c.precision_alt.estimation_number;
                }
                f << '\n';
            }
            written.push_back(path_of(dir, "precision.csv"));
        }
        {
            auto f = open_out(dir, "regression.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,ref,method,model,beta0,beta1,r2,rse,n\n";
            for (const auto& c : r.comparisons) {
                for (const auto* reg :
                     {&c.reg_with_intercept, &c.reg_through_origin}) {
                    if (reg->n == 0) continue;  // pair had too few tests
                    f << exp << ',' << c.device_ref << ',' << c.device_alt
                      << ',' << model_token(reg->model) << ','
                      << fx(reg->beta0) << ',' << fx(reg->beta1) << ','
                      << fx(reg->r2) << ',' << fx(reg->rse) << ',' << reg->n
                      << '\n';
                }
            }
            written.push_back(path_of(dir, "regression.csv"));
        }
        {
            auto f = open_out(dir, "speeds.csv");
            f << "# schema: " << kSchema << "\n";
            f << "experiment,test,device,mu,d_sz_m,v_ms,v_kmh,basis\n";
            for (const auto& s : r.speeds) {
                f << exp << ',' << s.test_id << ',' << s.device << ','
                  << fx(s.estimate.mu) << ',' << fx(s.estimate.d_sz) << ','
                  << fx(s.estimate.v_sz) << ',' << fx(s.estimate.v_kmh())
                  << ',' << s.basis << '\n';
            }
            written.push_back(path_of(dir, "speeds.csv"));
        }
    }
    if (format != TableFormat::Csv) {
        auto f = open_out(dir, "report.json");
        f << report_to_json(r);
        written.push_back(path_of(dir, "report.json"));
    }
    return written;
}

std::vector<std::string> emit_plots(const DecelTrace& trace,
                                    const Segmentation& seg,
                                    const ExperimentReport& r,
                                    const std::string& dir) {
    std::vector<std::string> written;
    write_decel_plot(trace, seg, dir);
    written.push_back(path_of(dir, "decel_time.svg"));
    auto rest = emit_summary_plots(r, dir);
    written.insert(written.end(), rest.begin(), rest.end());
    return written;
}

std::vector<std::string> emit_summary_plots(const ExperimentReport& r,
                                            const std::string& dir) {
    std::vector<std::string> written;
    if (!r.comparisons.empty()) {
        write_regression_plot(r, dir);
        written.push_back(path_of(dir, "regression.svg"));
    }
    write_friction_plot(r, dir);
    written.push_back(path_of(dir, "friction.svg"));
    return written;
}

}  // namespace skidkit
