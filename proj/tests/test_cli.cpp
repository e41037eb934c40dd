#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#endif

#ifndef SKIDKIT_CLI_PATH
#error "SKIDKIT_CLI_PATH must name the skidkit binary under test"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto base = fs::temp_directory_path() /
                      ("skidkit_cli_io_" + std::to_string(counter++));
    const auto out_f = base.string() + ".out";
    const auto err_f = base.string() + ".err";

    const std::string cmd = std::string("\"") + SKIDKIT_CLI_PATH + "\" " +
                            args + " >\"" + out_f + "\" 2>\"" + err_f + "\"";
    int status = std::system(cmd.c_str());
    RunResult r;
#ifdef __unix__
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    r.code = status;
#endif
    r.out = slurp(out_f);
    r.err = slurp(err_f);
    fs::remove(out_f);
    fs::remove(err_f);
    return r;
}

fs::path fresh_dir(const char* name) {
    const auto dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += (c == '\n');
    return n;
}

}  // namespace

TEST_CASE("bare invocation and --help") {
    CHECK(run_cli("").code == 2);
    auto help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("analyze") != std::string::npos);
    CHECK(help.out.find("simulate") != std::string::npos);
    CHECK(help.out.find("report") != std::string::npos);
}

TEST_CASE("simulate writes the dataset and lists every file") {
    const auto dir = fresh_dir("skidkit_cli_sim");
    auto r = run_cli("simulate --tests 3 --mu 0.85 --seed 7 --out \"" +
                     dir.string() + "\"");
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 12);  // 3 tests x 4 files

    for (const char* name :
         {"test01_accel.csv", "test01_phone.csv", "test01_tracker.csv",
          "test01_truth.json", "test02_accel.csv", "test03_truth.json"}) {
        CHECK_MESSAGE(fs::exists(dir / name), name << " missing");
    }
    fs::remove_all(dir);
}

TEST_CASE("simulate is reproducible for a fixed seed") {
    const auto a = fresh_dir("skidkit_cli_sim_a");
    const auto b = fresh_dir("skidkit_cli_sim_b");
    const std::string flags = "simulate --tests 2 --mu 0.7 --seed 99 --out ";
    REQUIRE(run_cli(flags + "\"" + a.string() + "\"").code == 0);
    REQUIRE(run_cli(flags + "\"" + b.string() + "\"").code == 0);

    std::size_t checked = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const auto name = entry.path().filename();
        CHECK_MESSAGE(slurp(entry.path()) == slurp(b / name),
                      name.string() << " differs between runs");
        ++checked;
    }
    CHECK(checked == 8);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("simulate rejects an impossible friction coefficient") {
    const auto dir = fresh_dir("skidkit_cli_sim_bad");
    auto r = run_cli("simulate --tests 1 --mu 0 --out \"" + dir.string() +
                     "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(!fs::exists(dir / "test01_accel.csv"));
}

TEST_CASE("analyze names the file it cannot open") {
    auto r = run_cli("analyze /nonexistent/missing_accel.csv");
    CHECK(r.code == 2);
    CHECK(r.err.find("missing_accel.csv") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("analyze whatever.csv --axis q").code == 2);
    CHECK(run_cli("analyze whatever.csv --out-format yaml").code == 2);
    CHECK(run_cli("report").code == 2);  // missing positional
}

TEST_CASE("analyze end-to-end over a simulated dataset") {
    const auto sim = fresh_dir("skidkit_cli_e2e_sim");
    const auto out = fresh_dir("skidkit_cli_e2e_out");
    REQUIRE(run_cli("simulate --tests 10 --mu 0.8 --seed 11 --out \"" +
                    sim.string() + "\"")
                .code == 0);

    auto r = run_cli("analyze \"" + sim.string() + "\" --id exp1 --out \"" +
                     out.string() + "\"");
    REQUIRE_MESSAGE(r.code == 0, r.err);
    CHECK(count_lines(r.out) == 12);  // 8 CSVs + report.json + 3 SVGs

    // 30 per-test rows (10 tests x 3 devices) under the chosen id
    const auto per_test = slurp(out / "per_test.csv");
    CHECK(count_lines(per_test) == 32);  // schema + header + rows
    CHECK(per_test.find("exp1,test01,accel,") != std::string::npos);
    CHECK(per_test.find("exp1,test10,tracker,") != std::string::npos);

    // two comparisons against the reference, both with df = (1, 18)
    const auto anova = slurp(out / "anova.csv");
    CHECK(anova.find("exp1,accel,phone,") != std::string::npos);
    CHECK(anova.find("exp1,accel,tracker,") != std::string::npos);
    CHECK(count_lines(anova) == 4);
    std::size_t df_rows = 0;
    for (std::size_t pos = anova.find(",1,18,"); pos != std::string::npos;
         pos = anova.find(",1,18,", pos + 1)) {
        ++df_rows;
    }
    CHECK(df_rows == 2);

    CHECK(fs::exists(out / "report.json"));
    CHECK(fs::exists(out / "decel_time.svg"));
    CHECK(fs::exists(out / "regression.svg"));
    CHECK(fs::exists(out / "friction.svg"));

    SUBCASE("report re-renders tables from the stored JSON") {
        const auto rout = fresh_dir("skidkit_cli_e2e_rerender");
        auto rr = run_cli("report \"" + (out / "report.json").string() +
                          "\" --out \"" + rout.string() + "\"");
        REQUIRE_MESSAGE(rr.code == 0, rr.err);
        CHECK(slurp(rout / "per_test.csv") == slurp(out / "per_test.csv"));
        CHECK(slurp(rout / "anova.csv") == slurp(out / "anova.csv"));
        CHECK(fs::exists(rout / "friction.svg"));
        // the raw trace is not stored, so no time plot here
        CHECK(!fs::exists(rout / "decel_time.svg"));
        fs::remove_all(rout);
    }

    SUBCASE("a single input yields no comparisons") {
        const auto solo = fresh_dir("skidkit_cli_e2e_solo");
        auto rs = run_cli("analyze \"" +
                          (sim / "test01_accel.csv").string() + "\" --out \"" +
                          solo.string() + "\"");
        REQUIRE_MESSAGE(rs.code == 0, rs.err);
        CHECK(count_lines(slurp(solo / "per_test.csv")) == 3);
        CHECK(count_lines(slurp(solo / "anova.csv")) == 2);  // no rows
        CHECK(!fs::exists(solo / "regression.svg"));
        CHECK(fs::exists(solo / "decel_time.svg"));
        fs::remove_all(solo);
    }

    SUBCASE("explicit --format covers files the name does not reveal") {
        const auto fdir = fresh_dir("skidkit_cli_e2e_fmt");
        fs::create_directories(fdir);
        fs::copy_file(sim / "test01_accel.csv", fdir / "runA.csv");

        // without a hint the format cannot be inferred
        auto bad = run_cli("analyze \"" + (fdir / "runA.csv").string() +
                           "\" --out \"" + (fdir / "out").string() + "\"");
        CHECK(bad.code == 2);
        CHECK(bad.err.find("--format") != std::string::npos);

        auto good = run_cli("analyze \"" + (fdir / "runA.csv").string() +
                            "\" --format accel --out \"" +
                            (fdir / "out").string() + "\"");
        REQUIRE_MESSAGE(good.code == 0, good.err);
        CHECK(slurp(fdir / "out" / "per_test.csv").find("exp,runA,accel,") !=
              std::string::npos);
        fs::remove_all(fdir);
    }

    SUBCASE("manual SZ override needs both endpoints") {
        const auto mdir = fresh_dir("skidkit_cli_e2e_manual");
        auto half = run_cli("analyze \"" +
                            (sim / "test01_accel.csv").string() +
                            "\" --sz-start 1.8 --out \"" + mdir.string() +
                            "\"");
        CHECK(half.code == 2);
        CHECK(half.err.find("--sz-end") != std::string::npos);

        auto both = run_cli("analyze \"" +
                            (sim / "test01_accel.csv").string() +
                            "\" --sz-start 1.8 --sz-end 3.0 --out \"" +
                            mdir.string() + "\"");
        CHECK_MESSAGE(both.code == 0, both.err);
        fs::remove_all(mdir);
    }

    fs::remove_all(sim);
    fs::remove_all(out);
}

TEST_CASE("analyze runs are byte-identical") {
    const auto sim = fresh_dir("skidkit_cli_det_sim");
    REQUIRE(run_cli("simulate --tests 4 --seed 3 --out \"" + sim.string() +
                    "\"")
                .code == 0);

    const auto a = fresh_dir("skidkit_cli_det_a");
    const auto b = fresh_dir("skidkit_cli_det_b");
    REQUIRE(run_cli("analyze \"" + sim.string() + "\" --out \"" + a.string() +
                    "\"")
                .code == 0);
    REQUIRE(run_cli("analyze \"" + sim.string() + "\" --out \"" + b.string() +
                    "\"")
                .code == 0);

    std::size_t checked = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const auto name = entry.path().filename();
        CHECK_MESSAGE(slurp(entry.path()) == slurp(b / name),
                      name.string() << " differs between runs");
        ++checked;
    }
    CHECK(checked == 12);
    fs::remove_all(sim);
    fs::remove_all(a);
    fs::remove_all(b);
}
