#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "uniratio/commands.hpp"
#include "uniratio/json_io.hpp"

using namespace uniratio;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string diag;
};

Run run(const RunConfig& config) {
    std::ostringstream out, diag;
    const int code = run_command(config, out, diag);
    return {code, out.str(), diag.str()};
}

std::string table2_path() {
    return std::string(UNIRATIO_SOURCE_DIR) + "/data/table2_reference.csv";
}

}  // namespace

TEST_CASE("limit-ratio emits the result schema") {
    RunConfig config;
    config.command = "limit-ratio";
    config.spec_arg = R"({"k":0,"l":0,"a":[3],"b":[1]})";
    const Run r = run(config);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["lc"].get<double>() == 1.0);
    CHECK(j["method"] == "exact");
    CHECK(j["mahler"].is_null());  // spec-backed input: no pair measure
    CHECK(j["intervals"].is_array());
    CHECK(j["crossings"].is_array());
}

TEST_CASE("limit-ratio computes the pair measure for table families") {
    RunConfig config;
    config.command = "limit-ratio";
    config.family_arg = R"({"family":"P","a":2,"b":3})";
    const Run r = run(config);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["lc"].get<double>() - 0.1328095098966884) < 1e-10);
    CHECK(std::abs(j["mahler"].get<double>() - 1.2554338662666087) < 1e-8);
}

TEST_CASE("exit codes") {
    RunConfig config;
    config.command = "limit-ratio";
    SUBCASE("malformed JSON is an input error") {
        config.spec_arg = "{broken";
        CHECK(run(config).code == 1);
    }
    SUBCASE("missing field is an input error") {
        config.spec_arg = R"({"k":0,"l":0,"a":[1]})";
        CHECK(run(config).code == 1);
    }
    SUBCASE("both spec and family is an input error") {
        config.spec_arg = R"({"k":0,"l":0,"a":[1],"b":[1]})";
        config.family_arg = R"({"family":"P","a":2,"b":3})";
        CHECK(run(config).code == 1);
    }
    SUBCASE("unknown family is an input error") {
        config.family_arg = R"({"family":"X","a":1,"b":1})";
        CHECK(run(config).code == 1);
    }
    SUBCASE("degenerate envelope exits 2") {
        config.spec_arg = R"({"k":0,"l":0,"a":[2],"b":[1]})";
        const Run r = run(config);
        CHECK(r.code == 2);
        CHECK(r.diag.find("degenerate-envelope") != std::string::npos);
    }
}

TEST_CASE("riemann method through the command layer") {
    RunConfig config;
    config.command = "limit-ratio";
    config.family_arg = R"({"family":"P","a":1,"b":3})";
    config.method = "riemann";
    config.points = 1000000;
    const Run r = run(config);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["method"] == "riemann");
    CHECK(std::abs(j["lc"].get<double>() - 1.0 / 3.0) < 1e-5);
    CHECK(j["mahler"].is_null());
}

TEST_CASE("verify produces the CSV contract") {
    RunConfig config;
    config.command = "verify";
    config.family_arg = R"({"family":"H","m":2})";
    config.n_list = {20, 40};
    const Run r = run(config);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("n,degree,C,abs_err,et_bound\n") != std::string::npos);
    CHECK(r.out.find("\r") == std::string::npos);  // LF endings only
    // data rows carry 17-significant-digit reals that round-trip
    std::istringstream lines(r.out);
    std::string line;
    bool saw_row = false;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
        saw_row = true;
        const auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
        REQUIRE(c2 != std::string::npos);
        const double c = std::stod(line.substr(c2 + 1));
        CHECK(c > 0.0);
        CHECK(c < 1.0);
    }
    CHECK(saw_row);
}

TEST_CASE("verify requires an n-list and a spec-backed input") {
    RunConfig config;
    config.command = "verify";
    config.family_arg = R"({"family":"H","m":2})";
    CHECK(run(config).code == 1);  // empty n-list
    config.n_list = {10};
    config.family_arg = R"({"family":"P","a":2,"b":3})";
    CHECK(run(config).code == 1);  // bivariate pair has no finite expansions
}

TEST_CASE("verify on the trivial centre emits all-zero error rows") {
    RunConfig config;
    config.command = "verify";
    config.spec_arg = R"({"k":0,"l":0,"a":[0],"b":[1]})";
    config.n_list = {5, 10};
    const Run r = run(config);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("5,10,0,0,0\n") != std::string::npos);
    CHECK(r.out.find("10,20,0,0,0\n") != std::string::npos);
}

TEST_CASE("verify exits 3 when a row violates its bound") {
    // a deliberately wrong reference limit: at n = 4000 the bound is ~0.23
    // while |C - 0.9| is ~0.74
    RunConfig config;
    config.command = "verify";
    config.family_arg = R"({"family":"H","m":2})";
    config.n_list = {4000};
    config.lc_ref = 0.9;
    const Run r = run(config);
    CHECK(r.code == 3);
    CHECK(r.out.find("BOUND VIOLATED") != std::string::npos);
}

TEST_CASE("verify oracle-only mode for non-palindromic specs") {
    RunConfig config;
    config.command = "verify";
    config.spec_arg = R"({"k":0,"l":2,"a":[0],"b":[-1,-1,1]})";
    config.n_list = {20};
    config.lc_ref = 0.0;
    const Run r = run(config);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("oracle-only") != std::string::npos);
    CHECK(r.out.find("20,44,0.045454545454545456,0.045454545454545456,") != std::string::npos);
}

TEST_CASE("commands are deterministic") {
    RunConfig config;
    config.command = "salem";
    config.m_range = {2, 6};
    const Run a = run(config);
    const Run b = run(config);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("tabular commands can emit JSON rows") {
    RunConfig config;
    config.command = "salem";
    config.m = 2;
    config.format = "json";
    const Run r = run(config);
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["m"] == 2);
    CHECK(doc[0]["b1"] == -3);
    CHECK(doc[0]["b2"] == 1);
    CHECK(doc[0]["alpha_residual"].get<double>() < 1e-10);

    config.format = "yaml";
    CHECK(run(config).code == 1);
}

TEST_CASE("table2 reproduces every supported row and skips sequence rows") {
    RunConfig config;
    config.command = "table2";
    config.data_path = table2_path();
    const Run r = run(config);
    REQUIRE(r.code == 0);

    int ok_rows = 0, skipped_rows = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("label,", 0) == 0) continue;
        if (line.find(",ok") != std::string::npos) {
            ++ok_rows;
            // lc_abs_err column (third from the end) stays tiny
            const auto tail = line.rfind(",ok");
            auto p2 = line.rfind(',', tail - 1);
            auto p1 = line.rfind(',', p2 - 1);
            const double lc_err = std::stod(line.substr(p1 + 1, p2 - p1 - 1));
            CHECK(lc_err < 1e-8);
        } else if (line.find(",skipped") != std::string::npos) {
            ++skipped_rows;
        }
    }
    CHECK(ok_rows == 38);
    CHECK(skipped_rows == 3);
}

TEST_CASE("table2 output is identical with and without worker threads") {
    RunConfig config;
    config.command = "table2";
    config.data_path = table2_path();
    setenv("UNIRATIO_THREADS", "1", 1);
    const Run serial = run(config);
    setenv("UNIRATIO_THREADS", "4", 1);
    const Run parallel = run(config);
    unsetenv("UNIRATIO_THREADS");
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("salem command closed-form residual columns") {
    RunConfig config;
    config.command = "salem";
    config.m = 2;
    const Run r = run(config);
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("2,", 0) != 0) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) f.push_back(item);
        REQUIRE(f.size() == 6);
        CHECK(f[1] == "-3");
        CHECK(f[2] == "1");
        CHECK(std::stod(f[4]) < 1e-10);
        CHECK(std::stod(f[5]) < 1e-10);
    }
}

TEST_CASE("hbounds command appends the conjecture row") {
    RunConfig config;
    config.command = "hbounds";
    config.m_range = {2, 5};
    const Run r = run(config);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("200,") != std::string::npos);
    std::istringstream lines(r.out);
    std::string line, last;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#') last = line;
    CHECK(last.rfind("200,", 0) == 0);
    CHECK(last.find("true") != std::string::npos);
    const double conj_err = std::stod(last.substr(last.rfind(',') + 1));
    CHECK(conj_err < 0.003);
}

TEST_CASE("JSON wire formats") {
    SUBCASE("spec field names are exact") {
        const auto spec = spec_from_json(json::parse(R"({"k":1,"l":0,"a":[-1,-1],"b":[1]})"));
        CHECK(spec.k == 1);
        CHECK(spec.a == std::vector<long long>{-1, -1});
        CHECK_THROWS_AS(spec_from_json(json::parse(R"({"K":1,"l":0,"a":[0,1],"b":[1]})")),
                        SpecError);
    }
    SUBCASE("family epsilon and m") {
        const auto f = family_from_json(json::parse(R"({"family":"S","a":1,"b":3,"epsilon":1})"));
        CHECK(f.epsilon == 1);
        CHECK_THROWS_AS(family_from_json(json::parse(R"({"family":"T"})")), SpecError);
    }
    SUBCASE("census schema") {
        RootCensus census;
        census.degree = 10;
        census.inside = 1;
        census.on_circle = 8;
        census.outside = 1;
        census.tolerance = 1e-7;
        const json j = census_to_json(census);
        CHECK(j["degree"] == 10);
        CHECK(j["inside"] == 1);
        CHECK(j["on_circle"] == 8);
        CHECK(j["outside"] == 1);
        CHECK(j["method"] == "modulus");
        CHECK(j["tolerance"].get<double>() == 1e-7);
    }
}
