#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(std::string const& args, std::string const& env = "")
{
    std::string cmd = env + " " + std::string(CRITLINE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string const data_flag = std::string("--data ") + CRITLINE_DATA_DIR + " ";

} // namespace

TEST_CASE("analyze by coefficients")
{
    auto r = run("--json --deterministic analyze --coeffs 1,1,1");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["command"] == "analyze");
    CHECK(rep["results"]["cl"] == true);
    CHECK(rep["results"]["diamond"] == true);
    CHECK(rep["results"]["hstar"]["entries"] == json::array({"1", "0", "1"}));
    CHECK(rep["results"]["roots"][0]["imag"] == "0.866025");
    CHECK(rep["results"]["hibi"] == true);
    CHECK(!rep.contains("timing_ms"));
}

TEST_CASE("the three analyze input routes agree")
{
    auto a = run("--json --deterministic analyze --coeffs 1,1,1");
    auto b = run("--json --deterministic analyze --cs 1 --even");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(json::parse(a.out)["results"] == json::parse(b.out)["results"]);

    auto c = run("--json --deterministic analyze --hstar 1,1,1");
    REQUIRE(c.exit_code == 0);
    json rep = json::parse(c.out);
    CHECK(rep["results"]["roots"][0]["imag"] == "0.645497");
}

TEST_CASE("analyze accepts decimal and fractional rationals")
{
    auto a = run("--json --deterministic analyze --coeffs 0.25,1,1");
    auto b = run("--json --deterministic analyze --coeffs 1/4,1,1");
    REQUIRE(a.exit_code == 0);
    CHECK(json::parse(a.out)["results"] == json::parse(b.out)["results"]);
    CHECK(json::parse(a.out)["results"]["roots"][0]["multiplicity"] == 2);
}

TEST_CASE("hstar subcommand")
{
    auto r = run("--json --deterministic hstar --coeffs 1,3/2,3/2");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["results"]["hstar"]["entries"] == json::array({"1", "1", "1"}));

    auto inv = run("--json --deterministic hstar --hstar 1,1,1");
    REQUIRE(inv.exit_code == 0);
    CHECK(json::parse(inv.out)["results"]["polynomial"]["coeffs_ascending"] ==
          json::array({"1", "3/2", "3/2"}));
}

TEST_CASE("bounds table and csv")
{
    auto r = run("--csv bounds --degrees 2..3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "d,alpha_tilde,beta_sr,braun_develin,braun_disc\n"
                   "2,0.866025,0.645497,1.273240,3\n"
                   "3,2.397916,1.658312,2.864789,7.5\n");

    auto single = run("--json --deterministic --digits 3 bounds --degrees 1");
    REQUIRE(single.exit_code == 0);
    json rep = json::parse(single.out);
    CHECK(rep["results"]["rows"][0]["alpha_tilde"] == "0.000");

    // the full published block at three decimals
    auto table = run("--csv --digits 3 bounds --degrees 2..10");
    CHECK(table.out == "d,alpha_tilde,beta_sr,braun_develin,braun_disc\n"
                       "2,0.866,0.645,1.273,3\n"
                       "3,2.398,1.658,2.865,7.5\n"
                       "4,4.603,3.040,5.093,14\n"
                       "5,7.457,4.761,7.958,22.5\n"
                       "6,10.952,6.811,11.459,33\n"
                       "7,15.085,9.186,15.597,45.5\n"
                       "8,19.857,11.882,20.372,60\n"
                       "9,25.267,14.899,25.783,76.5\n"
                       "10,31.313,18.236,31.831,95\n");
}

TEST_CASE("cone with appendix check")
{
    auto r = run("--json --deterministic " + data_flag + "cone --degree 4 --check-appendix");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["results"]["is_lattice"] == true);
    CHECK(rep["results"]["appendix"]["inequalities_match"] == true);
    CHECK(rep["results"]["appendix"]["vertices_match"] == true);
    CHECK(rep["results"]["vertices"][0] == json::array({"22", "12"}));

    // beyond the bundled range: generation works, the regression errors
    auto gen = run("--json --deterministic cone --degree 16");
    REQUIRE(gen.exit_code == 0);
    CHECK(json::parse(gen.out)["results"]["vertices"].size() == 9);

    auto missing = run(data_flag + "cone --degree 16 --check-appendix");
    CHECK(missing.exit_code == 3);
}

TEST_CASE("interlace, omega, families subcommands")
{
    auto i = run("--json --deterministic interlace --dmax 4");
    REQUIRE(i.exit_code == 0);
    CHECK(json::parse(i.out)["results"]["all_pass"] == true);

    auto o = run("--json --deterministic omega --degree 3 --target 2");
    REQUIRE(o.exit_code == 0);
    json orep = json::parse(o.out);
    CHECK(orep["results"]["is_cl"] == true);
    CHECK(orep["results"]["diamond"] == true);
    CHECK(orep["results"]["vanishes_at_target"] == true);

    auto bad = run("omega --degree 2 --target 1");
    CHECK(bad.exit_code == 3);

    auto f = run("--json --deterministic families --prop36 --degree 7");
    REQUIRE(f.exit_code == 0);
    CHECK(json::parse(f.out)["results"]["pass"] == true);

    auto ten = run("--json --deterministic families --degree10 --m-min 2 --m-max 3");
    REQUIRE(ten.exit_code == 0);
    for (auto const& row : json::parse(ten.out)["results"]["rows"])
        CHECK(row["beats_simplex"] == true);
}

TEST_CASE("exit codes for bad input")
{
    CHECK(run("analyze --coeffs 1,x,1").exit_code == 2);
    CHECK(run("analyze --coeffs 1,1 --cs 1 --even").exit_code == 2);
    CHECK(run("analyze --cs 1").exit_code == 2);  // missing parity
    CHECK(run("--csv analyze --coeffs 1,1,1").exit_code == 2); // not tabular
    CHECK(run("bounds --degrees 0").exit_code == 3);
    CHECK(run("families --prop36 --degree 10").exit_code == 3);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("--version").exit_code == 0);
}

TEST_CASE("deterministic output is byte identical")
{
    std::string args = "--json --deterministic bounds --degrees 2..5";
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    // and the timing field appears without the flag
    auto timed = run("--json bounds --degrees 2");
    CHECK(json::parse(timed.out).contains("timing_ms"));
}

TEST_CASE("digits come from the environment when not given")
{
    auto r = run("--json --deterministic analyze --coeffs 1,1,1", "CRITLINE_DIGITS=3");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["results"]["roots"][0]["imag"] == "0.866");

    auto flag_wins = run("--json --deterministic --digits 4 analyze --coeffs 1,1,1",
                         "CRITLINE_DIGITS=3");
    CHECK(json::parse(flag_wins.out)["results"]["roots"][0]["imag"] == "0.8660");
}

TEST_CASE("json reports validate against the shipped schema")
{
    std::ifstream schema_in(std::string(CRITLINE_DATA_DIR) + "/report.schema.json");
    REQUIRE(schema_in.good());
    json schema;
    schema_in >> schema;

    for (std::string args : {"--json analyze --coeffs 1,1,1",
                             "--json --deterministic bounds --degrees 2",
                             "--json --deterministic interlace --dmax 2",
                             "--json --deterministic omega --degree 2 --target 1/2"}) {
        auto r = run(args);
        REQUIRE(r.exit_code == 0);
        json rep = json::parse(r.out);
        for (auto const& req : schema["required"])
            CHECK(rep.contains(req.get<std::string>()));
        // additionalProperties: false in the schema; mirror it here
        for (auto const& [key, value] : rep.items())
            CHECK(schema["properties"].contains(key));
        CHECK(rep["command"].is_string());
        CHECK(rep["inputs"].is_object());
        CHECK(rep["results"].is_object());
        CHECK(rep["precision"]["digits"].is_number_integer());
        CHECK(rep["version"].is_string());
        if (rep.contains("timing_ms"))
            CHECK(rep["timing_ms"].is_number_integer());
    }
}
