#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "collatz/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = collatz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream f(std::string(COLLATZ_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "missing golden file " << name);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void check_golden(std::vector<std::string> args, const std::string& name) {
    const Result r = run(std::move(args));
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == golden(name));
}

}  // namespace

TEST_CASE("golden outputs") {
    check_golden({"--format", "csv", "orbit", "9", "--steps", "3"}, "orbit_9_steps3.csv");
    check_golden({"--format", "json", "orbit", "9", "--steps", "3"}, "orbit_9_steps3.json");
    check_golden({"--format", "json", "orbit", "1", "--steps", "5"}, "orbit_1_steps5.json");
    check_golden({"--format", "csv", "construct", "--direction", "inc", "--n", "7", "--k", "1"},
                 "construct_inc_n7_k1.csv");
    check_golden({"--format", "json", "construct", "--direction", "dec", "--n", "3", "--m", "2"},
                 "construct_dec_n3_m2.json");
    check_golden({"figure1"}, "figure1_default.csv");
    check_golden({"--format", "json", "rhythm", "9", "--n", "3", "--enumerate", "4"}, "rhythm_9_n3_enum4.json");
    check_golden({"--format", "csv", "rhythm", "9", "--n", "3", "--enumerate", "4"}, "rhythm_9_n3_enum4.csv");
    check_golden({"--format", "json", "verify", "--lo", "1", "--hi", "10000", "--workers", "3"},
                 "verify_1_10000.json");
    check_golden({"--format", "csv", "verify", "--lo", "1", "--hi", "10000", "--workers", "1", "--kernel", "scalar"},
                 "verify_1_10000.csv");
    check_golden({"--format", "csv", "census", "255", "--horizon", "8"}, "census_255_h8.csv");
    check_golden({"--format", "json", "cycle", "9", "--steps", "100"}, "cycle_9.json");
}

TEST_CASE("global flags work after the subcommand") {
    check_golden({"orbit", "9", "--steps", "3", "--format", "csv"}, "orbit_9_steps3.csv");
    check_golden({"construct", "--direction", "inc", "--n", "7", "--k", "1", "--format", "csv"},
                 "construct_inc_n7_k1.csv");
}

TEST_CASE("encodings are byte-stable across runs") {
    const std::vector<std::string> args{"--format", "json", "rhythm", "27", "--n", "6", "--enumerate", "7"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("orbit subcommand") {
    const Result r = run({"orbit", "1", "--steps", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("terminated: yes") != std::string::npos);

    const Result zero = run({"orbit", "0"});
    CHECK(zero.code == 2);
    CHECK(zero.err.find("positive integer") != std::string::npos);

    CHECK(run({"orbit", "-5"}).code == 2);
    CHECK(run({"orbit", "2^64+1"}).code == 2);
    CHECK(run({"orbit", "abc"}).code == 2);
    CHECK(run({"orbit", "9", "--steps", "0"}).code == 2);
}

TEST_CASE("construct subcommand") {
    const Result dec = run({"construct", "--direction", "dec", "--n", "3", "--m", "2"});
    CHECK(dec.code == 0);
    CHECK(dec.out.find("sequence: 129 97 73 55") != std::string::npos);
    CHECK(dec.out.find("predicted final: 55") != std::string::npos);

    CHECK(run({"construct", "--direction", "dec", "--n", "2", "--m", "1"}).code == 2);
    CHECK(run({"construct", "--direction", "dec", "--n", "2"}).code == 2);
    CHECK(run({"construct", "--direction", "sideways", "--n", "2"}).code == 2);
    CHECK(run({"construct", "--direction", "inc", "--n", "2", "--m", "3"}).code == 2);
    CHECK(run({"construct", "--direction", "inc", "--n", "0"}).code == 2);
}

TEST_CASE("figure1 subcommand") {
    const Result one = run({"figure1", "--n", "1", "--k-list", "1"});
    CHECK(one.code == 0);
    CHECK(one.out == "index,K=1\n1,3\n2,5\n");

    const Result two = run({"figure1", "--n", "7", "--k-list", "2"});
    CHECK(two.out.substr(two.out.rfind('\n', two.out.size() - 2) + 1) == "8,8747\n");

    const auto path = std::filesystem::temp_directory_path() / "collatz_figure1_test.csv";
    std::filesystem::remove(path);
    const Result file = run({"--out", path.string(), "figure1"});
    CHECK(file.code == 0);
    CHECK(file.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == golden("figure1_default.csv"));
    std::filesystem::remove(path);

    CHECK(run({"figure1", "--k-list", "1,0"}).code == 2);
}

TEST_CASE("rhythm subcommand") {
    const Result r = run({"rhythm", "9", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("D: 4\n") != std::string::npos);

    const Result too_short = run({"rhythm", "1", "--n", "2"});
    CHECK(too_short.code == 3);
    CHECK(too_short.err.find("OrbitTooShort") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    const Result five = run({"verify", "--lo", "5", "--hi", "5"});
    CHECK(five.code == 0);
    CHECK(five.out.find("all converged: yes") != std::string::npos);

    const Result bad = run({"verify", "--lo", "10", "--hi", "5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("invalid range") != std::string::npos);

    CHECK(run({"verify", "--lo", "20", "--hi", "40", "--budget", "5"}).code == 3);
    CHECK(run({"verify", "--lo", "1", "--hi", "5", "--kernel", "mmx"}).code == 2);
}

TEST_CASE("cycle, census and formula subcommands") {
    CHECK(run({"cycle", "27", "--steps", "10"}).code == 3);
    CHECK(run({"cycle", "27"}).code == 0);
    CHECK(run({"census", "5", "--horizon", "10"}).code == 0);

    const Result f = run({"--format", "json", "formula", "9", "--n", "2"});
    CHECK(f.code == 0);
    CHECK(f.out.find("\"xn\": \"7\"") != std::string::npos);
    CHECK(f.out.find("\"X\": \"2\"") != std::string::npos);

    const Result eq = run({"--format", "json", "formula", "255", "--n", "7", "--m", "1"});
    CHECK(eq.out.find("\"equal_step_X\": \"729\"") != std::string::npos);

    const Result given = run({"formula", "5", "--rhythm", "1"});
    CHECK(given.code == 0);
    CHECK(given.out.find("x_n: 8") != std::string::npos);

    CHECK(run({"formula", "1", "--n", "4"}).code == 3);
    CHECK(run({"formula", "9"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--format", "xml", "orbit", "9"}).code == 2);
    const Result h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("orbit") != std::string::npos);
}
