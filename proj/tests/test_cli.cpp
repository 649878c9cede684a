#include "ffrunner/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("ffrunner");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = ffr::cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json strip_timings(nlohmann::json j) {
    j.erase("timings");
    return j;
}

void check_golden(const std::string& name, const std::string& produced) {
    std::string path = std::string(FFRUNNER_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
    nlohmann::json want = nlohmann::json::parse(in);
    nlohmann::json got = nlohmann::json::parse(produced);
    if (got.is_object() && got.contains("timings")) got = strip_timings(got);
    if (want.is_object() && want.contains("timings")) want = strip_timings(want);
    CHECK_MESSAGE(got == want, "golden mismatch for ", name, "\nproduced: ", produced);
}

}  // namespace

TEST_CASE("covers command pinned at q=2") {
    auto r = run({"covers", "--q", "2", "--k", "1", "--speeds", "[1]"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["covers_all"] == false);
    CHECK(j["witness"] == nlohmann::json::array({1}));
    check_golden("covers_q2.json", r.out);
}

TEST_CASE("loneliness command pinned at q=2") {
    auto r = run({"loneliness", "--q", "2", "--speeds", "[1],[0,1],[1,1]"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exponent"] == 2);
    CHECK(j["witness"]["exponent"] == -2);
    check_golden("loneliness_q2.json", r.out);
}

TEST_CASE("loneliness direct engine matches the covering engine") {
    auto a = run({"loneliness", "--q", "2", "--speeds", "[1],[0,1],[1,1]"});
    auto b = run({"loneliness", "--q", "2", "--engine", "direct", "--speeds", "[1],[0,1],[1,1]"});
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    CHECK(ja["exponent"] == jb["exponent"]);
    CHECK(ja["witness"] == jb["witness"]);
}

TEST_CASE("min-cover command pinned at q=2 k=2") {
    auto r = run({"min-cover", "--q", "2", "--k", "2", "--max-deg", "2"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["min_size"] == 7);
    CHECK(j["conjectured"] == 7);
    check_golden("min_cover_q2.json", r.out);
}

TEST_CASE("sunflowers command pinned at q=2") {
    auto r = run({"sunflowers", "--q", "2", "--speeds",
                  "[1],[0,1],[1,1],[0,0,1],[1,0,1],[0,1,1],[1,1,1]"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["types"] == nlohmann::json::array({"TYPE_I"}));
    check_golden("sunflowers_q2.json", r.out);
}

TEST_CASE("gen-extremal command pinned at q=2") {
    auto r = run({"gen-extremal", "--q", "2", "--k", "1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 3);
    check_golden("gen_extremal_q2.json", r.out);
}

TEST_CASE("irreducibles command pinned at q=2") {
    auto r = run({"irreducibles", "--q", "2", "--degree", "2"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 1);
    CHECK(j["list"] == nlohmann::json::array({{1, 1, 1}}));
    check_golden("irreducibles_q2.json", r.out);
}

TEST_CASE("verify command pinned at q=2") {
    auto r = run({"verify", "--suite", "extremal-family", "--q", "2"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    check_golden("verify_extremal_q2.json", r.out);
}

TEST_CASE("reports are byte-identical across runs, timings aside") {
    auto a = run({"verify", "--suite", "extremal-family", "--q", "2"});
    auto b = run({"verify", "--suite", "extremal-family", "--q", "2"});
    auto ja = strip_timings(nlohmann::json::parse(a.out));
    auto jb = strip_timings(nlohmann::json::parse(b.out));
    CHECK(ja.dump() == jb.dump());

    auto c = run({"covers", "--q", "2", "--k", "1", "--speeds", "[1],[0,1]"});
    auto d = run({"covers", "--q", "2", "--k", "1", "--speeds", "[1],[0,1]"});
    CHECK(c.out == d.out);
}

TEST_CASE("human polynomial form parses like the coefficient list") {
    auto a = run({"covers", "--q", "2", "--k", "2", "--speeds", "T^2+T+1,[1,0,1]"});
    auto b = run({"covers", "--q", "2", "--k", "2", "--speeds", "[1,1,1],[1,0,1]"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    auto c = run({"covers", "--q", "3", "--k", "1", "--speeds", "2T+1"});
    auto d = run({"covers", "--q", "3", "--k", "1", "--speeds", "[1,2]"});
    CHECK(c.out == d.out);

    auto e = run({"covers", "--q", "3", "--k", "1", "--speeds", "T-1"});
    auto f = run({"covers", "--q", "3", "--k", "1", "--speeds", "[2,1]"});
    CHECK(e.out == f.out);
}

TEST_CASE("covers command pinned at q=4") {
    auto r = run({"covers", "--q", "4", "--k", "1", "--speeds", "[1],[0,1],[1,1],[2,1],[3,1]"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["covers_all"] == true);
    CHECK(j["per_polynomial_new"] == nlohmann::json::array({4, 3, 3, 3, 3}));
    check_golden("covers_q4.json", r.out);
}

TEST_CASE("extension fields echo the modulus in reports") {
    auto r = run({"irreducibles", "--q", "4", "--degree", "2", "--count-only"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["p"] == 2);
    CHECK(j["e"] == 2);
    CHECK(j["modulus"] == nlohmann::json::array({1, 1, 1}));
    CHECK(j["count"] == 6);
}

TEST_CASE("duplicate speeds warn on stderr") {
    auto r = run({"covers", "--q", "2", "--k", "1", "--speeds", "[1],[1]"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("duplicate") != std::string::npos);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["duplicates_dropped"] == 1);
}

TEST_CASE("exit codes") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"covers", "--q", "2", "--k", "1"}).code == 2);               // no speeds
    CHECK(run({"covers", "--q", "6", "--k", "1", "--speeds", "[1]"}).code == 2);  // not a prime power
    CHECK(run({"loneliness", "--q", "2", "--speeds", "bogus!"}).code == 2);
    auto cap = run({"covers", "--q", "2", "--k", "1", "--D", "45", "--speeds", "[1]"});
    CHECK(cap.code == 3);
    auto inexact = run({"min-cover", "--q", "3", "--k", "2", "--max-deg", "2", "--max-nodes", "2"});
    CHECK(inexact.code == 3);
    CHECK(run({"verify", "--suite", "extremal-family", "--q", "2"}).code == 0);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("malformed polynomial inputs are usage errors") {
    for (const char* bad : {"T^", "^2", "[1,", "T**2", "+", "4T"}) {
        auto r = run({"covers", "--q", "2", "--k", "1", "--speeds", bad});
        CHECK_MESSAGE(r.code == 2, "input '", bad, "' should be a usage error, got ", r.code);
    }
}

TEST_CASE("table format flattens the report") {
    auto r = run({"covers", "--q", "2", "--k", "1", "--format", "table", "--speeds", "[1]"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("covers_all: false") != std::string::npos);
}

TEST_CASE("verify --list names every suite") {
    auto r = run({"verify", "--list"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 13);
}

TEST_CASE("speeds file input") {
    std::string path = std::string(FFRUNNER_GOLDEN_DIR) + "/../speeds_tmp.json";
    {
        std::ofstream out(path);
        out << "[[1],[0,1],[1,1]]";
    }
    auto r = run({"loneliness", "--q", "2", "--speeds-file", path});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exponent"] == 2);
    std::remove(path.c_str());
}
