// End-to-end checks of the czsplit binary: exit codes, JSON output shape
// and byte-determinism of the result block. The binary path comes from the
// CZSPLIT_BIN environment variable (set by ctest).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CZSPLIT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CZSPLIT_BIN must point at the czsplit binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), std::move(out)};
}

json result_block(const std::string& text) {
    json doc = json::parse(text);
    doc.erase("meta");
    return doc;
}

} // namespace

TEST_CASE("factor subcommand: documented examples") {
    auto r = run_cli("factor --field \"gf(2,4)\" --poly \"z^3+z\"");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    REQUIRE(doc["factors"].size() == 2);
    CHECK(doc["factors"][0]["poly"] == "0,1"); // z
    CHECK(doc["factors"][0]["mult"] == 1);
    CHECK(doc["factors"][1]["poly"] == "1,1"); // (z+1)^2
    CHECK(doc["factors"][1]["mult"] == 2);

    auto r7 = run_cli("factor --field \"gf(7,1)\" --poly \"z^2+6\"");
    CHECK(r7.exit_code == 0);
    json doc7 = json::parse(r7.out);
    REQUIRE(doc7["factors"].size() == 2);
    CHECK(doc7["factors"][0]["poly"] == "1,1"); // z+1 = z-6
    CHECK(doc7["factors"][1]["poly"] == "6,1"); // z+6 = z-1
}

TEST_CASE("malformed input exits 2 with no partial output") {
    auto r = run_cli("factor --field \"gf(2,4)\" --poly \"z^^2\"");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());

    auto r2 = run_cli("factor --field \"gf(4,1)\" --poly \"z\"");
    CHECK(r2.exit_code == 2);
    CHECK(r2.out.empty());

    auto r3 = run_cli("verify no-such-experiment --field \"gf(2,4)\"");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("verify exits 0 on pass") {
    auto r = run_cli("verify n-small --field \"gf(2,4)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS: n-small") != std::string::npos);

    auto rj = run_cli("verify m --field \"gf(2,6)\" --output json");
    CHECK(rj.exit_code == 0);
    json doc = json::parse(rj.out);
    CHECK(doc["passed"] == true);
}

TEST_CASE("identical run configuration gives byte-identical result blocks") {
    const std::string cmds[] = {
        "factor --field \"gf(3,2)\" --poly \"z^6+4*z^2+1\" --seed 9",
        "charsum --field \"gf(2,4)\"",
        "simulate --field \"gf(2,8)\" --t 2 --trials 500 --seed 3",
        "split --field \"gf(2,4)\" --poly \"z^2+z+6\" --seed 5",
        // threaded sweeps reduce deterministically
        "verify na --field \"gf(2,4)\" --s 2 --threads 3 --output json",
        "verify m --field \"gf(2,6)\" --threads 2 --output json",
    };
    for (const auto& cmd : cmds) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.exit_code == b.exit_code);
        CHECK(result_block(a.out) == result_block(b.out));
    }
}

TEST_CASE("charsum records carry field, q, beta and the Eisenstein value") {
    auto r = run_cli("charsum --field \"gf(2,4)\" --beta 1");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    bool found_pair = false;
    for (const auto& rec : doc["records"]) {
        CHECK(rec["field"] == "gf(2,4)");
        CHECK(rec["q"] == 3);
        if (rec["kind"] == "pair_sum") {
            found_pair = true;
            CHECK(rec["beta"] == 1);
            CHECK(rec["value"]["a"] == -1);
            CHECK(rec["value"]["b"] == 0);
        }
        if (rec["kind"] == "gauss_sum") {
            CHECK(rec["value"]["a"] == -4);
            CHECK(rec["value"]["b"] == 0);
        }
    }
    CHECK(found_pair);
}

TEST_CASE("split honors --s and --validate") {
    // z^4+z+1 = (z^2+z+2)(z^2+z+3) over GF(4): two irreducible quadratics.
    auto r = run_cli("split --field \"gf(2,2)\" --poly \"z^4+z+1\" --s 2 "
                     "--strategy direct --validate");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["factors"].size() == 2);
    CHECK(doc["factors"][0]["poly"] == "2,1,1");
    CHECK(doc["factors"][1]["poly"] == "3,1,1");

    auto bad = run_cli("split --field \"gf(2,4)\" --poly \"z^2\" --validate");
    CHECK(bad.exit_code == 2); // z divides sigma

    auto invalid = run_cli("split --field \"gf(2,4)\" --poly \"z^2+1\" --validate");
    CHECK(invalid.exit_code == 2); // (z+1)^2 is not squarefree
}
