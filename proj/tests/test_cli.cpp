// End-to-end checks of the command-line tool: exit-code contract, payload
// shapes, refusal wording, and byte-level determinism of JSON output.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(LIECOH_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json payload_of(const RunResult& r) {
    Json j = Json::parse(r.out);
    REQUIRE(j.contains("payload"));
    return j["payload"];
}

std::string sample(const std::string& name) { return std::string(SAMPLES_DIR) + "/" + name; }

} // namespace

TEST_CASE("exit codes follow the contract", "[cli]") {
    SECTION("computed report exits 0") {
        auto r = run("betti --catalog sl2r --format json");
        CHECK(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p["betti"] == Json::array({1, 0, 0, 1}));
        CHECK(p["route"] == "full");
    }
    SECTION("principled refusal exits 2 and names the missing hypothesis") {
        auto r = run("gh --catalog paper_ex1");
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("G/H̄ compact: missing") != std::string::npos);
        CHECK(r.out.find("Refused") != std::string::npos);
    }
    SECTION("input errors exit 1 with a structured payload") {
        auto r = run("betti --catalog no-such-algebra --format json");
        CHECK(r.exit_code == 1);
        auto p = payload_of(r);
        CHECK(p.contains("error"));
        CHECK(p.contains("message"));
    }
    SECTION("unexpected flags exit 1 with structured output") {
        auto r = run("betti --catalog su2 --frobnicate");
        CHECK(r.exit_code == 1);
        Json j = Json::parse(r.out);
        CHECK(j["error"] == "usage");
    }
}

TEST_CASE("gh verb computes the flagship quotients", "[cli]") {
    SECTION("paper_ex2 with the compactness assertion") {
        auto r = run("gh --catalog paper_ex2 --assume-compact-quotient --format json");
        REQUIRE(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p["verdict"] == "Computed");
        CHECK(p["theorem"] == "Thm1.5");
        CHECK(p["betti"] == Json::array({1, 1, 0, 1, 1}));
        REQUIRE(p.contains("cross_checks"));
        for (const auto& c : p["cross_checks"]) CHECK(c["equal"] == true);
    }
    SECTION("paper_ex1 computes once compactness is asserted") {
        auto r = run("gh --catalog paper_ex1 --assume-compact-quotient --format json");
        REQUIRE(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p["theorem"] == "Thm1.5");
        CHECK(p["betti"] == Json::array({1, 1}));
    }
    SECTION("refused reports carry no betti table") {
        auto r = run("gh --catalog paper_ex1 --format json");
        REQUIRE(r.exit_code == 2);
        auto p = payload_of(r);
        CHECK(p["verdict"] == "Refused");
        CHECK(p["theorem"] == "None");
        CHECK(!p.contains("betti"));
        CHECK(p["refusal_reason"] == "G/H̄ compact: missing");
        bool found = false;
        for (const auto& a : p["audit"])
            if (a["hypothesis"] == "G/H̄ compact") {
                found = true;
                CHECK(a["status"] == "failed");
            }
        CHECK(found);
    }
    SECTION("dense route dispatches ThmA.9") {
        auto r = run("gh --catalog tsu2 --assume-dense --format json");
        // tsu2's skew line is not an ideal: density is contradictory
        REQUIRE(r.exit_code == 2);
        CHECK(payload_of(r)["refusal_reason"].get<std::string>().find("inconsistent") !=
              std::string::npos);
    }
}

TEST_CASE("algebra and subalgebra files drive every complex", "[cli]") {
    const std::string file = "--file " + sample("heis3.json");
    auto betti_of = [&](const std::string& verb) {
        auto r = run(verb + " " + file + " --format json");
        REQUIRE(r.exit_code == 0);
        return payload_of(r)["betti"];
    };
    CHECK(betti_of("betti") == Json::array({1, 2, 2, 1}));
    CHECK(betti_of("quotient") == Json::array({1, 2, 1}));
    CHECK(betti_of("relative") == Json::array({1, 2, 1, 0}));
    // nilpotent but not abelian: the invariant route undercounts b2 (1 vs 2)
    CHECK(betti_of("invariant") == Json::array({1, 2, 1, 1}));

    SECTION("inline subalgebra rows override the file") {
        auto r = run("quotient --catalog heis3 --subalgebra '[[\"0\",\"0\",\"1\"]]' --format json");
        REQUIRE(r.exit_code == 0);
        CHECK(payload_of(r)["betti"] == Json::array({1, 2, 1}));
    }
    SECTION("non-closed rows are rejected") {
        // span{e1, e2} brackets onto e3, which the rows miss
        auto r = run("quotient --catalog heis3 --subalgebra "
                     "'[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"]]' --format json");
        CHECK(r.exit_code == 1);
        CHECK(payload_of(r)["error"] == "not-a-subalgebra");
    }
    SECTION("a subalgebra that is not an ideal cannot drive the quotient verb") {
        auto r = run("quotient --catalog heis3 --subalgebra '[[\"1\",\"0\",\"0\"]]' --format json");
        CHECK(r.exit_code == 1);
        CHECK(payload_of(r)["error"] == "not-an-ideal");
    }
    SECTION("representatives restricted to one degree") {
        auto r = run("betti " + file + " --degree 2 --representatives --format json");
        REQUIRE(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p["degree"] == 2);
        CHECK(p["betti"] == Json::array({2}));
        REQUIRE(p["representatives"].contains("2"));
        CHECK(p["representatives"]["2"].size() == 2);
    }
}

TEST_CASE("torus verb reports hull, averaging certificates and basic betti", "[cli]") {
    auto r = run("torus --file " + sample("plane_in_t3.json") + " --format json");
    REQUIRE(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p["n"] == 3);
    CHECK(p["closure_dim"] == 2);
    CHECK(p["k0_dim"] == 1);
    CHECK(p["betti"] == Json::array({1, 2, 1}));
    CHECK(p["certificates"]["identity_ok"] == true);
    CHECK(p["certificates"]["exactness_ok"] == true);
    CHECK(p["certificates"]["modes_checked"] == 6);

    SECTION("mode box is adjustable") {
        auto r2 = run("torus --file " + sample("plane_in_t3.json") +
                      " --mode-box 1 --format json");
        REQUIRE(r2.exit_code == 0);
        CHECK(payload_of(r2)["certificates"]["modes_checked"] == 2);
    }
}

TEST_CASE("e1 verb crosses invariant polynomials with basic cohomology", "[cli]") {
    auto r = run("e1 --catalog su2 --imax 4 --format json");
    REQUIRE(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p["invariant_poly_dims"] == Json::array({1, 0, 1, 0, 1}));
    CHECK(p["basic_betti"] == Json::array({1, 0, 0, 1}));
    auto table = p["table"];
    CHECK(table[2][2] == 1);
    CHECK(table[2][5] == 1);
    CHECK(table[1][3] == 0);
}

TEST_CASE("catalog listing is sorted and machine readable", "[cli]") {
    auto r = run("catalog --format json");
    REQUIRE(r.exit_code == 0);
    auto p = payload_of(r);
    REQUIRE(p.is_array());
    REQUIRE(p.size() >= 10);
    std::vector<std::string> names;
    for (const auto& e : p) names.push_back(e["name"].get<std::string>());
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const auto& e : p)
        if (e["name"] == "paper_ex2") CHECK(e["marked_subalgebra"] == true);
}

TEST_CASE("JSON output is byte-identical across runs", "[cli]") {
    const std::vector<std::string> matrix = {
        "betti --catalog sl2r --format json --representatives",
        "gh --catalog paper_ex2 --assume-compact-quotient --format json",
        "gh --catalog paper_ex1 --format json",
        "invariant --catalog so3 --format json --representatives",
        "torus --file " + sample("kronecker_t2.json") + " --format json --representatives",
        "e1 --catalog su2 --format json",
        "catalog --format json",
        "check --catalog paper_ex2 --format json",
    };
    for (const auto& cmd : matrix) {
        auto a = run(cmd);
        auto b = run(cmd);
        INFO(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("check verb audits structure without computing cohomology", "[cli]") {
    auto r = run("check --catalog sl2r --format json");
    REQUIRE(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p["jacobi"] == "ok");
    CHECK(p["structure"]["center_dim"] == 0);
    CHECK(p["structure"]["derived_dim"] == 3);
    CHECK(p["structure"]["unimodular"] == true);
    CHECK(p["compact_type"].get<std::string>().rfind("no:", 0) == 0);

    SECTION("scaled brackets leave compact type undecidable") {
        auto r2 = run("check --file " + sample("scaled_aff1.json") + " --format json");
        REQUIRE(r2.exit_code == 0);
        CHECK(payload_of(r2)["compact_type"].get<std::string>().rfind("undecidable", 0) == 0);
    }
}
