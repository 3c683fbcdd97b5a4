#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "qqueens/formulas.hpp"
#include "qqueens/quasipoly.hpp"

#ifndef QQUEENS_CLI
#error "QQUEENS_CLI must name the command-line binary"
#endif

using namespace qq;
using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + QQUEENS_CLI + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("count prints exact oracle values") {
        const auto r = run("count --piece 2,2 --q 2 --n 1..5 --format csv");
        CHECK(r.status == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() == 6);
        CHECK(l[0] == "piece,q,n,count");
        CHECK(l[3] == "Q^{22},2,3,8");
        CHECK(l[4] == "Q^{22},2,4,44");
        CHECK(l[5] == "Q^{22},2,5,140");
    }

    TEST_CASE("count with an explicit move list") {
        const auto r = run("count --moves '[[1,0]]' --q 2 --n 2 --format json");
        CHECK(r.status == 0);
        const auto j = json::parse(r.out);
        REQUIRE(j.size() == 1);
        CHECK(j[0]["count"] == "4");
    }

    TEST_CASE("bad piece arguments fail") {
        CHECK(run("count --piece 0,0 --q 2 --n 3").status != 0);
        CHECK(run("count --piece 2,2 --moves '[[1,0]]' --q 2 --n 3").status != 0);
        CHECK(run("count --moves '[[2,2]]' --q 2 --n 3").status != 0);
        CHECK(run("count --piece 1,1 --q 2 --n 5..3").status != 0);
        CHECK(run("count --piece 1,1 --q 2 --n 3 --format xml").status != 0);
    }

    TEST_CASE("budget exhaustion is flagged and partial output kept") {
        const auto r = run("count --piece 2,2 --q 3 --n 1..12 --budget 2000 --format csv");
        CHECK(r.status == 3);
        CHECK(r.out.find("budget exceeded") != std::string::npos);
        CHECK(r.out.find("Q^{22},3,4,24") != std::string::npos);
    }

    TEST_CASE("fit recovers the two-piece formula") {
        const auto r = run("fit --piece 1,0 --q 2 --n 1..7 --period-max 1 --format json");
        CHECK(r.status == 0);
        const auto j = json::parse(r.out);
        CHECK(j["period"] == 1);
        CHECK(quasipoly_from_json(j["quasipolynomial"]) == QuasiPolynomial(u2_closed(1, 0)));
    }

    TEST_CASE("fit recovers the queen's three-piece quasipolynomial") {
        const auto r = run("fit --piece 2,2 --q 3 --n 1..17 --format json");
        CHECK(r.status == 0);
        const auto j = json::parse(r.out);
        CHECK(j["period"] == 2);
        CHECK(quasipoly_from_json(j["quasipolynomial"]) == table2_row(2, 2));
    }

    TEST_CASE("fit with too few samples fails") {
        CHECK(run("fit --piece 2,2 --q 3 --n 1..9").status != 0);
    }

    TEST_CASE("verify scopes exit cleanly") {
        const auto t = run("verify --scope tables --n-max 6");
        CHECK(t.status == 0);
        CHECK(t.out.find("FAIL") == std::string::npos);
        const auto g = run("verify --scope gamma5-sign --format json");
        CHECK(g.status == 0);
        const auto j = json::parse(g.out);
        CHECK(j["passed"] == true);
        CHECK(j["checks"][0]["detail"].get<std::string>().find("oracle supports: table") != std::string::npos);
        CHECK(run("verify --scope nonsense").status != 0);
    }

    TEST_CASE("audit report") {
        const auto r = run("audit --report json --n-max 4");
        CHECK(r.status == 0);
        const auto j = json::parse(r.out);
        CHECK(j.size() > 100);
        for (const auto& rec : j) {
            CHECK(rec["match"] == true);
            CHECK(rec["brute"] == rec["closed"]);
        }
    }

    TEST_CASE("types for all partial queens") {
        const auto r3 = run("types --format csv");
        CHECK(r3.status == 0);
        CHECK(r3.out.find("Q^{22},3,4,2/2,36,36,36,pass") != std::string::npos);
        CHECK(r3.out.find("Q^{01},3,1,1/2,1,1,1,pass") != std::string::npos);
        const auto r2 = run("types --q 2 --piece 1,2 --format csv");
        CHECK(r2.status == 0);
        CHECK(r2.out.find("Q^{12},2,3,1/2,3,3") != std::string::npos);
    }

    TEST_CASE("cache file from the environment gives identical reruns") {
        const auto path = (std::filesystem::temp_directory_path() / "qqueens_cli_cache.jsonl").string();
        std::filesystem::remove(path);
        const std::string env = "QQUEENS_CACHE=" + path;
        const auto a = run("count --piece 1,2 --q 3 --n 1..6", env);
        CHECK(std::filesystem::exists(path));
        const auto b = run("count --piece 1,2 --q 3 --n 1..6 --budget 0", env);
        CHECK(a.status == 0);
        CHECK(b.status == 0);
        CHECK(a.out == b.out);
        std::filesystem::remove(path);
    }

    TEST_CASE("formulas output") {
        const auto r = run("formulas --piece 2,2 --q 3 --format json");
        CHECK(r.status == 0);
        const auto j = json::parse(r.out);
        bool found = false;
        for (const auto& row : j)
            if (row["quantity"] == "gamma1 at q=3") {
                found = true;
                CHECK(row["value"] == to_string(gamma1(2, 2, 3)));
            }
        CHECK(found);
        const auto tex = run("formulas --piece 1,1 --format latex");
        CHECK(tex.out.find("\\begin{tabular}") != std::string::npos);
    }
}

TEST_CASE("fit with shared top coefficients finds the q=4 queen period") {
    const auto r = run("fit --piece 2,2 --q 4 --n 1..32 --period-max 6 --shared-from 4 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.find("8,") != std::string::npos);
    CHECK(r.out.find("1/24") != std::string::npos);
    CHECK(r.out.find("-1051/30") != std::string::npos);
}
