#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sszeta::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("zeta") {
    const auto r = call({"zeta", "--p", "7", "--n", "1", "--curve", "y^2=x^5-1", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["r"] == 0);
    CHECK(j["s"] == 0);
    CHECK(j["q"] == 7);
    CHECK(j["J_order"] == 50);
    CHECK(j["weil"] == "x^4+49");
    CHECK(j["supersingular"] == true);
    // reserialising gives the same document
    CHECK(json::parse(j.dump()) == j);

    const auto counted = call({"--json", "zeta", "--p", "7", "--curve", "y^2=x^5-1", "--force-count"});
    REQUIRE(counted.code == 0);
    CHECK(json::parse(counted.out)["method"] == "count");
    CHECK(json::parse(counted.out)["r"] == 0);
}

TEST_CASE("ss-test") {
    auto r = call({"ss-test", "--p", "3", "--n", "1", "--curve", "y^2=x^5-x"});
    CHECK(r.code == 2);
    CHECK(r.out == "not supersingular\n");
    CHECK(r.err == "NotSupersingular\n");
    r = call({"ss-test", "--p", "7", "--curve", "y^2 = x^5 - 1"});
    CHECK(r.code == 0);
    CHECK(r.out == "supersingular\n");
}

TEST_CASE("crypto-exp") {
    auto r = call({"crypto-exp", "--p", "7", "--n", "1", "--r", "0", "--s", "-7", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["c_A"] == "6");
    r = call({"crypto-exp", "--p", "3", "--n", "3", "--curve", "y^2=x^5-1", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["c_A"] == "4");
    CHECK(j["large_primes"] == json::array({73}));
    CHECK(j["verified"] == true);
    // r = 1 is not a supersingular class over GF(7)
    r = call({"crypto-exp", "--p", "7", "--r", "1", "--s", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("NotSimpleOrUncovered", 0) == 0);
}

TEST_CASE("twists") {
    const auto r = call({"twists", "--family", "x5-1", "--p", "19", "--n", "2", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["twists"].size() == 10);
    for (const auto &e : j[0]["twists"]) CHECK(e["rebase_consistent"] == true);
    CHECK(call({"twists", "--family", "d8", "--p", "13", "--a", "2", "--json"}).code == 2);
    CHECK(call({"twists", "--family", "x7", "--p", "13"}).code == 1);
}

TEST_CASE("verify-appendix") {
    const auto r = call({"verify-appendix", "--p-list", "5,7", "--max-q", "49", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.size() > 10);
    bool t5 = false;
    for (const auto &e : j) {
        CHECK(e["pass"] == true);
        CHECK(e["predicted"]["r"] == e["oracle"]["r"]);
        if (e["table"] == 5 && e["row"] == 1 && e["p"] == 7 && e["n"] == 1) {
            t5 = true;
            CHECK(e["oracle"]["s"] == 0);
        }
    }
    CHECK(t5);
}

TEST_CASE("scan") {
    auto r = call({"scan", "--p", "2", "--n", "3", "--class", "char2", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).size() == 448);
    r = call({"scan", "--p", "3", "--class", "deg5", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(!j.empty());
    for (const auto &e : j) CHECK(e["supersingular"] == true);
    // same flags, same bytes
    CHECK(call({"scan", "--p", "3", "--class", "deg5", "--json"}).out == r.out);
    r = call({"scan", "--p", "5", "--n", "2", "--class", "deg6", "--budget", "1000"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("BudgetExceeded", 0) == 0);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == 1);
    CHECK(call({"zeta", "--p", "7"}).code == 1);
    CHECK(call({"zeta", "--p", "9", "--curve", "y^2=x^5-1"}).code == 1);
    CHECK(call({"zeta", "--p", "7", "--curve", "y^2=x^5-+"}).code == 1);
    CHECK(call({"scan", "--p", "7", "--class", "deg7"}).code == 1);
    CHECK(call({"bogus"}).code == 1);
    CHECK(call({"zeta", "--help"}).code == 0);
}
