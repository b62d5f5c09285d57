#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dsplit/cli.hpp"

using namespace dsplit;

namespace {

struct Out {
    int code;
    std::string out, err;
};

Out call(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = run(args, o, e);
    return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("parse_range") {
    CHECK(parse_range("2..4") == std::vector<long long>{2, 3, 4});
    CHECK(parse_range("1,3..4,7") == std::vector<long long>{1, 3, 4, 7});
    CHECK(parse_range("5") == std::vector<long long>{5});
    CHECK_THROWS(parse_range("4..2"));
    CHECK_THROWS(parse_range("a"));
    CHECK_THROWS(parse_range("1,,2"));
    CHECK_THROWS(parse_range(""));
}

TEST_CASE("levis with group orders") {
    auto r = call({"levis", "--n", "2", "--d", "4", "--q", "3"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    std::multiset<std::string> orders;
    for (const auto& x : j["labels"]) orders.insert(x["order"].get<std::string>());
    CHECK(orders == std::multiset<std::string>{"10", "51840"});
}

TEST_CASE("exit codes") {
    CHECK(call({"verify", "eq1", "--n", "2", "--d", "1..4"}).code == 0);
    CHECK(call({"verify", "nosuch"}).code == 2);
    CHECK(call({"levis", "--n", "2"}).code == 2);
    CHECK(call({"levis", "--n", "2..x", "--d", "1"}).code == 2);
    CHECK(call({"levis", "--n", "2", "--d", "1", "--q", "4"}).code == 2);
    CHECK(call({"relweyl", "--n", "5", "--d", "1"}).code == 2);
    CHECK(call({}).code == 2);
    // an internal error is reported as a failure record
    auto f = call({"verify", "torus", "--q", "3", "--d", "9"});
    CHECK(f.code == 1);
    auto j = nlohmann::json::parse(f.out);
    CHECK(j["pass"] == false);
    CHECK(!j["failures"].empty());
}

TEST_CASE("formats") {
    auto t = call({"--format", "tsv", "chartab", "--group", "S3"});
    CHECK(t.code == 0);
    CHECK(t.out.find("pass\ttrue") != std::string::npos);
    auto x = call({"--format", "text", "chartab", "--group", "S3"});
    CHECK(x.out.find("pass: true") != std::string::npos);
    CHECK(call({"--format", "xml", "chartab", "--group", "S3"}).code == 2);
}

TEST_CASE("determinism") {
    std::vector<std::string> a = {"kinva", "--n", "2..3", "--d", "1..4", "--random", "20", "--seed", "3"};
    auto r1 = call(a), r2 = call(a);
    CHECK(r1.code == r2.code);
    CHECK(r1.out == r2.out);
    auto s1 = call({"relweyl", "--n", "3", "--d", "2"}), s2 = call({"relweyl", "--n", "3", "--d", "2"});
    CHECK(s1.out == s2.out);
}

TEST_CASE("small cap skips instead of failing") {
    auto r = call({"--cap", "5", "kinva", "--n", "4", "--d", "4"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["skipped_over_cap"].get<long long>() > 0);
}
