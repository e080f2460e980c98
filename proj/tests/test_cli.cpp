#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "commands.hpp"

using namespace so3::cli;

namespace {
int call(Options o, std::string& out) {
    std::ostringstream os, es;
    int rc = run(o, os, es);
    out = os.str() + es.str();
    return rc;
}
}  // namespace

TEST_CASE("wrt") {
    Options o;
    o.verb = "wrt";
    o.target = "lens 3 1";
    o.orders = {5};
    std::string s;
    CHECK(call(o, s) == Pass);
    CHECK(s.find("integral: yes") != std::string::npos);
    o.format = "json";
    CHECK(call(o, s) == Pass);
    auto j = nlohmann::json::parse(s);
    CHECK(j["results"][0]["r"] == 5);
    CHECK(j["results"][0]["integral"] == true);
}

TEST_CASE("input errors") {
    Options o;
    o.verb = "wrt";
    o.target = "lens 4 2";
    o.orders = {5};
    std::string s;
    CHECK(call(o, s) == InputError);
    o.target = "lens 3";
    CHECK(call(o, s) == InputError);
    o.target = "lens 3 1";
    o.orders = {4};
    CHECK(call(o, s) == InputError);
}

TEST_CASE("verify suites") {
    Options o;
    o.verb = "verify";
    std::string s;
    o.target = "lemma33";
    CHECK(call(o, s) == Pass);
    CHECK(s.find("lemma33: PASS") != std::string::npos);
    o.target = "reciprocity";
    CHECK(call(o, s) == Pass);
    o.target = "nonsense";
    CHECK(call(o, s) == InputError);
}

TEST_CASE("determinism") {
    Options o;
    o.verb = "unified";
    o.target = "twist 1 f=3/2";
    o.truncate = 3;
    o.format = "json";
    std::string a, b;
    CHECK(call(o, a) == Pass);
    CHECK(call(o, b) == Pass);
    CHECK(a == b);
}

TEST_CASE("check-integrality") {
    Options o;
    o.verb = "check-integrality";
    o.target = "twist 1 f=5";
    o.orders = {9, 15};
    std::string s;
    CHECK(call(o, s) == Pass);
}
