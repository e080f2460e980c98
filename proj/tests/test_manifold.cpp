#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "so3/errors.hpp"
#include "so3/manifold.hpp"

using namespace so3;

TEST_CASE("parsing") {
    auto m = parse_manifold("lens 5 2");
    REQUIRE(std::holds_alternative<Lens>(m.v));
    CHECK(std::get<Lens>(m.v).a == 5);
    CHECK(std::get<Lens>(m.v).b == 2);
    CHECK_THROWS_AS(parse_manifold("lens 4 2"), ValidationError);

    auto p = parse_manifold("seifert -1 (2,1) (3,1) (5,1)");
    REQUIRE(std::holds_alternative<Seifert>(p.v));
    CHECK(std::get<Seifert>(p.v).euler() == make_q(1, 30));
    CHECK(h1_order(p) == 1);

    auto t = parse_manifold("twist -2 f=5/3");
    REQUIRE(std::holds_alternative<TwistSurgery>(t.v));
    CHECK(std::get<TwistSurgery>(t.v).p == -2);
    CHECK(std::get<TwistSurgery>(t.v).framing == Fraction(5, 3));
    CHECK(h1_order(t) == 5);
    CHECK(describe(t) == "twist -2 f=5/3");
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_manifold("lens 5 x");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 7);
    }
    CHECK_THROWS_AS(parse_manifold("torus 1"), ParseError);
    CHECK_THROWS_AS(parse_manifold("twist 0 f=1"), ValidationError);
    CHECK_THROWS_AS(h1_order(make_twist(1, Fraction(0))), NotQHS);
}

TEST_CASE("connected sums and tables") {
    auto s = parse_manifold("sum { lens 3 1 ; twist 1 f=2 }");
    REQUIRE(std::holds_alternative<ConnectedSum>(s.v));
    CHECK(h1_order(s) == 6);

    HabiroCoefficients table = twist_knot_table(2, 3);
    auto path = std::filesystem::temp_directory_path() / "so3_table_test.json";
    std::ofstream(path) << table.to_json().dump();
    auto a = parse_manifold("algsplit [f1=3] table=" + path.string());
    REQUIRE(std::holds_alternative<AlgSplit>(a.v));
    CHECK(std::get<AlgSplit>(a.v).framings == std::vector<Fraction>{Fraction(3)});
    CHECK(std::get<AlgSplit>(a.v).table.at({2}) == table.at({2}));
    std::filesystem::remove(path);

    TableLoader fake = [&](const std::string&) { return table; };
    auto b = parse_manifold("algsplit [f1=3] table=whatever", fake);
    CHECK(std::get<AlgSplit>(b.v).table.at({1}) == table.at({1}));
}
