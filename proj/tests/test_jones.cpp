#include <doctest.h>

#include "oracles/oracles.hpp"
#include "so3/errors.hpp"
#include "so3/jones.hpp"

using namespace so3;

TEST_CASE("unknot expansion") {
    HabiroCoefficients u = unknot_table();
    for (long n = 1; n <= 8; ++n) CHECK(habiro_expand(u, {n}) == qnum(n));
}

TEST_CASE("only k = 0 survives at color 1") {
    for (long p : {-2L, -1L, 1L, 3L}) {
        HabiroCoefficients t = twist_knot_table(p, 4);
        CHECK(habiro_expand(t, {1}) == t.at({0}));
        CHECK(habiro_expand(t, {1}) == QLaurent(1));
    }
}

TEST_CASE("twist knot coefficients") {
    for (long p : {-3L, -2L, -1L, 1L, 2L, 3L}) CHECK(twist_knot_coeff(p, 0) == QLaurent(1));
    // K_1: J(P'_k) = (-1)^k q^{k(k+3)/2} {2k+1}!/({k}!{1})
    for (long k = 0; k <= 5; ++k) {
        QLaurent g = QLaurent::qpow(make_q(k * (k + 3), 2));
        if (k % 2) g = -g;
        CHECK(twist_knot_cyclotomic(1, k) == g);
        CHECK(twist_knot_coeff(1, k) == g * habiro_factor(k));
    }
}

TEST_CASE("Habiro divisibility for twist knots") {
    for (long p = -3; p <= 3; ++p) {
        if (p == 0) continue;
        for (long k = 0; k <= 8; ++k) {
            QLaurent h;
            CHECK(try_div_exact(twist_knot_coeff(p, k), habiro_factor(k), h));
        }
    }
}

TEST_CASE("trefoil and figure eight against the Kauffman bracket") {
    // K_1 is the right-handed trefoil, V = t + t^3 - t^4, the mirror of the Knot Atlas diagram
    auto v_left = oracle::jones_from_pd(oracle::left_trefoil());
    CHECK(habiro_expand(twist_knot_table(1, 2), {2}) == qnum(2) * oracle::jones_in_q(v_left, -1));
    CHECK(oracle::jones_in_q(v_left, -1) == QLaurent::qpow(Q(1)) + QLaurent::qpow(Q(3)) - QLaurent::qpow(Q(4)));
    auto v8 = oracle::jones_from_pd(oracle::figure_eight());
    CHECK(habiro_expand(twist_knot_table(-1, 2), {2}) == qnum(2) * oracle::jones_in_q(v8, 1));
    CHECK(oracle::jones_in_q(v8, 1) == oracle::jones_in_q(v8, -1));
}

TEST_CASE("colored round trip") {
    for (long p : {-2L, 1L, 2L}) {
        HabiroCoefficients t = twist_knot_table(p, 5);
        std::vector<QLaurent> values;
        for (long n = 1; n <= 6; ++n) values.push_back(habiro_expand(t, {n}));
        HabiroCoefficients back = habiro_coeffs_from_colored(values, 6);
        for (long k = 0; k <= 5; ++k) CHECK(back.at({k}) == t.at({k}));
    }
    std::vector<QLaurent> unknot;
    for (long n = 1; n <= 5; ++n) unknot.push_back(qnum(n) * QLaurent(3));
    HabiroCoefficients c = habiro_coeffs_from_colored(unknot, 5);
    CHECK(c.at({0}) == QLaurent(3));
    for (long k = 1; k < 5; ++k) CHECK(c.at({k}).is_zero());
}

TEST_CASE("table validation and JSON") {
    HabiroCoefficients t = twist_knot_table(2, 3);
    CHECK_NOTHROW(t.validate());
    HabiroCoefficients back = HabiroCoefficients::from_json(t.to_json());
    for (long k = 0; k <= 3; ++k) CHECK(back.at({k}) == t.at({k}));
    HabiroCoefficients bad;
    bad.table[{1}] = QLaurent(1);
    CHECK_THROWS_AS(bad.validate(), NonDivisible);
}
