#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles/oracles.hpp"
#include "so3/errors.hpp"
#include "so3/numtheory.hpp"

using namespace so3;

TEST_CASE("jacobi symbol") {
    CHECK(jacobi(1, 9) == 1);
    CHECK(jacobi(3, 9) == 0);
    CHECK(jacobi(2, 15) == 1);
    CHECK_THROWS(jacobi(1, 8));
    for (long r = 1; r <= 61; r += 2)
        for (long d = -30; d <= 30; ++d) CHECK(jacobi(d, r) == oracle::jacobi_brute(d, r));
}

TEST_CASE("jacobi multiplicativity") {
    std::mt19937_64 g(5);
    std::uniform_int_distribution<long> dd(-50, 50), rr(0, 40);
    for (int i = 0; i < 200; ++i) {
        long a = dd(g), b = dd(g), r = 2 * rr(g) + 1;
        CHECK(jacobi(a * b, r) == jacobi(a, r) * jacobi(b, r));
    }
}

TEST_CASE("dedekind sum") {
    CHECK(dedekind_sum(5, 1) == 0);
    CHECK(dedekind_sum(5, -1) == 0);
    CHECK(dedekind_sum(1, 3) == make_q(1, 18));
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK_THROWS(dedekind_sum(2, 4));
    for (long a = -25; a <= 25; ++a)
        for (long b = -12; b <= 12; ++b)
            if (a != 0 && std::gcd(a, b) == 1) CHECK(dedekind_sum(b, a) == oracle::dedekind_brute(b, a));
}

TEST_CASE("dedekind reciprocity and 3s(1,a)") {
    for (long a = 2; a <= 50; ++a)
        for (long b = 1; b < a; ++b)
            if (std::gcd(a, b) == 1)
                CHECK(12 * (dedekind_sum(a, b) + dedekind_sum(b, a)) ==
                      make_q(a, b) + make_q(b, a) + make_q(1, a * b) - 3);
    for (long a = -50; a <= 50; ++a)
        if (a != 0) CHECK(3 * dedekind_sum(1, a) == make_q(1, 2 * a) + make_q(a - 3 * sign(a), 4));
}

TEST_CASE("negative continued fractions") {
    CHECK(neg_continued_fraction(Fraction(-1, 3)) == std::vector<long>{3});
    CHECK(neg_continued_fraction(Fraction(1, 2)) == std::vector<long>{-2});
    CHECK(neg_continued_fraction(Fraction(2, 3)) == std::vector<long>{2, -1});
    for (long a = -30; a <= 30; ++a)
        for (long b = 1; b <= 12; ++b) {
            if (a == 0 || std::gcd(a, b) != 1) continue;
            Fraction x(a, b);
            CHECK(neg_continued_fraction_value(neg_continued_fraction(x)) == x.value());
            CHECK(neg_continued_fraction_value(neg_continued_fraction_alt(x)) == x.value());
        }
}

TEST_CASE("fractions") {
    CHECK(Fraction::parse("3/2") == Fraction(3, 2));
    CHECK(Fraction::parse("-5") == Fraction(-5, 1));
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(3, 9), NonCoprime);
}
