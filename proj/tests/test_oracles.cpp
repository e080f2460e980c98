#include <doctest.h>

#include "oracles/oracles.hpp"

using namespace oracle;
using so3::make_q;

TEST_CASE("Kauffman bracket and Jones polynomials") {
    auto b = kauffman_bracket(left_trefoil());
    long terms = 0;
    for (auto& [e, c] : b) terms += c != 0;
    CHECK(terms == 3);
    CHECK(jones_from_pd(left_trefoil()) == std::map<long, long>{{-1, 1}, {-3, 1}, {-4, -1}});
    CHECK(jones_from_pd(figure_eight()) == std::map<long, long>{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
    // V(1) = 1 for knots
    for (auto pd : {left_trefoil(), figure_eight()}) {
        long s = 0;
        for (auto& [e, c] : jones_from_pd(pd)) s += c;
        CHECK(s == 1);
    }
}

TEST_CASE("number theory oracles") {
    CHECK(dedekind_brute(1, 3) == make_q(1, 18));
    CHECK(dedekind_brute(1, 1) == 0);
    CHECK(dedekind_brute(2, 5) == 0);
    CHECK(jacobi_brute(2, 3) == -1);
    CHECK(jacobi_brute(2, 7) == 1);
    CHECK(jacobi_brute(3, 9) == 0);
    CHECK(jacobi_brute(2, 15) == 1);
    // gamma_1 at r = 3: sum over odd n in (0,6) of xi^{(n^2-1)/4 * 4^{-1}}
    so3::CycElem g = gauss_brute(1, 3);
    CHECK(g * g.conj() == so3::CycElem(3, so3::Q(3)));
}

TEST_CASE("signatures by minors") {
    auto s = signature_by_minors({{2, 0}, {0, -3}});
    REQUIRE(s);
    CHECK(*s == std::pair{1, 1});
    CHECK_FALSE(signature_by_minors({{0, 1}, {1, 0}}));
    s = signature_by_minors({{-1, 0, 0}, {0, -2, 0}, {0, 0, -5}});
    REQUIRE(s);
    CHECK(*s == std::pair{0, 3});
}

TEST_CASE("power series helpers") {
    CHECK(binomial_series(so3::Q(2), 3) == std::vector<so3::Q>{1, 2, 1, 0});
    auto inv = series_div({1, 0, 0, 0}, {1, 1, 0, 0});
    inv.resize(4);
    CHECK(inv == std::vector<so3::Q>{1, -1, 1, -1});
    auto p = series_mul(binomial_series(make_q(1, 2), 5), binomial_series(make_q(1, 2), 5));
    p.resize(6);
    CHECK(p == binomial_series(so3::Q(1), 5));
    CHECK(laplace_by_moments(so3::Q(0), so3::Q(3), 3) == std::vector<so3::Q>{1, 0, 0, 0});
    // q^{-1} = e^{-h} for beta = 1, d = 1
    CHECK(laplace_by_moments(so3::Q(1), so3::Q(1), 3) == std::vector<so3::Q>{1, -1, make_q(1, 2), make_q(-1, 6)});
    auto l = lens_normalized_series(1, 1, 3);
    CHECK(l == std::vector<so3::Q>{1, 0, 0, 0});
}
