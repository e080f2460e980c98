#include <doctest.h>

#include "so3/errors.hpp"
#include "so3/fcoeff.hpp"
#include "so3/qseries.hpp"
#include "so3/verify.hpp"

using namespace so3;

namespace {

QLaurent q(long e) { return QLaurent::qpow(Q(e)); }

Q power(const Q& t, long e) {
    Q r = 1, b = e < 0 ? Q(1 / t) : t;
    for (long i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}

Q at(const QLaurent& f, const Q& t) {
    REQUIRE(f.denom() == 1);
    Q s = 0;
    for (auto& [v, c] : f.terms()) s += c * power(t, v);
    return s;
}

Q poch(const Q& x, const Q& base, long m) {
    Q r = 1, f = x;
    for (long i = 0; i < m; ++i, f *= base) r *= 1 - f;
    return r;
}

// sum_{j=0}^{2k+1} (q^{-2k-1};q)_j/(q;q)_j t^{bj^2+(a-2b)kj+(a-b-1)j}(1-t^{2j-2k-1}), q = t^a
Q closed_lhs_brute(long k, long a, long b, const Q& t) {
    Q qq = power(t, a), s = 0;
    for (long j = 0; j <= 2 * k + 1; ++j)
        s += poch(power(qq, -2 * k - 1), qq, j) / poch(qq, qq, j) *
             power(t, b * j * j + (a - 2 * b) * k * j + (a - b - 1) * j) * (1 - power(t, 2 * j - 2 * k - 1));
    return s;
}

}  // namespace

TEST_CASE("special Bailey pair") {
    CHECK(bailey_special(0) == std::make_pair(QLaurent(1), QLaurent(1)));
    CHECK(bailey_special(1) == std::make_pair(-(QLaurent(1) + q(1)), QLaurent()));
    CHECK(bailey_special(2) == std::make_pair(q(1) * (QLaurent(1) + q(2)), QLaurent()));
    // alpha and beta are related by beta_n = sum_j alpha_j / ((q)_{n-j} (aq)_{n+j}) with a = 1
    for (long n = 0; n <= 6; ++n) {
        QFrac s;
        for (long j = 0; j <= n; ++j) s = s + QFrac(bailey_special(j).first, qpoch(Q(1), n - j) * qpoch(Q(1), n + j));
        CHECK(s == QFrac(bailey_special(n).second));
    }
}

TEST_CASE("Andrews identity") {
    AndrewsResult r1 = andrews_check(1, 1, {q(3)}, {q(5)});
    CHECK(r1.equal);
    CHECK(r1.residual == QFrac());
    CHECK(andrews_check(2, 2, {q(3), q(7)}, {q(5), q(-4)}).equal);
    CHECK(andrews_check(3, 4, {q(7), q(9), q(-5)}, {q(6), q(-3), q(11)}).equal);
    CHECK(andrews_check_at(2, 3, {make_q(3, 2), make_q(-5, 7)}, {make_q(7, 3), Q(5)}, make_q(2, 5)));
}

TEST_CASE("Andrews identity negative control") {
    BaileyPair perturbed = [](long n) {
        auto p = bailey_special(n);
        if (n == 1) p.second = QLaurent(1);
        return p;
    };
    AndrewsResult r = andrews_check(1, 1, {q(3)}, {q(5)}, perturbed);
    CHECK_FALSE(r.equal);
    CHECK(r.residual != QFrac());
}

TEST_CASE("Andrews random suite") {
    CheckReport rep = verify_andrews(2, 3, 5, 7);
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("generic Watson transformation") {
    CHECK(watson_generic_check(make_q(5, 7), make_q(1, 3), {Q(2)}, {Q(-3)}, 2));
    CHECK(watson_generic_check(make_q(5, 7), make_q(2, 5), {Q(2), make_q(7, 3)}, {Q(-3), make_q(-5, 2)}, 3));
    CHECK(watson_generic_check(make_q(-3, 4), make_q(1, 2), {Q(3), Q(5), make_q(9, 4)}, {Q(-2), Q(-7), make_q(11, 3)}, 2));
}

TEST_CASE("Watson specializations") {
    for (auto [a, b, k] : {std::tuple{1L, 1L, 0L}, {3L, 1L, 1L}, {2L, 2L, 1L}}) {
        WatsonResult w = watson_check(watson_specialization(k, a, b));
        CHECK(w.equal);
        CHECK(w.matches_closed_lhs);
    }
    CHECK(watson_specialization(1, 3, 1).pairs.size() + 1 == std::size_t(watson_specialization(1, 3, 1).p));
}

TEST_CASE("closed left side against direct summation") {
    for (long a = 1; a <= 5; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long k = 0; k <= 2; ++k)
                for (Q t : {make_q(1, 3), make_q(-2, 5), Q(3)})
                    CHECK(at(watson_closed_lhs(k, a, b), t) == closed_lhs_brute(k, a, b, t));
}

TEST_CASE("Watson suite and F_k / C integrality") {
    CheckReport rep = verify_watson(3, 2, 1);
    INFO(rep.to_text());
    CHECK(rep.ok());
    for (long k = 0; k <= 2; ++k) CHECK_NOTHROW(f_over_c(k, 3, 1));
}
