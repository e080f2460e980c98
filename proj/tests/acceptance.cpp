// Acceptance criteria 1-10. One PASS/FAIL line per criterion; exit status 1 on any failure.

#include <chrono>
#include <iostream>
#include <numeric>
#include <string>

#include "oracles/oracles.hpp"
#include "so3/errors.hpp"
#include "so3/fcoeff.hpp"
#include "so3/habiro.hpp"
#include "so3/jones.hpp"
#include "so3/numtheory.hpp"
#include "so3/unified.hpp"
#include "so3/verify.hpp"
#include "so3/wrt.hpp"

using namespace so3;

namespace {

int failures = 0;

void report(int id, const std::string& title, const CheckReport& rep, double secs) {
    if (!rep.ok()) ++failures;
    std::cout << (rep.ok() ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << rep.passed
              << " checks passed, " << rep.failures.size() << " failed, " << secs << "s\n";
    for (std::size_t i = 0; i < rep.failures.size() && i < 10; ++i) std::cout << "    " << rep.failures[i] << "\n";
    std::cout.flush();
}

template <class F>
void criterion(int id, const std::string& title, F body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep{title};
    try {
        body(rep);
    } catch (const std::exception& e) {
        rep.record(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, title, rep, secs);
}

std::vector<SurgeryPresentation> manifold_suite() {
    std::vector<SurgeryPresentation> out;
    for (long a = 1; a <= 9; ++a)
        for (long b = 1; b <= a; ++b)
            if (std::gcd(a, b) == 1) out.push_back(make_lens(a, b));
    for (long p : {-2L, -1L, 1L, 2L})
        for (long a = -6; a <= 6; ++a)
            if (a != 0) out.push_back(make_twist(p, Fraction(a)));
    out.push_back(make_seifert(-1, {{2, 1}, {3, 1}, {5, 1}}));
    out.push_back(make_seifert(-1, {{2, 1}, {3, 1}, {7, 1}}));
    return out;
}

}  // namespace

int main() {
    const auto suite = manifold_suite();

    criterion(1, "integrality", [&](CheckReport& rep) {
        for (auto& m : suite) rep.merge(verify_integrality(m, odd_orders(3, 25)));
    });

    criterion(2, "Gauss sums", [&](CheckReport& rep) {
        for (long r : odd_orders(3, 45))
            for (long d = 1; d <= 2 * r; ++d) {
                CycElem g = gauss_sum(d, r);
                rep.record(g == oracle::gauss_brute(d, r), "oracle mismatch d=" + std::to_string(d) + " r=" + std::to_string(r));
            }
        rep.merge(verify_gauss(45));
    });

    criterion(3, "lens Hopf chain vs closed form", [&](CheckReport& rep) {
        for (long r : odd_orders(3, 13))
            for (long a = 1; a <= 8; ++a)
                for (long b = -a; b <= a; ++b) {
                    if (b == 0 || std::gcd(a, b) != 1 || std::gcd(a, r) != 1 || std::gcd(b, r) != 1) continue;
                    rep.record(tau(make_lens(a, b), r) == tau_lens_closed(a, b, r),
                               "lens " + std::to_string(a) + " " + std::to_string(b) + " r=" + std::to_string(r));
                }
    });

    // the identity is used, and holds, for k <= (r-3)/2; see README
    criterion(4, "Gauss-sum identity for F_k", [&](CheckReport& rep) {
        rep.merge(verify_prop110x({1, 2, 3, 5}, {1, 2, 3}, 3, odd_orders(3, 11)));
        long skipped = 0;
        for (long a : {1L, 2L, 3L, 5L})
            for (long b : {1L, 2L, 3L})
                for (long k = 0; k <= 3; ++k)
                    for (long r : odd_orders(3, 11))
                        if (std::gcd(a, b) == 1 && std::gcd(r, a * b) == 1 && 2 * k + 3 > r) ++skipped;
        std::cout << "    restricted to k <= (r-3)/2: " << skipped << " grid points with larger k not checked\n";
    });

    criterion(5, "unified vs WRT", [&](CheckReport& rep) {
        for (auto& m : suite) {
            long h = h1_order(m);
            for (long r : odd_orders(3, 15))
                if (std::gcd(r, h) == 1) rep.merge(verify_consistency(m, {r}, r - 2));
        }
    });

    criterion(6, "Andrews and Watson identities", [&](CheckReport& rep) {
        rep.merge(verify_andrews(3, 4, 20, 20240601));
        rep.merge(verify_watson(5, 3, 2));
    });

    criterion(7, "Dedekind sums", [&](CheckReport& rep) {
        rep.merge(verify_reciprocity(50));
        for (long a = 1; a <= 50; ++a)
            for (long b = -a; b <= a; ++b)
                if (b != 0 && std::gcd(a, b) == 1)
                    rep.record(dedekind_sum(b, a) == oracle::dedekind_brute(b, a),
                               "s(" + std::to_string(b) + "," + std::to_string(a) + ") oracle mismatch");
    });

    criterion(8, "Habiro divisibility and trefoil", [&](CheckReport& rep) {
        for (long p = -3; p <= 3; ++p) {
            if (p == 0) continue;
            for (long k = 0; k <= 8; ++k) {
                QLaurent h;
                rep.record(try_div_exact(twist_knot_coeff(p, k), habiro_factor(k), h),
                           "p=" + std::to_string(p) + " k=" + std::to_string(k) + " not divisible");
            }
        }
        // the right-handed trefoil is the mirror: t -> q^{-1}
        QLaurent v = oracle::jones_in_q(oracle::jones_from_pd(oracle::left_trefoil()), -1);
        rep.record(habiro_expand(twist_knot_table(1, 2), {2}) == qnum(2) * v, "trefoil colored Jones at n=2");
    });

    criterion(9, "Poincare sphere vs Sigma(2,3,7)", [&](CheckReport& rep) {
        auto p = make_seifert(-1, {{2, 1}, {3, 1}, {5, 1}});
        auto s = make_seifert(-1, {{2, 1}, {3, 1}, {7, 1}});
        HabiroElement ip = unified_invariant(p, 8), is = unified_invariant(s, 8);
        bool differ = false;
        for (long k = 0; k <= 8; ++k) differ = differ || ip.f[k].value() != is.f[k].value();
        rep.record(differ, "truncated unified invariants coincide at K=8");
        rep.record(eval_normalized(ip, 7) != eval_normalized(is, 7), "evaluations coincide at r=7");
        rep.record(tau(p, 7) != tau(s, 7), "tau coincides at r=7");
    });

    criterion(10, "continued fraction independence", [&](CheckReport& rep) {
        for (Fraction x : {Fraction(3, 2), Fraction(5, 3)}) {
            rep.record(hopf_chain(x) != hopf_chain(x, true), "the two expansions of " + x.str() + " coincide");
            for (auto m : {make_lens(x.num, x.den), make_twist(1, x)}) rep.merge(verify_chain_independence(m, {5, 7}));
        }
    });

    std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << "\n";
    return failures ? 1 : 0;
}
