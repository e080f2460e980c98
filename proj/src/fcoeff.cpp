#include "so3/fcoeff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "so3/errors.hpp"
#include "so3/jones.hpp"
#include "so3/laplace.hpp"
#include "so3/numtheory.hpp"

namespace so3 {

namespace {

void check_params(long k, long a, long b) {
    if (k < 0) throw ValidationError("k must be nonnegative");
    if (a == 0) throw ValidationError("a must be nonzero");
    if (b <= 0) throw ValidationError("b must be positive");
    if (std::gcd(a, b) != 1) throw NonCoprime("gcd(a,b) must be 1");
}

// (t;t)_m with t = q^{1/a}
QLaurent tpoch(long a, long m) { return pochhammer(QLaurent::qpow(make_q(1, a)), make_q(1, a), m); }

// turn q^{E} {k}! X / (2 {2k+1}!) into its numerator over f_denominator
QLaurent numerator_from(long k, long a, const QLaurent& pre_times_x) {
    QLaurent v = pre_times_x * qfact(k);
    v = v.shifted(make_q((2 * k + 1) * (k + 1), 2)) * Q(-1, 2);
    QLaurent out;
    if (!try_div_exact(v, tpoch(a, 2 * k + 1), out))
        throw NonDivisible("F_k times its denominator is not a Laurent polynomial");
    return out;
}

}  // namespace

QLaurent f_denominator(long k, long a) {
    long A = std::abs(a);
    QLaurent d(1);
    for (long j = 1; j <= 2 * k + 1; ++j) {
        QLaurent s;
        for (long i = 0; i < A; ++i) s += QLaurent::qpow(make_q(i * j, A));
        d *= s;
    }
    return d;
}

QLaurent f_numerator_laplace(long k, long a, long b) {
    check_params(k, a, b);
    if (a < 0) throw ValidationError("f_numerator_laplace needs a > 0");
    QLaurent H = laplace_formal(y_product(k, b), make_q(-a, b));
    return numerator_from(k, a, H.shifted(make_q(-(b - 1) * (b - 1), 4 * a * b)));
}

MultiSumReport f_numerator_multisum(long k, long a, long b) {
    check_params(k, a, b);
    if (a < 0) throw ValidationError("f_numerator_multisum needs a > 0");
    WatsonSpec spec = watson_specialization(k, a, b);
    WatsonResult wr = watson_check(spec);
    auto [num, den] = watson_rhs(spec);
    WLaurent cof = galois_cofactor(den);
    WLaurent n = num * cof * (WLaurent(a, Q(1)) - WLaurent::mono(a, 0, -2 * k - 1));
    WLaurent d = den * cof;
    MultiSumReport rep;
    rep.w_free = n.is_w_free() && d.is_w_free();
    rep.identity_holds = wr.equal && wr.matches_closed_lhs;
    if (!rep.w_free) throw Inconsistent("the multi-sum is not independent of w");
    QLaurent x;
    if (!try_div_exact(n.to_t(), d.to_t(), x)) throw NonDivisible("the multi-sum does not reduce to a Laurent polynomial");
    x = substitute_power(x, make_q(1, a));
    long s = 2 * b * k + b + 1;
    rep.numerator = numerator_from(k, a, x.shifted(make_q(s * s - (b - 1) * (b - 1), 4 * a * b)));
    return rep;
}

QFrac c_kab(long k, long a, long b) {
    check_params(k, a, b);
    if (a < 0) throw ValidationError("c_kab needs a > 0");
    Q e = make_q(a * (5 * k + 2) * (k + 1), 4) + make_q(k * (k + 1) * (2 * b - 3), 2);
    QLaurent mono = QLaurent::monomial(Q(k % 2 ? -1 : 1), e / a);
    return QFrac(mono * tpoch(a, 2 * k + 1), qpoch(Q(1), 2 * k + 1));
}

QLaurent f_over_c(long k, long a, long b) {
    // C = mono / f_denominator, so F/C = numerator / mono
    check_params(k, a, b);
    if (a < 0) throw ValidationError("f_over_c needs a > 0");
    Q e = make_q(a * (5 * k + 2) * (k + 1), 4) + make_q(k * (k + 1) * (2 * b - 3), 2);
    QLaurent v = f_numerator_laplace(k, a, b).shifted(-e / a) * Q(k % 2 ? -1 : 1);
    if (!v.is_integral()) throw NonIntegral("F_k/C_{k,a,b} has non-integer coefficients");
    for (auto& [ex, c] : v.terms()) {
        (void)c;
        Q te = make_q(ex * a, v.denom());
        if (te.get_den() != 1) throw NonIntegral("F_k/C_{k,a,b} has a fractional power of t");
    }
    return v;
}

FCoeff f_coeff_raw(long k, long a, long b) {
    check_params(k, a, b);
    FCoeff f;
    f.k = k;
    f.a = a;
    f.b = b;
    f.den = f_denominator(k, a);
    long A = std::abs(a);
    QLaurent n = f_numerator_laplace(k, A, b);
    if (a < 0) {
        // D(t^{-1}) = t^{-(A-1)(k+1)(2k+1)} D(t)
        n = substitute_power(n, Q(-1)).shifted(make_q((A - 1) * (k + 1) * (2 * k + 1), A));
        if (k % 2 == 0) n = -n;
    }
    f.num = n;
    return f;
}

CycElem gauss_sum_rational(const Q& d, long r) {
    QuadFamily fam{{QLaurent(1), d / 4, Q(0), -d / 4}};
    return xi_sum(fam, r);
}

CycElem prop110x_lhs(long k, long a, long b, long r) {
    check_params(k, a, b);
    if (r > 2 * k + 1) {
        CycElem c(r, Q(1));
        for (long i = 1; i <= 2 * k + 1; ++i) c = c / ev(qint(i), r);
        for (long i = 1; i <= k; ++i) c *= ev(qint(i), r);
        return xi_sum(
            [&](long n) {
                CycElem v = c;
                for (long i = 0; i <= 2 * k; ++i) v *= ev(qint(n + k - i), r);
                if (v.is_zero()) return v;
                QLaurent rest = QLaurent::qpow(make_q(a * (1 - n * n), 4 * b)) *
                                (QLaurent::qpow(make_q(n, 2 * b)) - QLaurent::qpow(make_q(-n, 2 * b)));
                return v * ev(rest, r);
            },
            r);
    }
    return xi_sum(
        [&](long n) {
            QLaurent v = habiro_basis_value(n, k) * QLaurent::qpow(make_q(a * (1 - n * n), 4 * b)) *
                         (QLaurent::qpow(make_q(n, 2 * b)) - QLaurent::qpow(make_q(-n, 2 * b)));
            return ev(v, r);
        },
        r);
}

CycElem prop110x_rhs(const FCoeff& f, long r) {
    CycElem g = gauss_sum_rational(make_q(-f.a, f.b), r);
    QLaurent pre = QLaurent::monomial(Q(2), make_q((f.b - 1) * (f.b - 1), 4 * f.a * f.b));
    return ev(pre, r) * g * ev(f.value(), r);
}

namespace {

// sign and xi-exponent m with x == sign * xi^m, if any
bool unit_of(const CycElem& x, int& sign, long& m) {
    long r = x.order();
    for (long e = 0; e < r; ++e) {
        CycElem u = CycElem::xi_pow(r, e);
        if (x == u) {
            sign = 1;
            m = e;
            return true;
        }
        if (x == -u) {
            sign = -1;
            m = e;
            return true;
        }
    }
    return false;
}

}  // namespace

Pin pin_unit(long k, long a, long b) {
    FCoeff raw = f_coeff_raw(k, a, b);
    long h = 4 * std::abs(a) * b;
    struct Obs {
        long r;
        int sign;
        long m;
    };
    std::vector<Obs> obs;
    for (long r = 2 * k + 3; obs.size() < 3; r += 2) {
        if (std::gcd(r, h) != 1) continue;
        // the CRT step below needs pairwise coprime orders
        if (std::any_of(obs.begin(), obs.end(), [r](const Obs& o) { return std::gcd(o.r, r) != 1; })) continue;
        CycElem rhs = prop110x_rhs(raw, r);
        CycElem lhs = prop110x_lhs(k, a, b, r);
        if (rhs.is_zero()) {
            if (!lhs.is_zero()) throw Inconsistent("F_k vanishes at a root of unity where the left side does not");
            continue;
        }
        Obs o{r, 1, 0};
        if (!unit_of(lhs / rhs, o.sign, o.m))
            throw Inconsistent("the normalization of F_k is not a monomial unit at order " + std::to_string(r));
        obs.push_back(o);
        if (r > 400) throw Inconsistent("no usable orders to pin F_k");
    }
    if (obs[0].sign != obs[1].sign) throw Inconsistent("pinned sign differs between orders");
    // q^{u/h} evaluates to xi^{u h^{-1}}: u = m h mod r
    long r1 = obs[0].r, r2 = obs[1].r, M = r1 * r2;
    long u1 = mod_floor(obs[0].m * h, r1), u2 = mod_floor(obs[1].m * h, r2);
    long u = mod_floor(u1 + r1 * mod_floor((u2 - u1) * mod_inverse(r1, r2), r2), M);
    if (2 * u > M) u -= M;
    Pin p;
    p.sign = obs[0].sign;
    p.exponent = make_q(u, h);
    for (auto& o : obs) p.orders.push_back(o.r);
    const Obs& o3 = obs[2];
    if (o3.sign != p.sign || ev_exponent(p.exponent, o3.r) != o3.m)
        throw Inconsistent("pinned unit is not stable at order " + std::to_string(o3.r));
    return p;
}

FCoeff f_coeff(long k, long a, long b) {
    static std::mutex mu;
    static std::map<std::tuple<long, long, long>, FCoeff> cache;
    auto key = std::make_tuple(k, a, b);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FCoeff f = f_coeff_raw(k, a, b);
    f.pin = pin_unit(k, a, b);
    f.num = f.num.shifted(f.pin.exponent) * Q(f.pin.sign);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, f);
    return f;
}

}  // namespace so3
