#include "so3/laplace.hpp"

#include <numeric>

#include "so3/errors.hpp"
#include "so3/numtheory.hpp"

namespace so3 {

NSeries to_nseries(const QuadFamily& f) {
    NSeries out;
    for (auto& m : f) {
        if (m.alpha != 0) throw ValidationError("Laplace transform needs a family without n^2 terms");
        QLaurent c = m.coeff.shifted(m.gamma);
        auto& slot = out[m.beta];
        slot += c;
        if (slot.is_zero()) out.erase(m.beta);
    }
    return out;
}

QuadFamily to_family(const NSeries& f) {
    QuadFamily out;
    for (auto& [beta, c] : f) out.push_back({c, Q(0), beta, Q(0)});
    return out;
}

NSeries nseries_mul(const NSeries& a, const NSeries& b) {
    NSeries out;
    for (auto& [ba, ca] : a)
        for (auto& [bb, cb] : b) {
            Q beta = ba + bb;
            auto& slot = out[beta];
            slot += ca * cb;
            if (slot.is_zero()) out.erase(beta);
        }
    return out;
}

QLaurent laplace_formal(const NSeries& f, const Q& d) {
    if (d == 0) throw ValidationError("Laplace transform needs d != 0");
    QLaurent out;
    for (auto& [beta, c] : f) out += c.shifted(-beta * beta / d);
    return out;
}

QLaurent laplace_formal(const QuadFamily& f, const Q& d) { return laplace_formal(to_nseries(f), d); }

CycElem laplace_at_root(const QuadFamily& f, long d, long r) {
    if (d == 0) throw ValidationError("Laplace transform needs d != 0");
    NSeries s = to_nseries(f);
    long c = std::gcd(d < 0 ? -d : d, r);
    long r1 = r / c, d1 = d / c;
    long d1s = r1 == 1 ? 0 : mod_inverse(d1, r1);
    CycElem out(r);
    for (auto& [beta, coeff] : s) {
        if (beta.get_den() != 1) throw ValidationError("laplace_at_root needs integer n-exponents");
        long a = beta.get_num().get_si();
        if (a % c != 0) continue;
        long a1 = a / c;
        long e = mod_floor(-mod_floor(a1 * a1, r1) * d1s, r1) * c;  // zeta^{-a1^2 d1*}, zeta = xi^c
        out += ev(coeff, r).times_xi_pow(e);
    }
    return out;
}

QLaurent y_c(long k, long b, long c) {
    if (k < 0 || c <= 0) throw ValidationError("y_c needs k >= 0 and c > 0");
    QLaurent s;
    for (long n = -(k / c); n <= (k + 1) / c; ++n) {
        QLaurent t = qbinom(2 * k + 1, k + n * c).shifted(Q(c * b * n * n));
        if (n % 2) t = -t;
        s += t;
    }
    return k % 2 ? -s : s;
}

QLaurent y_habiro(long k, long a) {
    if (k < 0 || a <= 0) throw ValidationError("y_habiro needs k >= 0 and a > 0");
    QLaurent s;
    for (long j = 0; j <= 2 * k + 1; ++j) {
        QLaurent t = qbinom(2 * k + 1, j).shifted(make_q((j - k) * (j - k), a));
        if (j % 2) t = -t;
        s += t;
    }
    return s;
}

namespace {

QLaurent s_term_num(long N, long c, long b, long n) {
    // q^{Ncn} (q^{-N};q)_{cn} (1+q^{cn}) q^{cbn^2}
    return qpoch(Q(-N), c * n) * (QLaurent(1) + QLaurent::qpow(Q(c * n))) * QLaurent::qpow(Q(N * c * n + c * b * n * n));
}

}  // namespace

QFrac s_n_formal(long N, long c, long b) {
    if (N <= 0 || c <= 0) throw ValidationError("S_N needs N > 0 and c > 0");
    long nmax = N / c;
    QLaurent den = qpoch(Q(N + 1), c * nmax);
    QLaurent num = den;
    for (long n = 1; n <= nmax; ++n) num += s_term_num(N, c, b, n) * qpoch(Q(N + 1 + c * n), c * (nmax - n));
    return QFrac(num, den);
}

CycElem s_n_at_root(long N, long c, long b, long r) {
    if (N <= 0 || c <= 0) throw ValidationError("S_N needs N > 0 and c > 0");
    CycElem s(r, Q(1));
    for (long n = 1; c * n <= N; ++n) {
        CycElem den = ev(qpoch(Q(N + 1), c * n), r);
        if (den.is_zero())
            throw PoleHit("S_N: (q^{N+1};q)_{cn} vanishes at order " + std::to_string(r) + " (N=" + std::to_string(N) +
                          ", c=" + std::to_string(c) + ", n=" + std::to_string(n) + ")");
        s += ev(s_term_num(N, c, b, n), r) / den;
    }
    return s;
}

NSeries y_product(long k, long b) {
    if (b <= 0) throw ValidationError("y_product needs b > 0");
    NSeries out{{make_q(1, 2 * b), QLaurent(1)}, {make_q(-1, 2 * b), QLaurent(-1)}};
    for (long i = -k; i <= k; ++i) {
        NSeries f{{make_q(1, 2), QLaurent::qpow(make_q(i, 2))}, {make_q(-1, 2), -QLaurent::qpow(make_q(-i, 2))}};
        out = nseries_mul(out, f);
    }
    return out;
}

}  // namespace so3
