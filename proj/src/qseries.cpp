#include "so3/qseries.hpp"

#include <functional>

#include "so3/errors.hpp"

namespace so3 {

std::pair<QLaurent, QLaurent> bailey_special(long n) {
    if (n < 0) throw ValidationError("Bailey pair index must be nonnegative");
    if (n == 0) return {QLaurent(1), QLaurent(1)};
    QLaurent a = QLaurent::qpow(Q(n * (n - 1) / 2)) * (QLaurent(1) + QLaurent::qpow(Q(n)));
    return {n % 2 ? -a : a, QLaurent()};
}

namespace {

// minimal field interface shared by the symbolic and the numeric evaluation
template <class T>
T pow_impl(const T& x, long e) {
    T r(1L), b = x;
    bool neg = e < 0;
    unsigned long m = neg ? -e : e;
    while (m) {
        if (m & 1) r = r * b;
        m >>= 1;
        if (m) b = b * b;
    }
    return neg ? T(1L) / r : r;
}

template <class T>
T poch_impl(const T& x, const T& base, long m) {
    T r(1L), f = x;
    for (long i = 0; i < m; ++i) {
        r = r * (T(1L) - f);
        f = f * base;
    }
    return r;
}

bool tzero(const Q& x) { return x == 0; }
bool tzero(const QFrac& x) { return x.is_zero(); }

Q tpow(const Q& x, long e) { return pow_impl(x, e); }
QFrac tpow(const QFrac& x, long e) { return pow_impl(x, e); }
Q tpoch(const Q& x, const Q& b, long m) { return poch_impl(x, b, m); }
QFrac tpoch(const QFrac& x, const QFrac& b, long m) { return poch_impl(x, b, m); }

Q tdiv(const Q& x, const Q& y) {
    if (y == 0) throw PoleHit("a denominator Pochhammer symbol vanishes");
    return x / y;
}
QFrac tdiv(const QFrac& x, const QFrac& y) {
    if (y.is_zero()) throw PoleHit("a denominator Pochhammer symbol vanishes");
    return x / y;
}

template <class T>
struct Andrews {
    long k, N;
    std::vector<T> b, c;
    T q;
    std::function<std::pair<T, T>(long)> pair;

    T lhs() const {
        T s(0L);
        for (long n = 0; n <= N; ++n) {
            T term = pair(n).first;
            if (tzero(term)) continue;
            if (n % 2) term = T(0L) - term;
            term = term * tpow(q, -(n * (n - 1) / 2) + k * n + N * n);
            term = term * tdiv(tpoch(tpow(q, -N), q, n), tpoch(tpow(q, N + 1), q, n));
            for (long i = 0; i < k; ++i) {
                T num = tpoch(b[i], q, n) * tpoch(c[i], q, n);
                T den = tpow(b[i], n) * tpow(c[i], n) * tpoch(tdiv(q, b[i]), q, n) * tpoch(tdiv(q, c[i]), q, n);
                term = term * tdiv(num, den);
            }
            s = s + term;
        }
        return s;
    }

    T rhs() const {
        const T& bk = b[k - 1];
        const T& ck = c[k - 1];
        T pre = tpoch(q, q, N) * tpoch(tdiv(q, bk * ck), q, N);
        pre = tdiv(pre, tpoch(tdiv(q, bk), q, N) * tpoch(tdiv(q, ck), q, N));
        T s(0L);
        std::vector<long> n(k, 0);
        std::function<void(long)> rec = [&](long i) {
            if (i == k) {
                T term = pair(n[0]).second;
                if (tzero(term)) return;
                long nk = n[k - 1];
                term = term * tpow(q, nk) * tpoch(tpow(q, -N), q, nk) * tpoch(bk, q, nk) * tpoch(ck, q, nk);
                term = tdiv(term, tpoch(tpow(q, -N) * bk * ck, q, nk));
                for (long j = 0; j + 1 < k; ++j) {
                    long d = n[j + 1] - n[j];
                    T num = tpow(q, n[j]) * tpoch(b[j], q, n[j]) * tpoch(c[j], q, n[j]) * tpoch(tdiv(q, b[j] * c[j]), q, d);
                    T den = tpow(b[j], n[j]) * tpow(c[j], n[j]) * tpoch(q, q, d) * tpoch(tdiv(q, b[j]), q, n[j + 1]) *
                            tpoch(tdiv(q, c[j]), q, n[j + 1]);
                    term = term * tdiv(num, den);
                }
                s = s + term;
                return;
            }
            long lo = i == 0 ? 0 : n[i - 1];
            for (long v = lo; v <= N; ++v) {
                n[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
        return pre * s;
    }
};

}  // namespace

AndrewsResult andrews_check(long k, long N, const std::vector<QLaurent>& b, const std::vector<QLaurent>& c,
                            const BaileyPair& pair) {
    if (k < 1 || N < 1) throw ValidationError("andrews_check needs k >= 1 and N >= 1");
    if (static_cast<long>(b.size()) != k || static_cast<long>(c.size()) != k)
        throw ValidationError("andrews_check needs k parameters b_i and c_i");
    Andrews<QFrac> A;
    A.k = k;
    A.N = N;
    for (auto& x : b) A.b.emplace_back(x);
    for (auto& x : c) A.c.emplace_back(x);
    A.q = QFrac(QLaurent::qpow(Q(1)));
    A.pair = [&pair](long n) {
        auto [al, be] = pair(n);
        return std::make_pair(QFrac(al), QFrac(be));
    };
    AndrewsResult r;
    r.lhs = A.lhs();
    r.rhs = A.rhs();
    r.residual = r.lhs - r.rhs;
    r.equal = r.residual.is_zero();
    return r;
}

bool andrews_check_at(long k, long N, const std::vector<Q>& b, const std::vector<Q>& c, const Q& q) {
    if (static_cast<long>(b.size()) != k || static_cast<long>(c.size()) != k)
        throw ValidationError("andrews_check_at needs k parameters b_i and c_i");
    Andrews<Q> A;
    A.k = k;
    A.N = N;
    A.b = b;
    A.c = c;
    A.q = q;
    A.pair = [&q](long n) -> std::pair<Q, Q> {
        if (n == 0) return {Q(1), Q(1)};
        Q a = tpow(q, n * (n - 1) / 2) * (1 + tpow(q, n));
        return {n % 2 ? Q(-a) : a, Q(0)};
    };
    return A.lhs() == A.rhs();
}

bool watson_generic_check(const Q& alpha, const Q& t, const std::vector<Q>& b, const std::vector<Q>& c, long N) {
    long p = static_cast<long>(b.size());
    if (p < 1 || static_cast<long>(c.size()) != p) throw ValidationError("watson_generic_check needs p >= 1 pairs");
    Q z = tpow(alpha, p) * tpow(t, p + N);
    for (long i = 0; i < p; ++i) z /= b[i] * c[i];
    Q lhs = 0;
    for (long n = 0; n <= N; ++n) {
        Q term = tdiv(tpoch(alpha, t, n) * (1 - alpha * tpow(t, 2 * n)), Q(1 - alpha));
        for (long i = 0; i < p; ++i)
            term *= tdiv(tpoch(b[i], t, n) * tpoch(c[i], t, n),
                         Q(tpoch(Q(alpha * t / b[i]), t, n) * tpoch(Q(alpha * t / c[i]), t, n)));
        term *= tdiv(tpoch(tpow(t, -N), t, n), Q(tpoch(t, t, n) * tpoch(Q(alpha * tpow(t, N + 1)), t, n)));
        lhs += term * tpow(z, n);
    }
    const Q& bp = b[p - 1];
    const Q& cp = c[p - 1];
    Q pre = tdiv(tpoch(Q(alpha * t), t, N) * tpoch(Q(alpha * t / (bp * cp)), t, N),
                 Q(tpoch(Q(alpha * t / bp), t, N) * tpoch(Q(alpha * t / cp), t, N)));
    Q s = 0;
    std::vector<long> m(p - 1, 0);
    std::function<void(long, long)> rec = [&](long i, long used) {
        if (i == p - 1) {
            long M = used;
            Q term = tdiv(tpoch(bp, t, M) * tpoch(cp, t, M) * tpoch(tpow(t, -N), t, M),
                          tpoch(Q(bp * cp * tpow(t, -N) / alpha), t, M));
            long Mi = 0;
            for (long j = 0; j + 1 < p; ++j) {
                long Mprev = Mi;
                Mi += m[j];
                Q num = tpow(t, m[j]) * tpow(Q(alpha * t), (p - j - 2) * m[j]) * tpoch(Q(alpha * t / (b[j] * c[j])), t, m[j]) *
                        tpoch(b[j], t, Mprev) * tpoch(c[j], t, Mprev);
                Q den = tpoch(t, t, m[j]) * tpoch(Q(alpha * t / b[j]), t, Mi) * tpoch(Q(alpha * t / c[j]), t, Mi) *
                        tpow(Q(b[j] * c[j]), Mprev);
                term *= tdiv(num, den);
            }
            s += term;
            return;
        }
        for (long v = 0; used + v <= N; ++v) {
            m[i] = v;
            rec(i + 1, used + v);
        }
    };
    rec(0, 0);
    return lhs == pre * s;
}

WatsonSpec watson_specialization(long k, long a, long b) {
    if (k < 0 || a < 1 || b < 1) throw ValidationError("watson_specialization needs k >= 0, a >= 1, b >= 1");
    WatsonSpec s;
    s.k = k;
    s.a = a;
    s.b = b;
    const long big = -2 * k - 1;
    auto fin = [&](WMono x, WMono y) { s.pairs.push_back({x, y}); };
    auto tk = [&] { s.pairs.push_back({WMono{1, 0, -k}, WMono{1, 0, -k}}); };
    if (a % 2 == 1) {
        long c = (a - 1) / 2;
        s.p = std::max(b, a + b - 2);
        for (long i = 1; i <= c; ++i) fin({1, i, big}, {1, -i, big});
        for (long i = c + 1; i <= a - 2; ++i) tk();
    } else if (a == 2) {
        s.p = b + 1;
        fin({-1, 0, big}, {-1, 0, -k});
    } else {
        long c = a / 2 - 1;
        s.p = a + b - 2;
        for (long i = 1; i < c; ++i) fin({1, i, big}, {1, -i, big});
        fin({1, c, big}, {-1, 0, -k});
        fin({-1, 0, big}, {1, -c, big});
        for (long i = c + 2; i <= a - 2; ++i) tk();
    }
    while (static_cast<long>(s.pairs.size()) < s.p - 1) s.pairs.push_back({std::nullopt, std::nullopt});
    if (static_cast<long>(s.pairs.size()) != s.p - 1) throw Error("internal: specialization size");
    return s;
}

namespace {

enum class Kind { Finite, TK, Inf };

Kind classify(const WatsonPair& pr, long k) {
    if (!pr.b && !pr.c) return Kind::Inf;
    if (!pr.b || !pr.c) throw UnresolvedLimit("a pair with a single INFINITY entry has no limit rule");
    WMono tkm{1, 0, -k};
    if (*pr.b == tkm && *pr.c == tkm) return Kind::TK;
    return Kind::Finite;
}

WMono mono_pow(const WMono& x, long n) {
    if (n < 0) return mono_pow(x.inv(), -n);
    WMono r{1, 0, 0};
    for (long i = 0; i < n; ++i) r = r * x;
    return r;
}

}  // namespace

QLaurent watson_closed_lhs(long k, long a, long b) {
    QLaurent s;
    QLaurent t = QLaurent::qpow(Q(1));
    for (long j = 0; j <= 2 * k + 1; ++j) {
        // (q^{-2k-1};q)_j/(q;q)_j with q = t^a
        QLaurent num = pochhammer(QLaurent::qpow(Q(-a * (2 * k + 1))), Q(a), j);
        QLaurent den = pochhammer(QLaurent::qpow(Q(a)), Q(a), j);
        QLaurent ratio = div_exact(num, den);
        long e = b * j * j + (a - 2 * b) * k * j + (a - b - 1) * j;
        s += ratio.shifted(Q(e)) * (QLaurent(1) - QLaurent::qpow(Q(2 * j - 2 * k - 1)));
    }
    return s;
}

std::pair<WLaurent, WLaurent> watson_rhs(const WatsonSpec& spec) {
    const long k = spec.k, a = spec.a, p = spec.p;
    const WMono at{1, 0, -2 * k};  // alpha t with alpha = t^{-2k-1}
    std::vector<Kind> kinds;
    for (auto& pr : spec.pairs) kinds.push_back(classify(pr, k));
    WLaurent den(a, Q(1));
    for (long i = 0; i < p - 1; ++i) {
        den *= wpoch(a, {1, 0, 1}, k);
        if (kinds[i] == Kind::Finite) {
            den *= wpoch(a, at * spec.pairs[i].b->inv(), k);
            den *= wpoch(a, at * spec.pairs[i].c->inv(), k);
        }
    }
    WLaurent num(a);
    std::vector<long> m(std::max<long>(p - 1, 0), 0);
    std::function<void(long, long)> rec = [&](long i, long used) {
        if (i == p - 1) {
            long M = used;
            WLaurent term = wpoch(a, {1, 0, -k}, M);
            long e = M * (M - 1) / 2 - (k + 1) * M;
            term *= WMono{M % 2 ? -1 : 1, 0, e}.as(a);
            long Mi = 0;
            for (long j = 0; j < p - 1; ++j) {
                long mj = m[j], Mprev = Mi;
                Mi += mj;
                term *= WMono{1, 0, mj + (-2 * k) * (p - j - 2) * mj}.as(a);
                term *= wpoch(a, {1, 0, mj + 1}, k - mj);
                if (kinds[j] == Kind::Finite) {
                    const WMono& bb = *spec.pairs[j].b;
                    const WMono& cc = *spec.pairs[j].c;
                    term *= wpoch(a, at * (bb * cc).inv(), mj);
                    term *= wpoch(a, bb, Mprev) * wpoch(a, cc, Mprev);
                    term *= wpoch(a, at * bb.inv() * WMono{1, 0, Mi}, k - Mi);
                    term *= wpoch(a, at * cc.inv() * WMono{1, 0, Mi}, k - Mi);
                    term *= mono_pow(bb * cc, -Mprev).as(a);
                } else if (kinds[j] == Kind::Inf) {
                    term *= WMono{1, 0, Mprev * (Mprev - 1)}.as(a);
                } else {
                    term *= WMono{1, 0, 2 * k * Mprev}.as(a);
                }
                if (term.is_zero()) return;
            }
            num += term;
            return;
        }
        long maxv = k - used;
        if (kinds[i] == Kind::TK) maxv = 0;
        for (long v = 0; v <= maxv; ++v) {
            m[i] = v;
            rec(i + 1, used + v);
        }
    };
    rec(0, 0);
    num *= wpoch(a, at, k) * WLaurent(a, Q(2));
    return {num, den};
}

WatsonResult watson_check(const WatsonSpec& spec) {
    const long k = spec.k, a = spec.a, p = spec.p;
    const long top = 2 * k + 1;
    const WMono at{1, 0, -2 * k};
    std::vector<Kind> kinds;
    for (auto& pr : spec.pairs) kinds.push_back(classify(pr, k));

    WLaurent lden = wpoch(a, {1, 0, 1}, top);
    for (long i = 0; i < p - 1; ++i)
        if (kinds[i] == Kind::Finite) {
            lden *= wpoch(a, at * spec.pairs[i].b->inv(), top);
            lden *= wpoch(a, at * spec.pairs[i].c->inv(), top);
        }
    WLaurent lnum(a);
    for (long n = 0; n <= top; ++n) {
        WLaurent term(a, Q(1));
        if (n >= 1) {
            term = wpoch(a, at, n - 1);
            term *= WLaurent(a, Q(1)) - WMono{1, 0, -2 * k - 1 + 2 * n}.as(a);
        }
        for (long i = 0; i < p - 1; ++i) {
            if (kinds[i] == Kind::Finite) {
                const WMono& bb = *spec.pairs[i].b;
                const WMono& cc = *spec.pairs[i].c;
                term *= wpoch(a, bb, n) * wpoch(a, cc, n);
                term *= mono_pow(at * (bb * cc).inv(), n).as(a);
                term *= wpoch(a, at * bb.inv() * WMono{1, 0, n}, top - n);
                term *= wpoch(a, at * cc.inv() * WMono{1, 0, n}, top - n);
            } else if (kinds[i] == Kind::Inf) {
                term *= WMono{1, 0, n * (n - 1) - 2 * k * n}.as(a);
            }
            if (term.is_zero()) break;
        }
        // pair p and the N-limit: (-1)^n t^{n(n-1)/2} (alpha t^{k+1})^n times (-1)^n t^{n(n-1)/2}/(t)_n
        term *= WMono{1, 0, n * (n - 1) - k * n}.as(a);
        term *= wpoch(a, {1, 0, n + 1}, top - n);
        lnum += term;
    }

    auto [rnum, rden] = watson_rhs(spec);
    WatsonResult r;
    r.lhs_num = lnum;
    r.lhs_den = lden;
    r.rhs_num = rnum;
    r.rhs_den = rden;
    r.residual = lnum * rden - rnum * lden;
    r.equal = r.residual.is_zero();
    WLaurent closed = WLaurent::from_t(a, watson_closed_lhs(k, a, spec.b));
    r.matches_closed_lhs = lnum * (WLaurent(a, Q(1)) - WMono{1, 0, -2 * k - 1}.as(a)) == closed * lden;
    return r;
}

}  // namespace so3
