#include "so3/unified.hpp"

#include <algorithm>
#include <numeric>

#include "so3/errors.hpp"
#include "so3/jones.hpp"
#include "so3/numtheory.hpp"

namespace so3 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// 1 + t^j + ... + t^{(|a|-1)j}, t = q^{1/|a|}
QLaurent den_factor(long j, long a) {
    long A = std::abs(a);
    QLaurent s;
    for (long i = 0; i < A; ++i) s += QLaurent::qpow(make_q(i * j, A));
    return s;
}

// tables of J(P'_k) / ({2k+1}!/({k}!{1}))
using CycloTable = std::map<MultiIndex, QLaurent>;

HabiroElement from_cyclotomic(const std::vector<Fraction>& framings, const CycloTable& g, long K) {
    if (K < 0) throw ValidationError("truncation K must be nonnegative");
    long m = static_cast<long>(framings.size());
    long A = 1;
    Q pre = 0;
    for (auto& f : framings) {
        if (f.num == 0) throw NotQHS("a framing 0 component does not give a rational homology sphere");
        A *= std::abs(f.num);
        pre += make_q(1, 2 * f.num) - 3 * dedekind_sum(f.den, f.num);
    }
    pre += make_q(A - 1, 4);
    HabiroElement I;
    I.a = A;
    I.K = K;
    I.f.resize(K + 1);
    std::map<std::tuple<long, long, long>, Pin> pins;
    for (auto& [ks, gv] : g) {
        if (static_cast<long>(ks.size()) != m) throw ValidationError("table index has the wrong length");
        long k = *std::max_element(ks.begin(), ks.end());
        if (k > K || gv.is_zero()) continue;
        HabiroTerm t;
        t.num = gv.shifted(pre - make_q((3 * k + 2) * (k + 1), 4));
        if (k % 2 == 0) t.num = -t.num;
        t.den_factors.push_back(qint(1));
        for (long i = 0; i < m; ++i) {
            const Fraction& f = framings[i];
            FCoeff c = component_coeff(ks[i], f.num, f.den);
            pins[{ks[i], -f.num, f.den}] = c.pin;
            t.num *= c.num;
            if (std::abs(f.num) == 1) continue;
            for (long j = 2 * ks[i] + 2; j <= 2 * k + 1; ++j) t.num *= den_factor(j, f.num);
            for (long j = 1; j <= 2 * k + 1; ++j) t.den_factors.push_back(den_factor(j, f.num));
        }
        HabiroTerm& acc = I.f[k];
        if (acc.num.is_zero())
            acc = t;
        else if (acc.den_factors == t.den_factors)
            acc.num += t.num;
        else
            throw Error("internal: mismatched denominators at index " + std::to_string(k));
    }
    for (auto& [key, p] : pins) {
        auto [k, a, b] = key;
        I.pinned_units.push_back({{"k", k}, {"a", a}, {"b", b}, {"sign", p.sign},
                                  {"exponent", q_to_string(p.exponent)}, {"orders", p.orders}});
    }
    return I;
}

HabiroElement mirror_element(const HabiroElement& I) {
    // I_{-M}(q) = q^{(a-1)/2} I_M(q^{-1})
    return habiro_scale(habiro_substitute_inverse(I), QLaurent::qpow(make_q(I.a - 1, 2)));
}

bool same_fibers(const Seifert& x, const Seifert& y) { return x.b == y.b && x.fibers == y.fibers; }

}  // namespace

FCoeff component_coeff(long k, long a, long b) {
    FCoeff c = f_coeff(k, -a, b);
    if (a > 0) c.num = -c.num;
    return c;
}

HabiroElement unified_algsplit(const std::vector<Fraction>& framings, const HabiroCoefficients& table, long K) {
    if (static_cast<long>(framings.size()) != table.components)
        throw ValidationError("algsplit: framings and table disagree on the number of components");
    CycloTable g;
    for (auto& [ks, J] : table.table) {
        long k = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
        if (k > K) continue;
        QLaurent q;
        if (!try_div_exact(J, habiro_factor(k), q))
            throw NonDivisible("J(P'_k) is not divisible by {2k+1}!/({k}!{1}) at k = " + std::to_string(k));
        g[ks] = q;
    }
    return from_cyclotomic(framings, g, K);
}

HabiroElement unified_invariant(const SurgeryPresentation& m, long K) {
    return std::visit(
        overloaded{
            [&](const Lens& l) {
                return from_cyclotomic({Fraction(l.a, l.b)}, {{MultiIndex{0}, QLaurent(1)}}, K);
            },
            [&](const TwistSurgery& t) {
                CycloTable g;
                for (long k = 0; k <= K; ++k) g[{k}] = twist_knot_cyclotomic(t.p, k);
                return from_cyclotomic({t.framing}, g, K);
            },
            [&](const AlgSplit& a) { return unified_algsplit(a.framings, a.table, K); },
            [&](const ConnectedSum& c) {
                if (c.parts.empty()) throw ValidationError("sum: no summands");
                HabiroElement I = unified_invariant(c.parts[0], K);
                for (std::size_t i = 1; i < c.parts.size(); ++i) {
                    HabiroElement J = unified_invariant(c.parts[i], K);
                    // keep the normalization q^{(a-1)/4} with a the product of the orders
                    long a1 = I.a, a2 = J.a;
                    I = habiro_scale(habiro_product(I, J), QLaurent::qpow(make_q((a1 - 1) * (a2 - 1), 4)));
                }
                return I;
            },
            [&](const Seifert& s) {
                if (s.euler() == 0) throw NotQHS("seifert: e = 0");
                Seifert nf = seifert_normal_form(s);
                Seifert p235{-1, {{2, 1}, {3, 1}, {5, 1}}};
                Seifert p237{-1, {{2, 1}, {3, 1}, {7, 1}}};
                // surgeries on the left trefoil K_1 with framing -1 and +1
                if (same_fibers(nf, p235)) return unified_invariant(make_twist(1, Fraction(-1)), K);
                if (same_fibers(nf, p237)) return unified_invariant(make_twist(1, Fraction(1)), K);
                if (same_fibers(nf, seifert_mirror(p235)))
                    return mirror_element(unified_invariant(make_twist(1, Fraction(-1)), K));
                if (same_fibers(nf, seifert_mirror(p237)))
                    return mirror_element(unified_invariant(make_twist(1, Fraction(1)), K));
                throw Unsupported("unified invariant of " + describe({s}) +
                                  " is only available for the Brieskorn spheres (2,3,5), (2,3,7) and their mirrors");
            },
        },
        m.v);
}

QFrac lens_unified_closed(long a, long b) {
    if (a == 0 || std::gcd(a, b) != 1) throw ValidationError("lens: need a != 0 and gcd(a,b) = 1");
    if (a < 0) a = -a, b = -b;
    Q e = 3 * dedekind_sum(1, a) - 3 * dedekind_sum(b, a);
    QLaurent num = (QLaurent(1) - QLaurent::qpow(make_q(-1, a))).shifted(e);
    return QFrac(num, QLaurent(1) - QLaurent::qpow(Q(-1)));
}

QLaurent lens_unified_inverse(long a, long b) {
    if (a == 0 || std::gcd(a, b) != 1) throw ValidationError("lens: need a != 0 and gcd(a,b) = 1");
    if (a < 0) a = -a, b = -b;
    Q e = 3 * dedekind_sum(1, a) - 3 * dedekind_sum(b, a);
    return div_exact(QLaurent(1) - QLaurent::qpow(Q(-1)), QLaurent(1) - QLaurent::qpow(make_q(-1, a))).shifted(-e);
}

Seifert seifert_normal_form(const Seifert& s) {
    Seifert n;
    n.b = s.b;
    for (auto [ai, bi] : s.fibers) {
        long fl = (bi - mod_floor(bi, ai)) / ai;
        n.b += fl;
        bi -= fl * ai;
        if (ai == 1) continue;
        n.fibers.emplace_back(ai, bi);
    }
    std::sort(n.fibers.begin(), n.fibers.end());
    return n;
}

Seifert seifert_mirror(const Seifert& s) {
    Seifert m;
    m.b = -s.b;
    for (auto [ai, bi] : s.fibers) m.fibers.emplace_back(ai, -bi);
    return seifert_normal_form(m);
}

QLaurent seifert_laplace_series(const Seifert& s, long precision) {
    if (precision < 0) throw ValidationError("precision must be nonnegative");
    Q e = s.euler();
    if (e == 0) throw NotQHS("seifert: e = 0");
    int sg = e > 0 ? 1 : -1;
    long n = static_cast<long>(s.fibers.size());
    long m = n - 2;
    Q d = abs(e);
    Q ded = 0;
    for (auto& [ai, bi] : s.fibers) {
        d *= ai;
        ded += dedekind_sum(bi, ai);
    }
    Q pre = (d - 1) / 4 + (e - 3 * sg) / 4 - 3 * ded;
    // the j-series: prod {j/a_i} times {j}^{-m}, as sum c_beta q^{j beta}
    std::map<Q, Q> js;
    js[Q(0)] = 1;
    for (auto& [ai, bi] : s.fibers) {
        std::map<Q, Q> nx;
        for (auto& [beta, c] : js) {
            nx[beta + make_q(1, 2 * ai)] += c;
            nx[beta - make_q(1, 2 * ai)] -= c;
        }
        js = nx;
    }
    // L_{-e}: q^{j beta} -> q^{beta^2/e}; keep exponents with sg*exponent <= bound
    Q bound = precision + abs(pre) + 2;
    QLaurent lap;
    auto add_lap = [&](const Q& beta, const Q& c) {
        Q ex = beta * beta / e;
        if (sg * ex <= bound) lap += QLaurent::monomial(c, ex);
    };
    if (m <= 0) {
        // multiply by {j}^{-m}
        for (long i = 0; i < -m; ++i) {
            std::map<Q, Q> nx;
            for (auto& [beta, c] : js) {
                nx[beta + make_q(1, 2)] += c;
                nx[beta - make_q(1, 2)] -= c;
            }
            js = nx;
        }
        for (auto& [beta, c] : js)
            if (c != 0) add_lap(beta, c);
    } else {
        // 1/{j}^m = (-sg)^m... expanded as sum_l C(l+m-1,m-1) q^{sg j (m/2 + l)} with sign (-1)^m for e > 0
        Q sign = (sg > 0 && m % 2) ? Q(-1) : Q(1);
        for (auto& [beta, c] : js) {
            if (c == 0) continue;
            Z binom = 1;  // C(l+m-1, m-1)
            for (long l = 0;; ++l) {
                if (l > 0) binom = binom * (l + m - 1) / l;
                Q b2 = beta + sg * (make_q(m, 2) + l);
                Q ex = b2 * b2 / e;
                if (sg * ex > bound && abs(b2) > abs(beta) + m) break;
                add_lap(b2, c * sign * Q(binom));
            }
        }
    }
    // Overall factor sn(e)/2. For m > 0 the two one-sided expansions of 1/{j}^m have the same
    // image and the symmetric expansion is their sum, which cancels the 1/2.
    Q scale = m > 0 ? Q(sg) : make_q(sg, 2);
    // times q^pre / {1}, with 1/{1} = -sum q^{1/2+l} (e > 0) or sum q^{-(1/2+l)} (e < 0)
    QLaurent out;
    for (auto& [v, c] : lap.terms()) {
        Q ex = make_q(v, lap.denom()) + pre;
        for (long l = 0;; ++l) {
            Q E = ex + sg * (make_q(1, 2) + l);
            if (sg * E > precision) break;
            out += QLaurent::monomial(scale * (sg > 0 ? Q(-c) : c), E);
        }
    }
    return out;
}

}  // namespace so3
