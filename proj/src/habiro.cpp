#include "so3/habiro.hpp"

#include <algorithm>
#include <numeric>

#include "so3/errors.hpp"

namespace so3 {

QLaurent HabiroTerm::den() const {
    QLaurent d(1);
    for (auto& f : den_factors) d *= f;
    return d;
}

HabiroElement HabiroElement::constant(const QLaurent& c, long a, long K) {
    HabiroElement I;
    I.a = a;
    I.K = K;
    I.f.resize(K + 1);
    I.f[0].num = c;
    I.f[0].den_factors = {QLaurent(1) - QLaurent::qpow(Q(1))};
    for (long k = 1; k <= K; ++k) I.f[k].num = QLaurent();
    return I;
}

nlohmann::json HabiroElement::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& t : f) {
        nlohmann::json dens = nlohmann::json::array();
        for (auto& d : t.den_factors) dens.push_back(d.to_json());
        coeffs.push_back({{"num", t.num.to_json()}, {"den_factors", dens}});
    }
    return {{"a", a}, {"K", K}, {"coefficients", coeffs}, {"pinned_units", pinned_units}};
}

HabiroElement HabiroElement::from_json(const nlohmann::json& j) {
    try {
        HabiroElement I;
        I.a = j.at("a").get<long>();
        I.K = j.at("K").get<long>();
        for (auto& c : j.at("coefficients")) {
            HabiroTerm t;
            t.num = QLaurent::from_json(c.at("num"));
            for (auto& d : c.at("den_factors")) t.den_factors.push_back(QLaurent::from_json(d));
            I.f.push_back(t);
        }
        if (static_cast<long>(I.f.size()) != I.K + 1) throw ValidationError("Habiro element needs K+1 coefficients");
        if (j.contains("pinned_units")) I.pinned_units = j.at("pinned_units");
        return I;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed Habiro element: ") + e.what());
    }
}

QLaurent habiro_basis(long k) { return qpoch(Q(k + 1), k + 1); }

CycElem eval_habiro(const HabiroElement& I, long r) {
    if (r < 3 || r % 2 == 0) throw ValidationError("eval_habiro needs an odd order r >= 3");
    if (std::gcd(r, I.a) != 1)
        throw NonCoprime("eval_habiro: gcd(" + std::to_string(r) + "," + std::to_string(I.a) + ") != 1");
    long need = (r - 3) / 2;
    if (I.K < need)
        throw TruncationTooSmall("evaluation at order " + std::to_string(r) + " needs K >= " + std::to_string(need));
    // (q^{k+1})_{k+1} vanishes at xi once k >= (r-1)/2
    CycElem s(r);
    for (long k = 0; k <= need; ++k) {
        const HabiroTerm& t = I.f[k];
        if (t.num.is_zero()) continue;
        CycElem v = ev(t.num, r) * ev(habiro_basis(k), r);
        for (auto& d : t.den_factors) {
            CycElem dv = ev(d, r);
            if (dv.is_zero()) throw PoleHit("a denominator of f_" + std::to_string(k) + " vanishes at order " + std::to_string(r));
            v = v / dv;
        }
        s += v;
    }
    return s;
}

CycElem eval_normalized(const HabiroElement& I, long r) {
    return ev(QLaurent::qpow(make_q(1 - I.a, 4)), r) * eval_habiro(I, r);
}

namespace {

using Series = std::vector<Q>;

// q = e^h, coefficients of h^0..h^{P-1}
Series series_of(const QLaurent& g, long P) {
    Series s(P, Q(0));
    for (auto& [v, c] : g.terms()) {
        Q e = make_q(v, g.denom());
        Q term = c;
        for (long m = 0; m < P; ++m) {
            s[m] += term;
            term *= e;
            term /= m + 1;
        }
    }
    return s;
}

Series mul(const Series& x, const Series& y, long P) {
    Series z(P, Q(0));
    for (long i = 0; i < P && i < static_cast<long>(x.size()); ++i) {
        if (x[i] == 0) continue;
        for (long j = 0; i + j < P && j < static_cast<long>(y.size()); ++j) z[i + j] += x[i] * y[j];
    }
    return z;
}

long valuation(const QLaurent& g) {
    if (g.is_zero()) throw PoleHit("zero factor in a power series denominator");
    for (long P = 8;; P *= 2) {
        Series s = series_of(g, P);
        for (long m = 0; m < P; ++m)
            if (s[m] != 0) return m;
        if (P > 4096) throw UnresolvedLimit("power series valuation too large");
    }
}

// x / y where y has valuation 0
Series div0(const Series& x, const Series& y, long P) {
    Series z(P, Q(0));
    for (long n = 0; n < P; ++n) {
        Q s = n < static_cast<long>(x.size()) ? x[n] : Q(0);
        for (long i = 1; i <= n && i < static_cast<long>(y.size()); ++i) s -= y[i] * z[n - i];
        z[n] = s / y[0];
    }
    return z;
}

void add_term(HabiroTerm& acc, HabiroTerm t) {
    if (t.num.is_zero()) return;
    if (acc.num.is_zero()) {
        acc = std::move(t);
        return;
    }
    // bring both to the multiset union of their denominator factors
    std::vector<QLaurent> only_acc = acc.den_factors, only_t;
    for (auto& d : t.den_factors) {
        auto it = std::find(only_acc.begin(), only_acc.end(), d);
        if (it != only_acc.end())
            only_acc.erase(it);
        else
            only_t.push_back(d);
    }
    QLaurent n1 = acc.num, n2 = t.num;
    for (auto& d : only_t) n1 *= d;
    for (auto& d : only_acc) n2 *= d;
    acc.num = n1 + n2;
    for (auto& d : only_t) acc.den_factors.push_back(d);
}

}  // namespace

std::vector<Q> ohtsuki_series(const HabiroElement& I, long N) {
    if (N < 0) throw ValidationError("order must be nonnegative");
    if (I.K < N) throw TruncationTooSmall("the h-expansion to order " + std::to_string(N) + " needs K >= " + std::to_string(N));
    Series total(N + 1, Q(0));
    for (long k = 0; k <= N; ++k) {
        const HabiroTerm& t = I.f[k];
        if (t.num.is_zero()) continue;
        long dv = 0;
        std::vector<long> vals;
        for (auto& d : t.den_factors) {
            vals.push_back(valuation(d));
            dv += vals.back();
        }
        long P = N + 1 + dv;
        Series s = mul(series_of(t.num, P), series_of(habiro_basis(k), P), P);
        for (std::size_t i = 0; i < t.den_factors.size(); ++i) {
            Series d = series_of(t.den_factors[i], P);
            long v = vals[i];
            // drop h^v from both sides
            for (long m = 0; m < v; ++m)
                if (s[m] != 0) throw UnresolvedLimit("term " + std::to_string(k) + " has a pole at h = 0");
            Series s2(s.begin() + v, s.end()), d2(d.begin() + v, d.end());
            P -= v;
            s = div0(s2, d2, P);
        }
        for (long m = 0; m <= N && m < P; ++m) total[m] += s[m];
    }
    return total;
}

HabiroElement habiro_product(const HabiroElement& x, const HabiroElement& y) {
    HabiroElement z;
    z.a = x.a * y.a;
    z.K = std::min(x.K, y.K);
    z.f.resize(z.K + 1);
    for (long i = 0; i <= z.K; ++i)
        for (long j = 0; j <= z.K; ++j) {
            const HabiroTerm& u = x.f[i];
            const HabiroTerm& v = y.f[j];
            if (u.num.is_zero() || v.num.is_zero()) continue;
            long lo = std::min(i, j), hi = std::max(i, j);
            HabiroTerm t;
            t.num = u.num * v.num * habiro_basis(lo);
            t.den_factors = u.den_factors;
            t.den_factors.insert(t.den_factors.end(), v.den_factors.begin(), v.den_factors.end());
            add_term(z.f[hi], t);
        }
    z.pinned_units = x.pinned_units;
    for (auto& p : y.pinned_units) z.pinned_units.push_back(p);
    return z;
}

HabiroElement habiro_scale(const HabiroElement& x, const QLaurent& c) {
    HabiroElement z = x;
    for (auto& t : z.f) t.num *= c;
    return z;
}

HabiroElement habiro_substitute_inverse(const HabiroElement& x) {
    HabiroElement z = x;
    for (long k = 0; k <= z.K; ++k) {
        HabiroTerm& t = z.f[k];
        // (q^{-k-1};q^{-1})_{k+1} = (-1)^{k+1} q^{-(k+1)(3k+2)/2} (q^{k+1};q)_{k+1}
        t.num = substitute_power(t.num, Q(-1)).shifted(make_q(-(k + 1) * (3 * k + 2), 2));
        if (k % 2 == 0) t.num = -t.num;
        for (auto& d : t.den_factors) d = substitute_power(d, Q(-1));
    }
    return z;
}

std::optional<QLaurent> ring_certificate(const HabiroElement& I, long k) {
    if (k < 0 || k > I.K) throw ValidationError("ring_certificate: index out of range");
    const HabiroTerm& t = I.f[k];
    QLaurent n = t.num * qpoch(Q(1), 2 * k + 1) * (QLaurent(1) - QLaurent::qpow(Q(1)));
    QLaurent d = t.den() * pochhammer(QLaurent::qpow(make_q(1, I.a)), make_q(1, I.a), 2 * k + 1);
    QLaurent c;
    if (!try_div_exact(n, d, c)) return std::nullopt;
    if (c.is_zero()) return c;
    if (!c.is_integral()) return std::nullopt;
    Q lo = c.min_exponent();
    for (auto& [v, coef] : c.terms()) {
        (void)coef;
        Q te = (make_q(v, c.denom()) - lo) * I.a;
        if (te.get_den() != 1) return std::nullopt;
    }
    return c;
}

}  // namespace so3
