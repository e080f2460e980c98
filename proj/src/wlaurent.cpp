#include "so3/wlaurent.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "so3/cyclotomic.hpp"
#include "so3/errors.hpp"
#include "so3/numtheory.hpp"

namespace so3 {

namespace {

struct WField {
    long a = 1, phi = 1;
    std::vector<std::vector<Q>> pw;  // w^e mod Phi_a, 0 <= e < 2a
};

const WField& wfield(long a) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<WField>> cache;
    if (a < 1) throw ValidationError("w-modulus must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[a];
    if (!slot) {
        auto f = std::make_unique<WField>();
        f->a = a;
        std::vector<Q> cyc = cyclotomic_poly(a);
        long phi = static_cast<long>(cyc.size()) - 1;
        f->phi = phi;
        std::vector<Q> cur(phi, Q(0));
        cur[0] = 1;
        for (long e = 0; e < 2 * a + 2; ++e) {
            f->pw.push_back(cur);
            Q top = cur[phi - 1];
            for (long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (long i = 0; i < phi; ++i) cur[i] -= top * cyc[i];
        }
        slot = std::move(f);
    }
    return *slot;
}

bool all_zero(const std::vector<Q>& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

WLaurent::WLaurent(long a) : a_(a) { wfield(a); }

WLaurent::WLaurent(long a, const Q& c) : a_(a) {
    if (c != 0) {
        std::vector<Q> v(wfield(a).phi, Q(0));
        v[0] = c;
        t_.emplace(0, std::move(v));
    }
}

long WLaurent::phi() const { return wfield(a_).phi; }

WLaurent WLaurent::mono(long a, long j, long e, const Q& c) {
    WLaurent x(a);
    if (c == 0) return x;
    const WField& f = wfield(a);
    std::vector<Q> v = f.pw[mod_floor(j, a)];
    for (auto& y : v) y *= c;
    x.t_.emplace(e, std::move(v));
    return x;
}

WLaurent WLaurent::from_t(long a, const QLaurent& f) {
    QLaurent g = f.normalized();
    if (g.denom() != 1) throw ValidationError("from_t: fractional power of t");
    WLaurent x(a);
    long phi = wfield(a).phi;
    for (auto& [e, c] : g.terms()) {
        std::vector<Q> v(phi, Q(0));
        v[0] = c;
        x.t_.emplace(e, std::move(v));
    }
    return x;
}

bool WLaurent::is_w_free() const {
    for (auto& [e, v] : t_)
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) return false;
    return true;
}

QLaurent WLaurent::to_t() const {
    if (!is_w_free()) throw Inconsistent("value depends on w");
    std::map<long, Q> m;
    for (auto& [e, v] : t_) m.emplace(e, v[0]);
    return QLaurent::from_terms(1, std::move(m));
}

QLaurent WLaurent::w_coefficient(long j) const {
    std::map<long, Q> m;
    for (auto& [e, v] : t_)
        if (j < static_cast<long>(v.size())) m.emplace(e, v[j]);
    return QLaurent::from_terms(1, std::move(m));
}

void WLaurent::add(long e, const std::vector<Q>& v, int sign) {
    auto [it, fresh] = t_.try_emplace(e, v.size(), Q(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sign > 0)
            it->second[i] += v[i];
        else
            it->second[i] -= v[i];
    }
    if (all_zero(it->second)) t_.erase(it);
}

WLaurent WLaurent::operator-() const {
    WLaurent x = *this;
    for (auto& [e, v] : x.t_)
        for (auto& y : v) y = -y;
    return x;
}

WLaurent& WLaurent::operator+=(const WLaurent& o) {
    if (a_ != o.a_) throw ValidationError("WLaurent moduli differ");
    for (auto& [e, v] : o.t_) add(e, v, 1);
    return *this;
}

WLaurent& WLaurent::operator-=(const WLaurent& o) {
    if (a_ != o.a_) throw ValidationError("WLaurent moduli differ");
    for (auto& [e, v] : o.t_) add(e, v, -1);
    return *this;
}

WLaurent operator*(const WLaurent& x, const WLaurent& y) {
    if (x.a_ != y.a_) throw ValidationError("WLaurent moduli differ");
    const WField& f = wfield(x.a_);
    long phi = f.phi;
    std::map<long, std::vector<Q>> acc;
    std::vector<Q> prod(2 * phi - 1);
    Q tmp;
    for (auto& [ex, vx] : x.t_)
        for (auto& [ey, vy] : y.t_) {
            for (auto& p : prod) p = 0;
            for (long i = 0; i < phi; ++i) {
                if (vx[i] == 0) continue;
                for (long j = 0; j < phi; ++j) {
                    if (vy[j] == 0) continue;
                    mpq_mul(tmp.get_mpq_t(), vx[i].get_mpq_t(), vy[j].get_mpq_t());
                    prod[i + j] += tmp;
                }
            }
            auto [it, fresh] = acc.try_emplace(ex + ey, phi, Q(0));
            auto& slot = it->second;
            for (long i = 0; i < phi; ++i) slot[i] += prod[i];
            for (long e = phi; e < 2 * phi - 1; ++e) {
                if (prod[e] == 0) continue;
                const auto& p = f.pw[e];
                for (long i = 0; i < phi; ++i)
                    if (p[i] != 0) slot[i] += prod[e] * p[i];
            }
        }
    WLaurent r(x.a_);
    for (auto& [e, v] : acc)
        if (!all_zero(v)) r.t_.emplace(e, std::move(v));
    return r;
}

WLaurent& WLaurent::operator*=(const WLaurent& o) {
    *this = *this * o;
    return *this;
}

WLaurent& WLaurent::operator*=(const Q& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [e, v] : t_)
        for (auto& y : v) y *= c;
    return *this;
}

WLaurent WLaurent::galois(long j) const {
    if (std::gcd(j, a_) != 1) throw NonCoprime("galois action on w needs gcd(j, a) = 1");
    const WField& f = wfield(a_);
    WLaurent r(a_);
    for (auto& [e, v] : t_) {
        std::vector<Q> out(f.phi, Q(0));
        for (long i = 0; i < f.phi; ++i) {
            if (v[i] == 0) continue;
            const auto& p = f.pw[mod_floor(i * j, a_)];
            for (long s = 0; s < f.phi; ++s)
                if (p[s] != 0) out[s] += v[i] * p[s];
        }
        if (!all_zero(out)) r.t_.emplace(e, std::move(out));
    }
    return r;
}

std::string WLaurent::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : t_) {
        os << (first ? "" : " + ") << "(";
        bool f2 = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            os << (f2 ? "" : " + ") << v[i].get_str();
            if (i) os << "*w^" << i;
            f2 = false;
        }
        os << ")*t^" << e;
        first = false;
    }
    return first ? "0" : os.str();
}

WLaurent wpoch(long a, const WMono& x, long m) {
    WLaurent r(a, Q(1));
    for (long i = 0; i < m; ++i) {
        r *= WLaurent(a, Q(1)) - WMono{x.sign, x.w, x.t + i}.as(a);
        if (r.is_zero()) break;
    }
    return r;
}

WLaurent galois_cofactor(const WLaurent& f) {
    long a = f.modulus();
    WLaurent r(a, Q(1));
    for (long j = 2; j < a; ++j)
        if (std::gcd(j, a) == 1) r *= f.galois(j);
    return r;
}

}  // namespace so3
