#include "so3/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "so3/errors.hpp"
#include "so3/numtheory.hpp"

namespace so3 {

namespace {

using Poly = std::vector<Q>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// quotient and remainder of a by b over Q
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    rem = a;
    trim(rem);
    long db = static_cast<long>(b.size()) - 1;
    quo.assign(rem.size() > b.size() - 1 ? rem.size() - b.size() + 1 : 0, Q(0));
    Q c;
    while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
        long shift = static_cast<long>(rem.size()) - 1 - db;
        c = rem.back() / b.back();
        quo[shift] = c;
        for (long i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
        trim(rem);
    }
    trim(quo);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Q(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

struct Field {
    long r = 1, phi = 1;
    Poly cyc;
    std::vector<Poly> pw;  // x^e mod Phi_r for 0 <= e < 2r, each of length phi
};

const Field& field(long r) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<Field>> cache;
    if (r < 1 || r % 2 == 0) throw ValidationError("cyclotomic order must be odd and positive, got " + std::to_string(r));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[r];
    if (!slot) {
        auto f = std::make_unique<Field>();
        f->r = r;
        f->cyc = cyclotomic_poly(r);
        f->phi = static_cast<long>(f->cyc.size()) - 1;
        long phi = f->phi;
        f->pw.resize(2 * r + 1);
        Poly cur(phi, Q(0));
        cur[0] = 1;
        if (phi == 0) throw Error("internal: empty cyclotomic polynomial");
        for (long e = 0; e <= 2 * r; ++e) {
            f->pw[e] = cur;
            // multiply by x and reduce
            Q top = cur[phi - 1];
            for (long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (long i = 0; i < phi; ++i) cur[i] -= top * f->cyc[i];
        }
        slot = std::move(f);
    }
    return *slot;
}

}  // namespace

std::vector<Q> cyclotomic_poly(long r) {
    if (r < 1) throw ValidationError("cyclotomic_poly needs r >= 1");
    Poly p(r + 1, Q(0));
    p[0] = -1;
    p[r] = 1;
    for (long d = 1; d < r; ++d)
        if (r % d == 0) {
            Poly quo, rem;
            divmod(p, cyclotomic_poly(d), quo, rem);
            if (!rem.empty()) throw Error("internal: cyclotomic division");
            p = quo;
        }
    return p;
}

long euler_phi(long r) {
    long res = r, n = r;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            res -= res / p;
        }
    if (n > 1) res -= res / n;
    return res;
}

CycElem::CycElem(long r) : r_(r), c_(field(r).phi, Q(0)) {}

CycElem::CycElem(long r, const Q& c) : CycElem(r) { c_[0] = c; }

CycElem::CycElem(long r, std::vector<Q> coeffs) : r_(r), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != field(r).phi)
        throw ValidationError("CycElem coefficient vector must have length phi(r)");
}

CycElem CycElem::xi_pow(long r, long e) {
    const Field& f = field(r);
    CycElem x(r);
    x.c_ = f.pw[mod_floor(e, r)];
    return x;
}

CycElem CycElem::from_cyclic(long r, const std::vector<Q>& v) {
    const Field& f = field(r);
    CycElem x(r);
    for (long e = 0; e < static_cast<long>(v.size()); ++e) {
        if (v[e] == 0) continue;
        const Poly& p = f.pw[mod_floor(e, r)];
        for (long i = 0; i < f.phi; ++i)
            if (p[i] != 0) x.c_[i] += v[e] * p[i];
    }
    return x;
}

bool CycElem::is_zero() const {
    for (auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycElem::is_integral() const {
    for (auto& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

bool CycElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycElem CycElem::operator-() const {
    CycElem x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

static void check_same(long a, long b) {
    if (a != b) throw ValidationError("CycElem orders differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

CycElem& CycElem::operator+=(const CycElem& o) {
    check_same(r_, o.r_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
    check_same(r_, o.r_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    check_same(a.r_, b.r_);
    const Field& f = field(a.r_);
    long phi = f.phi;
    Poly prod(2 * phi - 1, Q(0));
    Q t;
    for (long i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (b.c_[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            prod[i + j] += t;
        }
    }
    CycElem x(a.r_);
    for (long i = 0; i < phi; ++i) x.c_[i] = prod[i];
    for (long e = phi; e < 2 * phi - 1; ++e) {
        if (prod[e] == 0) continue;
        const Poly& p = f.pw[e];
        for (long i = 0; i < phi; ++i)
            if (p[i] != 0) x.c_[i] += prod[e] * p[i];
    }
    return x;
}

CycElem& CycElem::operator*=(const CycElem& o) {
    *this = *this * o;
    return *this;
}

CycElem& CycElem::operator*=(const Q& c) {
    for (auto& x : c_) x *= c;
    return *this;
}

bool operator==(const CycElem& a, const CycElem& b) { return a.r_ == b.r_ && a.c_ == b.c_; }

CycElem CycElem::times_xi_pow(long e) const {
    const Field& f = field(r_);
    e = mod_floor(e, r_);
    if (e == 0) return *this;
    CycElem x(r_);
    for (long i = 0; i < f.phi; ++i) {
        if (c_[i] == 0) continue;
        const Poly& p = f.pw[i + e];
        for (long k = 0; k < f.phi; ++k)
            if (p[k] != 0) x.c_[k] += c_[i] * p[k];
    }
    return x;
}

CycElem CycElem::inverse() const {
    if (is_zero()) throw PoleHit("inverse of zero in Q(xi_" + std::to_string(r_) + ")");
    const Field& f = field(r_);
    Poly r0 = f.cyc, r1 = c_;
    trim(r1);
    Poly s0, s1{Q(1)};
    while (r1.size() > 1) {
        Poly quo, rem;
        divmod(r0, r1, quo, rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s2 = sub(s0, mul(quo, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw Error("internal: non-invertible element in a field");
    Q inv = 1 / r1[0];
    Poly quo, rem;
    divmod(s1, f.cyc, quo, rem);
    CycElem x(r_);
    for (std::size_t i = 0; i < rem.size(); ++i) x.c_[i] = rem[i] * inv;
    return x;
}

CycElem CycElem::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    CycElem r(r_, Q(1)), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

CycElem CycElem::galois(long j) const {
    if (std::gcd(j, r_) != 1) throw NonCoprime("galois action needs gcd(j, r) = 1");
    std::vector<Q> v(r_, Q(0));
    for (long i = 0; i < static_cast<long>(c_.size()); ++i) v[mod_floor(i * j, r_)] += c_[i];
    return from_cyclic(r_, v);
}

std::string CycElem::to_text() const {
    std::ostringstream os;
    os << r_ << ";";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : " ") << c_[i].get_str();
    return os.str();
}

CycElem CycElem::from_text(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw ParseError("CycElem text needs 'r;'", 0);
    long r;
    try {
        r = std::stol(s.substr(0, semi));
    } catch (...) {
        throw ParseError("bad order", 0);
    }
    std::vector<Q> c;
    std::stringstream ss(s.substr(semi + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        c.push_back(q_from_string(item.substr(b, item.find_last_not_of(" \t") - b + 1)));
    }
    return CycElem(r, std::move(c));
}

nlohmann::json CycElem::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (auto& c : c_) cs.push_back(c.get_str());
    return {{"r", r_}, {"coeffs", cs}};
}

CycElem CycElem::from_json(const nlohmann::json& j) {
    std::vector<Q> c;
    for (auto& x : j.at("coeffs")) c.push_back(q_from_string(x.get<std::string>()));
    return CycElem(j.at("r").get<long>(), std::move(c));
}

long ev_exponent(const Q& e, long r) {
    const Z& den = e.get_den();
    Z dm = den % r;
    long h = dm.get_si();
    if (std::gcd(h, r) != 1 && r != 1)
        throw NonCoprime("q^(" + e.get_str() + ") is undefined at order " + std::to_string(r));
    Z num = e.get_num() % r;
    long u = mod_floor(num.get_si(), r);
    if (r == 1) return 0;
    return mod_floor(u * mod_inverse(h, r), r);
}

CycElem ev(const QLaurent& f, long r) {
    QLaurent g = f.normalized();
    long D = g.denom();
    if (r != 1 && std::gcd(D, r) != 1)
        throw NonCoprime("evaluation needs q^(1/" + std::to_string(D) + ") with gcd(" + std::to_string(D) + "," +
                         std::to_string(r) + ") = 1");
    long inv = r == 1 ? 0 : mod_inverse(D, r);
    std::vector<Q> v(r, Q(0));
    for (auto& [e, c] : g.terms()) v[mod_floor(mod_floor(e, r) * inv, r)] += c;
    return CycElem::from_cyclic(r, v);
}

CycElem ev(const QFrac& f, long r) {
    CycElem d = ev(f.den, r);
    if (d.is_zero()) throw PoleHit("denominator vanishes at order " + std::to_string(r));
    return ev(f.num, r) / d;
}

CycElem xi_sum(const QuadFamily& f, long r) {
    std::vector<Q> acc(r, Q(0));
    for (long n = 1; n < 2 * r; n += 2)
        for (auto& m : f) {
            Q e = m.alpha * n * n + m.beta * n + m.gamma;
            QLaurent g = m.coeff.shifted(e).normalized();
            long D = g.denom();
            if (r != 1 && std::gcd(D, r) != 1) throw NonCoprime("xi_sum: fractional exponent not coprime to r");
            long inv = r == 1 ? 0 : mod_inverse(D, r);
            for (auto& [v, c] : g.terms()) acc[mod_floor(mod_floor(v, r) * inv, r)] += c;
        }
    return CycElem::from_cyclic(r, acc);
}

CycElem xi_sum(const std::function<CycElem(long n)>& f, long r) {
    CycElem s(r);
    for (long n = 1; n < 2 * r; n += 2) s += f(n);
    return s;
}

CycElem gauss_sum(long d, long r) {
    std::vector<Q> v(r, Q(0));
    for (long n = 1; n < 2 * r; n += 2) v[mod_floor(d * ((n * n - 1) / 4) % r, r)] += 1;
    return CycElem::from_cyclic(r, v);
}

std::optional<CycElem> divides(const CycElem& x, const CycElem& y) {
    if (!x.is_integral() || !y.is_integral()) throw NonIntegral("divides: inputs must lie in Z[xi]");
    if (y.is_zero()) throw ValidationError("divides: divisor is zero");
    CycElem q = x / y;
    if (!q.is_integral()) return std::nullopt;
    return q;
}

CycElem tilde_pochhammer(long l, long m, long c, long r) {
    CycElem p(r, Q(1));
    for (long j = l; j < l + m; ++j) {
        if (mod_floor(j, c) == 0) continue;
        p *= CycElem(r, Q(1)) - CycElem::xi_pow(r, j);
    }
    return p;
}

CycElem hat_pochhammer(long l, long m, long c, long r) {
    CycElem p(r, Q(1));
    for (long j = l; j < l + m; ++j) {
        if (mod_floor(j, c) != 0) continue;
        p *= CycElem(r, Q(1)) - CycElem::xi_pow(r, j);
    }
    return p;
}

}  // namespace so3
