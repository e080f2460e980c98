#include "so3/qlaurent.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "so3/errors.hpp"

namespace so3 {

Q make_q(long num, long den) {
    Q x(num, den);
    x.canonicalize();
    return x;
}

std::string q_to_string(const Q& x) { return x.get_str(); }

Q q_from_string(const std::string& s) {
    Q x;
    if (x.set_str(s, 10) != 0) throw ValidationError("bad rational '" + s + "'");
    x.canonicalize();
    return x;
}

namespace {

long to_long(const Z& z) {
    if (!z.fits_slong_p()) throw Error("exponent overflow");
    return z.get_si();
}

long lcm_l(long a, long b) { return std::lcm(a, b); }

}  // namespace

QLaurent::QLaurent(long c) {
    if (c != 0) t_.emplace(0, Q(c));
}

QLaurent::QLaurent(const Q& c) {
    if (c != 0) t_.emplace(0, c);
}

QLaurent QLaurent::monomial(const Q& c, const Q& e) {
    QLaurent r;
    if (c == 0) return r;
    r.D_ = to_long(e.get_den());
    r.t_.emplace(to_long(e.get_num()), c);
    return r;
}

QLaurent QLaurent::from_terms(long D, std::map<long, Q> t) {
    if (D <= 0) throw ValidationError("QLaurent: denominator scale must be positive");
    QLaurent r;
    r.D_ = D;
    for (auto& [e, c] : t)
        if (c != 0) r.t_.emplace(e, std::move(c));
    return r;
}

void QLaurent::add_term(long v, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(v, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool QLaurent::is_integral() const {
    for (auto& [e, c] : t_)
        if (c.get_den() != 1) return false;
    return true;
}

Q QLaurent::min_exponent() const {
    if (t_.empty()) throw Error("min_exponent of zero");
    return make_q(t_.begin()->first, D_);
}

Q QLaurent::max_exponent() const {
    if (t_.empty()) throw Error("max_exponent of zero");
    return make_q(t_.rbegin()->first, D_);
}

Q QLaurent::coeff(const Q& e) const {
    Q v = e * D_;
    if (v.get_den() != 1) return Q(0);
    auto it = t_.find(to_long(v.get_num()));
    return it == t_.end() ? Q(0) : it->second;
}

QLaurent QLaurent::rescaled(long D) const {
    if (D % D_ != 0) throw Error("rescale to a non-multiple denominator");
    if (D == D_) return *this;
    long m = D / D_;
    QLaurent r;
    r.D_ = D;
    for (auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e * m, c);
    return r;
}

QLaurent QLaurent::normalized() const {
    long g = D_;
    for (auto& [e, c] : t_) {
        g = std::gcd(g, e < 0 ? -e : e);
        if (g == 1) return *this;
    }
    if (t_.empty()) g = D_;
    QLaurent r;
    r.D_ = D_ / g;
    for (auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e / g, c);
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    if (o.t_.empty()) return *this;
    long L = lcm_l(D_, o.D_);
    if (L != D_) *this = rescaled(L);
    long m = L / o.D_;
    for (auto& [e, c] : o.t_) add_term(e * m, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    if (o.t_.empty()) return *this;
    long L = lcm_l(D_, o.D_);
    if (L != D_) *this = rescaled(L);
    long m = L / o.D_;
    for (auto& [e, c] : o.t_) add_term(e * m, -c);
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    if (a.t_.empty() || b.t_.empty()) return r;
    long L = std::lcm(a.D_, b.D_);
    long ma = L / a.D_, mb = L / b.D_;
    r.D_ = L;
    Q tmp;
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_) {
            tmp = ca * cb;
            r.add_term(ea * ma + eb * mb, tmp);
        }
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
    *this = *this * o;
    return *this;
}

QLaurent& QLaurent::operator*=(const Q& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [e, x] : t_) x *= c;
    return *this;
}

bool operator==(const QLaurent& a, const QLaurent& b) {
    if (a.t_.size() != b.t_.size()) return false;
    if (a.t_.empty()) return true;
    long L = std::lcm(a.D_, b.D_);
    long ma = L / a.D_, mb = L / b.D_;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
        if (ia->first * ma != ib->first * mb || ia->second != ib->second) return false;
    return true;
}

QLaurent QLaurent::shifted(const Q& e) const { return *this * monomial(Q(1), e); }

QLaurent QLaurent::pow(unsigned n) const {
    QLaurent r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

std::string QLaurent::to_text() const {
    QLaurent n = normalized();
    std::ostringstream os;
    os << n.D_ << ";";
    bool first = true;
    for (auto& [e, c] : n.t_) {
        os << (first ? " " : ", ") << e << ":" << c.get_str();
        first = false;
    }
    return os.str();
}

QLaurent QLaurent::from_text(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw ParseError("QLaurent text needs 'D;'", 0);
    long D;
    try {
        D = std::stol(s.substr(0, semi));
    } catch (...) {
        throw ParseError("bad denominator scale", 0);
    }
    std::map<long, Q> t;
    std::size_t pos = semi + 1;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto b = item.find_first_not_of(" \t");
        if (b != std::string::npos) {
            item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
            auto colon = item.find(':');
            if (colon == std::string::npos) throw ParseError("expected 'e:c'", pos);
            long e;
            try {
                e = std::stol(item.substr(0, colon));
            } catch (...) {
                throw ParseError("bad exponent", pos);
            }
            t[e] += q_from_string(item.substr(colon + 1));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_terms(D, std::move(t));
}

nlohmann::json QLaurent::to_json() const {
    QLaurent n = normalized();
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : n.t_) terms.push_back({e, c.get_str()});
    return {{"D", n.D_}, {"terms", terms}};
}

QLaurent QLaurent::from_json(const nlohmann::json& j) {
    std::map<long, Q> t;
    for (auto& term : j.at("terms")) t[term.at(0).get<long>()] += q_from_string(term.at(1).get<std::string>());
    return from_terms(j.at("D").get<long>(), std::move(t));
}

std::string pretty(const QLaurent& f) {
    QLaurent n = f.normalized();
    if (n.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = n.terms().rbegin(); it != n.terms().rend(); ++it) {
        Q c = it->second;
        Q e = make_q(it->first, n.denom());
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "q";
        if (e != 1) {
            if (e.get_den() == 1 && e > 0)
                os << "^" << e.get_str();
            else
                os << "^(" << e.get_str() << ")";
        }
    }
    return os.str();
}

QLaurent qint(long n) {
    if (n == 0) return QLaurent();
    return QLaurent::qpow(make_q(n, 2)) - QLaurent::qpow(make_q(-n, 2));
}

QLaurent qnum(long n) {
    // [n] = sum_{j=0}^{|n|-1} q^{(|n|-1-2j)/2}, sign(n)
    long m = n < 0 ? -n : n;
    std::map<long, Q> t;
    for (long j = 0; j < m; ++j) t[m - 1 - 2 * j] = Q(n < 0 ? -1 : 1);
    return QLaurent::from_terms(2, std::move(t));
}

QLaurent qfact(long n) {
    if (n < 0) throw ValidationError("qfact of negative integer");
    QLaurent r(1);
    for (long i = 1; i <= n; ++i) r *= qint(i);
    return r;
}

QLaurent qbinom(long n, long k) {
    if (k < 0) return QLaurent();
    if (n >= 0) {
        if (k > n) return QLaurent();
        // row-by-row balanced Pascal rule, keeping columns 0..k
        std::vector<QLaurent> row(k + 1);
        row[0] = QLaurent(1);
        for (long m = 1; m <= n; ++m) {
            for (long j = std::min(m, k); j >= 1; --j) {
                QLaurent v = row[j - 1].shifted(make_q(m - j, 2));
                if (!row[j].is_zero()) v += row[j].shifted(make_q(-j, 2));
                row[j] = std::move(v);
            }
        }
        return row[k];
    }
    QLaurent num(1);
    for (long i = 0; i < k; ++i) num *= qint(n - i);
    QLaurent h;
    if (!try_div_exact(num, qfact(k), h))
        throw Error("internal: q-binomial division left a remainder");
    return h;
}

QLaurent qbinom_plain(long n, long k) {
    if (k < 0 || n < 0 || k > n) return QLaurent();
    std::vector<QLaurent> row(k + 1);
    row[0] = QLaurent(1);
    for (long m = 1; m <= n; ++m)
        for (long j = std::min(m, k); j >= 1; --j) {
            QLaurent v = row[j - 1];
            if (!row[j].is_zero()) v += row[j].shifted(Q(j));
            row[j] = std::move(v);
        }
    return row[k];
}

QLaurent pochhammer(const QLaurent& first, const Q& step, long m) {
    if (m < 0) throw ValidationError("pochhammer length must be nonnegative");
    if (m > 0 && !first.is_monomial()) throw ValidationError("pochhammer: first entry must be a monomial");
    QLaurent r(1);
    for (long i = 0; i < m; ++i) {
        r *= QLaurent(1) - first.shifted(step * i);
        if (r.is_zero()) break;
    }
    return r;
}

QLaurent qpoch(const Q& x, long m) { return pochhammer(QLaurent::qpow(x), Q(1), m); }

QLaurent substitute_power(const QLaurent& f, const Q& s) {
    if (s == 0) throw ValidationError("substitute_power needs nonzero exponent");
    long sn = to_long(s.get_num()), sd = to_long(s.get_den());
    std::map<long, Q> t;
    for (auto& [e, c] : f.terms()) t.emplace(e * sn, c);
    return QLaurent::from_terms(f.denom() * sd, std::move(t));
}

bool try_div_exact(const QLaurent& f, const QLaurent& g, QLaurent& h) {
    if (g.is_zero()) throw ValidationError("division by zero QLaurent");
    if (f.is_zero()) {
        h = QLaurent();
        return true;
    }
    long L = std::lcm(f.denom(), g.denom());
    QLaurent F = f.rescaled(L), G = g.rescaled(L);
    if (G.is_monomial()) {
        auto [ge, gc] = *G.terms().begin();
        std::map<long, Q> t;
        for (auto& [e, c] : F.terms()) t.emplace(e - ge, c / gc);
        h = QLaurent::from_terms(L, std::move(t)).normalized();
        return true;
    }
    const auto& gt = G.terms();
    long gmin = gt.begin()->first, gmax = gt.rbegin()->first;
    Q glead = gt.rbegin()->second;
    long qmin = F.terms().begin()->first - gmin;
    std::map<long, Q> quo;
    std::map<long, Q> rem(F.terms().begin(), F.terms().end());
    Q c, prod;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        long qe = top->first - gmax;
        if (qe < qmin) return false;
        c = top->second / glead;
        quo.emplace(qe, c);
        for (auto& [e, gc] : gt) {
            prod = c * gc;
            auto [it, fresh] = rem.try_emplace(e + qe, -prod);
            if (!fresh) {
                it->second -= prod;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    h = QLaurent::from_terms(L, std::move(quo));
    return true;
}

QLaurent div_exact(const QLaurent& f, const QLaurent& g) {
    QLaurent h;
    if (!try_div_exact(f, g, h)) throw NonDivisible("div_exact: " + pretty(g) + " does not divide " + pretty(f));
    return h;
}

}  // namespace so3
