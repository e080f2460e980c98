#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace so3 {

using Z = mpz_class;
using Q = mpq_class;

Q make_q(long num, long den = 1);
std::string q_to_string(const Q& x);
Q q_from_string(const std::string& s);

// Laurent polynomial in v = q^{1/D} with rational coefficients.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long c);
    QLaurent(const Q& c);

    // c * q^e
    static QLaurent monomial(const Q& c, const Q& e);
    static QLaurent qpow(const Q& e) { return monomial(Q(1), e); }

    long denom() const { return D_; }
    const std::map<long, Q>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_integral() const;
    std::size_t size() const { return t_.size(); }

    Q min_exponent() const;
    Q max_exponent() const;
    Q coeff(const Q& e) const;
    Q constant_term() const { return coeff(Q(0)); }

    QLaurent rescaled(long D) const;
    QLaurent normalized() const;

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const QLaurent& o);
    QLaurent& operator*=(const Q& c);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(QLaurent a, const Q& c) { return a *= c; }
    friend QLaurent operator*(const Q& c, QLaurent a) { return a *= c; }
    friend bool operator==(const QLaurent& a, const QLaurent& b);
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

    QLaurent shifted(const Q& e) const;  // times q^e
    QLaurent pow(unsigned n) const;

    std::string to_text() const;
    static QLaurent from_text(const std::string& s);
    nlohmann::json to_json() const;
    static QLaurent from_json(const nlohmann::json& j);

    // raw constructor for internal use: exponents are in units of 1/D
    static QLaurent from_terms(long D, std::map<long, Q> t);
    void add_term(long v, const Q& c);

private:
    long D_ = 1;
    std::map<long, Q> t_;
};

std::string pretty(const QLaurent& f);

QLaurent qint(long n);                 // {n}
QLaurent qnum(long n);                 // [n]
QLaurent qfact(long n);                // {n}!
QLaurent qbinom(long n, long k);       // balanced
QLaurent qbinom_plain(long n, long k); // (q)_n/((q)_k (q)_{n-k})

// prod_{i<m} (1 - first * q^{i*step})
QLaurent pochhammer(const QLaurent& first, const Q& step, long m);
// (q^x;q)_m
QLaurent qpoch(const Q& x, long m);

QLaurent substitute_power(const QLaurent& f, const Q& s);
QLaurent div_exact(const QLaurent& f, const QLaurent& g);
bool try_div_exact(const QLaurent& f, const QLaurent& g, QLaurent& h);

}  // namespace so3
