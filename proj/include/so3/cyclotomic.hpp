#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "so3/qfrac.hpp"
#include "so3/qlaurent.hpp"

namespace so3 {

std::vector<Q> cyclotomic_poly(long r);  // coefficients of Phi_r, low degree first
long euler_phi(long r);

// Element of Q(xi) with xi = exp(2 pi i / r), r odd, in the power basis mod Phi_r.
class CycElem {
public:
    CycElem() = default;
    explicit CycElem(long r);
    CycElem(long r, const Q& c);
    CycElem(long r, std::vector<Q> coeffs);

    static CycElem xi_pow(long r, long e);
    // sum_e v[e] xi^e for e = 0..r-1
    static CycElem from_cyclic(long r, const std::vector<Q>& v);

    long order() const { return r_; }
    const std::vector<Q>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integral() const;
    bool is_rational() const;

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& o);
    CycElem& operator-=(const CycElem& o);
    CycElem& operator*=(const CycElem& o);
    CycElem& operator*=(const Q& c);
    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator*(CycElem a, const Q& c) { return a *= c; }
    friend CycElem operator*(const Q& c, CycElem a) { return a *= c; }
    friend bool operator==(const CycElem& a, const CycElem& b);
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

    CycElem times_xi_pow(long e) const;
    CycElem inverse() const;  // throws PoleHit on zero
    CycElem operator/(const CycElem& o) const { return *this * o.inverse(); }
    CycElem pow(long n) const;
    CycElem galois(long j) const;  // xi -> xi^j, gcd(j,r)=1
    CycElem conj() const { return galois(r_ - 1); }

    std::string to_text() const;
    static CycElem from_text(const std::string& s);
    nlohmann::json to_json() const;
    static CycElem from_json(const nlohmann::json& j);

private:
    long r_ = 1;
    std::vector<Q> c_;
};

// Exponent of xi representing q^e, i.e. e = u/h maps to u * h^{-1} mod r.
long ev_exponent(const Q& e, long r);
CycElem ev(const QLaurent& f, long r);
CycElem ev(const QFrac& f, long r);  // PoleHit if the denominator vanishes

// sum c * q^{alpha n^2 + beta n + gamma} as structured data in a formal n
struct QuadMonomial {
    QLaurent coeff;
    Q alpha, beta, gamma;
};
using QuadFamily = std::vector<QuadMonomial>;

// sum over odd n in (0, 2r)
CycElem xi_sum(const QuadFamily& f, long r);
CycElem xi_sum(const std::function<CycElem(long n)>& f, long r);

CycElem gauss_sum(long d, long r);

// x / y if it lies in Z[xi]
std::optional<CycElem> divides(const CycElem& x, const CycElem& y);

CycElem tilde_pochhammer(long l, long m, long c, long r);
CycElem hat_pochhammer(long l, long m, long c, long r);

}  // namespace so3
