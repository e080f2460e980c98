#pragma once

#include <map>
#include <string>
#include <vector>

#include "so3/qlaurent.hpp"

namespace so3 {

// Laurent polynomial in t with coefficients in Q[w]/Phi_a(w).
class WLaurent {
public:
    explicit WLaurent(long a = 1);
    WLaurent(long a, const Q& c);
    // c * w^j * t^e
    static WLaurent mono(long a, long j, long e, const Q& c = Q(1));
    // a Laurent polynomial in t, given as a QLaurent in the variable t
    static WLaurent from_t(long a, const QLaurent& f);

    long modulus() const { return a_; }
    long phi() const;
    const std::map<long, std::vector<Q>>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_w_free() const;
    QLaurent to_t() const;  // throws unless w-free; result in the variable t
    QLaurent w_coefficient(long j) const;  // coefficient of w^j in the power basis

    WLaurent operator-() const;
    WLaurent& operator+=(const WLaurent& o);
    WLaurent& operator-=(const WLaurent& o);
    friend WLaurent operator+(WLaurent x, const WLaurent& y) { return x += y; }
    friend WLaurent operator-(WLaurent x, const WLaurent& y) { return x -= y; }
    friend WLaurent operator*(const WLaurent& x, const WLaurent& y);
    WLaurent& operator*=(const WLaurent& o);
    WLaurent& operator*=(const Q& c);
    friend bool operator==(const WLaurent& x, const WLaurent& y) { return x.a_ == y.a_ && x.t_ == y.t_; }
    friend bool operator!=(const WLaurent& x, const WLaurent& y) { return !(x == y); }

    WLaurent galois(long j) const;  // w -> w^j
    std::string str() const;

private:
    void add(long e, const std::vector<Q>& v, int sign);
    long a_;
    std::map<long, std::vector<Q>> t_;
};

// sign * w^j * t^e
struct WMono {
    int sign = 1;
    long w = 0;
    long t = 0;
    WMono operator*(const WMono& o) const { return {sign * o.sign, w + o.w, t + o.t}; }
    WMono inv() const { return {sign, -w, -t}; }
    WLaurent as(long a) const { return WLaurent::mono(a, w, t, Q(sign)); }
    friend bool operator==(const WMono&, const WMono&) = default;
};

// prod_{i<m} (1 - x t^i)
WLaurent wpoch(long a, const WMono& x, long m);
// product of all Galois conjugates w -> w^j, gcd(j,a) = 1, j != 1
WLaurent galois_cofactor(const WLaurent& f);

}  // namespace so3
