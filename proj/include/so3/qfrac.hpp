#pragma once

#include "so3/qlaurent.hpp"

namespace so3 {

// num/den with no cancellation; equality cross-multiplies
struct QFrac {
    QLaurent num;
    QLaurent den = QLaurent(1);

    QFrac() = default;
    QFrac(QLaurent n) : num(std::move(n)) {}
    QFrac(QLaurent n, QLaurent d);

    bool is_zero() const { return num.is_zero(); }
    QFrac& operator+=(const QFrac& o);
    QFrac& operator-=(const QFrac& o);
    QFrac& operator*=(const QFrac& o);
    QFrac& operator/=(const QFrac& o);
    friend QFrac operator+(QFrac a, const QFrac& b) { return a += b; }
    friend QFrac operator-(QFrac a, const QFrac& b) { return a -= b; }
    friend QFrac operator*(QFrac a, const QFrac& b) { return a *= b; }
    friend QFrac operator/(QFrac a, const QFrac& b) { return a /= b; }
    QFrac operator-() const { return QFrac(-num, den); }
    friend bool operator==(const QFrac& a, const QFrac& b) { return a.num * b.den == b.num * a.den; }
    friend bool operator!=(const QFrac& a, const QFrac& b) { return !(a == b); }

    // exact quotient if den divides num
    bool to_laurent(QLaurent& out) const { return try_div_exact(num, den, out); }
    QFrac reduced() const;  // strips a common monomial content and divides when possible
};

QFrac substitute_power(const QFrac& f, const Q& s);

}  // namespace so3
