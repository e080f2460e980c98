#include "so3/qfrac.hpp"

#include "so3/errors.hpp"

namespace so3 {

QFrac::QFrac(QLaurent n, QLaurent d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw PoleHit("fraction with zero denominator");
}

QFrac& QFrac::operator+=(const QFrac& o) {
    if (den == o.den) {
        num += o.num;
    } else {
        num = num * o.den + o.num * den;
        den *= o.den;
    }
    return *this;
}

QFrac& QFrac::operator-=(const QFrac& o) { return *this += -o; }

QFrac& QFrac::operator*=(const QFrac& o) {
    num *= o.num;
    den *= o.den;
    return *this;
}

QFrac& QFrac::operator/=(const QFrac& o) {
    if (o.num.is_zero()) throw PoleHit("division by zero fraction");
    num *= o.den;
    den *= o.num;
    return *this;
}

QFrac QFrac::reduced() const {
    QLaurent h;
    if (try_div_exact(num, den, h)) return QFrac(h);
    if (den.is_monomial()) return QFrac(div_exact(num, den));
    return *this;
}

QFrac substitute_power(const QFrac& f, const Q& s) {
    return QFrac(substitute_power(f.num, s), substitute_power(f.den, s));
}

}  // namespace so3
