#pragma once

#include <vector>

#include "so3/cyclotomic.hpp"
#include "so3/qfrac.hpp"
#include "so3/qlaurent.hpp"
#include "so3/qseries.hpp"

namespace so3 {

// prod_{j=1}^{2k+1} (1 + t^j + ... + t^{(|a|-1)j}), t = q^{1/|a|}
QLaurent f_denominator(long k, long a);

// F_k(q,a,b) * f_denominator(k,a) for a > 0, from the Laplace transform of {n/b} prod {n+i}
QLaurent f_numerator_laplace(long k, long a, long b);

struct MultiSumReport {
    QLaurent numerator;  // F_k * f_denominator, Laurent in q
    bool w_free = false;
    bool identity_holds = false;  // left side equals the multi-sum and the closed form
};
// the same numerator through the Watson transformation and its multi-sum
MultiSumReport f_numerator_multisum(long k, long a, long b);

// C_{k,a,b} = (-1)^k t^{a(5k+2)(k+1)/4 + k(k+1)(2b-3)/2} (t;t)_{2k+1}/(q;q)_{2k+1}
QFrac c_kab(long k, long a, long b);
// F_k / C_{k,a,b} as a Laurent polynomial in q; throws NonIntegral unless it lies in Z[t^{+-1}]
QLaurent f_over_c(long k, long a, long b);

struct Pin {
    int sign = 1;
    Q exponent;  // the unit is sign * q^exponent
    std::vector<long> orders;
};

struct FCoeff {
    long k = 0, a = 1, b = 1;
    QLaurent num;  // value = num / f_denominator(k, a)
    QLaurent den;
    Pin pin;
    QFrac value() const { return QFrac(num, den); }
};

// a > 0: F_k(q,a,b); a < 0: (-1)^{k+1} F_k(q^{-1},|a|,b); both times the pinned unit
FCoeff f_coeff(long k, long a, long b);
// unpinned convention value
FCoeff f_coeff_raw(long k, long a, long b);
Pin pin_unit(long k, long a, long b);

// sum over odd n of q^{d(n^2-1)/4} for rational d with denominator prime to r
CycElem gauss_sum_rational(const Q& d, long r);
// sum^xi q^{a(1-n^2)/(4b)} qbinom(n+k,2k+1) {k}! {n/b}
CycElem prop110x_lhs(long k, long a, long b, long r);
// 2 q^{(b-1)^2/(4ab)} gamma_{-a/b}(xi) ev(F)
CycElem prop110x_rhs(const FCoeff& f, long r);

}  // namespace so3
