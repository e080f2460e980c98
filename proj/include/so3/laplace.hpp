#pragma once

#include <map>

#include "so3/cyclotomic.hpp"
#include "so3/qfrac.hpp"
#include "so3/qlaurent.hpp"

namespace so3 {

// sum_beta c_beta(q) q^{beta n} in a formal variable n
using NSeries = std::map<Q, QLaurent>;

NSeries to_nseries(const QuadFamily& f);  // rejects quadratic terms
QuadFamily to_family(const NSeries& f);
NSeries nseries_mul(const NSeries& a, const NSeries& b);

// q^{beta n} -> q^{-beta^2/d}
QLaurent laplace_formal(const NSeries& f, const Q& d);
QLaurent laplace_formal(const QuadFamily& f, const Q& d);

// (sum^xi q^{d(n^2-1)/4} f) / gamma_d(xi); n-exponents must be integers
CycElem laplace_at_root(const QuadFamily& f, long d, long r);

QLaurent y_c(long k, long b, long c);
QLaurent y_habiro(long k, long a);  // Y(k,a), a Laurent polynomial in q^{1/a}

QFrac s_n_formal(long N, long c, long b);
CycElem s_n_at_root(long N, long c, long b, long r);

// {n/b} prod_{i=-k}^{k} {n+i}
NSeries y_product(long k, long b);

}  // namespace so3
