#pragma once

// Independent reference computations for the tests. Nothing here calls the routine it checks.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "so3/cyclotomic.hpp"
#include "so3/qlaurent.hpp"

namespace oracle {

using so3::Q;

// PD code crossings X[i,j,k,l]
using PD = std::vector<std::array<int, 4>>;

// Kauffman bracket state sum, as a map exponent of A -> coefficient
std::map<long, long> kauffman_bracket(const PD& pd);
// Jones polynomial V(t), A = t^{-1/4}, writhe read off the PD code
std::map<long, long> jones_from_pd(const PD& pd);
// sum c t^e with t = q^s
so3::QLaurent jones_in_q(const std::map<long, long>& v, int s);

// Knot Atlas codes; 3_1 there is the left-handed trefoil
PD left_trefoil();
PD figure_eight();

// ((x)) sawtooth sums with the sign of a
Q dedekind_brute(long b, long a);
// product of Legendre symbols, each from the list of squares
int jacobi_brute(long d, long r);

so3::CycElem gauss_brute(long d, long r);

// (positive, negative) eigenvalue counts from the signs of leading principal minors;
// nullopt when a minor vanishes
std::optional<std::pair<int, int>> signature_by_minors(const std::vector<std::vector<long>>& m);

// coefficients of x^n, n <= N, in (1+x)^s
std::vector<Q> binomial_series(const Q& s, long N);
std::vector<Q> series_mul(const std::vector<Q>& a, const std::vector<Q>& b);
// a / b with b[0] != 0
std::vector<Q> series_div(const std::vector<Q>& a, const std::vector<Q>& b);

// q^{(1-a)/4} q^{3s(1,a)-3s(b,a)} (1-q^{-1/a})/(1-q^{-1}) expanded in x = q - 1, a > 0
std::vector<Q> lens_normalized_series(long a, long b, long N);

// the Laplace image q^{-beta^2/d} of q^{beta n} from Gaussian moments: with q = e^h, n a formal
// Gaussian variable of variance -2/(d h), E[e^{beta h n}] = e^{-beta^2 h/d}; returns the h-series
// coefficients by summing moments E[n^{2j}] = (2j-1)!! (-2/(d h))^j
std::vector<Q> laplace_by_moments(const Q& beta, const Q& d, long N);

}  // namespace oracle
