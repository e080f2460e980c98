#pragma once

#include <vector>

#include "so3/cyclotomic.hpp"
#include "so3/fcoeff.hpp"
#include "so3/habiro.hpp"
#include "so3/manifold.hpp"

namespace so3 {

// coefficient of the k-th Habiro term for a component with framing a/b
FCoeff component_coeff(long k, long a, long b);

HabiroElement unified_invariant(const SurgeryPresentation& m, long K);
HabiroElement unified_algsplit(const std::vector<Fraction>& framings, const HabiroCoefficients& table, long K);

// q^{3s(1,a)-3s(b,a)} (1-q^{-1/a})/(1-q^{-1}), after making a > 0
QFrac lens_unified_closed(long a, long b);
// its inverse, a Laurent polynomial in q^{1/a}
QLaurent lens_unified_inverse(long a, long b);

// Seifert data with 0 <= b_i < a_i, a_i > 1, fibers sorted
Seifert seifert_normal_form(const Seifert& s);
Seifert seifert_mirror(const Seifert& s);

// (sn(e)/2) q^{(d-1)/4} q^{(e-3 sn e)/4} q^{-3 sum s(b_i,a_i)} / {1} L_{-e}(prod {j/a_i} / {j}^{n-2}),
// 1/{j}^{n-2} expanded two-sided, the result expanded in q (e > 0) or q^{-1} (e < 0)
// and kept up to |exponent| <= precision
QLaurent seifert_laplace_series(const Seifert& s, long precision);

}  // namespace so3
