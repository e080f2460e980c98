#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "so3/cyclotomic.hpp"
#include "so3/qfrac.hpp"
#include "so3/qlaurent.hpp"

namespace so3 {

// f_k = num / prod(den_factors)
struct HabiroTerm {
    QLaurent num;
    std::vector<QLaurent> den_factors;
    QLaurent den() const;
    QFrac value() const { return QFrac(num, den()); }
};

// sum_{k<=K} f_k (q^{k+1};q)_{k+1}
struct HabiroElement {
    long a = 1;
    long K = 0;
    std::vector<HabiroTerm> f;
    nlohmann::json pinned_units = nlohmann::json::array();

    static HabiroElement constant(const QLaurent& c, long a, long K);
    nlohmann::json to_json() const;
    static HabiroElement from_json(const nlohmann::json& j);
};

QLaurent habiro_basis(long k);  // (q^{k+1};q)_{k+1}

// the element itself at xi; needs gcd(r,a) = 1 and K >= (r-3)/2
CycElem eval_habiro(const HabiroElement& I, long r);
// ev(q^{(1-a)/4} I)
CycElem eval_normalized(const HabiroElement& I, long r);

// coefficients c_0..c_N of I at q = e^h
std::vector<Q> ohtsuki_series(const HabiroElement& I, long N);

HabiroElement habiro_product(const HabiroElement& x, const HabiroElement& y);
HabiroElement habiro_scale(const HabiroElement& x, const QLaurent& c);
// I(q^{-1}) written back in the basis (q^{k+1};q)_{k+1}
HabiroElement habiro_substitute_inverse(const HabiroElement& x);

// f_k (q;q)_{2k+1} (1-q) / (t;t)_{2k+1} with t = q^{1/a}, if it is a monomial times Z[t^{+-1}]
std::optional<QLaurent> ring_certificate(const HabiroElement& I, long k);

}  // namespace so3
