#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "so3/qlaurent.hpp"

namespace so3 {

using MultiIndex = std::vector<long>;

// J_L(P'_{k_1}, ..., P'_{k_m}) for a zero-framed algebraically split link
struct HabiroCoefficients {
    long components = 1;
    std::map<MultiIndex, QLaurent> table;

    QLaurent at(const MultiIndex& k) const;
    long max_index() const;  // largest k_i appearing
    void validate() const;   // Habiro divisibility, throws NonDivisible

    nlohmann::json to_json() const;
    static HabiroCoefficients from_json(const nlohmann::json& j);
};

// {2k+1}! / ({k}! {1})
QLaurent habiro_factor(long k);
// qbinom(n+k, 2k+1) {k}!
QLaurent habiro_basis_value(long n, long k);

QLaurent habiro_expand(const HabiroCoefficients& c, const std::vector<long>& colors);
HabiroCoefficients habiro_coeffs_from_colored(const std::vector<QLaurent>& values, long N);

// cyclotomic coefficient g_k with J_{K_p}(P'_k) = g_k {2k+1}!/({k}!{1})
QLaurent twist_knot_cyclotomic(long p, long k);
QLaurent twist_knot_coeff(long p, long k);
HabiroCoefficients twist_knot_table(long p, long K);
HabiroCoefficients unknot_table();

}  // namespace so3
