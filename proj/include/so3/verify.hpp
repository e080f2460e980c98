#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "so3/manifold.hpp"

namespace so3 {

struct CheckReport {
    explicit CheckReport(std::string name = {}) : suite(std::move(name)) {}

    std::string suite;
    long passed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void record(bool good, const std::string& what);
    void merge(const CheckReport& o);
    nlohmann::json to_json() const;
    std::string to_text() const;
};

std::vector<long> odd_orders(long lo, long hi);

// |gamma_d|^2 = r for gcd(d,r) = 1 and gamma_d(xi) = c gamma_{d/c}(xi^c), against a brute-force sum
CheckReport verify_gauss(long rmax);
// the q-binomial Gauss-sum identity for F_k, only where k <= (r-3)/2
CheckReport verify_prop110x(const std::vector<long>& as, const std::vector<long>& bs, long kmax,
                            const std::vector<long>& orders);
CheckReport verify_andrews(long kmax, long Nmax, long samples, std::uint64_t seed);
// specializations, w-freeness, agreement with the Laplace route, F_k / C_{k,a,b} integrality
CheckReport verify_watson(long amax, long bmax, long kmax);
// Laplace reduction, the qbinom identity through Y_c and the divisibility of Y_c, at one (r, d)
CheckReport verify_lemma33(long r, long d);
CheckReport verify_reciprocity(long amax);
// ev(q^{(1-a)/4} I_M) = (a/r) tau_M
CheckReport verify_consistency(const SurgeryPresentation& m, const std::vector<long>& orders, long K);
CheckReport verify_integrality(const SurgeryPresentation& m, const std::vector<long>& orders);
// tau agrees between the standard and the alternative continued fractions
CheckReport verify_chain_independence(const SurgeryPresentation& m, const std::vector<long>& orders);

}  // namespace so3
