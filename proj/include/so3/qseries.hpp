#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "so3/qfrac.hpp"
#include "so3/qlaurent.hpp"
#include "so3/wlaurent.hpp"

namespace so3 {

std::pair<QLaurent, QLaurent> bailey_special(long n);
using BaileyPair = std::function<std::pair<QLaurent, QLaurent>(long)>;

struct AndrewsResult {
    bool equal = false;
    QFrac lhs, rhs, residual;
};

// b, c: monomials in q, one pair per index i = 1..k
AndrewsResult andrews_check(long k, long N, const std::vector<QLaurent>& b, const std::vector<QLaurent>& c,
                            const BaileyPair& pair = bailey_special);
// the same identity at a rational point q with rational b_i, c_i (special pair)
bool andrews_check_at(long k, long N, const std::vector<Q>& b, const std::vector<Q>& c, const Q& q);

// Watson-Andrews transformation with finite N at a rational point
bool watson_generic_check(const Q& alpha, const Q& t, const std::vector<Q>& b, const std::vector<Q>& c, long N);

// a pair (b_i, c_i) of the specialization; nullopt stands for INFINITY
struct WatsonPair {
    std::optional<WMono> b, c;
};

struct WatsonSpec {
    long k = 0, a = 1, b = 1, p = 1;
    std::vector<WatsonPair> pairs;  // i = 1..p-1; pair p is (t^{-k}, INFINITY)
};

WatsonSpec watson_specialization(long k, long a, long b);

struct WatsonResult {
    bool equal = false;
    bool matches_closed_lhs = false;
    WLaurent lhs_num, lhs_den, rhs_num, rhs_den, residual;
};

WatsonResult watson_check(const WatsonSpec& spec);
// sum_{j=0}^{2k+1} (q^{-2k-1};q)_j/(q;q)_j t^{bj^2+(a-2b)kj+(a-b-1)j}(1-t^{2j-2k-1}), q = t^a, in the variable t
QLaurent watson_closed_lhs(long k, long a, long b);
// the right-hand multi-sum as num/den in Z[w][t^{+-1}]
std::pair<WLaurent, WLaurent> watson_rhs(const WatsonSpec& spec);

}  // namespace so3
