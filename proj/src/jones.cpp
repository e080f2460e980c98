#include "so3/jones.hpp"

#include <algorithm>
#include <functional>

#include "so3/errors.hpp"

namespace so3 {

QLaurent HabiroCoefficients::at(const MultiIndex& k) const {
    auto it = table.find(k);
    return it == table.end() ? QLaurent() : it->second;
}

long HabiroCoefficients::max_index() const {
    long m = 0;
    for (auto& [k, c] : table)
        for (long x : k) m = std::max(m, x);
    return m;
}

void HabiroCoefficients::validate() const {
    for (auto& [k, c] : table) {
        if (static_cast<long>(k.size()) != components) throw ValidationError("Habiro table: multi-index length mismatch");
        for (long x : k)
            if (x < 0) throw ValidationError("Habiro table: negative index");
        long m = *std::max_element(k.begin(), k.end());
        QLaurent h;
        if (!try_div_exact(c, habiro_factor(m), h)) {
            std::string idx;
            for (long x : k) idx += (idx.empty() ? "" : ",") + std::to_string(x);
            throw NonDivisible("Habiro divisibility fails at k=(" + idx + ")");
        }
    }
}

nlohmann::json HabiroCoefficients::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [k, c] : table) out.push_back({{"k", k}, {"coeff", c.to_json()}});
    return out;
}

HabiroCoefficients HabiroCoefficients::from_json(const nlohmann::json& j) {
    HabiroCoefficients h;
    const nlohmann::json& list = j.is_object() ? j.at("entries") : j;
    h.components = -1;
    for (auto& e : list) {
        MultiIndex k = e.at("k").get<MultiIndex>();
        if (h.components < 0) h.components = static_cast<long>(k.size());
        if (static_cast<long>(k.size()) != h.components) throw ValidationError("Habiro table: inconsistent multi-index lengths");
        h.table[k] += QLaurent::from_json(e.at("coeff"));
    }
    if (h.components < 0) h.components = j.is_object() ? j.value("components", 1L) : 1;
    return h;
}

QLaurent habiro_factor(long k) {
    QLaurent p(1);
    for (long j = k + 1; j <= 2 * k + 1; ++j) p *= qint(j);
    return div_exact(p, qint(1));
}

QLaurent habiro_basis_value(long n, long k) { return qbinom(n + k, 2 * k + 1) * qfact(k); }

QLaurent habiro_expand(const HabiroCoefficients& c, const std::vector<long>& colors) {
    if (static_cast<long>(colors.size()) != c.components) throw ValidationError("habiro_expand: wrong number of colors");
    for (long n : colors)
        if (n <= 0) throw ValidationError("habiro_expand: colors must be positive");
    QLaurent s;
    for (auto& [k, coeff] : c.table) {
        bool ok = true;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] > colors[i] - 1) ok = false;
        if (!ok) continue;
        QLaurent term = coeff;
        for (std::size_t i = 0; i < k.size(); ++i) term *= habiro_basis_value(colors[i], k[i]);
        s += term;
    }
    return s;
}

HabiroCoefficients habiro_coeffs_from_colored(const std::vector<QLaurent>& values, long N) {
    if (static_cast<long>(values.size()) < N) throw ValidationError("habiro_coeffs_from_colored: need J(1..N)");
    HabiroCoefficients h;
    std::vector<QLaurent> c;
    for (long n = 1; n <= N; ++n) {
        QLaurent rest = values[n - 1];
        for (long k = 0; k < n - 1; ++k) rest -= c[k] * habiro_basis_value(n, k);
        QLaurent ck;
        if (!try_div_exact(rest, qfact(n - 1), ck))
            throw Inconsistent("colored values are not the expansion of a single knot at n=" + std::to_string(n));
        c.push_back(ck);
        if (!ck.is_zero()) h.table[{n - 1}] = ck;
    }
    return h;
}

namespace {

// sum over compositions i_1+...+i_p = n of q^{sum_{i<p} (s_i^2+s_i)} (q)_n / prod (q)_{i_j}
QLaurent masbaum_sum(long p, long n) {
    QLaurent total;
    std::vector<long> parts(p, 0);
    std::function<void(long, long, long, QLaurent)> rec = [&](long j, long left, long expo, QLaurent mult) {
        if (j == p - 1) {
            // last part takes the remainder; its partial sum is n and is not weighted
            total += mult.shifted(Q(expo));
            return;
        }
        long used = n - left;
        for (long i = 0; i <= left; ++i) {
            long s = used + i;
            rec(j + 1, left - i, expo + s * s + s, mult * qbinom_plain(left, i));
        }
    };
    rec(0, n, 0, QLaurent(1));
    return total;
}

}  // namespace

QLaurent twist_knot_cyclotomic(long p, long k) {
    if (p == 0) throw ValidationError("twist knot parameter must be nonzero");
    if (k < 0) throw ValidationError("negative Habiro index");
    if (p > 0) {
        QLaurent g = masbaum_sum(p, k).shifted(make_q(k * (k + 3), 2));
        return (k % 2) ? -g : g;
    }
    return substitute_power(masbaum_sum(-p, k), Q(-1));
}

QLaurent twist_knot_coeff(long p, long k) { return twist_knot_cyclotomic(p, k) * habiro_factor(k); }

HabiroCoefficients twist_knot_table(long p, long K) {
    HabiroCoefficients h;
    for (long k = 0; k <= K; ++k) h.table[{k}] = twist_knot_coeff(p, k);
    return h;
}

HabiroCoefficients unknot_table() {
    HabiroCoefficients h;
    h.table[{0}] = QLaurent(1);
    return h;
}

}  // namespace so3
