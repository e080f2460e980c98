#include "so3/wrt.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "so3/errors.hpp"
#include "so3/numtheory.hpp"

namespace so3 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// evaluated building blocks at a fixed odd order r
class RootCtx {
public:
    explicit RootCtx(long r) : r_(r) {
        for (long e = 0; e < r; ++e) pw_.push_back(CycElem::xi_pow(r, e));
        inv1_ = bracket(1).inverse();
        for (long n = 1; n < 2 * r; n += 2) qi_.push_back(bracket(n) * inv1_);
    }

    long r() const { return r_; }
    const CycElem& pw(long e) const { return pw_[mod_floor(e, r_)]; }
    // q^x
    const CycElem& q(const Q& x) const { return pw(ev_exponent(x, r_)); }
    // {m}
    CycElem bracket(long m) const { return q(make_q(m, 2)) - q(make_q(-m, 2)); }
    // [n] for odd n in (0, 2r)
    const CycElem& qint_odd(long n) const { return qi_[(n - 1) / 2]; }
    const CycElem& inv1() const { return inv1_; }
    // q^{f(n^2-1)/4}
    const CycElem& framing(long f, long n) const { return pw(mod_floor(f * ((n * n - 1) / 4), r_)); }

    // [j jj]/[j] = sum_{l<jj} q^{j(jj-1-2l)/2}
    const CycElem& hopf(long j, long jj) {
        auto key = std::make_pair(j, jj);
        auto it = hopf_.find(key);
        if (it != hopf_.end()) return it->second;
        std::vector<Q> v(r_, Q(0));
        for (long l = 0; l < jj; ++l) v[ev_exponent(make_q(j * (jj - 1 - 2 * l), 2), r_)] += 1;
        return hopf_.emplace(key, CycElem::from_cyclic(r_, v)).first->second;
    }

    // qbinom(n+k, 2k+1) {k}!
    const CycElem& basis(long n, long k) {
        auto key = std::make_pair(n, k);
        auto it = basis_.find(key);
        if (it != basis_.end()) return it->second;
        CycElem v(r_);
        if (n + k >= 2 * k + 1) {
            if (2 * k + 1 < r_) {
                v = CycElem(r_, Q(1));
                for (long i = 0; i <= 2 * k; ++i) v *= bracket(n + k - i);
                for (long i = k + 1; i <= 2 * k + 1; ++i) v = v / bracket(i);
            } else {
                v = ev(habiro_basis_value(n, k), r_);
            }
        }
        return basis_.emplace(key, v).first->second;
    }

private:
    long r_;
    std::vector<CycElem> pw_, qi_;
    CycElem inv1_;
    std::map<std::pair<long, long>, CycElem> hopf_, basis_;
};

// E(node, j) for j odd: the subtree's weight given the parent color j
std::vector<CycElem> subtree(const LinkNode& node, RootCtx& ctx) {
    long r = ctx.r();
    std::vector<std::vector<CycElem>> kids;
    for (auto& c : node.children) kids.push_back(subtree(c, ctx));
    // own weights w(jj) = [jj] q^{f(jj^2-1)/4} prod_children
    std::vector<CycElem> own;
    for (long jj = 1; jj < 2 * r; jj += 2) {
        CycElem w = ctx.qint_odd(jj) * ctx.framing(node.framing, jj);
        for (auto& k : kids) w *= k[(jj - 1) / 2];
        own.push_back(w);
    }
    std::vector<CycElem> out;
    for (long j = 1; j < 2 * r; j += 2) {
        CycElem s(r);
        for (long jj = 1; jj < 2 * r; jj += 2) {
            const CycElem& w = own[(jj - 1) / 2];
            if (!w.is_zero()) s += w * ctx.hopf(j, jj);
        }
        out.push_back(s);
    }
    return out;
}

void add_node_rows(const LinkNode& n, long parent, std::vector<std::pair<long, long>>& diag,
                   std::vector<std::pair<long, long>>& edges) {
    long me = static_cast<long>(diag.size());
    diag.emplace_back(me, n.framing);
    if (parent >= 0) edges.emplace_back(parent, me);
    for (auto& c : n.children) add_node_rows(c, me, diag, edges);
}

LinkNode chain_nodes(const std::vector<long>& ch, std::size_t from = 0) {
    LinkNode n;
    n.framing = ch[from];
    if (from + 1 < ch.size()) n.children.push_back(chain_nodes(ch, from + 1));
    return n;
}

// a component with rational framing x: integer framing directly, otherwise 0 plus a Hopf chain
LinkNode framed_component(const Fraction& x, bool alt) {
    LinkNode n;
    if (x.den == 1) {
        n.framing = x.num;
        return n;
    }
    n.framing = 0;
    n.children.push_back(chain_nodes(hopf_chain(x, alt)));
    return n;
}

HabiroCoefficients tensor(const HabiroCoefficients& x, const HabiroCoefficients& y) {
    HabiroCoefficients h;
    h.components = x.components + y.components;
    for (auto& [kx, vx] : x.table)
        for (auto& [ky, vy] : y.table) {
            MultiIndex k = kx;
            k.insert(k.end(), ky.begin(), ky.end());
            h.table[k] = vx * vy;
        }
    return h;
}

const HabiroCoefficients& cached_twist_table(long p, long K) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::unique_ptr<HabiroCoefficients>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, K}];
    if (!slot) slot = std::make_unique<HabiroCoefficients>(twist_knot_table(p, K));
    return *slot;
}

std::vector<std::vector<long>> chain_matrix(const std::vector<long>& ch) {
    std::size_t n = ch.size();
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = ch[i];
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
    }
    return m;
}

}  // namespace

std::vector<long> hopf_chain(const Fraction& x, bool alt) {
    std::vector<long> ms = alt ? neg_continued_fraction_alt(x) : neg_continued_fraction(x);
    return {ms.rbegin(), ms.rend()};
}

IntegralLink realize(const SurgeryPresentation& m, long kmax, bool alt) {
    return std::visit(
        overloaded{
            [&](const Lens& l) {
                IntegralLink L;
                L.table = unknot_table();
                Fraction x(l.a, l.b);
                LinkNode core;
                if (x.den == 1) {
                    core.framing = x.num;
                } else {
                    core.framing = 0;
                    core.children.push_back(chain_nodes(hopf_chain(x, alt)));
                }
                L.cores.push_back(core);
                return L;
            },
            [&](const Seifert& s) {
                IntegralLink L;
                L.table = unknot_table();
                LinkNode center;
                center.framing = -s.b;
                for (auto& [ai, bi] : s.fibers) {
                    if (bi == 0) continue;  // a_i = 1, b_i = 0 is an infinite framing: the leaf disappears
                    center.children.push_back(framed_component(Fraction(ai, bi), alt));
                }
                L.cores.push_back(center);
                return L;
            },
            [&](const TwistSurgery& t) {
                IntegralLink L;
                L.table = cached_twist_table(t.p, std::max<long>(kmax, 0));
                L.cores.push_back(framed_component(t.framing, alt));
                return L;
            },
            [&](const ConnectedSum& c) {
                IntegralLink L;
                L.table = HabiroCoefficients{0, {{MultiIndex{}, QLaurent(1)}}};
                for (auto& p : c.parts) {
                    IntegralLink P = realize(p, kmax, alt);
                    L.table = tensor(L.table, P.table);
                    for (auto& core : P.cores) L.cores.push_back(core);
                }
                return L;
            },
            [&](const AlgSplit& a) {
                IntegralLink L;
                L.table = a.table;
                for (auto& f : a.framings) L.cores.push_back(framed_component(f, alt));
                return L;
            },
        },
        m.v);
}

std::vector<std::vector<long>> linking_matrix(const IntegralLink& l) {
    std::vector<std::pair<long, long>> diag, edges;
    for (auto& c : l.cores) add_node_rows(c, -1, diag, edges);
    std::size_t n = diag.size();
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (auto& [i, f] : diag) m[i][i] = f;
    for (auto& [i, j] : edges) m[i][j] = m[j][i] = 1;
    return m;
}

SignatureCounts signature_counts(const std::vector<std::vector<long>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw ValidationError("linking matrix must be square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] != a[j][i]) throw ValidationError("linking matrix must be symmetric");
    SignatureCounts s;
    std::vector<bool> alive(n, true);
    std::size_t left = n;
    auto eliminate = [&](const std::vector<std::size_t>& piv) {
        // Schur complement against a 1x1 or 2x2 pivot block
        if (piv.size() == 1) {
            std::size_t p = piv[0];
            for (std::size_t i = 0; i < n; ++i) {
                if (!alive[i] || i == p || a[i][p] == 0) continue;
                Q f = a[i][p] / a[p][p];
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[j] && j != p) a[i][j] -= f * a[p][j];
            }
        } else {
            std::size_t p = piv[0], q = piv[1];
            Q det = a[p][p] * a[q][q] - a[p][q] * a[q][p];
            // inverse of the pivot block
            Q ipp = a[q][q] / det, ipq = -a[p][q] / det, iqq = a[p][p] / det;
            std::vector<std::pair<std::size_t, std::pair<Q, Q>>> rows;
            for (std::size_t i = 0; i < n; ++i) {
                if (!alive[i] || i == p || i == q) continue;
                Q fp = a[i][p] * ipp + a[i][q] * ipq;
                Q fq = a[i][p] * ipq + a[i][q] * iqq;
                rows.push_back({i, {fp, fq}});
            }
            for (auto& [i, f] : rows)
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[j] && j != p && j != q) a[i][j] -= f.first * a[p][j] + f.second * a[q][j];
        }
        for (auto p : piv) alive[p] = false;
        left -= piv.size();
    };
    while (left > 0) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n && piv == n; ++i)
            if (alive[i] && a[i][i] != 0) piv = i;
        if (piv != n) {
            (a[piv][piv] > 0 ? s.pos : s.neg)++;
            eliminate({piv});
            continue;
        }
        std::size_t p = n, q = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (alive[i] && alive[j] && a[i][j] != 0) {
                    p = i;
                    q = j;
                    break;
                }
        if (p == n) {
            s.zero += static_cast<long>(left);
            break;
        }
        // a block [[0,x],[x,0]] has one eigenvalue of each sign
        s.pos++;
        s.neg++;
        eliminate({p, q});
    }
    return s;
}

CycElem f_unknot(int sign, long r) {
    RootCtx ctx(r);
    CycElem s(r);
    for (long n = 1; n < 2 * r; n += 2) s += ctx.framing(sign, n) * ctx.qint_odd(n) * ctx.qint_odd(n);
    return s;
}

CycElem f_link(const IntegralLink& l, long r) {
    if (r < 1 || r % 2 == 0) throw ValidationError("the order r must be odd and positive");
    RootCtx ctx(r);
    // B_i(k) = sum_n [n] qbinom(n+k,2k+1){k}! q^{f(n^2-1)/4} prod_children
    long m = static_cast<long>(l.cores.size());
    if (m != l.table.components) throw ValidationError("table and cores disagree on the number of components");
    std::vector<std::vector<CycElem>> weights;
    for (auto& core : l.cores) {
        std::vector<std::vector<CycElem>> kids;
        for (auto& c : core.children) kids.push_back(subtree(c, ctx));
        std::vector<CycElem> w;
        for (long n = 1; n < 2 * r; n += 2) {
            CycElem x = ctx.qint_odd(n) * ctx.framing(core.framing, n);
            for (auto& k : kids) x *= k[(n - 1) / 2];
            w.push_back(x);
        }
        weights.push_back(w);
    }
    std::vector<std::map<long, CycElem>> B(m);
    auto getB = [&](long i, long k) -> const CycElem& {
        auto it = B[i].find(k);
        if (it != B[i].end()) return it->second;
        CycElem s(r);
        for (long n = 1; n < 2 * r; n += 2) {
            const CycElem& b = ctx.basis(n, k);
            if (!b.is_zero()) s += weights[i][(n - 1) / 2] * b;
        }
        return B[i].emplace(k, s).first->second;
    };
    CycElem F(r);
    for (auto& [ks, J] : l.table.table) {
        if (static_cast<long>(ks.size()) != m) throw ValidationError("table index has the wrong length");
        CycElem Jv = ev(J, r);
        if (Jv.is_zero()) continue;
        for (long i = 0; i < m && !Jv.is_zero(); ++i) Jv *= getB(i, ks[i]);
        F += Jv;
    }
    return F;
}

CycElem tau(const IntegralLink& l, long r) {
    SignatureCounts s = signature_counts(linking_matrix(l));
    if (s.zero > 0) throw NotQHS("the linking matrix is degenerate");
    CycElem F = f_link(l, r);
    CycElem d(r, Q(1));
    if (s.pos) d *= f_unknot(1, r).pow(s.pos);
    if (s.neg) d *= f_unknot(-1, r).pow(s.neg);
    return F / d;
}

namespace {

void check_chains(const SurgeryPresentation& m, long r, bool alt) {
    auto check = [&](const Fraction& x) {
        if (x.den == 1 || std::gcd(x.den, r) != 1) return;
        if (!chain_lemma_holds(x, r, alt))
            throw Inconsistent("the Hopf chain for " + x.str() + " disagrees with its factorized form at order " +
                               std::to_string(r));
    };
    std::visit(overloaded{
                   [&](const Lens& l) { check(Fraction(l.a, l.b)); },
                   [&](const Seifert& s) {
                       for (auto& [ai, bi] : s.fibers)
                           if (bi != 0) check(Fraction(ai, bi));
                   },
                   [&](const TwistSurgery& t) { check(t.framing); },
                   [&](const ConnectedSum& c) {
                       for (auto& p : c.parts) check_chains(p, r, alt);
                   },
                   [&](const AlgSplit& a) {
                       for (auto& f : a.framings) check(f);
                   },
               },
               m.v);
}

}  // namespace

CycElem tau(const SurgeryPresentation& m, long r, bool alt) {
    if (r < 1 || r % 2 == 0) throw ValidationError("the order r must be odd and positive");
    if (auto* c = std::get_if<ConnectedSum>(&m.v)) {
        CycElem t(r, Q(1));
        for (auto& p : c->parts) t *= tau(p, r, alt);
        return t;
    }
    check_chains(m, r, alt);
    return tau(realize(m, (r - 3) / 2, alt), r);
}

CycElem tau_lens_closed(long a, long b, long r) {
    if (a == 0) throw ValidationError("tau_lens_closed: a must be nonzero");
    if (std::gcd(a, b) != 1) throw NonCoprime("tau_lens_closed: gcd(a,b) != 1");
    if (std::gcd(a, r) != 1) throw NonCoprime("tau_lens_closed: gcd(a,r) != 1");
    // the formula is stated for a > 0; a/b and (-a)/(-b) are the same surgery
    if (a < 0) a = -a, b = -b;
    QLaurent num = QLaurent::qpow(make_q(1, 2 * a)) - QLaurent::qpow(make_q(-1, 2 * a));
    CycElem v = ev(num.shifted(-3 * dedekind_sum(b, a)), r) / ev(qint(1), r);
    return v * Q(jacobi(a, r));
}

CycElem chain_sum(const std::vector<long>& chain, long j, long r) {
    if (chain.empty()) throw ValidationError("empty chain");
    RootCtx ctx(r);
    auto e = subtree(chain_nodes(chain), ctx);
    return e[(j - 1) / 2];
}

CycElem chain_closed(long a, long b, long j, long r, bool alt) {
    if (b <= 0 || std::gcd(b, r) != 1) throw NonCoprime("the factorized chain needs b > 0 prime to r");
    std::vector<long> ch = hopf_chain(Fraction(a, b), alt);
    SignatureCounts s = signature_counts(chain_matrix(ch));
    CycElem D(r, Q(1));
    if (s.pos) D *= f_unknot(1, r).pow(s.pos);
    if (s.neg) D *= f_unknot(-1, r).pow(s.neg);
    QLaurent jb = QLaurent::qpow(make_q(j, 2 * b)) - QLaurent::qpow(make_q(-j, 2 * b));
    QLaurent x = jb.shifted(3 * dedekind_sum(a, b) + make_q(a * (j * j - 1), 4 * b));
    return D * ev(x, r) * Q(jacobi(b, r)) / ev(qint(j), r);
}

bool chain_lemma_holds(const Fraction& x, long r, bool alt) {
    std::vector<long> ch = hopf_chain(x, alt);
    RootCtx ctx(r);
    auto e = subtree(chain_nodes(ch), ctx);
    for (long j = 1; j < 2 * r; j += 2) {
        if (j % r == 0) continue;  // [j] vanishes there
        if (e[(j - 1) / 2] != chain_closed(x.num, x.den, j, r, alt)) return false;
    }
    return true;
}

CycElem zero_framing_sum(long k, long r) {
    RootCtx ctx(r);
    CycElem s(r);
    for (long n = 1; n < 2 * r; n += 2) s += ctx.basis(n, k) * ctx.bracket(n);
    return s;
}

CycElem zero_framing_closed(long k, long r) {
    if (2 * k + 3 > r) throw ValidationError("zero_framing_closed needs k <= (r-3)/2");
    QLaurent x = qpoch(Q(k + 2), r - k - 2).shifted(make_q((k + 1) * (k + 2), 4)) * Q(2);
    return ev(x, r);
}

}  // namespace so3
