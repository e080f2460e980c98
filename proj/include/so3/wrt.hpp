#pragma once

#include <vector>

#include "so3/cyclotomic.hpp"
#include "so3/jones.hpp"
#include "so3/manifold.hpp"

namespace so3 {

// unknot component of an integrally framed link, Hopf-linked to its parent
struct LinkNode {
    long framing = 0;
    std::vector<LinkNode> children;
};

// algebraically split link of cores, given by its Habiro coefficients, with trees of unknots hanging off
struct IntegralLink {
    HabiroCoefficients table;
    std::vector<LinkNode> cores;  // the framing of core i and its subtree
};

// chain for the rational framing x, ordered from the component outward (m_n, ..., m_1)
std::vector<long> hopf_chain(const Fraction& x, bool alt = false);

// kmax bounds the Habiro index of generated twist-knot tables
IntegralLink realize(const SurgeryPresentation& m, long kmax, bool alt_chains = false);
std::vector<std::vector<long>> linking_matrix(const IntegralLink& l);

struct SignatureCounts {
    long pos = 0, neg = 0, zero = 0;
};
SignatureCounts signature_counts(const std::vector<std::vector<long>>& m);

CycElem f_unknot(int sign, long r);  // F_{U+} or F_{U-}
CycElem f_link(const IntegralLink& l, long r);
CycElem tau(const IntegralLink& l, long r);
CycElem tau(const SurgeryPresentation& m, long r, bool alt_chains = false);

CycElem tau_lens_closed(long a, long b, long r);

// sum over the chain colorings with the chain attached to a j-colored strand
CycElem chain_sum(const std::vector<long>& chain, long j, long r);
// (b/r) q^{3s(a,b)} [j/b] q^{a(j^2-1)/(4b)} D / [j], the factorized form of chain_sum for a/b
CycElem chain_closed(long a, long b, long j, long r, bool alt = false);
// compares the two for every color; false on mismatch
bool chain_lemma_holds(const Fraction& x, long r, bool alt = false);

// sum^xi qbinom(n+k,2k+1) {k}! {n} and 2 ev(q^{(k+1)(k+2)/4} (q^{k+2})_{r-k-2}); equal for k <= (r-3)/2
CycElem zero_framing_sum(long k, long r);
CycElem zero_framing_closed(long k, long r);

}  // namespace so3
