#pragma once

#include <string>
#include <vector>

#include "so3/qlaurent.hpp"

namespace so3 {

struct Fraction {
    long num = 0;
    long den = 1;

    Fraction() = default;
    Fraction(long n, long d = 1);
    Q value() const { return make_q(num, den); }
    std::string str() const;
    static Fraction parse(const std::string& s);
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

int sign(long x);
long mod_floor(long a, long m);
long mod_inverse(long a, long m);  // throws NonCoprime
int jacobi(long d, long r);
Q dedekind_sum(long b, long a);    // carries the factor sn(a)

// a/b = -1/(m_n - 1/(m_{n-1} - ... - 1/m_1)); returns m_1..m_n
std::vector<long> neg_continued_fraction(const Fraction& x);
// variant whose first step rounds up by one more; a different valid chain
std::vector<long> neg_continued_fraction_alt(const Fraction& x);
Q neg_continued_fraction_value(const std::vector<long>& ms);

}  // namespace so3
