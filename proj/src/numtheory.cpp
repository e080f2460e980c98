#include "so3/numtheory.hpp"

#include <numeric>

#include "so3/errors.hpp"

namespace so3 {

Fraction::Fraction(long n, long d) {
    if (d == 0) throw ValidationError("fraction with zero denominator");
    if (d < 0) n = -n, d = -d;
    long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Fraction::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Fraction Fraction::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long n = std::stol(s, &used);
            if (used != s.size()) throw ParseError("bad fraction '" + s + "'", used);
            return Fraction(n, 1);
        }
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        long n = std::stol(a, &used);
        if (used != a.size()) throw ParseError("bad fraction '" + s + "'", used);
        long d = std::stol(b, &used);
        if (used != b.size()) throw ParseError("bad fraction '" + s + "'", slash + 1 + used);
        return Fraction(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad fraction '" + s + "'", 0);
    } catch (const std::out_of_range&) {
        throw ParseError("fraction out of range '" + s + "'", 0);
    }
}

int sign(long x) { return (x > 0) - (x < 0); }

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mod_inverse(long a, long m) {
    long x = 0, x1 = 1;
    long r0 = m, r1 = mod_floor(a, m);
    while (r1 != 0) {
        long qt = r0 / r1;
        long t = r0 - qt * r1;
        r0 = r1, r1 = t;
        t = x - qt * x1;
        x = x1, x1 = t;
    }
    if (r0 != 1) throw NonCoprime("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return mod_floor(x, m);
}

int jacobi(long d, long r) {
    if (r <= 0 || r % 2 == 0) throw ValidationError("jacobi symbol needs a positive odd modulus");
    long a = mod_floor(d, r), n = r;
    int res = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5) res = -res;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) res = -res;
        a %= n;
    }
    return n == 1 ? res : 0;
}

Q dedekind_sum(long b, long a) {
    if (a == 0) throw ValidationError("dedekind_sum: a must be nonzero");
    if (std::gcd(a, b) != 1) throw NonCoprime("dedekind_sum: gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
    long m = a < 0 ? -a : a;
    // ((x)) for x = j/m with j taken mod m
    auto saw = [m](long j) {
        long r = mod_floor(j, m);
        return r == 0 ? Q(0) : make_q(2 * r - m, 2 * m);
    };
    Q s = 0;
    for (long i = 1; i < m; ++i) s += saw(i) * saw(i * b);
    // ((i/a)) ((ib/a)) summed over i equals the |a| sum; the sign follows a
    return a < 0 ? Q(-s) : s;
}

namespace {

long ceil_q(const Q& v) {
    Z c;
    mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return c.get_si();
}

std::vector<long> expand(Q v, bool alt) {
    std::vector<long> out;
    bool first = true;
    while (true) {
        long m = ceil_q(v);
        if (alt && first) m += 1;
        first = false;
        out.push_back(m);
        if (Q(m) == v) break;
        v = 1 / (Q(m) - v);
    }
    return {out.rbegin(), out.rend()};
}

}  // namespace

std::vector<long> neg_continued_fraction(const Fraction& x) {
    if (x.num == 0) throw ValidationError("neg_continued_fraction of zero");
    return expand(-1 / x.value(), false);
}

std::vector<long> neg_continued_fraction_alt(const Fraction& x) {
    if (x.num == 0) throw ValidationError("neg_continued_fraction of zero");
    return expand(-1 / x.value(), true);
}

Q neg_continued_fraction_value(const std::vector<long>& ms) {
    if (ms.empty()) throw ValidationError("empty chain");
    Q v = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (v == 0) throw ValidationError("degenerate chain value");
        v = Q(ms[i]) - 1 / v;
    }
    if (v == 0) throw ValidationError("degenerate chain value");
    return -1 / v;
}

}  // namespace so3
