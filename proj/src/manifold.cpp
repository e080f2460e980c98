#include "so3/manifold.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "so3/errors.hpp"

namespace so3 {

Q Seifert::euler() const {
    Q e(b);
    for (auto& [ai, bi] : fibers) e += make_q(bi, ai);
    return e;
}

SurgeryPresentation make_lens(long a, long b) { return {Lens{a, b}}; }
SurgeryPresentation make_seifert(long b, std::vector<std::pair<long, long>> fibers) {
    return {Seifert{b, std::move(fibers)}};
}
SurgeryPresentation make_twist(long p, Fraction framing) { return {TwistSurgery{p, framing}}; }
SurgeryPresentation make_sum(std::vector<SurgeryPresentation> parts) { return {ConnectedSum{std::move(parts)}}; }
SurgeryPresentation make_algsplit(std::vector<Fraction> framings, HabiroCoefficients table) {
    return {AlgSplit{std::move(framings), std::move(table)}};
}

namespace {

void check_framing(const Fraction& f, const std::string& what) {
    if (f.den <= 0) throw ValidationError(what + ": framing denominator must be positive");
    if (std::gcd(f.num, f.den) != 1) throw ValidationError(what + ": framing " + f.str() + " is not in lowest terms");
    if (f.num == 0) throw ValidationError(what + ": framing 0 does not give a rational homology sphere");
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void validate(const SurgeryPresentation& m) {
    std::visit(overloaded{
                   [](const Lens& l) {
                       if (l.b == 0) throw ValidationError("lens: b must be nonzero");
                       if (l.a == 0) throw ValidationError("lens: a = 0 is not a rational homology sphere");
                       if (std::gcd(l.a, l.b) != 1)
                           throw ValidationError("lens " + std::to_string(l.a) + " " + std::to_string(l.b) +
                                                 ": gcd(a,b) must be 1");
                   },
                   [](const Seifert& s) {
                       if (s.fibers.empty()) throw ValidationError("seifert: at least one fiber is required");
                       for (auto& [ai, bi] : s.fibers) {
                           std::string f = "(" + std::to_string(ai) + "," + std::to_string(bi) + ")";
                           if (ai <= 0) throw ValidationError("seifert fiber " + f + ": a_i must be positive");
                           if (bi < 0 || bi > ai) throw ValidationError("seifert fiber " + f + ": need 0 <= b_i <= a_i");
                           if (std::gcd(ai, bi) != 1) throw ValidationError("seifert fiber " + f + ": gcd(a_i,b_i) must be 1");
                       }
                       if (s.euler() == 0) throw ValidationError("seifert: e = 0, not a rational homology sphere");
                   },
                   [](const TwistSurgery& t) {
                       if (t.p == 0) throw ValidationError("twist: p must be nonzero");
                       check_framing(t.framing, "twist");
                   },
                   [](const ConnectedSum& c) {
                       if (c.parts.empty()) throw ValidationError("sum: no summands");
                       for (auto& p : c.parts) validate(p);
                   },
                   [](const AlgSplit& a) {
                       if (a.framings.empty()) throw ValidationError("algsplit: no components");
                       if (static_cast<long>(a.framings.size()) != a.table.components)
                           throw ValidationError("algsplit: the table has " + std::to_string(a.table.components) +
                                                 " components but " + std::to_string(a.framings.size()) +
                                                 " framings were given");
                       for (auto& f : a.framings) check_framing(f, "algsplit");
                       a.table.validate();
                   },
               },
               m.v);
}

long h1_order(const SurgeryPresentation& m) {
    return std::visit(overloaded{
                          [](const Lens& l) { return std::abs(l.a); },
                          [](const Seifert& s) {
                              Q e = s.euler();
                              if (e == 0) throw NotQHS("seifert: e = 0");
                              Q d = abs(e);
                              for (auto& f : s.fibers) d *= f.first;
                              if (d.get_den() != 1) throw Error("internal: |H_1| is not an integer");
                              return d.get_num().get_si();
                          },
                          [](const TwistSurgery& t) {
                              if (t.framing.num == 0) throw NotQHS("twist: framing 0");
                              return std::abs(t.framing.num);
                          },
                          [](const ConnectedSum& c) {
                              long d = 1;
                              for (auto& p : c.parts) d *= h1_order(p);
                              return d;
                          },
                          [](const AlgSplit& a) {
                              long d = 1;
                              for (auto& f : a.framings) {
                                  if (f.num == 0) throw NotQHS("algsplit: framing 0");
                                  d *= std::abs(f.num);
                              }
                              return d;
                          },
                      },
                      m.v);
}

std::string describe(const SurgeryPresentation& m) {
    return std::visit(overloaded{
                          [](const Lens& l) { return "lens " + std::to_string(l.a) + " " + std::to_string(l.b); },
                          [](const Seifert& s) {
                              std::string out = "seifert " + std::to_string(s.b);
                              for (auto& [ai, bi] : s.fibers)
                                  out += " (" + std::to_string(ai) + "," + std::to_string(bi) + ")";
                              return out;
                          },
                          [](const TwistSurgery& t) {
                              return "twist " + std::to_string(t.p) + " f=" + t.framing.str();
                          },
                          [](const ConnectedSum& c) {
                              std::string out = "sum{ ";
                              for (std::size_t i = 0; i < c.parts.size(); ++i) {
                                  if (i) out += " ; ";
                                  out += describe(c.parts[i]);
                              }
                              return out + " }";
                          },
                          [](const AlgSplit& a) {
                              std::string out = "algsplit [";
                              for (std::size_t i = 0; i < a.framings.size(); ++i) {
                                  if (i) out += ",";
                                  out += "f" + std::to_string(i + 1) + "=" + a.framings[i].str();
                              }
                              return out + "] table=<" + std::to_string(a.table.table.size()) + " entries>";
                          },
                      },
                      m.v);
}

HabiroCoefficients load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open coefficient table '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("coefficient table '" + path + "' is not valid JSON: " + e.what());
    }
    return HabiroCoefficients::from_json(j);
}

namespace {

class Parser {
public:
    Parser(const std::string& s, const TableLoader& loader) : s_(s), loader_(loader) {}

    SurgeryPresentation parse_all() {
        SurgeryPresentation m = parse_one();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return m;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip_ws();
        std::size_t st = pos_;
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected a keyword");
        return s_.substr(st, pos_ - st);
    }

    long integer() {
        skip_ws();
        std::size_t st = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (digits == pos_) {
            pos_ = st;
            fail("expected an integer");
        }
        try {
            return std::stol(s_.substr(st, pos_ - st));
        } catch (const std::out_of_range&) {
            pos_ = st;
            fail("integer out of range");
        }
    }

    // a/b or a, kept unreduced so that validation can report non-coprime input
    Fraction fraction() {
        long n = integer();
        long d = 1;
        if (peek('/')) {
            ++pos_;
            std::size_t at = pos_;
            d = integer();
            if (d == 0) {
                pos_ = at;
                fail("zero denominator");
            }
        }
        Fraction f;
        if (d < 0) n = -n, d = -d;
        f.num = n;
        f.den = d;
        return f;
    }

    void keyword_eq(const std::string& k) {
        std::size_t at = pos_;
        std::string w = word();
        if (w != k) {
            pos_ = at;
            fail("expected '" + k + "='");
        }
        expect('=');
    }

    SurgeryPresentation parse_one() {
        skip_ws();
        std::size_t start = pos_;
        std::string w = word();
        if (w == "lens") {
            long a = integer();
            long b = integer();
            return make_lens(a, b);
        }
        if (w == "seifert") {
            long b = integer();
            std::vector<std::pair<long, long>> fib;
            while (peek('(')) {
                ++pos_;
                long ai = integer();
                expect(',');
                long bi = integer();
                expect(')');
                fib.emplace_back(ai, bi);
            }
            if (fib.empty()) fail("seifert needs at least one fiber (a,b)");
            return make_seifert(b, std::move(fib));
        }
        if (w == "twist") {
            long p = integer();
            keyword_eq("f");
            return make_twist(p, fraction());
        }
        if (w == "sum") {
            expect('{');
            std::vector<SurgeryPresentation> parts;
            parts.push_back(parse_one());
            while (peek(';')) {
                ++pos_;
                parts.push_back(parse_one());
            }
            expect('}');
            return make_sum(std::move(parts));
        }
        if (w == "algsplit") {
            expect('[');
            std::vector<Fraction> fr;
            long idx = 1;
            while (true) {
                keyword_eq("f" + std::to_string(idx));
                fr.push_back(fraction());
                ++idx;
                if (!peek(',')) break;
                ++pos_;
            }
            expect(']');
            keyword_eq("table");
            skip_ws();
            std::size_t st = pos_;
            while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ';' &&
                   s_[pos_] != '}')
                ++pos_;
            if (st == pos_) fail("expected a table path");
            return make_algsplit(std::move(fr), loader_(s_.substr(st, pos_ - st)));
        }
        pos_ = start;
        fail("unknown manifold kind '" + w + "'");
    }

    std::string s_;
    const TableLoader& loader_;
    std::size_t pos_ = 0;
};

}  // namespace

SurgeryPresentation parse_manifold(const std::string& text, const TableLoader& loader) {
    SurgeryPresentation m = Parser(text, loader).parse_all();
    validate(m);
    return m;
}

}  // namespace so3
