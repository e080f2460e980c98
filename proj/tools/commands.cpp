#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "so3/cyclotomic.hpp"
#include "so3/errors.hpp"
#include "so3/habiro.hpp"
#include "so3/jones.hpp"
#include "so3/manifold.hpp"
#include "so3/unified.hpp"
#include "so3/verify.hpp"
#include "so3/wrt.hpp"

namespace so3::cli {

using nlohmann::json;

namespace {

bool is_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, std::ostream& out, const json& j, const std::string& text) {
    if (is_json(o))
        out << j.dump(2) << "\n";
    else
        out << text;
}

HabiroElement read_element(const std::string& path) {
    std::string body;
    if (path == "-") {
        body.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open " + path);
        body.assign(std::istreambuf_iterator<char>(in), {});
    }
    json j;
    try {
        j = json::parse(body);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    try {
        return HabiroElement::from_json(j);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("not a unified invariant: ") + e.what());
    }
}

int report(const Options& o, std::ostream& out, const CheckReport& rep) {
    emit(o, out, rep.to_json(), rep.to_text());
    return rep.ok() ? Pass : Failure;
}

long truncation_for(const Options& o) {
    if (o.truncate >= 0) return o.truncate;
    long rmax = 3;
    for (long r : o.orders) rmax = std::max(rmax, r);
    return rmax - 2;
}

int cmd_wrt(const Options& o, std::ostream& out) {
    SurgeryPresentation m = parse_manifold(o.target);
    json res = json::array();
    std::ostringstream txt;
    txt << describe(m) << "\n";
    bool all = true;
    for (long r : o.orders) {
        CycElem t = tau(m, r, o.alt_chains);
        bool integral = t.is_integral();
        all = all && integral;
        res.push_back({{"r", r}, {"tau", t.to_json()}, {"integral", integral}});
        txt << "r=" << r << " tau=" << t.to_text() << " integral: " << (integral ? "yes" : "no") << "\n";
    }
    emit(o, out, {{"manifold", describe(m)}, {"results", res}}, txt.str());
    return Pass;
}

int cmd_integrality(const Options& o, std::ostream& out) {
    return report(o, out, verify_integrality(parse_manifold(o.target), o.orders));
}

int cmd_unified(const Options& o, std::ostream& out) {
    SurgeryPresentation m = parse_manifold(o.target);
    HabiroElement I = unified_invariant(m, o.truncate);
    json j = I.to_json();
    if (is_json(o)) {
        out << j.dump(2) << "\n";
        return Pass;
    }
    out << describe(m) << "\na = " << I.a << ", K = " << I.K << "\n";
    for (long k = 0; k <= I.K; ++k) {
        const HabiroTerm& t = I.f[k];
        out << "f_" << k << " = (" << pretty(t.num) << ")";
        if (t.den_factors.size() > 1) out << " / [" << t.den_factors.size() << " factors]";
        out << "\n";
    }
    return Pass;
}

int cmd_eval(const Options& o, std::ostream& out) {
    HabiroElement I = read_element(o.target);
    std::vector<long> orders = o.orders;
    if (o.order > 0) orders.insert(orders.begin(), o.order);
    json res = json::array();
    std::ostringstream txt;
    for (long r : orders) {
        CycElem v = eval_habiro(I, r);
        CycElem n = eval_normalized(I, r);
        res.push_back({{"r", r}, {"value", v.to_json()}, {"normalized", n.to_json()}});
        txt << "r=" << r << " I(xi)=" << v.to_text() << "\n  q^{(1-a)/4} I(xi)=" << n.to_text() << "\n";
    }
    emit(o, out, {{"a", I.a}, {"K", I.K}, {"results", res}}, txt.str());
    return Pass;
}

int cmd_ohtsuki(const Options& o, std::ostream& out) {
    HabiroElement I = read_element(o.target);
    std::vector<Q> s = ohtsuki_series(I, o.order);
    json cs = json::array();
    std::ostringstream txt;
    txt << "coefficients of (q-1)^n in q^{(1-a)/4} I:\n";
    for (std::size_t n = 0; n < s.size(); ++n) {
        cs.push_back(q_to_string(s[n]));
        txt << "  n=" << n << ": " << q_to_string(s[n]) << "\n";
    }
    emit(o, out, {{"a", I.a}, {"order", o.order}, {"coefficients", cs}}, txt.str());
    return Pass;
}

int cmd_table(const Options& o, std::ostream& out) {
    HabiroCoefficients t;
    if (o.target == "twist")
        t = twist_knot_table(o.p, o.truncate);
    else if (o.target == "unknot")
        t = unknot_table();
    else
        throw ValidationError("table: unknown family '" + o.target + "' (expected twist or unknot)");
    out << t.to_json().dump(2) << "\n";
    return Pass;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const std::string& name = o.target;
    std::vector<long> orders = o.orders;
    if (name == "prop110x") {
        if (orders.empty()) orders = odd_orders(3, 11);
        return report(o, out, verify_prop110x({1, 2, 3, 5}, {1, 2, 3}, 3, orders));
    }
    if (name == "andrews") return report(o, out, verify_andrews(3, 4, 20, o.seed));
    if (name == "watson") return report(o, out, verify_watson(5, 3, 2));
    if (name == "lemma33") return report(o, out, verify_lemma33(o.r, o.d));
    if (name == "reciprocity") return report(o, out, verify_reciprocity(50));
    if (name == "gauss") return report(o, out, verify_gauss(orders.empty() ? 45 : orders.back()));
    throw ValidationError("verify: unknown suite '" + name +
                          "' (expected prop110x, andrews, watson, lemma33, reciprocity, gauss or consistency)");
}

int cmd_consistency(const Options& o, const std::string& manifold, std::ostream& out) {
    SurgeryPresentation m = parse_manifold(manifold);
    return report(o, out, verify_consistency(m, o.orders, truncation_for(o)));
}

}  // namespace

void validate_options(const Options& o) {
    for (long r : o.orders)
        if (r < 3 || r % 2 == 0) throw ValidationError("orders must be odd and at least 3, got " + std::to_string(r));
    if (o.format != "text" && o.format != "json") throw ValidationError("format must be text or json");
    if (o.verb == "unified" && o.truncate < 0) throw ValidationError("unified needs --truncate K with K >= 0");
    if (o.verb == "table" && o.target == "twist" && o.truncate < 0)
        throw ValidationError("table twist needs --truncate K with K >= 0");
    if ((o.verb == "wrt" || o.verb == "check-integrality") && o.orders.empty())
        throw ValidationError(o.verb + " needs --orders");
    if (o.verb == "eval" && o.order < 0 && o.orders.empty()) throw ValidationError("eval needs --order r");
    if (o.verb == "eval" && o.order >= 0 && (o.order < 3 || o.order % 2 == 0))
        throw ValidationError("--order must be odd and at least 3");
    if (o.verb == "ohtsuki" && o.order < 0) throw ValidationError("ohtsuki needs --order N with N >= 0");
}

int run(const Options& o, std::ostream& out, std::ostream& err) {
    try {
        validate_options(o);
        if (o.verb == "wrt") return cmd_wrt(o, out);
        if (o.verb == "unified") return cmd_unified(o, out);
        if (o.verb == "eval") return cmd_eval(o, out);
        if (o.verb == "ohtsuki") return cmd_ohtsuki(o, out);
        if (o.verb == "check-integrality") return cmd_integrality(o, out);
        if (o.verb == "table") return cmd_table(o, out);
        if (o.verb == "verify") {
            // "consistency <manifold>" arrives as one target string
            const std::string key = "consistency";
            if (o.target.rfind(key, 0) == 0) {
                std::string rest = o.target.substr(key.size());
                rest.erase(0, rest.find_first_not_of(' '));
                if (rest.empty()) throw ValidationError("verify consistency needs a manifold");
                return cmd_consistency(o, rest, out);
            }
            return cmd_verify(o, out);
        }
        throw ValidationError("unknown command '" + o.verb + "'");
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return InputError;
    } catch (const ValidationError& e) {
        err << "input error: " << e.what() << "\n";
        return InputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Failure;
    }
}

}  // namespace so3::cli
