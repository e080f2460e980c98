#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::vector<long> parse_orders(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using so3::cli::Options;
    CLI::App app{"so3inv: WRT SO(3) invariants and unified invariants in exact arithmetic"};
    app.require_subcommand(1);
    Options o;
    std::string orders, out_path;

    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--out", out_path, "write the report to a file");
    };
    auto with_orders = [&](CLI::App* c) { c->add_option("--orders", orders, "odd orders r1,r2,..."); };

    auto* wrt = app.add_subcommand("wrt", "tau_M(xi) at the given orders");
    wrt->add_option("manifold", o.target)->required();
    with_orders(wrt);
    wrt->add_flag("--alt-chains", o.alt_chains, "use the alternative continued fractions");
    common(wrt);

    auto* uni = app.add_subcommand("unified", "truncated unified invariant as JSON or text");
    uni->add_option("manifold", o.target)->required();
    uni->add_option("--truncate", o.truncate, "truncation K");
    common(uni);

    auto* ev = app.add_subcommand("eval", "evaluate a unified invariant (JSON file or -) at xi");
    ev->add_option("input", o.target)->required();
    ev->add_option("--order", o.order, "odd order r");
    with_orders(ev);
    common(ev);

    auto* oht = app.add_subcommand("ohtsuki", "Ohtsuki series coefficients from a unified invariant");
    oht->add_option("input", o.target)->required();
    oht->add_option("--order", o.order, "number of terms N");
    common(oht);

    auto* ci = app.add_subcommand("check-integrality", "tau_M(xi) in Z[xi] at every order");
    ci->add_option("manifold", o.target)->required();
    with_orders(ci);
    common(ci);

    auto* ver = app.add_subcommand("verify", "run an identity suite");
    std::vector<std::string> words;
    ver->add_option("suite", words, "prop110x | andrews | watson | lemma33 | reciprocity | gauss | consistency <manifold>")
        ->required();
    with_orders(ver);
    ver->add_option("--truncate", o.truncate, "truncation K for consistency");
    ver->add_option("--seed", o.seed, "random seed for andrews");
    ver->add_option("--r", o.r, "order for lemma33");
    ver->add_option("--d", o.d, "d for lemma33");
    common(ver);

    auto* tab = app.add_subcommand("table", "Habiro coefficient table as JSON");
    tab->add_option("family", o.target, "twist or unknot")->required();
    tab->add_option("--p", o.p, "twist parameter");
    tab->add_option("--truncate", o.truncate, "largest index K");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : so3::cli::InputError;
    }
    o.verb = app.get_subcommands().front()->get_name();
    if (!words.empty()) {
        o.target = words[0];
        for (std::size_t i = 1; i < words.size(); ++i) o.target += " " + words[i];
    }
    try {
        if (!orders.empty()) o.orders = parse_orders(orders);
    } catch (const std::exception&) {
        std::cerr << "input error: --orders expects a comma-separated list of integers\n";
        return so3::cli::InputError;
    }
    if (out_path.empty()) return so3::cli::run(o, std::cout, std::cerr);
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "input error: cannot write " << out_path << "\n";
        return so3::cli::InputError;
    }
    return so3::cli::run(o, f, std::cerr);
}
