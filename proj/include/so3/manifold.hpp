#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "so3/jones.hpp"
#include "so3/numtheory.hpp"

namespace so3 {

struct Lens {
    long a = 1, b = 1;
};

struct Seifert {
    long b = 0;
    std::vector<std::pair<long, long>> fibers;  // (a_i, b_i)
    Q euler() const;                            // e = b + sum b_i/a_i
};

struct TwistSurgery {
    long p = 1;
    Fraction framing;
};

struct AlgSplit {
    std::vector<Fraction> framings;
    HabiroCoefficients table;
};

struct SurgeryPresentation;

struct ConnectedSum {
    std::vector<SurgeryPresentation> parts;
};

struct SurgeryPresentation {
    std::variant<Lens, Seifert, TwistSurgery, ConnectedSum, AlgSplit> v;
};

SurgeryPresentation make_lens(long a, long b);
SurgeryPresentation make_seifert(long b, std::vector<std::pair<long, long>> fibers);
SurgeryPresentation make_twist(long p, Fraction framing);
SurgeryPresentation make_sum(std::vector<SurgeryPresentation> parts);
SurgeryPresentation make_algsplit(std::vector<Fraction> framings, HabiroCoefficients table);

void validate(const SurgeryPresentation& m);  // throws ValidationError
long h1_order(const SurgeryPresentation& m);  // |H_1(M,Z)|, throws NotQHS
std::string describe(const SurgeryPresentation& m);

using TableLoader = std::function<HabiroCoefficients(const std::string& path)>;
HabiroCoefficients load_table_file(const std::string& path);
SurgeryPresentation parse_manifold(const std::string& text, const TableLoader& loader = load_table_file);

}  // namespace so3
