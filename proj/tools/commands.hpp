#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace so3::cli {

enum Exit { Pass = 0, Failure = 1, InputError = 2 };

struct Options {
    std::string verb;
    std::string target;  // manifold text, identity name, JSON path, or table family
    std::vector<long> orders;
    long truncate = -1;
    long order = -1;
    std::string format = "text";
    std::uint64_t seed = 20240601;
    long r = 9, d = 3;
    long p = 1;
    bool alt_chains = false;
};

void validate_options(const Options& o);  // throws ValidationError
int run(const Options& o, std::ostream& out, std::ostream& err);

}  // namespace so3::cli
