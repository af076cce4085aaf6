#ifndef KRAW_REPORT_HPP
#define KRAW_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kraw {

// Ordered key/value record of integer parameters, e.g. {{"n",4},{"s",2}}.
using ParamRecord = std::vector<std::pair<std::string, long long>>;

// First failing parameter point plus the two unequal sides, rendered.
struct Witness {
    ParamRecord point;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    ParamRecord parameters;
    bool passed = true;
    std::optional<Witness> witness;  // present iff passed is false
};

}  // namespace kraw

#endif
