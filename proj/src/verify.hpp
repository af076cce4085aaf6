#ifndef KRAW_VERIFY_HPP
#define KRAW_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "identities.hpp"

namespace kraw {

enum class Suite {
    all,
    pascal,
    value_rec,
    poly_rec,
    summation,
    symmetry,
    kernel,
    orthogonality,
    roots,
    interlacing,
};

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite suite);

// 2^-32, far below any inter-root gap at these parameter sizes
Rational default_width();

struct VerifyOptions {
    Suite suite = Suite::all;
    long n_max = 12;
    std::vector<long> s_set = {2, 3, 5};
    std::uint64_t seed = 1;
    Rational width = default_width();
    bool extended = false;  // include the m = n summation edge case
    long trials = 50;
    PolyProvider provider = default_provider();
};

// Runs the selected suite(s) over n <= n_max, s in s_set, in deterministic
// (suite, n, s, m) order. The Pascal-basis identity always sweeps j <= max(20, n_max).
std::vector<VerificationReport> run_verify(const VerifyOptions& options);

// Provider returning K_{m,n,s} with one perturbed coefficient at m = 2;
// drives the exit-code contract test of the CLI, nothing else.
PolyProvider fault_injected_provider();

}  // namespace kraw

#endif
