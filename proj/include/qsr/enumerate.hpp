#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsr/canon.hpp"
#include "qsr/graph.hpp"

// Exhaustive isomorph-free enumeration of the k-regular graphs whose adjacent
// pairs share exactly a common neighbours and whose non-adjacent pairs share
// only values from c_allowed. Two engines: the production generator (vertex-
// by-vertex growth, sound pruning, optional star normalization, canonical
// augmentation) and a brute-force oracle that sweeps every labeled graph for
// n <= 8.

namespace qsr {

struct EnumSpec {
    int n = 0;
    int k = 0;
    int a = 0;
    std::vector<int> c_allowed;       // permitted non-adjacent counts, any order
    bool require_all_realized = false;  // proper: every allowed value realized
    bool require_strict = false;        // a must not occur among realized values

    friend bool operator==(const EnumSpec&, const EnumSpec&) = default;
};

struct EnumOptions {
    int jobs = 1;                 // worker threads; <= 1 means sequential
    bool star_shortcut = true;    // fix N(0) = {1..k} when a == 0 (validated mode)
    bool override_budget = false; // allow n beyond the default guard
};

inline constexpr int kEnumBudgetOrder = 24;

struct EnumReport {
    EnumSpec spec;
    std::vector<CanonicalForm> classes;  // sorted by byte order, pairwise distinct
    std::uint64_t nodes_explored = 0;
    bool complete = false;
    double elapsed_seconds = 0.0;
};

// Throws InvalidSpec (n*k odd, empty or out-of-range c_allowed, bad ranges),
// BudgetExceeded (n > 24 without override), CapacityExceeded (n > 64).
EnumReport enumerate_graphs(const EnumSpec& spec, const EnumOptions& options = {});

// Sweeps all 2^C(n,2) labeled graphs; n <= 8 or TooLargeForOracle. Shares no
// search logic with enumerate_graphs.
EnumReport brute_force_enumerate(const EnumSpec& spec);

struct CertifyResult {
    bool pass = false;
    std::string failure;  // empty on pass, first failing check otherwise
};

// Re-verifies a report from its serialized classes alone: decodes every
// canonical form, re-checks it against the spec, re-runs the counting
// identities when the spec is the (k-1, k-2, k-3) family, and confirms
// sortedness plus pairwise non-isomorphism.
CertifyResult certify(const EnumReport& report);

// Census file: one canonical graph6 line per class, sorted; metadata sidecar
// (spec, counts, nodes, elapsed, version) is written next to it as
// <path>.meta.json.
void write_census(const std::string& path, const EnumReport& report);
std::vector<std::string> read_census(std::istream& in);

}  // namespace qsr
