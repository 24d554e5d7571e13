#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsr/graph.hpp"

// Quasi-strongly regular analysis. A graph is QSR(n, k, a; c1..cp) when it is
// k-regular, every adjacent pair shares exactly a common neighbours, and every
// non-adjacent pair shares c_i for some i. The grade is the number of realized
// c-values; a declaration is proper when all declared values are realized, and
// strict when a and the c-values are pairwise distinct.

namespace qsr {

struct QsrSignature {
    int n = 0;
    int k = 0;
    int a = 0;
    std::vector<int> c_values;  // realized values, strictly descending
    int grade = 0;
    bool proper = true;         // realized set == declared set (trivially true here)
    bool strict = false;        // a does not appear among c_values

    friend bool operator==(const QsrSignature&, const QsrSignature&) = default;
};

// Computes the signature of g or throws: NotRegular,
// AdjacentCountNotConstant, CompleteGraph (no non-adjacent pair, includes K1),
// EdgelessGraph (regular of degree 0, n >= 2).
QsrSignature analyze(const Graph& g);

// True iff analyze succeeds and reports exactly (n, k, a) with realized
// c-set equal to c_list, and strictness when required. c_list must be
// non-empty and strictly descending. Returns false on analysis errors.
bool matches(const Graph& g, int n, int k, int a, const std::vector<int>& c_list, bool require_strict);

// nullopt when matches(...) would be true; otherwise a one-line reason naming
// the first failing condition. Shares its checks with matches().
std::optional<std::string> explain_mismatch(const Graph& g, int n, int k, int a,
                                            const std::vector<int>& c_list, bool require_strict);

struct TProfile {
    int vertex = 0;
    // (c value, number of non-neighbours sharing exactly c), aligned with the
    // queried c_list
    std::vector<std::pair<int, int>> counts;

    friend bool operator==(const TProfile&, const TProfile&) = default;
};

// Counts u's non-neighbours by shared-neighbour value. Throws UnrealizedCount
// if some non-neighbour's count is absent from c_list.
TProfile t_profile(const Graph& g, int u, const std::vector<int>& c_list);

// Per-vertex evaluation of the counting identities for the c = (k-1, k-2, k-3)
// family with a = 0:
//   (1)  t1 + t2 + t3       = n - k - 1
//   (2)  c1 t1 + c2 t2 + c3 t3 = k(k - 1)
//   (3)  t1 + 2 t2 + 3 t3   = k(n - 2k)     [the combination k*(1) - (2)]
struct VertexIdentities {
    int vertex = 0;
    std::vector<int> t;  // t1, t2, t3
    long eq1 = 0, eq2 = 0, eq3 = 0;
    bool pass = false;

    friend bool operator==(const VertexIdentities&, const VertexIdentities&) = default;
};

struct IdentityReport {
    int n = 0, k = 0;
    std::vector<int> c_list;
    long eq1_expected = 0, eq2_expected = 0, eq3_expected = 0;
    std::vector<VertexIdentities> per_vertex;
    bool all_pass = false;
};

// Throws ParameterMismatch when g is not regular, not triangle-free (a != 0),
// or c_list is not (k-1, k-2, k-3) for its degree.
IdentityReport check_counting_identities(const Graph& g, const std::vector<int>& c_list);

struct Bounds {
    int k = 0;
    int lower = 0;  // least order admitting a strict QSR(n, k, 0; k-1, k-2, k-3) graph
    int upper = 0;  // greatest such order

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Exact order bounds for the strict (k-1, k-2, k-3) family: k = 4 gives
// (11, 12); k >= 5 gives (2k + 4, k^2 - 5). Throws DegreeTooSmall for k < 4.
Bounds sqsr_bounds(int k);

}  // namespace qsr
