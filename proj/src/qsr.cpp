#include "qsr/qsr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qsr {

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    return out.str();
}

void require_descending(const std::vector<int>& c_list) {
    if (c_list.empty()) throw ParameterMismatch("c_list must be non-empty");
    for (std::size_t i = 1; i < c_list.size(); ++i)
        if (c_list[i] >= c_list[i - 1])
            throw ParameterMismatch("c_list must be strictly descending, got [" + join_ints(c_list) + "]");
}

}  // namespace

QsrSignature analyze(const Graph& g) {
    const int n = g.order();
    const auto k = is_regular(g);
    if (!k) throw NotRegular("graph is not regular");

    const auto& rows = g.rows();
    const VertexSet all = VertexSet::first_n(n);

    bool has_nonadjacent = false;
    for (int u = 0; u < n && !has_nonadjacent; ++u)
        if (!((rows[u] | VertexSet::single(u)) == all)) has_nonadjacent = true;
    if (!has_nonadjacent) throw CompleteGraph("complete graph: no non-adjacent pair to classify");
    if (*k == 0) throw EdgelessGraph("edgeless graph: no adjacent pair to define a");

    int a = -1;
    std::set<int, std::greater<int>> realized;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int shared = (rows[u] & rows[v]).count();
            if (rows[u].contains(v)) {
                if (a == -1) a = shared;
                else if (a != shared)
                    throw AdjacentCountNotConstant("adjacent pairs share unequal counts (" +
                                                   std::to_string(a) + " vs " + std::to_string(shared) + ")");
            } else {
                realized.insert(shared);
            }
        }

    QsrSignature sig;
    sig.n = n;
    sig.k = *k;
    sig.a = a;
    sig.c_values.assign(realized.begin(), realized.end());
    sig.grade = static_cast<int>(sig.c_values.size());
    sig.proper = true;
    sig.strict = !realized.contains(a);
    return sig;
}

std::optional<std::string> explain_mismatch(const Graph& g, int n, int k, int a,
                                            const std::vector<int>& c_list, bool require_strict) {
    require_descending(c_list);
    if (g.order() != n)
        return "order is " + std::to_string(g.order()) + ", expected " + std::to_string(n);
    const auto actual_k = is_regular(g);
    if (!actual_k || *actual_k != k) return "not " + std::to_string(k) + "-regular";
    QsrSignature sig;
    try {
        sig = analyze(g);
    } catch (const Error& e) {
        return std::string(e.what());
    }
    if (sig.a != a)
        return "adjacent pairs share " + std::to_string(sig.a) + " common neighbours, expected " + std::to_string(a);
    if (sig.c_values != c_list)
        return "realized c-values [" + join_ints(sig.c_values) + "] differ from declared [" + join_ints(c_list) + "]";
    if (require_strict && !sig.strict)
        return "not strict: a = " + std::to_string(a) + " appears among the c-values";
    return std::nullopt;
}

bool matches(const Graph& g, int n, int k, int a, const std::vector<int>& c_list, bool require_strict) {
    return !explain_mismatch(g, n, k, a, c_list, require_strict).has_value();
}

TProfile t_profile(const Graph& g, int u, const std::vector<int>& c_list) {
    require_descending(c_list);
    if (u < 0 || u >= g.order()) throw VertexOutOfRange("t_profile vertex out of range");
    TProfile profile;
    profile.vertex = u;
    for (int c : c_list) profile.counts.emplace_back(c, 0);
    const auto& rows = g.rows();
    for (int v = 0; v < g.order(); ++v) {
        if (v == u || rows[u].contains(v)) continue;
        const int shared = (rows[u] & rows[v]).count();
        const auto it = std::find(c_list.begin(), c_list.end(), shared);
        if (it == c_list.end())
            throw UnrealizedCount("non-neighbour " + std::to_string(v) + " of " + std::to_string(u) +
                                  " shares " + std::to_string(shared) + ", outside [" + join_ints(c_list) + "]");
        profile.counts[static_cast<std::size_t>(it - c_list.begin())].second += 1;
    }
    return profile;
}

IdentityReport check_counting_identities(const Graph& g, const std::vector<int>& c_list) {
    require_descending(c_list);
    const auto k = is_regular(g);
    if (!k) throw ParameterMismatch("counting identities need a regular graph");
    if (!is_triangle_free(g)) throw ParameterMismatch("counting identities need a = 0 (triangle-free)");
    if (c_list != std::vector<int>{*k - 1, *k - 2, *k - 3})
        throw ParameterMismatch("c_list [" + join_ints(c_list) + "] is not (k-1, k-2, k-3) for k = " + std::to_string(*k));

    IdentityReport report;
    report.n = g.order();
    report.k = *k;
    report.c_list = c_list;
    report.eq1_expected = report.n - report.k - 1;
    report.eq2_expected = static_cast<long>(report.k) * (report.k - 1);
    // the combination k*(1) - (2); equals 2k exactly when n = 2k + 2
    report.eq3_expected = static_cast<long>(report.k) * (report.n - 2 * report.k);
    report.all_pass = true;
    for (int u = 0; u < report.n; ++u) {
        VertexIdentities row;
        row.vertex = u;
        try {
            const TProfile profile = t_profile(g, u, c_list);
            for (const auto& [c, t] : profile.counts) {
                row.t.push_back(t);
                row.eq1 += t;
                row.eq2 += static_cast<long>(c) * t;
                row.eq3 += static_cast<long>(report.k - c) * t;
            }
            row.pass = row.eq1 == report.eq1_expected && row.eq2 == report.eq2_expected &&
                       row.eq3 == report.eq3_expected;
        } catch (const UnrealizedCount&) {
            // a non-neighbour count outside c_list is a per-vertex failure
            row.pass = false;
        }
        report.all_pass = report.all_pass && row.pass;
        report.per_vertex.push_back(std::move(row));
    }
    return report;
}

Bounds sqsr_bounds(int k) {
    if (k < 4) throw DegreeTooSmall("k must be at least 4, got " + std::to_string(k));
    if (k == 4) return Bounds{4, 11, 12};
    return Bounds{k, 2 * k + 4, k * k - 5};
}

}  // namespace qsr
