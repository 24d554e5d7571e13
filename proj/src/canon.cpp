#include "qsr/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "qsr/graph6.hpp"

namespace qsr {

Partition unit_partition(int n) {
    if (n < 1 || n > kMaxVertices)
        throw InvalidPartition("unit partition order outside [1, 64]");
    return Partition{{VertexSet::first_n(n)}};
}

bool is_discrete(const Partition& p) {
    return std::all_of(p.cells.begin(), p.cells.end(),
                       [](VertexSet c) { return c.count() == 1; });
}

namespace {

void validate_partition(const Graph& g, const Partition& p) {
    VertexSet seen;
    for (VertexSet cell : p.cells) {
        if (cell.empty()) throw InvalidPartition("empty cell");
        if (seen.intersects(cell)) throw InvalidPartition("cells overlap");
        seen = seen | cell;
    }
    if (!(seen == VertexSet::first_n(g.order())))
        throw InvalidPartition("cells do not cover the vertex set exactly");
}

// One pass to the fixpoint. Signature of a vertex = its neighbour counts into
// every current cell, in cell order; each cell splits into runs of equal
// signature, ascending, in place.
Partition refine_valid(const Graph& g, Partition p) {
    const auto& rows = g.rows();
    using Sig = std::vector<unsigned char>;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexSet> next;
        next.reserve(p.cells.size());
        for (VertexSet cell : p.cells) {
            if (cell.count() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<Sig, int>> members;
            for (int v : cell) {
                Sig sig;
                sig.reserve(p.cells.size());
                for (VertexSet other : p.cells)
                    sig.push_back(static_cast<unsigned char>((rows[v] & other).count()));
                members.emplace_back(std::move(sig), v);
            }
            std::sort(members.begin(), members.end());
            std::size_t run = 0, runs = 0;
            while (run < members.size()) {
                std::size_t end = run;
                VertexSet sub;
                while (end < members.size() && members[end].first == members[run].first)
                    sub.add(members[end++].second);
                next.push_back(sub);
                run = end;
                ++runs;
            }
            if (runs > 1) changed = true;
        }
        p.cells = std::move(next);
    }
    return p;
}

// Packed upper triangle of the relabeled graph, column-major to match graph6
// bit order, so word-wise comparison equals graph6 byte comparison.
using LeafKey = std::vector<std::uint64_t>;

void pack_key(const std::vector<VertexSet>& rows, const std::vector<int>& labels, LeafKey& key) {
    const int n = static_cast<int>(rows.size());
    std::array<std::uint64_t, kMaxVertices> pos_rows{};
    for (int v = 0; v < n; ++v)
        for (int u : rows[v]) pos_rows[labels[v]] |= std::uint64_t{1} << labels[u];
    const long bits = static_cast<long>(n) * (n - 1) / 2;
    key.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((pos_rows[j] >> i) & 1)
                key[static_cast<std::size_t>(bit >> 6)] |= std::uint64_t{1} << (63 - (bit & 63));
}

struct Search {
    const Graph& g;
    const std::vector<VertexSet>& rows;
    int n;

    bool have_best = false;
    LeafKey best_key;
    std::vector<int> best_labels;
    std::uint64_t count = 0;
    std::vector<int> uf;

    LeafKey scratch_key;
    std::vector<int> scratch_labels, scratch_inverse;

    explicit Search(const Graph& graph)
        : g(graph), rows(graph.rows()), n(graph.order()), uf(static_cast<std::size_t>(n)) {}

    int find(int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[b] = a;  // keep the smallest vertex as representative
    }

    void leaf(const Partition& p) {
        scratch_labels.assign(static_cast<std::size_t>(n), 0);
        scratch_inverse.assign(static_cast<std::size_t>(n), 0);
        for (int idx = 0; idx < n; ++idx) {
            const int v = p.cells[static_cast<std::size_t>(idx)].min();
            scratch_labels[static_cast<std::size_t>(v)] = idx;
            scratch_inverse[static_cast<std::size_t>(idx)] = v;
        }
        pack_key(rows, scratch_labels, scratch_key);
        if (!have_best || scratch_key < best_key) {
            have_best = true;
            best_key = scratch_key;
            best_labels = scratch_labels;
            count = 1;
            std::iota(uf.begin(), uf.end(), 0);
        } else if (scratch_key == best_key) {
            ++count;
            // equal leaves differ by an automorphism: u -> leaf^-1(best(u))
            for (int u = 0; u < n; ++u)
                unite(u, scratch_inverse[static_cast<std::size_t>(best_labels[static_cast<std::size_t>(u)])]);
        }
    }

    void descend(const Partition& p) {
        if (is_discrete(p)) {
            leaf(p);
            return;
        }
        std::size_t target = 0;
        int target_size = 0;
        for (std::size_t i = 0; i < p.cells.size(); ++i)
            if (p.cells[i].count() > target_size) {
                target_size = p.cells[i].count();
                target = i;
            }
        for (int v : p.cells[target]) {
            Partition child;
            child.cells.reserve(p.cells.size() + 1);
            for (std::size_t i = 0; i < p.cells.size(); ++i) {
                if (i == target) {
                    child.cells.push_back(VertexSet::single(v));
                    child.cells.push_back(p.cells[i] - VertexSet::single(v));
                } else {
                    child.cells.push_back(p.cells[i]);
                }
            }
            descend(refine_valid(g, child));
        }
    }
};

}  // namespace

Partition refine(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    return refine_valid(g, p);
}

CanonResult canonical_search(const Graph& g) {
    Search search(g);
    search.descend(refine_valid(g, unit_partition(g.order())));
    CanonResult result;
    result.labels = search.best_labels;
    result.form.bytes = encode_graph6(apply_permutation(g, result.labels));
    result.automorphism_count = search.count;
    result.orbit.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) result.orbit[static_cast<std::size_t>(v)] = search.find(v);
    return result;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_search(g).form; }

std::uint64_t automorphism_count(const Graph& g) { return canonical_search(g).automorphism_count; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace qsr
