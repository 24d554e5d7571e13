#include "qsr/graph.hpp"

#include <algorithm>
#include <string>

namespace qsr {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 1 || n > kMaxVertices)
        throw CapacityExceeded("graph order " + std::to_string(n) + " outside [1, 64]");
    std::vector<VertexSet> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v) throw SelfLoop("self loop at vertex " + std::to_string(u));
        adj[u].add(v);
        adj[v].add(u);
    }
    return Graph(n, std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxVertices)
        throw CapacityExceeded("graph order " + std::to_string(n) + " outside [1, 64]");
    const VertexSet range = VertexSet::first_n(n);
    for (int v = 0; v < n; ++v) {
        if (rows[v].contains(v)) throw SelfLoop("self loop at vertex " + std::to_string(v));
        if (!rows[v].subset_of(range))
            throw VertexOutOfRange("row " + std::to_string(v) + " has bits outside [0, " + std::to_string(n) + ")");
        for (int u : rows[v])
            if (!rows[u].contains(v))
                throw VertexOutOfRange("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
    }
    return Graph(n, std::move(rows));
}

int Graph::edge_count() const {
    int sum = 0;
    for (const auto& row : adj_) sum += row.count();
    return sum / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

int degree(const Graph& g, int v) { return g.degree(v); }

VertexSet neighbours(const Graph& g, int v) { return g.neighbours(v); }

int common_neighbours(const Graph& g, int u, int v) {
    if (u == v) throw SameVertex("common_neighbours needs two distinct vertices");
    return (g.neighbours(u) & g.neighbours(v)).count();
}

std::optional<int> is_regular(const Graph& g) {
    const int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

bool is_triangle_free(const Graph& g) {
    const auto& rows = g.rows();
    for (int u = 0; u < g.order(); ++u)
        for (int v : rows[u]) {
            if (v <= u) continue;
            if ((rows[u] & rows[v]).count() != 0) return false;
        }
    return true;
}

namespace {

// Max independent set, branch and bound on the candidate set. Vertices of
// degree <= 1 within the candidates can always be taken, which closes sparse
// instances without branching.
void mis_recurse(const std::vector<VertexSet>& rows, VertexSet cand, int size, int& best) {
    while (true) {
        if (size + cand.count() <= best) return;
        if (cand.empty()) {
            best = std::max(best, size);
            return;
        }
        int pick = -1, pick_deg = -1;
        bool reduced = false;
        for (int v : cand) {
            const int d = (rows[v] & cand).count();
            if (d <= 1) {
                cand = (cand - rows[v]);
                cand.remove(v);
                ++size;
                reduced = true;
                break;
            }
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (reduced) continue;
        VertexSet incl = cand - rows[pick];
        incl.remove(pick);
        mis_recurse(rows, incl, size + 1, best);
        cand.remove(pick);
        mis_recurse(rows, cand, size, best);
        return;
    }
}

}  // namespace

int independence_number(const Graph& g) {
    if (g.order() > 40)
        throw TooLarge("independence_number guarded to n <= 40, got n = " + std::to_string(g.order()));
    int best = 0;
    mis_recurse(g.rows(), VertexSet::first_n(g.order()), 0, best);
    return best;
}

int cut_size(const Graph& g, VertexSet a, VertexSet b) {
    const VertexSet range = VertexSet::first_n(g.order());
    if (!a.subset_of(range) || !b.subset_of(range))
        throw VertexOutOfRange("cut sets must lie inside the vertex range");
    if (a.intersects(b)) throw OverlappingSets("cut sets overlap");
    int sum = 0;
    for (int v : a) sum += (g.neighbours(v) & b).count();
    return sum;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw VertexOutOfRange("permutation length does not match graph order");
    std::vector<VertexSet> rows(n);
    for (int u = 0; u < n; ++u) {
        if (perm[u] < 0 || perm[u] >= n) throw VertexOutOfRange("permutation image out of range");
        for (int v : g.neighbours(u)) rows[perm[u]].add(perm[v]);
    }
    return Graph::from_adjacency(std::move(rows));
}

}  // namespace qsr
