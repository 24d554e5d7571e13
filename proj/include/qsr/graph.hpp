#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qsr/errors.hpp"

// Core graph representation: simple undirected graphs on at most 64 vertices.
// Each adjacency row is a single 64-bit mask, so set algebra and common
// neighbour counts are single popcount instructions.

namespace qsr {

inline constexpr int kMaxVertices = 64;

// A subset of {0, ..., 63} backed by one uint64_t.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    // {0, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    // lowest-numbered member; undefined on an empty set
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

    // iterates members in increasing order
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rem) : rem_(rem) {}
        constexpr int operator*() const { return std::countr_zero(rem_); }
        constexpr iterator& operator++() { rem_ &= rem_ - 1; return *this; }
        constexpr bool operator!=(iterator o) const { return rem_ != o.rem_; }
    private:
        std::uint64_t rem_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

// Immutable simple graph. Rows are kept symmetric and irreflexive by
// construction; mutation happens only in builders that re-validate.
class Graph {
public:
    // Builds from an explicit edge list. Duplicate edges collapse silently.
    static Graph from_edges(int n, const std::vector<Edge>& edges);
    // Adopts pre-built rows after validating symmetry and irreflexivity.
    static Graph from_adjacency(std::vector<VertexSet> rows);

    int order() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].contains(v);
    }
    VertexSet neighbours(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return adj_[v].count();
    }

    const std::vector<VertexSet>& rows() const { return adj_; }
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    Graph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

Graph make_graph(int n, const std::vector<Edge>& edges);

int degree(const Graph& g, int v);
VertexSet neighbours(const Graph& g, int v);

// |N(u) ∩ N(v)| for two distinct vertices
int common_neighbours(const Graph& g, int u, int v);

// the common degree if every vertex has it, nullopt otherwise
std::optional<int> is_regular(const Graph& g);

bool is_triangle_free(const Graph& g);

// Exact maximum independent set size, branch and bound. Guarded to n <= 40.
int independence_number(const Graph& g);

// Number of edges with one endpoint in a and the other in b; the sets must
// be disjoint subsets of the vertex range.
int cut_size(const Graph& g, VertexSet a, VertexSet b);

// Relabels: vertex v of g becomes perm[v] in the result.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace qsr
