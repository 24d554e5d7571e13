#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qsr/graph.hpp"

// Canonical labeling by equitable-partition refinement plus
// individualization. The canonical form of a graph is the lexicographically
// least graph6 string over all leaf labelings of the search tree, which makes
// it a complete isomorphism invariant; the automorphism group falls out of
// the set of leaves that attain the minimum.

namespace qsr {

// Ordered partition of the vertex set into disjoint non-empty cells.
struct Partition {
    std::vector<VertexSet> cells;

    friend bool operator==(const Partition&, const Partition&) = default;
};

Partition unit_partition(int n);

bool is_discrete(const Partition& p);

// Coarsest equitable refinement of p: cells are split by their members'
// neighbour counts into every current cell, new cells ordered by (parent cell
// index, ascending count signature), until stable. Throws InvalidPartition
// when p is not a partition of g's vertex set.
Partition refine(const Graph& g, const Partition& p);

struct CanonicalForm {
    std::string bytes;  // graph6 of the canonically relabeled graph

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonResult {
    CanonicalForm form;
    // labels[v] = position of original vertex v in the canonical order
    std::vector<int> labels;
    std::uint64_t automorphism_count = 0;
    // orbit representative (smallest member) per vertex under Aut(g)
    std::vector<int> orbit;
};

// Full search: canonical form, one canonical labeling, exact automorphism
// count and orbits.
CanonResult canonical_search(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

std::uint64_t automorphism_count(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace qsr
