// hypergraph.hpp - canonical uniform hypergraphs, faces, partitions, permutations
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acypart {

// Vertices are 1-based. A hyperedge is a strictly increasing vertex tuple.
using Hyperedge = std::vector<int>;

// r-uniform hypergraph on the vertex set {1..n}. Edges are deduplicated and
// kept in lexicographic order. Isolated vertices are legal: n may exceed the
// union of the edge supports.
struct Hypergraph {
    int n = 0;
    int r = 0;
    std::vector<Hyperedge> edges;

    bool operator==(const Hypergraph&) const = default;
    bool has_edge(const Hyperedge& e) const;
};

// Canonicalizes and validates the edge list (sort each tuple, deduplicate,
// order lexicographically). Throws std::invalid_argument on arity mismatch,
// out-of-range vertices, or a repeated vertex inside an edge.
Hypergraph make_hypergraph(int n, int r, std::vector<Hyperedge> edges);

// All r-subsets of {1..n}.
Hypergraph complete_hypergraph(int n, int r);

// The s-subsets of vertices contained in at least one edge.
struct FaceSet {
    int s = 0;
    std::vector<Hyperedge> faces;  // lexicographic, unique

    bool contains(const Hyperedge& f) const;
};
FaceSet faces(const Hypergraph& h, int s);

// Ordered hyperedge d-partition of the complete hypergraph on r*d vertices.
struct Partition {
    int r = 0;
    int d = 0;
    std::vector<Hypergraph> parts;
};

struct PartitionViolation {
    std::string condition;  // part-count | arity | vertex-set | disjointness | coverage
    Hyperedge witness;      // offending edge when applicable
    std::string detail;
};
struct PartitionReport {
    bool valid = false;
    std::vector<PartitionViolation> violations;
};
PartitionReport verify_partition(const Partition& p);

// Bijection on {1..n}; image[i-1] is where vertex i goes.
struct VertexPermutation {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int apply(int v) const { return image[v - 1]; }
    Hyperedge apply(const Hyperedge& e) const;  // re-sorts
    Hypergraph apply(const Hypergraph& h) const;
    VertexPermutation inverse() const;
    static VertexPermutation identity(int n);

    bool operator==(const VertexPermutation&) const = default;
};

// Exhaustive isomorphism search with degree-sequence pruning. Returns a
// permutation carrying E(a) onto E(b), or nullopt. Meant for small instances;
// throws std::invalid_argument when n exceeds search_cap.
std::optional<VertexPermutation> are_isomorphic(const Hypergraph& a,
                                                const Hypergraph& b,
                                                int search_cap = 10);

// C(n, k); throws std::overflow_error past 2^62.
std::uint64_t binomial(int n, int k);

// All k-subsets of a sorted universe, as ascending tuples in lexicographic
// order. k == 0 yields the single empty tuple.
std::vector<Hyperedge> subsets_of(const std::vector<int>& universe, int k);

std::string format_edge(const Hyperedge& e);  // "(1,2,3)"

}  // namespace acypart
