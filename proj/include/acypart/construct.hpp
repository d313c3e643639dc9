// construct.hpp - the residue-rule partition of K_{rd}^(r) and its structure maps
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acypart/hypergraph.hpp"

namespace acypart {

// Block S_a: the r consecutive integers ending at r*a. Blocks for a = 1..d
// partition {1..rd}.
struct Block {
    int a = 0;
    std::vector<int> members;
};
Block block(int a, int r);

// Membership rule for the part Omega_a: with t = (vertex sum mod r) + 1, the
// t-th smallest vertex of the edge must lie in S_a.
bool omega_contains(const Hyperedge& edge, int a, int r, int d);

// The a-th part: all edges of K_{rd}^(r) passing omega_contains.
Hypergraph build_omega(int a, int r, int d);

// The full d-partition (Omega_1, ..., Omega_d).
Partition build_partition(int r, int d);

// Vertex permutation fixing everything outside S_a and S_{a+1}, carrying
// E(Omega_{a+1}) bijectively onto E(Omega_a). Requires 1 <= a < d.
VertexPermutation phi_map(int a, int r, int d);

// Key of one piece of Omega_1: edges with exactly k vertices in {1..r}
// followed by the fixed tail js, where r+1 <= js[0] < ... <= rd.
struct GammaKey {
    int k = 0;
    std::vector<int> js;

    bool operator==(const GammaKey&) const = default;
};
std::string format_key(const GammaKey& key);

// All keys for (r, d): k ascending, js lexicographic within each k.
std::vector<GammaKey> gamma_keys(int r, int d);

// The piece of Omega_1 selected by a key.
Hypergraph gamma_sub(const GammaKey& key, int r, int d);

// Abstract k-uniform hypergraph on {1..r}: edges whose vertex sum falls in
// {a, a+1, ..., a+k-1} mod r. a is reduced by true mod (never negative).
Hypergraph gamma_abstract(int k, int r, int a);

// Tail-appending edge bijection between gamma_abstract(k, r, -a) and
// gamma_sub(key), where a = (sum of js) mod r.
struct PsiMap {
    GammaKey key;
    int r = 0;
    int d = 0;
    int a = 0;
    Hypergraph domain;
    Hypergraph image;

    Hyperedge forward(const Hyperedge& e) const;  // append js
    Hyperedge inverse(const Hyperedge& e) const;  // strip js
};
PsiMap psi_map(const GammaKey& key, int r, int d);

// Omega_1 as the disjoint union of its pieces, one per key.
struct Decomposition {
    int r = 0;
    int d = 0;
    std::vector<std::pair<GammaKey, Hypergraph>> pieces;
};
Decomposition decompose_omega1(int r, int d);

// Face-count table of a partition against the homogeneity targets:
// |E_s| = C(rd, s) for s < r, and |E| = C(rd-1, r-1) on the s == r row.
struct HomogeneityRow {
    int part = 0;  // 1-based
    int s = 0;
    long long actual = 0;
    long long expected = 0;
};
struct HomogeneityReport {
    bool pass = false;
    std::vector<HomogeneityRow> rows;
};
HomogeneityReport homogeneity_report(const Partition& p);

// i -> (i mod r) + 1 on {1..r}; carries gamma_abstract(k, r, a) onto
// gamma_abstract(k, r, a + k).
VertexPermutation shift_permutation(int r);

}  // namespace acypart
