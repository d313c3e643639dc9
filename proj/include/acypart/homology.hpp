// homology.hpp - chain complex, boundary matrices, reduced Betti numbers
#pragma once

#include <vector>

#include "acypart/hypergraph.hpp"
#include "acypart/sparse_matrix.hpp"

namespace acypart {

// Chain complex of an r-uniform hypergraph over Q:
//
//   0 -> C_{r-1} -> ... -> C_0 -> C_{-1} -> 0
//
// bases[i] is the ordered basis of C_{i-1}: the i-faces in lexicographic
// order, with bases[0] = {[empty]}. boundaries[k] is the matrix of
// d_k : C_k -> C_{k-1} for 0 <= k <= r-1, column signs following the
// alternating-sum boundary formula.
struct ChainComplex {
    int r = 0;
    std::vector<std::vector<Hyperedge>> bases;
    std::vector<SparseMatrix> boundaries;
};

ChainComplex chain_complex(const Hypergraph& h);

// d_k for 0 <= k <= r-1; throws std::out_of_range otherwise.
const SparseMatrix& boundary_matrix(const ChainComplex& cc, int k);

// Reduced Betti numbers; values[i] = b_{i-1} for 0 <= i <= r.
struct BettiVector {
    std::vector<int> values;

    bool operator==(const BettiVector&) const = default;
    bool all_zero() const;
};

enum class BettiMode {
    Auto,   // exact ranks for matrices under 500x500, modular above
    Fast,   // modular ranks first
    Exact,  // exact ranks throughout
};

// Modular ranks can only understate the rational rank, so Betti numbers
// computed from them can only overstate the true ones: an all-zero modular
// result stands as-is, and any nonzero entry triggers exact recomputation of
// the modular ranks. The returned vector is always the true Betti vector.
BettiVector betti(const Hypergraph& h, BettiMode mode = BettiMode::Auto);

// Alternating sum of the chain-space dimensions, dimension -1 with sign +1.
long long euler_characteristic(const Hypergraph& h);

}  // namespace acypart
