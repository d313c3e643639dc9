// collapse.hpp - leaf elimination: find leaves, peel greedily or stage-by-stage
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acypart/construct.hpp"
#include "acypart/hypergraph.hpp"

namespace acypart {

struct PeelStep {
    Hyperedge edge;
    Hyperedge private_face;          // arity r-1; the empty tuple when r == 1
    std::optional<GammaKey> stage;   // set by the structured collapse
};

// Replayable witness that `initial` peels down to `residual`.
struct PeelSequence {
    Hypergraph initial;
    std::vector<PeelStep> steps;
    Hypergraph residual;
};

// Sum of the vertex labels.
int weight(const Hyperedge& e);

// Weight level q_a(G) = max over edges of floor((w - a) / r), and the class
// of edges attaining it.
struct WeightReport {
    int a = 0;
    int q = 0;
    std::vector<Hyperedge> top_class;  // lexicographic
};

// G must be non-empty with vertices in {1..r}.
WeightReport weight_report(const Hypergraph& g, int a, int r);

// Lexicographically smallest edge owning a face shared with no other edge,
// paired with its smallest such face. nullopt when no edge qualifies.
std::optional<PeelStep> find_leaf(const Hypergraph& h);

// Repeats find_leaf until none exists. Residual is the fixed point.
PeelSequence greedy_collapse(const Hypergraph& h);

// The (r-1)-faces of gamma_sub(key) that keep the whole js tail.
FaceSet je_faces(const GammaKey& key, int r, int d);

// Peels Omega_1 piece by piece (k ascending, js lexicographic), each piece
// emptied using only faces from je_faces of its key; every step carries its
// stage tag. Throws std::runtime_error if a stage stalls.
PeelSequence structured_collapse_omega1(int r, int d);

struct PeelValidation {
    bool valid = false;
    int failed_step = -1;  // steps.size() means the residual did not match
    std::string reason;
};

// Replays the sequence from `initial`, re-checking the leaf condition at
// every step and comparing the end state against `residual`.
PeelValidation validate_peel(const PeelSequence& seq);

}  // namespace acypart
