#include "acypart/collapse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace acypart {
namespace {

// All (arity-1)-subfaces of an edge, by dropped position. For arity 1 this
// is the single empty face.
std::vector<Hyperedge> subfaces(const Hyperedge& e) {
    std::vector<Hyperedge> out;
    out.reserve(e.size());
    for (std::size_t s = 0; s < e.size(); ++s) {
        Hyperedge f;
        f.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != s) f.push_back(e[i]);
        out.push_back(std::move(f));
    }
    return out;
}

// Live edge set with face multiplicities, updated per removal.
struct CollapseState {
    std::set<Hyperedge> remaining;
    std::map<Hyperedge, int> face_count;

    explicit CollapseState(const Hypergraph& h) {
        for (const auto& e : h.edges) {
            remaining.insert(e);
            for (auto& f : subfaces(e)) ++face_count[f];
        }
    }

    bool is_private(const Hyperedge& f) const {
        auto it = face_count.find(f);
        return it != face_count.end() && it->second == 1;
    }

    // by value: callers hand in references into `remaining`
    void remove(Hyperedge e) {
        remaining.erase(e);
        for (auto& f : subfaces(e)) {
            auto it = face_count.find(f);
            if (--it->second == 0) face_count.erase(it);
        }
    }

    // Lexicographically smallest private subface, optionally restricted to
    // the first `head` drop positions.
    std::optional<Hyperedge> private_face_of(const Hyperedge& e, int head = -1) const {
        std::optional<Hyperedge> best;
        auto all = subfaces(e);
        const std::size_t limit = head < 0 ? all.size() : static_cast<std::size_t>(head);
        for (std::size_t s = 0; s < limit; ++s)
            if (is_private(all[s]) && (!best || all[s] < *best)) best = all[s];
        return best;
    }
};

Hypergraph from_edge_set(int n, int r, const std::set<Hyperedge>& edges) {
    Hypergraph h;
    h.n = n;
    h.r = r;
    h.edges.assign(edges.begin(), edges.end());
    return h;
}

}  // namespace

int weight(const Hyperedge& e) {
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0LL));
}

WeightReport weight_report(const Hypergraph& g, int a, int r) {
    if (g.edges.empty())
        throw std::invalid_argument("weight report requires a non-empty hypergraph");
    if (r < 1) throw std::invalid_argument("weight report requires r >= 1");
    for (const auto& e : g.edges)
        if (e.back() > r)
            throw std::invalid_argument("edge " + format_edge(e) + " leaves the vertex set {1.." +
                                        std::to_string(r) + "}");
    auto floor_div = [](int x, int y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
    WeightReport rep;
    rep.a = a;
    bool first = true;
    for (const auto& e : g.edges) {
        const int level = floor_div(weight(e) - a, r);
        if (first || level > rep.q) {
            rep.q = level;
            first = false;
        }
    }
    for (const auto& e : g.edges)
        if (floor_div(weight(e) - a, r) == rep.q) rep.top_class.push_back(e);
    return rep;
}

std::optional<PeelStep> find_leaf(const Hypergraph& h) {
    CollapseState state(h);
    for (const auto& e : state.remaining)
        if (auto f = state.private_face_of(e)) return PeelStep{e, *f, std::nullopt};
    return std::nullopt;
}

PeelSequence greedy_collapse(const Hypergraph& h) {
    PeelSequence seq;
    seq.initial = h;
    CollapseState state(h);
    while (true) {
        bool removed = false;
        for (const auto& e : state.remaining) {
            if (auto f = state.private_face_of(e)) {
                seq.steps.push_back({e, *f, std::nullopt});
                state.remove(e);
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }
    seq.residual = from_edge_set(h.n, h.r, state.remaining);
    return seq;
}

FaceSet je_faces(const GammaKey& key, int r, int d) {
    const Hypergraph piece = gamma_sub(key, r, d);
    std::set<Hyperedge> acc;
    for (const auto& e : piece.edges) {
        auto all = subfaces(e);
        for (int s = 0; s < key.k; ++s) acc.insert(all[s]);  // keep the whole js tail
    }
    FaceSet fs;
    fs.s = r - 1;
    fs.faces.assign(acc.begin(), acc.end());
    return fs;
}

PeelSequence structured_collapse_omega1(int r, int d) {
    const Hypergraph omega1 = build_omega(1, r, d);
    PeelSequence seq;
    seq.initial = omega1;
    CollapseState state(omega1);
    for (const auto& key : gamma_keys(r, d)) {
        std::set<Hyperedge> piece;
        for (const auto& e : gamma_sub(key, r, d).edges) piece.insert(e);
        while (!piece.empty()) {
            bool removed = false;
            for (const auto& e : piece) {
                if (auto f = state.private_face_of(e, key.k)) {
                    const Hyperedge chosen = e;
                    seq.steps.push_back({chosen, *f, key});
                    state.remove(chosen);
                    piece.erase(chosen);
                    removed = true;
                    break;
                }
            }
            if (!removed)
                throw std::runtime_error("structured collapse stalled at stage " +
                                         format_key(key) + " with " +
                                         std::to_string(piece.size()) + " edges left");
        }
    }
    if (!state.remaining.empty())
        throw std::runtime_error("structured collapse left " +
                                 std::to_string(state.remaining.size()) + " edges unassigned");
    seq.residual = from_edge_set(omega1.n, omega1.r, state.remaining);
    return seq;
}

PeelValidation validate_peel(const PeelSequence& seq) {
    CollapseState state(seq.initial);
    const int r = seq.initial.r;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const PeelStep& step = seq.steps[i];
        const int idx = static_cast<int>(i);
        if (static_cast<int>(step.edge.size()) != r)
            return {false, idx, "edge " + format_edge(step.edge) + " has the wrong arity"};
        if (!state.remaining.count(step.edge))
            return {false, idx, "edge " + format_edge(step.edge) + " is not present"};
        if (static_cast<int>(step.private_face.size()) != r - 1)
            return {false, idx, "face " + format_edge(step.private_face) + " has the wrong arity"};
        if (!std::includes(step.edge.begin(), step.edge.end(), step.private_face.begin(),
                           step.private_face.end()))
            return {false, idx,
                    "face " + format_edge(step.private_face) + " is not a face of " +
                        format_edge(step.edge)};
        if (!state.is_private(step.private_face))
            return {false, idx,
                    "face " + format_edge(step.private_face) + " is shared by another edge"};
        state.remove(step.edge);
    }
    const Hypergraph end = from_edge_set(seq.initial.n, seq.initial.r, state.remaining);
    if (!(end == seq.residual))
        return {false, static_cast<int>(seq.steps.size()), "residual does not match"};
    return {true, -1, ""};
}

}  // namespace acypart
