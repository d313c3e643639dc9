#include <algorithm>
#include <stdexcept>

#include "acypart/hypergraph.hpp"

namespace acypart {
namespace {

std::vector<int> degrees(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v - 1];
    return deg;
}

// Backtracking over vertex images in natural order; an edge is checked as
// soon as its largest vertex gets assigned.
struct IsoSearch {
    const Hypergraph& a;
    const Hypergraph& b;
    std::vector<int> deg_a;
    std::vector<int> deg_b;
    std::vector<std::vector<int>> edges_by_max;  // a-edge indices keyed by max vertex
    std::vector<int> image;
    std::vector<char> used;

    IsoSearch(const Hypergraph& a_, const Hypergraph& b_)
        : a(a_), b(b_), deg_a(degrees(a_)), deg_b(degrees(b_)),
          edges_by_max(a_.n + 1), image(a_.n, 0), used(a_.n, 0) {
        for (std::size_t i = 0; i < a.edges.size(); ++i)
            edges_by_max[a.edges[i].back()].push_back(static_cast<int>(i));
    }

    bool mapped_edges_ok(int v) const {
        for (int ei : edges_by_max[v]) {
            const Hyperedge& e = a.edges[ei];
            Hyperedge mapped(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) mapped[i] = image[e[i] - 1];
            std::sort(mapped.begin(), mapped.end());
            if (!b.has_edge(mapped)) return false;
        }
        return true;
    }

    bool extend(int v) {
        if (v > a.n) return true;
        for (int w = 1; w <= a.n; ++w) {
            if (used[w - 1] || deg_a[v - 1] != deg_b[w - 1]) continue;
            image[v - 1] = w;
            used[w - 1] = 1;
            if (mapped_edges_ok(v) && extend(v + 1)) return true;
            image[v - 1] = 0;
            used[w - 1] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<VertexPermutation> are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                                                int search_cap) {
    if (a.n != b.n || a.r != b.r || a.edges.size() != b.edges.size()) return std::nullopt;
    if (a.n > search_cap)
        throw std::invalid_argument("exhaustive isomorphism search is capped at n=" +
                                    std::to_string(search_cap) + ", got n=" + std::to_string(a.n));
    std::vector<int> da = degrees(a), db = degrees(b);
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    IsoSearch search(a, b);
    if (search.extend(1)) return VertexPermutation{search.image};
    return std::nullopt;
}

}  // namespace acypart
