#include "acypart/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace acypart {

std::string format_edge(const Hyperedge& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e[i]);
    }
    out += ')';
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > (static_cast<unsigned __int128>(1) << 62))
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 2^62");
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<Hyperedge> subsets_of(const std::vector<int>& universe, int k) {
    std::vector<Hyperedge> out;
    const int n = static_cast<int>(universe.size());
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Hyperedge e(k);
        for (int i = 0; i < k; ++i) e[i] = universe[idx[i]];
        out.push_back(std::move(e));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

bool Hypergraph::has_edge(const Hyperedge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Hypergraph make_hypergraph(int n, int r, std::vector<Hyperedge> edges) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (r < 1 || r > n)
        throw std::invalid_argument("arity must satisfy 1 <= r <= n, got r=" + std::to_string(r) +
                                    ", n=" + std::to_string(n));
    std::set<Hyperedge> canon;
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("arity mismatch: edge " + format_edge(e) + " has " +
                                        std::to_string(e.size()) + " vertices, expected " +
                                        std::to_string(r));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n)
                throw std::invalid_argument("vertex out of range 1.." + std::to_string(n) +
                                            " in edge " + format_edge(e));
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("duplicate vertex within edge " + format_edge(e));
        }
        canon.insert(std::move(e));
    }
    Hypergraph h;
    h.n = n;
    h.r = r;
    h.edges.assign(canon.begin(), canon.end());
    return h;
}

Hypergraph complete_hypergraph(int n, int r) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (r < 1 || r > n)
        throw std::invalid_argument("complete hypergraph requires 1 <= r <= n");
    std::vector<int> universe(n);
    std::iota(universe.begin(), universe.end(), 1);
    Hypergraph h;
    h.n = n;
    h.r = r;
    h.edges = subsets_of(universe, r);
    return h;
}

bool FaceSet::contains(const Hyperedge& f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
}

FaceSet faces(const Hypergraph& h, int s) {
    if (s < 1 || s > h.r)
        throw std::out_of_range("face arity must satisfy 1 <= s <= r, got s=" + std::to_string(s));
    std::set<Hyperedge> acc;
    for (const auto& e : h.edges)
        for (auto& f : subsets_of(e, s)) acc.insert(std::move(f));
    FaceSet fs;
    fs.s = s;
    fs.faces.assign(acc.begin(), acc.end());
    return fs;
}

PartitionReport verify_partition(const Partition& p) {
    PartitionReport rep;
    const int n = p.r * p.d;
    if (static_cast<int>(p.parts.size()) != p.d)
        rep.violations.push_back({"part-count", {},
                                  "expected " + std::to_string(p.d) + " parts, found " +
                                      std::to_string(p.parts.size())});
    std::map<Hyperedge, int> owner;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const Hypergraph& part = p.parts[i];
        const std::string label = "part " + std::to_string(i + 1);
        if (part.r != p.r) {
            rep.violations.push_back({"arity", {},
                                      label + " has arity " + std::to_string(part.r) +
                                          ", expected " + std::to_string(p.r)});
            continue;
        }
        if (part.n != n) {
            rep.violations.push_back({"vertex-set", {},
                                      label + " has n=" + std::to_string(part.n) +
                                          ", expected rd=" + std::to_string(n)});
            continue;
        }
        for (const auto& e : part.edges) {
            auto [it, fresh] = owner.emplace(e, static_cast<int>(i) + 1);
            if (!fresh)
                rep.violations.push_back({"disjointness", e,
                                          "edge " + format_edge(e) + " appears in parts " +
                                              std::to_string(it->second) + " and " +
                                              std::to_string(i + 1)});
        }
    }
    if (rep.violations.empty() && owner.size() != binomial(n, p.r)) {
        std::vector<int> universe(n);
        std::iota(universe.begin(), universe.end(), 1);
        for (const auto& e : subsets_of(universe, p.r)) {
            if (!owner.count(e)) {
                rep.violations.push_back(
                    {"coverage", e, "edge " + format_edge(e) + " is not covered by any part"});
                break;
            }
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

Hyperedge VertexPermutation::apply(const Hyperedge& e) const {
    Hyperedge out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = apply(e[i]);
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph VertexPermutation::apply(const Hypergraph& h) const {
    if (h.n != size())
        throw std::invalid_argument("permutation size does not match vertex count");
    std::set<Hyperedge> mapped;
    for (const auto& e : h.edges) mapped.insert(apply(e));
    Hypergraph out;
    out.n = h.n;
    out.r = h.r;
    out.edges.assign(mapped.begin(), mapped.end());
    return out;
}

VertexPermutation VertexPermutation::inverse() const {
    VertexPermutation inv;
    inv.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

VertexPermutation VertexPermutation::identity(int n) {
    VertexPermutation id;
    id.image.resize(n);
    std::iota(id.image.begin(), id.image.end(), 1);
    return id;
}

}  // namespace acypart
