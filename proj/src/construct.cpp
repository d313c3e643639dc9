#include "acypart/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace acypart {
namespace {

int true_mod(long long x, int m) {
    int v = static_cast<int>(x % m);
    return v < 0 ? v + m : v;
}

int block_index(int vertex, int r) { return (vertex - 1) / r + 1; }

void check_rd(int r, int d) {
    if (r < 1 || d < 1)
        throw std::invalid_argument("parameters must satisfy r >= 1 and d >= 1");
}

void validate_key(const GammaKey& key, int r, int d) {
    if (key.k < 1 || key.k > r)
        throw std::invalid_argument("gamma key: k must satisfy 1 <= k <= r");
    if (static_cast<int>(key.js.size()) != r - key.k)
        throw std::invalid_argument("gamma key: expected " + std::to_string(r - key.k) +
                                    " tail entries, got " + std::to_string(key.js.size()));
    int prev = r;  // the tail must live strictly above {1..r}
    for (int j : key.js) {
        if (j <= prev || j > r * d)
            throw std::invalid_argument("gamma key: tail must be strictly increasing within " +
                                        std::to_string(r + 1) + ".." + std::to_string(r * d));
        prev = j;
    }
}

}  // namespace

Block block(int a, int r) {
    if (a < 1 || r < 1) throw std::invalid_argument("block requires a >= 1 and r >= 1");
    Block b;
    b.a = a;
    b.members.resize(r);
    std::iota(b.members.begin(), b.members.end(), r * a - (r - 1));
    return b;
}

bool omega_contains(const Hyperedge& edge, int a, int r, int d) {
    check_rd(r, d);
    if (a < 1 || a > d) throw std::invalid_argument("part index must satisfy 1 <= a <= d");
    if (static_cast<int>(edge.size()) != r)
        throw std::invalid_argument("malformed edge " + format_edge(edge) + ": expected arity " +
                                    std::to_string(r));
    long long total = 0;
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (edge[i] < 1 || edge[i] > r * d)
            throw std::invalid_argument("malformed edge " + format_edge(edge) +
                                        ": vertex out of range 1.." + std::to_string(r * d));
        if (i > 0 && edge[i] <= edge[i - 1])
            throw std::invalid_argument("malformed edge " + format_edge(edge) +
                                        ": vertices must be strictly increasing");
        total += edge[i];
    }
    const int t = true_mod(total, r) + 1;
    return block_index(edge[t - 1], r) == a;
}

Hypergraph build_omega(int a, int r, int d) {
    check_rd(r, d);
    if (a < 1 || a > d) throw std::invalid_argument("part index must satisfy 1 <= a <= d");
    const int n = r * d;
    std::vector<int> universe(n);
    std::iota(universe.begin(), universe.end(), 1);
    Hypergraph h;
    h.n = n;
    h.r = r;
    for (auto& e : subsets_of(universe, r))
        if (omega_contains(e, a, r, d)) h.edges.push_back(std::move(e));
    return h;
}

Partition build_partition(int r, int d) {
    check_rd(r, d);
    const int n = r * d;
    Partition p;
    p.r = r;
    p.d = d;
    p.parts.assign(d, Hypergraph{n, r, {}});
    std::vector<int> universe(n);
    std::iota(universe.begin(), universe.end(), 1);
    for (auto& e : subsets_of(universe, r)) {
        long long total = std::accumulate(e.begin(), e.end(), 0LL);
        const int t = true_mod(total, r) + 1;
        const int a = block_index(e[t - 1], r);
        p.parts[a - 1].edges.push_back(std::move(e));
    }
    return p;
}

VertexPermutation phi_map(int a, int r, int d) {
    check_rd(r, d);
    if (a < 1 || a >= d)
        throw std::invalid_argument("phi requires 1 <= a < d, got a=" + std::to_string(a));
    VertexPermutation phi = VertexPermutation::identity(r * d);
    const int lo = r * (a - 1) + 1;  // smallest member of S_a
    for (int z = r * a + 1; z <= r * (a + 1); ++z)
        phi.image[z - 1] = z - r;  // S_{a+1} -> S_a, residue preserved
    for (int z = lo; z <= r * a; ++z)
        phi.image[z - 1] = (z == lo) ? z - 1 + 2 * r : z - 1 + r;  // S_a -> S_{a+1}, residue down one
    return phi;
}

std::string format_key(const GammaKey& key) {
    std::string out = "k=" + std::to_string(key.k) + " js=";
    for (std::size_t i = 0; i < key.js.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(key.js[i]);
    }
    return out;
}

std::vector<GammaKey> gamma_keys(int r, int d) {
    check_rd(r, d);
    std::vector<int> tail_universe;
    for (int j = r + 1; j <= r * d; ++j) tail_universe.push_back(j);
    std::vector<GammaKey> keys;
    for (int k = 1; k <= r; ++k)
        for (auto& js : subsets_of(tail_universe, r - k)) keys.push_back({k, std::move(js)});
    return keys;
}

Hypergraph gamma_sub(const GammaKey& key, int r, int d) {
    check_rd(r, d);
    validate_key(key, r, d);
    std::vector<int> head_universe(r);
    std::iota(head_universe.begin(), head_universe.end(), 1);
    Hypergraph h;
    h.n = r * d;
    h.r = r;
    for (const auto& head : subsets_of(head_universe, key.k)) {
        Hyperedge e = head;
        e.insert(e.end(), key.js.begin(), key.js.end());
        if (omega_contains(e, 1, r, d)) h.edges.push_back(std::move(e));
    }
    return h;
}

Hypergraph gamma_abstract(int k, int r, int a) {
    if (r < 1 || k < 1 || k > r)
        throw std::invalid_argument("gamma_abstract requires 1 <= k <= r");
    const int res = true_mod(a, r);
    std::vector<int> universe(r);
    std::iota(universe.begin(), universe.end(), 1);
    Hypergraph h;
    h.n = r;
    h.r = k;
    for (auto& e : subsets_of(universe, k)) {
        long long total = std::accumulate(e.begin(), e.end(), 0LL);
        if (true_mod(total - res, r) < k) h.edges.push_back(std::move(e));
    }
    return h;
}

Hyperedge PsiMap::forward(const Hyperedge& e) const {
    if (static_cast<int>(e.size()) != key.k || !domain.has_edge(e))
        throw std::invalid_argument("psi: " + format_edge(e) + " is not an edge of the domain");
    Hyperedge out = e;
    out.insert(out.end(), key.js.begin(), key.js.end());
    return out;
}

Hyperedge PsiMap::inverse(const Hyperedge& e) const {
    if (!image.has_edge(e))
        throw std::invalid_argument("psi: " + format_edge(e) + " is not an edge of the image");
    return Hyperedge(e.begin(), e.begin() + key.k);
}

PsiMap psi_map(const GammaKey& key, int r, int d) {
    check_rd(r, d);
    validate_key(key, r, d);
    PsiMap psi;
    psi.key = key;
    psi.r = r;
    psi.d = d;
    long long tail_sum = std::accumulate(key.js.begin(), key.js.end(), 0LL);
    psi.a = true_mod(tail_sum, r);
    psi.domain = gamma_abstract(key.k, r, true_mod(-psi.a, r));
    psi.image = gamma_sub(key, r, d);
    return psi;
}

Decomposition decompose_omega1(int r, int d) {
    Decomposition dec;
    dec.r = r;
    dec.d = d;
    for (const auto& key : gamma_keys(r, d)) dec.pieces.emplace_back(key, gamma_sub(key, r, d));
    return dec;
}

HomogeneityReport homogeneity_report(const Partition& p) {
    check_rd(p.r, p.d);
    const int n = p.r * p.d;
    HomogeneityReport rep;
    rep.pass = true;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const Hypergraph& part = p.parts[i];
        for (int s = 1; s < p.r; ++s) {
            HomogeneityRow row;
            row.part = static_cast<int>(i) + 1;
            row.s = s;
            row.actual = static_cast<long long>(faces(part, s).faces.size());
            row.expected = static_cast<long long>(binomial(n, s));
            if (row.actual != row.expected) rep.pass = false;
            rep.rows.push_back(row);
        }
        HomogeneityRow top;
        top.part = static_cast<int>(i) + 1;
        top.s = p.r;
        top.actual = static_cast<long long>(part.edges.size());
        top.expected = static_cast<long long>(binomial(n - 1, p.r - 1));
        if (top.actual != top.expected) rep.pass = false;
        rep.rows.push_back(top);
    }
    return rep;
}

VertexPermutation shift_permutation(int r) {
    if (r < 1) throw std::invalid_argument("shift requires r >= 1");
    VertexPermutation s;
    s.image.resize(r);
    for (int i = 1; i <= r; ++i) s.image[i - 1] = i % r + 1;
    return s;
}

}  // namespace acypart
