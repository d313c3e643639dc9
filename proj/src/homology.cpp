#include "acypart/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace acypart {
namespace {

constexpr int kAutoExactDim = 500;  // below this (both dims), Auto picks the exact path

}  // namespace

ChainComplex chain_complex(const Hypergraph& h) {
    ChainComplex cc;
    cc.r = h.r;
    cc.bases.resize(h.r + 1);
    cc.bases[0] = {Hyperedge{}};
    for (int s = 1; s <= h.r; ++s) cc.bases[s] = faces(h, s).faces;

    cc.boundaries.resize(h.r);
    for (int k = 0; k < h.r; ++k) {
        std::map<Hyperedge, int> row_of;
        for (std::size_t i = 0; i < cc.bases[k].size(); ++i)
            row_of.emplace(cc.bases[k][i], static_cast<int>(i));
        SparseMatrix m(static_cast<int>(cc.bases[k].size()),
                       static_cast<int>(cc.bases[k + 1].size()));
        for (std::size_t j = 0; j < cc.bases[k + 1].size(); ++j) {
            const Hyperedge& face = cc.bases[k + 1][j];
            for (std::size_t s = 0; s < face.size(); ++s) {
                Hyperedge sub;
                sub.reserve(face.size() - 1);
                for (std::size_t i = 0; i < face.size(); ++i)
                    if (i != s) sub.push_back(face[i]);
                m.add_entry(row_of.at(sub), static_cast<int>(j), (s % 2 == 0) ? 1 : -1);
            }
        }
        cc.boundaries[k] = std::move(m);
    }
    return cc;
}

const SparseMatrix& boundary_matrix(const ChainComplex& cc, int k) {
    if (k < 0 || k >= cc.r)
        throw std::out_of_range("boundary index must satisfy 0 <= k <= r-1");
    return cc.boundaries[k];
}

bool BettiVector::all_zero() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

BettiVector betti(const Hypergraph& h, BettiMode mode) {
    const ChainComplex cc = chain_complex(h);
    const int r = cc.r;

    auto pick = [mode](const SparseMatrix& m) {
        switch (mode) {
            case BettiMode::Exact: return RankMode::Exact;
            case BettiMode::Fast: return RankMode::Fast;
            case BettiMode::Auto:
            default:
                return (m.rows < kAutoExactDim && m.cols < kAutoExactDim) ? RankMode::Exact
                                                                          : RankMode::Fast;
        }
    };

    std::vector<RankResult> ranks(r);
    for (int k = 0; k < r; ++k) ranks[k] = matrix_rank(cc.boundaries[k], pick(cc.boundaries[k]));

    auto compute = [&]() {
        BettiVector bv;
        bv.values.resize(r + 1);
        for (int i = 0; i <= r; ++i) {
            const long long dim = static_cast<long long>(cc.bases[i].size());
            const long long below = (i >= 1) ? ranks[i - 1].rank : 0;  // rank of d_{i-1}
            const long long above = (i <= r - 1) ? ranks[i].rank : 0;  // rank of d_i
            bv.values[i] = static_cast<int>(dim - below - above);
        }
        return bv;
    };

    BettiVector bv = compute();
    const bool any_modular = std::any_of(ranks.begin(), ranks.end(), [](const RankResult& rr) {
        return rr.method == RankMethod::Modular;
    });
    if (any_modular && !bv.all_zero()) {
        // modular ranks can only understate; settle nonzero results exactly
        for (int k = 0; k < r; ++k)
            if (ranks[k].method == RankMethod::Modular)
                ranks[k] = matrix_rank(cc.boundaries[k], RankMode::Exact);
        bv = compute();
    }
    return bv;
}

long long euler_characteristic(const Hypergraph& h) {
    long long chi = 1;  // dimension -1 counts with sign +1
    for (int s = 1; s <= h.r; ++s) {
        const long long count = static_cast<long long>(faces(h, s).faces.size());
        chi += (s % 2 == 0) ? count : -count;
    }
    return chi;
}

}  // namespace acypart
