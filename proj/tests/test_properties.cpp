#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "acypart/collapse.hpp"
#include "acypart/construct.hpp"
#include "acypart/homology.hpp"
#include "test_util.hpp"

using namespace acypart;

TEST_CASE("boundary composition vanishes on random sub-hypergraphs") {
    std::mt19937 rng(2025);
    for (int r : {3, 4}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Hypergraph h = testutil::random_sub_hypergraph(rng, 8, r);
            const ChainComplex cc = chain_complex(h);
            for (int k = 1; k < cc.r; ++k)
                CHECK(testutil::product_is_zero(cc.boundaries[k - 1], cc.boundaries[k]));
        }
    }
}

TEST_CASE("betti alternating sum equals euler on random instances") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 30; ++trial) {
        const Hypergraph h = testutil::random_sub_hypergraph(rng, 7, 3);
        const BettiVector bv = betti(h);
        long long alt = 0;
        for (std::size_t i = 0; i < bv.values.size(); ++i)
            alt += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(bv.values[i]);
        CHECK(alt == euler_characteristic(h));
        for (int v : bv.values) CHECK(v >= 0);
    }
}

TEST_CASE("modular rank never exceeds exact rank") {
    std::mt19937 rng(2027);
    std::uniform_int_distribution<int> dim(1, 15);
    std::uniform_int_distribution<int> value(-3, 3);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        SparseMatrix m(dim(rng), dim(rng));
        for (int c = 0; c < m.cols; ++c)
            for (int r = 0; r < m.rows; ++r)
                if (coin(rng) < 0.4) {
                    const int v = value(rng);
                    if (v) m.add_entry(r, c, v);
                }
        CHECK(matrix_rank(m, RankMode::Fast).rank <= matrix_rank(m, RankMode::Exact).rank);
    }
}

TEST_CASE("partition pipeline properties on a small grid") {
    for (auto [r, d] : {std::pair{1, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        const Partition p = build_partition(r, d);
        CHECK(verify_partition(p).valid);
        CHECK(homogeneity_report(p).pass);
        for (const auto& part : p.parts) {
            const PeelSequence seq = greedy_collapse(part);
            CHECK(seq.steps.size() == binomial(r * d - 1, r - 1));
            CHECK(seq.residual.edges.empty());
            CHECK(validate_peel(seq).valid);
            CHECK(betti(part).all_zero());
            CHECK(euler_characteristic(part) == 0);
        }
        const PeelSequence structured = structured_collapse_omega1(r, d);
        CHECK(structured.residual.edges.empty());
        CHECK(validate_peel(structured).valid);
    }
}

TEST_CASE("decomposition covers the first part disjointly") {
    for (auto [r, d] : {std::pair{2, 4}, {3, 3}, {4, 2}, {5, 2}}) {
        const Decomposition dec = decompose_omega1(r, d);
        std::set<Hyperedge> seen;
        for (const auto& [key, piece] : dec.pieces) {
            CHECK(piece.edges.size() == binomial(r - 1, key.k - 1));
            for (const auto& e : piece.edges) CHECK(seen.insert(e).second);
        }
        const Hypergraph omega1 = build_omega(1, r, d);
        CHECK(seen.size() == omega1.edges.size());
    }
}

TEST_CASE("random relabelings are always detected as isomorphic") {
    std::mt19937 rng(2028);
    for (int trial = 0; trial < 20; ++trial) {
        const Hypergraph h = testutil::random_sub_hypergraph(rng, 6, 3);
        VertexPermutation p = VertexPermutation::identity(6);
        std::shuffle(p.image.begin(), p.image.end(), rng);
        const Hypergraph mapped = p.apply(h);
        const auto found = are_isomorphic(h, mapped);
        REQUIRE(found.has_value());
        CHECK(found->apply(h) == mapped);
    }
}
