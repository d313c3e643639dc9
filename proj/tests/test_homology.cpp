#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acypart/construct.hpp"
#include "acypart/homology.hpp"
#include "test_util.hpp"

using namespace acypart;

namespace {

std::vector<std::size_t> basis_sizes(const ChainComplex& cc) {
    std::vector<std::size_t> out;
    for (const auto& b : cc.bases) out.push_back(b.size());
    return out;
}

}  // namespace

TEST_CASE("chain complex basis sizes") {
    CHECK(basis_sizes(chain_complex(complete_hypergraph(4, 3))) ==
          std::vector<std::size_t>{1, 4, 6, 4});
    CHECK(basis_sizes(chain_complex(build_omega(1, 3, 2))) ==
          std::vector<std::size_t>{1, 6, 15, 10});
    const Hypergraph cycle = make_hypergraph(6, 3, testutil::triangle_cycle_edges());
    CHECK(basis_sizes(chain_complex(cycle)) == std::vector<std::size_t>{1, 6, 9, 3});
}

TEST_CASE("boundary matrix shape and signs") {
    const ChainComplex cc = chain_complex(complete_hypergraph(4, 3));
    for (int k = 0; k < cc.r; ++k) {
        CHECK(cc.boundaries[k].rows == static_cast<int>(cc.bases[k].size()));
        CHECK(cc.boundaries[k].cols == static_cast<int>(cc.bases[k + 1].size()));
    }

    // column of [1,2,3] in d_2: +[2,3] - [1,3] + [1,2]
    const SparseMatrix& d2 = boundary_matrix(cc, 2);
    const auto& basis2 = cc.bases[2];  // pairs
    const auto& basis3 = cc.bases[3];  // triples
    const int col =
        static_cast<int>(std::find(basis3.begin(), basis3.end(), Hyperedge{1, 2, 3}) -
                         basis3.begin());
    std::map<Hyperedge, int> entries;
    for (const auto& [row, value] : d2.columns[col]) entries[basis2[row]] = value;
    CHECK(entries == std::map<Hyperedge, int>{{{1, 2}, 1}, {{1, 3}, -1}, {{2, 3}, 1}});

    // d_0 is a single all-ones row over the vertex basis
    const SparseMatrix& d0 = boundary_matrix(cc, 0);
    CHECK(d0.rows == 1);
    for (const auto& column : d0.columns) {
        REQUIRE(column.size() == 1);
        CHECK(column[0] == std::pair<int, int>{0, 1});
    }

    CHECK_THROWS_AS(boundary_matrix(cc, 3), std::out_of_range);
    CHECK_THROWS_AS(boundary_matrix(cc, -1), std::out_of_range);
}

TEST_CASE("boundary of boundary vanishes") {
    const ChainComplex cc = chain_complex(complete_hypergraph(4, 3));
    CHECK(testutil::product_is_zero(boundary_matrix(cc, 1), boundary_matrix(cc, 2)));
    CHECK(testutil::product_is_zero(boundary_matrix(cc, 0), boundary_matrix(cc, 1)));
}

TEST_CASE("matrix_rank on fixed matrices") {
    const ChainComplex cc = chain_complex(complete_hypergraph(4, 3));

    const RankResult exact = matrix_rank(boundary_matrix(cc, 2), RankMode::Exact);
    CHECK(exact.rank == 3);
    CHECK(exact.method == RankMethod::Exact);
    CHECK(testutil::rational_rank(boundary_matrix(cc, 2)) == 3);

    const RankResult fast = matrix_rank(boundary_matrix(cc, 2), RankMode::Fast);
    CHECK(fast.rank == 3);
    CHECK(fast.method == RankMethod::Modular);
    CHECK(fast.prime == kRankPrime);

    SparseMatrix zero(3, 4);
    CHECK(matrix_rank(zero, RankMode::Exact).rank == 0);
    CHECK(matrix_rank(zero, RankMode::Fast).rank == 0);

    CHECK(matrix_rank(boundary_matrix(cc, 0), RankMode::Exact).rank == 1);
}

TEST_CASE("matrix_rank escalates to big integers when entries grow") {
    // diag(2^16, ..., 2^16): Bareiss entries reach 2^16(k+1) and cross the
    // 64-bit escalation bound at the fourth pivot
    SparseMatrix m(6, 6);
    for (int i = 0; i < 6; ++i) m.add_entry(i, i, 65536);
    CHECK(matrix_rank(m, RankMode::Exact).rank == 6);
    CHECK(matrix_rank(m, RankMode::Fast).rank == 6);
    CHECK(testutil::rational_rank(m) == 6);
}

TEST_CASE("matrix_rank refuses oversized exact eliminations") {
    SparseMatrix big(3000, 3000);
    CHECK_THROWS_AS(matrix_rank(big, RankMode::Exact), std::length_error);
    CHECK(matrix_rank(big, RankMode::Fast).rank == 0);
}

TEST_CASE("matrix_rank agrees with the rational oracle on random matrices") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> dim(1, 12);
    std::uniform_int_distribution<int> value(-2, 2);
    std::uniform_real_distribution<double> density(0.1, 0.6);
    for (int trial = 0; trial < 60; ++trial) {
        SparseMatrix m(dim(rng), dim(rng));
        const double p = density(rng);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int c = 0; c < m.cols; ++c)
            for (int r = 0; r < m.rows; ++r)
                if (coin(rng) < p) {
                    const int v = value(rng);
                    if (v) m.add_entry(r, c, v);
                }
        const int oracle = testutil::rational_rank(m);
        CHECK(matrix_rank(m, RankMode::Exact).rank == oracle);
        CHECK(matrix_rank(m, RankMode::Fast).rank <= oracle);
    }
}

TEST_CASE("matrix_rank handles rank-deficient matrices") {
    // products of thin factors force rank <= k and exercise column skipping
    std::mt19937 rng(211);
    std::uniform_int_distribution<int> dim(2, 14);
    std::uniform_int_distribution<int> inner(1, 3);
    std::uniform_int_distribution<int> value(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = dim(rng), cols = dim(rng), k = inner(rng);
        std::vector<std::vector<int>> b(rows, std::vector<int>(k));
        std::vector<std::vector<int>> c(k, std::vector<int>(cols));
        for (auto& row : b)
            for (int& v : row) v = value(rng);
        for (auto& row : c)
            for (int& v : row) v = value(rng);
        SparseMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                int acc = 0;
                for (int t = 0; t < k; ++t) acc += b[i][t] * c[t][j];
                if (acc) m.add_entry(i, j, acc);
            }
        const int exact = matrix_rank(m, RankMode::Exact).rank;
        CHECK(exact <= k);
        CHECK(exact == testutil::rational_rank(m));
        CHECK(matrix_rank(m, RankMode::Fast).rank <= exact);
    }
}

TEST_CASE("betti on the named instances") {
    CHECK(betti(build_omega(1, 3, 2)).values == std::vector<int>{0, 0, 0, 0});
    CHECK(betti(build_omega(1, 3, 2), BettiMode::Fast).values == std::vector<int>{0, 0, 0, 0});
    CHECK(betti(build_omega(1, 3, 2), BettiMode::Exact).values == std::vector<int>{0, 0, 0, 0});

    const Hypergraph k43 = complete_hypergraph(4, 3);
    const ChainComplex cc = chain_complex(k43);
    CHECK(matrix_rank(boundary_matrix(cc, 0), RankMode::Exact).rank == 1);
    CHECK(matrix_rank(boundary_matrix(cc, 1), RankMode::Exact).rank == 3);
    CHECK(matrix_rank(boundary_matrix(cc, 2), RankMode::Exact).rank == 3);
    CHECK(betti(k43).values == std::vector<int>{0, 0, 0, 1});
    CHECK(betti(k43, BettiMode::Fast).values == std::vector<int>{0, 0, 0, 1});

    const Hypergraph cycle = make_hypergraph(6, 3, testutil::triangle_cycle_edges());
    CHECK(betti(cycle).values == std::vector<int>{0, 0, 1, 0});
    const Hypergraph peeled = make_hypergraph(6, 3, {{1, 2, 6}, {2, 3, 4}});
    CHECK(betti(peeled).values == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("betti of the edgeless hypergraph") {
    CHECK(betti(make_hypergraph(4, 3, {})).values == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("euler characteristic") {
    for (auto [r, d] : {std::pair{3, 2}, {2, 3}, {1, 3}, {4, 2}})
        for (const auto& part : build_partition(r, d).parts)
            CHECK(euler_characteristic(part) == 0);
    CHECK(euler_characteristic(complete_hypergraph(4, 3)) == -1);
    CHECK(euler_characteristic(make_hypergraph(4, 3, {})) == 1);
}

TEST_CASE("alternating betti sum equals euler characteristic") {
    std::mt19937 rng(17);
    std::vector<Hypergraph> instances = {complete_hypergraph(4, 3),
                                         make_hypergraph(6, 3, testutil::triangle_cycle_edges()),
                                         build_omega(1, 3, 2), make_hypergraph(5, 2, {})};
    for (int trial = 0; trial < 20; ++trial)
        instances.push_back(testutil::random_sub_hypergraph(rng, 7, 3));
    for (const auto& h : instances) {
        const BettiVector bv = betti(h);
        long long alt = 0;
        for (std::size_t i = 0; i < bv.values.size(); ++i)
            alt += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(bv.values[i]);
        CHECK(alt == euler_characteristic(h));
    }
}

TEST_CASE("homogeneous parts: low betti vanish and the top two agree") {
    for (auto [r, d] : {std::pair{3, 2}, {4, 2}, {2, 4}})
        for (const auto& part : build_partition(r, d).parts) {
            const BettiVector bv = betti(part);
            for (int i = 0; i + 2 <= r; ++i) CHECK(bv.values[i] == 0);
            CHECK(bv.values[r - 1] == bv.values[r]);
        }
}

TEST_CASE("fast mode agrees with exact mode") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Hypergraph h = testutil::random_sub_hypergraph(rng, 7, 3);
        CHECK(betti(h, BettiMode::Fast) == betti(h, BettiMode::Exact));
    }
}
