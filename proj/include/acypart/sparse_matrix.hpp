// sparse_matrix.hpp - column-major sparse integer matrices and exact rank
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace acypart {

// Column-major adjacency lists of (row, value). Entries are small integers;
// boundary matrices carry only +-1.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;

    SparseMatrix() = default;
    SparseMatrix(int rows_, int cols_) : rows(rows_), cols(cols_), columns(cols_) {}

    void add_entry(int row, int col, int value);
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }
};

enum class RankMode { Fast, Exact };
enum class RankMethod { Modular, Exact };

struct RankResult {
    int rank = 0;
    RankMethod method = RankMethod::Exact;
    std::uint64_t prime = 0;  // set when method == Modular
};

inline constexpr std::uint64_t kRankPrime = (std::uint64_t{1} << 31) - 1;

// Fast: sparse elimination modulo kRankPrime with fill-reducing pivoting;
// the result is a lower bound on the rational rank. Exact: true rank over Q
// by fraction-free (Bareiss) elimination, escalating from 64-bit to
// arbitrary-precision integers if entries grow. Throws std::length_error
// when the matrix exceeds the configured size limits.
RankResult matrix_rank(const SparseMatrix& m, RankMode mode);

}  // namespace acypart
