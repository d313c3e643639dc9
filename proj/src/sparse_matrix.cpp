#include "acypart/sparse_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <type_traits>

namespace acypart {

void SparseMatrix::add_entry(int row, int col, int value) {
    if (row < 0 || row >= rows || col < 0 || col >= cols)
        throw std::out_of_range("sparse entry out of bounds");
    if (value == 0) return;
    auto& column = columns[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const std::pair<int, int>& e, int r) { return e.first < r; });
    if (it != column.end() && it->first == row)
        throw std::logic_error("duplicate sparse entry");
    column.insert(it, {row, value});
}

std::size_t SparseMatrix::nnz() const {
    std::size_t total = 0;
    for (const auto& c : columns) total += c.size();
    return total;
}

namespace {

constexpr std::uint64_t kP = kRankPrime;
constexpr long long kDenseEntryLimit = 8'000'000;     // exact path allocation cap
constexpr long long kEscalationBound = 1LL << 62;     // switch to big integers past this

std::uint64_t mod_p(long long v) {
    long long m = v % static_cast<long long>(kP);
    if (m < 0) m += static_cast<long long>(kP);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t mul_p(std::uint64_t a, std::uint64_t b) { return a * b % kP; }

std::uint64_t pow_p(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    while (exp) {
        if (exp & 1) acc = mul_p(acc, base);
        base = mul_p(base, base);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t inv_p(std::uint64_t x) { return pow_p(x, kP - 2); }

// Sparse row elimination mod kP. Pivot choice: column with fewest live
// entries, then the sparsest row holding it (Markowitz-style, on fill).
int modular_rank(const SparseMatrix& m) {
    std::vector<std::map<int, std::uint64_t>> row_data(m.rows);
    std::vector<int> col_count(m.cols, 0);
    for (int c = 0; c < m.cols; ++c) {
        for (const auto& [r, v] : m.columns[c]) {
            std::uint64_t mv = mod_p(v);
            if (mv) {
                row_data[r][c] = mv;
                ++col_count[c];
            }
        }
    }
    std::vector<char> active(m.rows, 1);
    int rank = 0;
    while (true) {
        int pc = -1;
        for (int c = 0; c < m.cols; ++c)
            if (col_count[c] > 0 && (pc < 0 || col_count[c] < col_count[pc])) pc = c;
        if (pc < 0) break;

        int pr = -1;
        std::size_t best = 0;
        for (int r = 0; r < m.rows; ++r) {
            if (!active[r]) continue;
            auto it = row_data[r].find(pc);
            if (it == row_data[r].end()) continue;
            if (pr < 0 || row_data[r].size() < best) {
                pr = r;
                best = row_data[r].size();
            }
        }

        const std::uint64_t inv = inv_p(row_data[pr][pc]);
        for (int r = 0; r < m.rows; ++r) {
            if (!active[r] || r == pr) continue;
            auto it = row_data[r].find(pc);
            if (it == row_data[r].end()) continue;
            const std::uint64_t factor = mul_p(it->second, inv);
            for (const auto& [c, v] : row_data[pr]) {
                const std::uint64_t sub = mul_p(factor, v);
                auto jt = row_data[r].find(c);
                if (jt == row_data[r].end()) {
                    row_data[r][c] = kP - sub;
                    ++col_count[c];
                } else {
                    const std::uint64_t nv = (jt->second + kP - sub) % kP;
                    if (nv) {
                        jt->second = nv;
                    } else {
                        row_data[r].erase(jt);
                        --col_count[c];
                    }
                }
            }
        }
        for (const auto& [c, v] : row_data[pr]) --col_count[c];
        row_data[pr].clear();
        active[pr] = 0;
        ++rank;
    }
    return rank;
}

struct EscalateToBig {};

template <typename Int>
bool abs_less(const Int& a, const Int& b) {
    using boost::multiprecision::abs;
    using std::abs;
    return abs(a) < abs(b);
}

// One-step fraction-free (Bareiss) elimination; entries stay integral minors
// of the input, so the division by the previous pivot is exact.
template <typename Int>
int bareiss_rank(std::vector<std::vector<Int>> a, int rows, int cols) {
    int rank = 0;
    int row = 0;
    Int prev = 1;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (a[i][col] != 0 && (pr < 0 || abs_less(a[i][col], a[pr][col]))) pr = i;
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                if constexpr (std::is_same_v<Int, long long>) {
                    const __int128 cross = static_cast<__int128>(a[row][col]) * a[i][j] -
                                           static_cast<__int128>(a[i][col]) * a[row][j];
                    if (cross % prev != 0)
                        throw std::logic_error("fraction-free elimination divided inexactly");
                    const __int128 q = cross / prev;
                    if (q > kEscalationBound || q < -kEscalationBound) throw EscalateToBig{};
                    a[i][j] = static_cast<long long>(q);
                } else {
                    const Int cross = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                    if (cross % prev != 0)
                        throw std::logic_error("fraction-free elimination divided inexactly");
                    a[i][j] = cross / prev;
                }
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++rank;
        ++row;
    }
    return rank;
}

template <typename Int>
std::vector<std::vector<Int>> to_dense(const SparseMatrix& m) {
    std::vector<std::vector<Int>> dense(m.rows, std::vector<Int>(m.cols, Int(0)));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c]) dense[r][c] = Int(v);
    return dense;
}

int exact_rank(const SparseMatrix& m) {
    if (static_cast<long long>(m.rows) * m.cols > kDenseEntryLimit)
        throw std::length_error("matrix exceeds the exact-rank size limit (" +
                                std::to_string(kDenseEntryLimit) + " entries)");
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        return bareiss_rank(to_dense<long long>(m), m.rows, m.cols);
    } catch (const EscalateToBig&) {
        using Big = boost::multiprecision::cpp_int;
        return bareiss_rank(to_dense<Big>(m), m.rows, m.cols);
    }
}

}  // namespace

RankResult matrix_rank(const SparseMatrix& m, RankMode mode) {
    if (m.rows < 0 || m.cols < 0 || static_cast<int>(m.columns.size()) != m.cols)
        throw std::invalid_argument("malformed sparse matrix");
    if (mode == RankMode::Fast) {
        if (static_cast<long long>(m.rows) + m.cols > 2'000'000)
            throw std::length_error("matrix exceeds the modular-rank size limit");
        return {modular_rank(m), RankMethod::Modular, kP};
    }
    return {exact_rank(m), RankMethod::Exact, 0};
}

}  // namespace acypart
