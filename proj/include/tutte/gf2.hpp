#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "tutte/errors.hpp"

namespace tutte {

/// Dense 0/1 matrix over GF(2), rows packed into 64-bit words.
/// Values are immutable in spirit: algorithms build new matrices rather than
/// mutating shared state, so concurrent reads are safe.
class Gf2Matrix {
public:
    Gf2Matrix() = default;

    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(words_for(cols)), bits_(rows * wpr_, 0) {}

    static Gf2Matrix identity(std::size_t n) {
        Gf2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t e) const {
        check_entry(i, e);
        return (word(i, e / 64) >> (e % 64)) & 1u;
    }

    void set(std::size_t i, std::size_t e, bool v) {
        check_entry(i, e);
        std::uint64_t& w = bits_[i * wpr_ + e / 64];
        const std::uint64_t bit = std::uint64_t(1) << (e % 64);
        w = v ? (w | bit) : (w & ~bit);
    }

    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {bits_.data() + i * wpr_, wpr_};
    }

    std::size_t words_per_row() const { return wpr_; }

    void xor_row_into(std::size_t src, std::size_t dst) {
        for (std::size_t w = 0; w < wpr_; ++w) bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t w = 0; w < wpr_; ++w)
            std::swap(bits_[i * wpr_ + w], bits_[j * wpr_ + w]);
    }

    bool column_is_zero(std::size_t e) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (get(i, e)) return false;
        return true;
    }

    /// New matrix with column `e` duplicated as a new last column.
    Gf2Matrix with_copied_column(std::size_t e) const {
        Gf2Matrix m(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, get(i, j));
            m.set(i, cols_, get(i, e));
        }
        return m;
    }

    Gf2Matrix without_column(std::size_t e) const {
        Gf2Matrix m(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j == e) continue;
                m.set(i, j < e ? j : j - 1, get(i, j));
            }
        return m;
    }

    Gf2Matrix without_row(std::size_t r) const {
        Gf2Matrix m(rows_ - 1, cols_);
        for (std::size_t i = 0, o = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols_; ++j) m.set(o, j, get(i, j));
            ++o;
        }
        return m;
    }

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

private:
    static std::size_t words_for(std::size_t cols) { return cols == 0 ? 1 : (cols + 63) / 64; }

    std::uint64_t word(std::size_t i, std::size_t w) const { return bits_[i * wpr_ + w]; }

    void check_entry(std::size_t i, std::size_t e) const {
        if (i >= rows_ || e >= cols_) throw InputError("matrix entry out of range");
    }

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 1;
    std::vector<std::uint64_t> bits_;
};

namespace detail {

// Rank of the rows in `work` (each row already masked down to the columns of
// interest), by elimination against an incrementally built basis.
inline std::size_t rank_of_masked_rows(std::vector<std::uint64_t>& work, std::size_t wpr) {
    const std::size_t n = work.size() / wpr;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t* row = work.data() + i * wpr;
        for (std::size_t b = 0; b < rank; ++b) {
            const std::uint64_t* basis = work.data() + b * wpr;
            std::size_t lead_word = 0;
            while (basis[lead_word] == 0) ++lead_word;
            const std::uint64_t lead_bit = basis[lead_word] & (~basis[lead_word] + 1);
            if (row[lead_word] & lead_bit)
                for (std::size_t w = 0; w < wpr; ++w) row[w] ^= basis[w];
        }
        bool nonzero = false;
        for (std::size_t w = 0; w < wpr; ++w) nonzero |= row[w] != 0;
        if (nonzero) {
            if (i != rank)
                for (std::size_t w = 0; w < wpr; ++w)
                    std::swap(work[rank * wpr + w], work[i * wpr + w]);
            ++rank;
        }
    }
    work.resize(rank * wpr);
    return rank;
}

}  // namespace detail

/// GF(2) rank of the columns selected by a bit mask over the first 64 columns.
/// Fast path used by the subset-enumeration evaluators.
inline std::size_t gf2_rank_masked(const Gf2Matrix& m, std::uint64_t colmask) {
    if (m.cols() > 64) throw SizeError("gf2_rank_masked supports at most 64 columns");
    // Basis of masked rows; each insert reduces by current basis first.
    std::uint64_t basis[64];
    std::size_t rank = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t v = m.row_words(i)[0] & colmask;
        for (std::size_t b = 0; b < rank; ++b) {
            const std::uint64_t lead = basis[b] & (~basis[b] + 1);
            if (v & lead) v ^= basis[b];
        }
        if (v) basis[rank++] = v;
    }
    return rank;
}

/// GF(2) rank of a set of columns.  Repeated indices are harmless (a set is
/// expected); out-of-range indices are input errors.
inline std::size_t gf2_rank(const Gf2Matrix& m, std::span<const std::size_t> subset) {
    std::uint64_t mask_small = 0;
    if (m.cols() <= 64) {
        for (std::size_t e : subset) {
            if (e >= m.cols()) throw InputError("column index out of range in rank query");
            mask_small |= std::uint64_t(1) << e;
        }
        return gf2_rank_masked(m, mask_small);
    }
    const std::size_t wpr = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> mask(wpr, 0);
    for (std::size_t e : subset) {
        if (e >= m.cols()) throw InputError("column index out of range in rank query");
        mask[e / 64] |= std::uint64_t(1) << (e % 64);
    }
    std::vector<std::uint64_t> work(m.rows() * wpr);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto rw = m.row_words(i);
        for (std::size_t w = 0; w < wpr; ++w) work[i * wpr + w] = rw[w] & mask[w];
    }
    return detail::rank_of_masked_rows(work, wpr);
}

inline std::size_t gf2_rank(const Gf2Matrix& m) {
    if (m.cols() <= 64) return gf2_rank_masked(m, m.cols() == 64 ? ~std::uint64_t(0)
                                                                 : (std::uint64_t(1) << m.cols()) - 1);
    const std::size_t wpr = m.words_per_row();
    std::vector<std::uint64_t> work(m.rows() * wpr);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto rw = m.row_words(i);
        for (std::size_t w = 0; w < wpr; ++w) work[i * wpr + w] = rw[w];
    }
    return detail::rank_of_masked_rows(work, wpr);
}

/// Reduced row-echelon form plus the strictly increasing pivot column list.
inline std::pair<Gf2Matrix, std::vector<std::size_t>> gf2_row_reduce(const Gf2Matrix& m) {
    Gf2Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < r.cols() && next_row < r.rows(); ++c) {
        std::size_t p = next_row;
        while (p < r.rows() && !r.get(p, c)) ++p;
        if (p == r.rows()) continue;
        r.swap_rows(next_row, p);
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (i != next_row && r.get(i, c)) r.xor_row_into(next_row, i);
        pivots.push_back(c);
        ++next_row;
    }
    return {std::move(r), std::move(pivots)};
}

/// Representation of the dual matroid on the same column set.
///
/// Brings the input to standard form [I | A] up to a column permutation and
/// emits [A^T | I] with the inverse permutation applied, so every column
/// keeps its position (ground-set identity survives dualization).
inline Gf2Matrix gf2_dual_representation(const Gf2Matrix& m) {
    auto [rref, pivots] = gf2_row_reduce(m);
    const std::size_t c = m.cols();
    const std::size_t r = pivots.size();
    std::vector<std::size_t> nonpivots;
    {
        std::vector<bool> is_pivot(c, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        for (std::size_t j = 0; j < c; ++j)
            if (!is_pivot[j]) nonpivots.push_back(j);
    }
    Gf2Matrix d(c - r, c);
    for (std::size_t j = 0; j < nonpivots.size(); ++j) {
        d.set(j, nonpivots[j], true);
        for (std::size_t i = 0; i < r; ++i)
            if (rref.get(i, nonpivots[j])) d.set(j, pivots[i], true);
    }
    return d;
}

namespace detail {

inline bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size() || line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace detail

/// Matrix text format: first line `R C`, then R lines of C space-separated
/// 0/1 tokens.  Blank lines and `#` comment lines are ignored.
inline Gf2Matrix read_gf2_matrix(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw InputError("matrix: missing header line");
    std::istringstream head(line);
    long long rows = -1, cols = -1;
    if (!(head >> rows >> cols) || rows < 0 || cols < 0)
        throw InputError("matrix: bad header line: " + line);
    Gf2Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long i = 0; i < rows; ++i) {
        if (!detail::next_data_line(in, line)) throw InputError("matrix: missing row");
        std::istringstream row(line);
        for (long long j = 0; j < cols; ++j) {
            int v = -1;
            if (!(row >> v) || (v != 0 && v != 1))
                throw InputError("matrix: entries must be 0 or 1");
            m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), v == 1);
        }
        std::string extra;
        if (row >> extra) throw InputError("matrix: trailing tokens in row");
    }
    return m;
}

inline void write_gf2_matrix(std::ostream& out, const Gf2Matrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << (m.get(i, j) ? '1' : '0');
        }
        out << '\n';
    }
}

}  // namespace tutte
