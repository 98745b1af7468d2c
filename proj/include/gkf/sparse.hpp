#pragma once

// Sparse vectors and matrices over the rationals.
//
// Text format (both types): a header line "rows cols nnz" followed by one
// "row col num/den" triple per line in row-major order. Vectors are written
// as a single column (cols = 1).

#include "gkf/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gkf {

using Index = std::uint32_t;

/// Sparse vector with sorted indices and no stored zeros.
class SparseVector {
public:
    using Entry = std::pair<Index, Rational>;

    SparseVector() = default;
    explicit SparseVector(std::size_t dim) : dim_(dim) {}

    /// Builds from unsorted (index, value) pairs; duplicates are summed, zeros dropped.
    static SparseVector from_pairs(std::size_t dim, std::vector<Entry> pairs)
    {
        std::sort(pairs.begin(), pairs.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        SparseVector v(dim);
        for (auto& [i, x] : pairs) {
            if (i >= dim) throw std::out_of_range("sparse vector index out of range");
            if (!v.entries_.empty() && v.entries_.back().first == i) {
                v.entries_.back().second += x;
                if (v.entries_.back().second.is_zero()) v.entries_.pop_back();
            } else if (!x.is_zero()) {
                v.entries_.emplace_back(i, std::move(x));
            }
        }
        return v;
    }

    static SparseVector unit(std::size_t dim, Index i)
    {
        SparseVector v(dim);
        v.entries_.emplace_back(i, Rational(1));
        return v;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
    [[nodiscard]] bool is_zero() const { return entries_.empty(); }
    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }

    [[nodiscard]] Rational at(Index i) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, Index k) { return e.first < k; });
        return (it != entries_.end() && it->first == i) ? it->second : Rational(0);
    }

    /// this += c * other
    void axpy(const Rational& c, const SparseVector& other)
    {
        assert(other.dim_ == dim_);
        if (c.is_zero() || other.entries_.empty()) return;
        std::vector<Entry> out;
        out.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                out.push_back(std::move(*a++));
            } else if (a == entries_.end() || b->first < a->first) {
                out.emplace_back(b->first, c * b->second);
                ++b;
            } else {
                Rational s = std::move(a->second);
                s.add_mul(c, b->second);
                if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
                ++a;
                ++b;
            }
        }
        entries_ = std::move(out);
    }

    void scale(const Rational& c)
    {
        if (c.is_zero()) {
            entries_.clear();
            return;
        }
        for (auto& e : entries_) e.second *= c;
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b)
    {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Entry> entries_;
};

/// Immutable-after-assembly sparse matrix, stored by columns.
class SparseRationalMatrix {
public:
    using Entry = std::pair<Index, Rational>;

    SparseRationalMatrix() = default;
    SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    /// Builds from columns; each column must have dimension `rows`.
    static SparseRationalMatrix from_columns(std::size_t rows, std::vector<SparseVector> cols)
    {
        SparseRationalMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].dim() != rows) throw std::invalid_argument("column dimension mismatch");
            m.columns_[j] = std::move(cols[j]);
        }
        return m;
    }

    /// Builds from (row, col, value) triples; duplicates are summed.
    static SparseRationalMatrix from_triples(std::size_t rows, std::size_t cols,
                                             const std::vector<std::tuple<Index, Index, Rational>>& triples)
    {
        std::vector<std::vector<SparseVector::Entry>> per_col(cols);
        for (const auto& [r, c, v] : triples) {
            if (r >= rows || c >= cols) throw std::out_of_range("matrix index out of range");
            per_col[c].emplace_back(r, v);
        }
        SparseRationalMatrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j) m.columns_[j] = SparseVector::from_pairs(rows, std::move(per_col[j]));
        return m;
    }

    static SparseRationalMatrix identity(std::size_t n)
    {
        SparseRationalMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) m.columns_[j] = SparseVector::unit(n, static_cast<Index>(j));
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const SparseVector& column(std::size_t j) const { return columns_[j]; }
    [[nodiscard]] const std::vector<SparseVector>& columns() const { return columns_; }

    [[nodiscard]] std::size_t nnz() const
    {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.nnz();
        return n;
    }
    [[nodiscard]] bool is_zero() const { return nnz() == 0; }

    [[nodiscard]] Rational at(Index r, Index c) const { return columns_.at(c).at(r); }

    [[nodiscard]] SparseVector apply(const SparseVector& x) const
    {
        if (x.dim() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<SparseVector::Entry> acc;
        for (const auto& [j, v] : x.entries())
            for (const auto& [i, a] : columns_[j].entries()) acc.emplace_back(i, v * a);
        return SparseVector::from_pairs(rows_, std::move(acc));
    }

    [[nodiscard]] SparseRationalMatrix transpose() const
    {
        std::vector<std::vector<SparseVector::Entry>> rows(rows_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& [i, v] : columns_[j].entries()) rows[i].emplace_back(static_cast<Index>(j), v);
        SparseRationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) t.columns_[i] = SparseVector::from_pairs(cols_, std::move(rows[i]));
        return t;
    }

    friend SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        SparseRationalMatrix c(a.rows_, b.cols_);
        for (std::size_t j = 0; j < b.cols_; ++j) c.columns_[j] = a.apply(b.columns_[j]);
        return c;
    }

    friend SparseRationalMatrix operator-(const SparseRationalMatrix& a, const SparseRationalMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
        SparseRationalMatrix c(a);
        for (std::size_t j = 0; j < a.cols_; ++j) c.columns_[j].axpy(Rational(-1), b.columns_[j]);
        return c;
    }

    friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> columns_;
};

// ---------------------------------------------------------------------------
// Text serialization

inline void write_matrix(std::ostream& os, const SparseRationalMatrix& m)
{
    std::vector<std::tuple<Index, Index, const Rational*>> triples;
    triples.reserve(m.nnz());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.column(j).entries()) triples.emplace_back(i, static_cast<Index>(j), &v);
    std::sort(triples.begin(), triples.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    os << m.rows() << ' ' << m.cols() << ' ' << triples.size() << '\n';
    for (const auto& [i, j, v] : triples) {
        const Rational& r = *v;
        os << i << ' ' << j << ' ' << r.numerator().get_str() << '/' << r.denominator().get_str() << '\n';
    }
}

inline SparseRationalMatrix read_matrix(std::istream& is)
{
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(is >> rows >> cols >> nnz)) throw std::runtime_error("matrix header: expected 'rows cols nnz'");
    std::vector<std::tuple<Index, Index, Rational>> triples;
    triples.reserve(nnz);
    std::pair<Index, Index> prev{0, 0};
    for (std::size_t k = 0; k < nnz; ++k) {
        Index i = 0, j = 0;
        std::string value;
        if (!(is >> i >> j >> value)) throw std::runtime_error("matrix body: truncated triple list");
        if (i >= rows || j >= cols) throw std::runtime_error("matrix body: index out of range");
        if (k > 0 && std::pair{i, j} <= prev) throw std::runtime_error("matrix body: triples not in row-major order");
        prev = {i, j};
        Rational r = Rational::parse(value);
        if (r.is_zero()) throw std::runtime_error("matrix body: stored zero");
        triples.emplace_back(i, j, std::move(r));
    }
    return SparseRationalMatrix::from_triples(rows, cols, triples);
}

inline void write_vector(std::ostream& os, const SparseVector& v)
{
    write_matrix(os, SparseRationalMatrix::from_columns(v.dim(), {v}));
}

inline SparseVector read_vector(std::istream& is)
{
    SparseRationalMatrix m = read_matrix(is);
    if (m.cols() != 1) throw std::runtime_error("vector body: expected a single column");
    return m.column(0);
}

inline std::string to_text(const SparseRationalMatrix& m)
{
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

} // namespace gkf
