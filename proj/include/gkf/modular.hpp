#pragma once

// Sparse Gaussian elimination over Z/p for word-size primes.
//
// Used as the fast inner engine for exact rank and kernel computations: the
// rational layer (linalg.hpp) reconstructs and then verifies every result
// over Q, so nothing computed here is trusted on its own.

#include "gkf/rational.hpp"
#include "gkf/sparse.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gkf::modp {

using Word = std::uint64_t;
using detail::invmod;
using detail::mulmod;

inline bool is_prime(Word n)
{
    if (n < 2) return false;
    for (Word q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    Word d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set is deterministic for all 64-bit n
    for (Word a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        Word x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// The i-th prime below 2^62, counting downwards; deterministic.
inline Word prime(std::size_t i)
{
    static std::vector<Word> cache;
    Word candidate = cache.empty() ? (Word{1} << 62) - 1 : cache.back() - 2;
    while (cache.size() <= i) {
        while (!is_prime(candidate)) candidate -= 2;
        cache.push_back(candidate);
        candidate -= 2;
    }
    return cache[i];
}

using ModEntry = std::pair<Index, Word>;
using ModVector = std::vector<ModEntry>; // sorted by index, no zeros

/// Column-major matrix over Z/p.
struct ModMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Word p = 0;
    std::vector<ModVector> columns;
};

/// Reduces a rational matrix modulo p. Returns nullopt if p divides a denominator.
inline std::optional<ModMatrix> reduce(const SparseRationalMatrix& m, Word p)
{
    ModMatrix out{m.rows(), m.cols(), p, std::vector<ModVector>(m.cols())};
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto& col = out.columns[j];
        col.reserve(m.column(j).nnz());
        for (const auto& [i, v] : m.column(j).entries()) {
            if (!v.is_integer() && detail::mpz_mod(v.denominator(), p) == 0) return std::nullopt;
            const Word r = v.mod(p);
            if (r != 0) col.emplace_back(i, r);
        }
    }
    return out;
}

/// Result of eliminating a matrix mod p.
struct Echelon {
    std::size_t rank = 0;
    std::vector<Index> free_columns; // ascending
    std::vector<Index> pivot_columns; // in elimination order
    std::vector<ModVector> pivot_rows; // row k has pivot at pivot_columns[k]
};

namespace detail_elim {

// dst := dst - f * src, over sorted sparse rows; reports columns gained and lost.
inline void sub_scaled(ModVector& dst, const ModVector& src, Word f, Word p, std::vector<Index>& gained,
                       std::vector<Index>& lost, ModVector& scratch)
{
    scratch.clear();
    scratch.reserve(dst.size() + src.size());
    const Word neg = f == 0 ? 0 : p - f;
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
        if (b == src.end() || (a != dst.end() && a->first < b->first)) {
            scratch.push_back(*a++);
        } else if (a == dst.end() || b->first < a->first) {
            scratch.emplace_back(b->first, mulmod(neg, b->second, p));
            gained.push_back(b->first);
            ++b;
        } else {
            Word s = a->second + mulmod(neg, b->second, p);
            if (s >= p) s -= p;
            if (s != 0)
                scratch.emplace_back(a->first, s);
            else
                lost.push_back(a->first);
            ++a;
            ++b;
        }
    }
    dst.swap(scratch);
}

inline const Word* find(const ModVector& row, Index c)
{
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const ModEntry& e, Index k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

} // namespace detail_elim

/// Sparse elimination with a minimum-column-count pivot order and a
/// shortest-row pivot choice inside the column.
inline Echelon eliminate(const ModMatrix& m)
{
    const Word p = m.p;
    std::vector<ModVector> rows(m.rows);
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.columns[j]) rows[i].emplace_back(static_cast<Index>(j), v);

    std::vector<std::vector<Index>> col_rows(m.cols);
    std::vector<std::size_t> col_count(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (const auto& [c, v] : rows[i]) {
            col_rows[c].push_back(static_cast<Index>(i));
            ++col_count[c];
        }

    std::vector<char> row_active(m.rows, 1);
    std::vector<char> col_done(m.cols, 0);

    using QItem = std::pair<std::size_t, Index>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
    for (std::size_t c = 0; c < m.cols; ++c) queue.emplace(col_count[c], static_cast<Index>(c));

    Echelon out;
    std::vector<Index> gained, lost, candidates;
    ModVector scratch;

    while (!queue.empty()) {
        const auto [count, c] = queue.top();
        queue.pop();
        if (col_done[c] || count != col_count[c]) continue;
        col_done[c] = 1;

        // live rows that still contain c
        candidates.clear();
        auto& list = col_rows[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (Index r : list)
            if (row_active[r] && detail_elim::find(rows[r], c)) candidates.push_back(r);
        list.clear();
        list.shrink_to_fit();

        if (candidates.empty()) {
            out.free_columns.push_back(c);
            continue;
        }

        Index piv = candidates.front();
        for (Index r : candidates)
            if (rows[r].size() < rows[piv].size()) piv = r;
        row_active[piv] = 0;
        const ModVector& prow = rows[piv];
        const Word pinv = invmod(*detail_elim::find(prow, c), p);

        for (Index r : candidates) {
            if (r == piv) continue;
            const Word f = mulmod(*detail_elim::find(rows[r], c), pinv, p);
            gained.clear();
            lost.clear();
            detail_elim::sub_scaled(rows[r], prow, f, p, gained, lost, scratch);
            for (Index g : gained) {
                if (col_done[g]) continue;
                col_rows[g].push_back(r);
                ++col_count[g];
                queue.emplace(col_count[g], g);
            }
            for (Index l : lost) {
                if (l == c || col_done[l]) continue;
                --col_count[l];
                queue.emplace(col_count[l], l);
            }
            if (rows[r].empty()) row_active[r] = 0;
        }
        // the pivot row leaves the active set; its other columns lose one count
        for (const auto& [cc, v] : prow) {
            if (cc == c || col_done[cc]) continue;
            --col_count[cc];
            queue.emplace(col_count[cc], cc);
        }
        // every other candidate row has lost column c
        out.pivot_columns.push_back(c);
        out.pivot_rows.push_back(std::move(rows[piv]));
        rows[piv] = {};
    }
    out.rank = out.pivot_columns.size();
    std::sort(out.free_columns.begin(), out.free_columns.end());
    return out;
}

inline std::size_t rank(const ModMatrix& m) { return eliminate(m).rank; }

/// Dense kernel basis (one vector per free column) from an echelon form.
/// Vector for free column f has a 1 at f and zeros at the other free columns.
inline std::vector<std::vector<Word>> kernel(const Echelon& e, std::size_t cols, Word p)
{
    std::vector<std::vector<Word>> basis;
    basis.reserve(e.free_columns.size());
    for (Index f : e.free_columns) {
        std::vector<Word> x(cols, 0);
        x[f] = 1;
        for (std::size_t k = e.pivot_rows.size(); k-- > 0;) {
            const Index pc = e.pivot_columns[k];
            Word acc = 0;
            Word pivot = 0;
            for (const auto& [c, v] : e.pivot_rows[k]) {
                if (c == pc) {
                    pivot = v;
                } else if (x[c] != 0) {
                    acc += mulmod(v, x[c], p);
                    if (acc >= p) acc -= p;
                }
            }
            x[pc] = acc == 0 ? 0 : mulmod(p - acc, invmod(pivot, p), p);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Reduced row echelon form of a small dense row set, in place. Returns pivot columns.
inline std::vector<Index> rref_dense(std::vector<std::vector<Word>>& rows, Word p)
{
    std::vector<Index> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Word inv = invmod(rows[r][c], p);
        for (auto& x : rows[r])
            if (x) x = mulmod(x, inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Word f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (rows[r][k] == 0) continue;
                Word s = rows[i][k] + (p - mulmod(f, rows[r][k], p));
                if (s >= p) s -= p;
                rows[i][k] = s;
            }
        }
        pivots.push_back(static_cast<Index>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace gkf::modp
