#pragma once

// Exact rank, kernel and span-membership over Q.
//
// Small problems are eliminated directly with rationals. Large ones go
// through modp::eliminate for several primes, the canonical kernel basis is
// recovered by CRT and rational reconstruction, and the result is accepted
// only after A*v == 0 is checked exactly for every vector. Since the rank
// over Q is at least the rank mod p, k verified independent kernel vectors
// with k == cols - rank_p certify both the kernel and the rank.

#include "gkf/modular.hpp"
#include "gkf/rational.hpp"
#include "gkf/sparse.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gkf {

/// Canonical basis of a subspace: reduced row echelon rows, leading 1s.
struct Echelon {
    std::vector<SparseVector> rows;
    std::vector<Index> pivots; // pivots[i] is the leading column of rows[i]
};

namespace detail {

inline std::size_t entry_cost(const Rational& r)
{
    if (r.is_small()) {
        const mpz_class n = r.numerator();
        return mpz_sizeinbase(n.get_mpz_t(), 2) + mpz_sizeinbase(r.denominator().get_mpz_t(), 2);
    }
    return mpz_sizeinbase(r.numerator().get_mpz_t(), 2) + mpz_sizeinbase(r.denominator().get_mpz_t(), 2);
}

} // namespace detail

/// Gauss-Jordan reduction of a list of row vectors of equal dimension.
/// Among rows able to supply a pivot in the current column, the one with the
/// fewest entries wins, ties broken by the smaller pivot magnitude.
inline Echelon rref(std::vector<SparseVector> rows)
{
    Echelon out;
    if (rows.empty()) return out;
    const std::size_t dim = rows.front().dim();
    std::vector<char> used(rows.size(), 0);
    for (Index c = 0; c < dim; ++c) {
        std::size_t best = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].is_zero() || rows[i].entries().front().first != c) continue;
            if (best == rows.size() || rows[i].nnz() < rows[best].nnz() ||
                (rows[i].nnz() == rows[best].nnz() &&
                 detail::entry_cost(rows[i].entries().front().second) <
                     detail::entry_cost(rows[best].entries().front().second)))
                best = i;
        }
        if (best == rows.size()) continue;
        used[best] = 1;
        SparseVector pivot = rows[best];
        pivot.scale(Rational(1) / pivot.entries().front().second);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == best || rows[i].is_zero()) continue;
            const Rational f = rows[i].at(c);
            if (!f.is_zero()) rows[i].axpy(-f, pivot);
        }
        // earlier pivot rows must be cleared in this column as well
        for (auto& r : out.rows) {
            const Rational f = r.at(c);
            if (!f.is_zero()) r.axpy(-f, pivot);
        }
        rows[best] = SparseVector(dim);
        out.rows.push_back(std::move(pivot));
        out.pivots.push_back(c);
    }
    return out;
}

namespace detail {

inline std::vector<SparseVector> rows_of(const SparseRationalMatrix& m)
{
    const SparseRationalMatrix t = m.transpose();
    return t.columns();
}

/// Kernel from an exact reduced echelon form of the row space.
inline std::vector<SparseVector> kernel_from_rref(const Echelon& e, std::size_t cols)
{
    std::vector<char> is_pivot(cols, 0);
    for (Index c : e.pivots) is_pivot[c] = 1;
    std::vector<SparseVector> basis;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVector::Entry> pairs{{f, Rational(1)}};
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            const Rational v = e.rows[k].at(f);
            if (!v.is_zero()) pairs.emplace_back(e.pivots[k], -v);
        }
        basis.push_back(SparseVector::from_pairs(cols, std::move(pairs)));
    }
    return basis;
}

/// Rational reconstruction of a residue u mod m with |num|, den <= sqrt(m/2).
inline std::optional<mpq_class> reconstruct(const mpz_class& u, const mpz_class& m)
{
    if (u == 0) return mpq_class(0);
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return q;
}

inline bool annihilates(const SparseRationalMatrix& m, const SparseVector& v) { return m.apply(v).is_zero(); }

struct ModKernel {
    std::vector<Index> pivots;                // canonical leading columns
    std::vector<std::vector<modp::Word>> rows; // dense canonical rows mod p
    std::size_t rank = 0;
};

inline std::optional<ModKernel> kernel_mod(const SparseRationalMatrix& m, modp::Word p)
{
    auto mm = modp::reduce(m, p);
    if (!mm) return std::nullopt;
    const modp::Echelon e = modp::eliminate(*mm);
    ModKernel out;
    out.rank = e.rank;
    out.rows = modp::kernel(e, m.cols(), p);
    out.pivots = modp::rref_dense(out.rows, p);
    return out;
}

inline std::vector<SparseVector> kernel_multimodular(const SparseRationalMatrix& m)
{
    constexpr std::size_t kMaxPrimes = 64;
    const std::size_t cols = m.cols();
    std::optional<ModKernel> ref;
    std::vector<std::vector<mpz_class>> residues; // per kernel row, per column
    mpz_class modulus = 1;
    std::size_t used = 0;
    for (std::size_t pi = 0; pi < kMaxPrimes; ++pi) {
        const modp::Word p = modp::prime(pi);
        auto km = kernel_mod(m, p);
        if (!km) continue;
        if (km->rows.empty()) return {}; // full column rank mod p implies over Q
        if (ref) {
            if (km->rows.size() > ref->rows.size()) continue; // rank dropped mod p: bad prime
            if (km->rows.size() < ref->rows.size() || km->pivots != ref->pivots) {
                ref.reset(); // earlier primes were the unlucky ones
            }
        }
        const mpz_class pz = static_cast<unsigned long>(p);
        if (!ref) {
            ref = *km;
            residues.assign(km->rows.size(), std::vector<mpz_class>(cols));
            for (std::size_t i = 0; i < km->rows.size(); ++i)
                for (std::size_t j = 0; j < cols; ++j) residues[i][j] = static_cast<unsigned long>(km->rows[i][j]);
            modulus = pz;
            used = 1;
        } else {
            // CRT: x = r + M * ((a - r) * M^{-1} mod p)
            const modp::Word minv = modp::invmod(detail::mpz_mod(modulus, p), p);
            for (std::size_t i = 0; i < km->rows.size(); ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    const modp::Word r = detail::mpz_mod(residues[i][j], p);
                    const modp::Word a = km->rows[i][j];
                    const modp::Word diff = a >= r ? a - r : a + (p - r);
                    const modp::Word t = modp::mulmod(diff, minv, p);
                    if (t != 0) residues[i][j] += modulus * static_cast<unsigned long>(t);
                }
            modulus *= pz;
            ++used;
        }
        // try to lift
        std::vector<SparseVector> lifted;
        bool ok = true;
        for (std::size_t i = 0; i < residues.size() && ok; ++i) {
            std::vector<SparseVector::Entry> pairs;
            for (std::size_t j = 0; j < cols; ++j) {
                if (residues[i][j] == 0) continue;
                auto q = reconstruct(residues[i][j], modulus);
                if (!q) {
                    ok = false;
                    break;
                }
                pairs.emplace_back(static_cast<Index>(j), Rational(*q));
            }
            if (ok) lifted.push_back(SparseVector::from_pairs(cols, std::move(pairs)));
        }
        if (!ok) continue;
        bool verified = true;
        for (const auto& v : lifted)
            if (!annihilates(m, v)) {
                verified = false;
                break;
            }
        if (verified) return lifted;
        (void)used;
    }
    throw std::runtime_error("kernel reconstruction did not converge");
}

constexpr std::size_t kExactCutoff = 40000; // rows * cols handled by direct rational elimination

} // namespace detail

/// Exact kernel basis in reduced echelon form: vector i has a leading 1 at
/// its own leading column and zeros at the leading columns of the others.
inline std::vector<SparseVector> kernel_basis(const SparseRationalMatrix& m)
{
    if (m.cols() == 0) return {};
    if (m.rows() * m.cols() <= detail::kExactCutoff || m.nnz() == 0) {
        auto kernel = detail::kernel_from_rref(rref(detail::rows_of(m)), m.cols());
        return rref(std::move(kernel)).rows;
    }
    return detail::kernel_multimodular(m);
}

inline std::size_t rank(const SparseRationalMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0 || m.nnz() == 0) return 0;
    if (m.rows() * m.cols() <= detail::kExactCutoff) return rref(detail::rows_of(m)).rows.size();
    // eliminate along the short side to keep the reconstructed kernel small
    if (m.rows() < m.cols()) return m.rows() - kernel_basis(m.transpose()).size();
    return m.cols() - kernel_basis(m).size();
}

/// Coordinates of v in a linearly independent basis, or nullopt if v is outside the span.
inline std::optional<std::vector<Rational>> coords_in_span(const SparseVector& v, const std::vector<SparseVector>& basis)
{
    const std::size_t k = basis.size();
    if (k == 0) {
        if (v.is_zero()) return std::vector<Rational>{};
        return std::nullopt;
    }
    // Reduce augmented rows [b_i | e_i]; leftover combination gives coordinates.
    const std::size_t dim = v.dim();
    std::vector<SparseVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (basis[i].dim() != dim) throw std::invalid_argument("coords_in_span: dimension mismatch");
        std::vector<SparseVector::Entry> pairs(basis[i].entries());
        pairs.emplace_back(static_cast<Index>(dim + i), Rational(1));
        rows.push_back(SparseVector::from_pairs(dim + k, std::move(pairs)));
    }
    Echelon e = rref(std::move(rows));
    std::vector<Rational> coords(k);
    SparseVector residual = SparseVector::from_pairs(dim + k, v.entries());
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivots[r] >= dim) throw std::invalid_argument("coords_in_span: basis is linearly dependent");
        const Rational f = residual.at(e.pivots[r]);
        if (f.is_zero()) continue;
        residual.axpy(-f, e.rows[r]);
    }
    // residual = v - sum c_i b_i written as [0 | -c] when v is in the span
    for (const auto& [idx, val] : residual.entries()) {
        if (idx < dim) return std::nullopt;
        coords[idx - dim] = -val;
    }
    return coords;
}

} // namespace gkf
