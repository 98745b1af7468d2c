#pragma once

// Exact structural checks on slices: d o d = 0, weight preservation,
// sp-equivariance of d, representation property of the action, agreement of
// the two split thresholds on invariant cochains, and Jacobi samples.
//
// Each check returns an empty string on success and a description of the
// first failure otherwise. Large slices are probed on a deterministic sample
// of basis monomials (evenly strided, always including the first and last).

#include "gkf/cochain.hpp"
#include "gkf/poisson.hpp"
#include "gkf/sp_invariants.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace gkf::checks {

/// Indices 0, stride, 2*stride, ..., dim-1 with about `count` entries; all of them if dim <= count.
inline std::vector<Index> sample_indices(std::size_t dim, std::size_t count)
{
    std::vector<Index> out;
    if (dim == 0) return out;
    if (dim <= count) {
        for (Index i = 0; i < dim; ++i) out.push_back(i);
        return out;
    }
    const double stride = static_cast<double>(dim - 1) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
        const auto i = static_cast<Index>(static_cast<double>(k) * stride + 0.5);
        if (out.empty() || out.back() != i) out.push_back(i);
    }
    if (out.back() != dim - 1) out.push_back(static_cast<Index>(dim - 1));
    return out;
}

inline int gkf_weight(int n, const Wedge& w)
{
    const auto& t = GeneratorTable::get(n);
    int s = 0;
    for (GenId g : w) s += t.degree(g) - 2;
    return s;
}

inline std::string d_squared_zero(const ComplexSlice& s, const std::vector<Index>& sample, int min_gen)
{
    for (Index i : sample) {
        const Cochain dd = d_apply(d_wedge(s.n(), s.basis_element(i), min_gen), min_gen);
        if (!dd.is_zero()) return "d(d(basis " + std::to_string(i) + ")) != 0 on " + s.label();
    }
    return {};
}

/// d keeps the weight w and the Cartan weight of every monomial.
inline std::string weight_preserved(const ComplexSlice& s, const std::vector<Index>& sample, int min_gen)
{
    for (Index i : sample) {
        const Wedge& w = s.basis_element(i);
        const int gw = gkf_weight(s.n(), w);
        const CartanWeight cw = wedge_weight(s.n(), w);
        const Cochain dw = d_wedge(s.n(), w, min_gen);
        for (const auto& [t, c] : dw.terms()) {
            if (gkf_weight(s.n(), t) != gw) return "d changes the weight of basis " + std::to_string(i);
            if (wedge_weight(s.n(), t) != cw) return "d changes the Cartan weight of basis " + std::to_string(i);
        }
    }
    return {};
}

/// rho(e_D) d = d rho(e_D) for all quadratics D.
inline std::string d_equivariant(const ComplexSlice& s, const std::vector<Index>& sample, int min_gen)
{
    const auto gens = sp_generators(s.n());
    for (Index i : sample) {
        const Cochain x = single_term(s.n(), s.basis_element(i));
        const Cochain dx = d_apply(x, min_gen);
        for (const auto& d : gens.all) {
            const Cochain lhs = action_apply(d, dx);
            const Cochain rhs = d_apply(action_apply(d, x), min_gen);
            if (!(lhs == rhs))
                return "d does not commute with e_" + d.str() + " on basis " + std::to_string(i) + " of " + s.label();
        }
    }
    return {};
}

/// [rho(D1), rho(D2)] = rho({D1, D2}) on sampled monomials.
inline std::string representation_property(const ComplexSlice& s, const std::vector<Index>& sample)
{
    const auto gens = sp_generators(s.n());
    const auto sym = SymplecticStructure::standard(s.n());
    for (Index i : sample) {
        const Cochain x = single_term(s.n(), s.basis_element(i));
        std::vector<Cochain> once;
        for (const auto& d : gens.all) once.push_back(action_apply(d, x));
        for (std::size_t a = 0; a < gens.all.size(); ++a)
            for (std::size_t b = a + 1; b < gens.all.size(); ++b) {
                const Cochain lhs = action_apply(gens.all[a], once[b]) - action_apply(gens.all[b], once[a]);
                const PolyElement br = bracket(sym, gens.all[a], gens.all[b]);
                const Cochain rhs = action_apply(br, x);
                if (!(lhs == rhs))
                    return "representation property fails for e_" + gens.all[a].str() + ", e_" + gens.all[b].str() +
                           " on basis " + std::to_string(i) + " of " + s.label();
            }
    }
    return {};
}

/// Full matrix form of the representation property (for small slices).
inline std::string representation_property_matrices(const ComplexSlice& s)
{
    const auto gens = sp_generators(s.n());
    const auto sym = SymplecticStructure::standard(s.n());
    std::vector<SparseRationalMatrix> rho;
    for (const auto& d : gens.all) rho.push_back(action_matrix(d, s));
    for (std::size_t a = 0; a < rho.size(); ++a)
        for (std::size_t b = a + 1; b < rho.size(); ++b) {
            const SparseRationalMatrix comm = rho[a] * rho[b] - rho[b] * rho[a];
            SparseRationalMatrix target = SparseRationalMatrix::from_columns(s.dim(), std::vector<SparseVector>(s.dim(), SparseVector(s.dim())));
            for (const auto& [e, c] : bracket(sym, gens.all[a], gens.all[b])) {
                std::size_t k = 0;
                while (!(gens.all[k] == e)) ++k;
                std::vector<SparseVector> cols;
                for (std::size_t j = 0; j < s.dim(); ++j) {
                    SparseVector v = target.column(j);
                    v.axpy(c, rho[k].column(j));
                    cols.push_back(std::move(v));
                }
                target = SparseRationalMatrix::from_columns(s.dim(), std::move(cols));
            }
            if (!(comm == target))
                return "matrix representation property fails for e_" + gens.all[a].str() + ", e_" + gens.all[b].str() +
                       " on " + s.label();
        }
    return {};
}

/// On invariant cochains the coboundaries with split thresholds 2 and 3 agree.
inline std::string min_gen_agreement(const ComplexSlice& s, const std::vector<SparseVector>& invariants)
{
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        const Cochain c = s.cochain(invariants[i]);
        if (!(d_apply(c, 2) == d_apply(c, 3)))
            return "min_gen 2 and 3 differ on invariant " + std::to_string(i) + " of " + s.label();
    }
    return {};
}

/// Jacobi identity on random triples of monomials of degrees in [lo, hi].
inline std::string jacobi_sample(int n, int lo, int hi, int trials, std::uint32_t seed)
{
    const auto sym = SymplecticStructure::standard(n);
    std::mt19937 rng(seed);
    std::vector<ExponentVector> pool;
    for (int d = lo; d <= hi; ++d)
        for (const auto& e : monomials_of_degree(2 * n, d)) pool.push_back(e);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < trials; ++t) {
        const PolyElement a{{pool[pick(rng)], Rational(1)}};
        const PolyElement b{{pool[pick(rng)], Rational(1)}};
        const PolyElement c{{pool[pick(rng)], Rational(1)}};
        PolyElement sum;
        for (const auto& [e, v] : bracket(sym, a, bracket(sym, b, c))) add_term(sum, e, v);
        for (const auto& [e, v] : bracket(sym, b, bracket(sym, c, a))) add_term(sum, e, v);
        for (const auto& [e, v] : bracket(sym, c, bracket(sym, a, b))) add_term(sum, e, v);
        if (!sum.empty())
            return "Jacobi fails for " + a.begin()->first.str() + ", " + b.begin()->first.str() + ", " +
                   c.begin()->first.str();
    }
    return {};
}

} // namespace gkf::checks
