#pragma once

// sp(2n) action on cochain slices, Cartan-weight grading, highest-weight
// vectors and the trivial isotypic component.
//
// The quadratic e_D acts on each dual generator by the coadjoint action and
// on wedge monomials as an even derivation. With the weight label of z_C being
// its dual weight, e_D shifts labels by monomial_weight(D); the simple raising
// operators are e_{1010} (shift (1,-1)) and e_{0200} (shift (0,2)) for n = 2,
// and e_{20} (shift 2) for n = 1.

#include "gkf/characters.hpp"
#include "gkf/cochain.hpp"
#include "gkf/linalg.hpp"
#include "gkf/modular.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gkf {

/// Coadjoint images z_C -> sum c z_A of one quadratic, tabulated per generator id.
class ActionTable {
public:
    struct Image {
        GenId target;
        Rational coeff;
    };

    ActionTable(int n, const ExponentVector& d) : n_(n), d_(d), table_(GeneratorTable::get(n)) {}

    const std::vector<Image>& of(GenId g) const
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(g);
        if (it != cache_.end()) return it->second;
        std::vector<Image> img;
        for (const auto& [a, c] : coadjoint_on_dual(table_.symplectic(), d_, table_.exponents(g)))
            img.push_back({table_.id_or_throw(a), c});
        return cache_.emplace(g, std::move(img)).first->second;
    }

    [[nodiscard]] const ExponentVector& quadratic() const { return d_; }
    [[nodiscard]] int n() const { return n_; }

    static const ActionTable& get(int n, const ExponentVector& d)
    {
        static std::mutex m;
        static std::map<std::pair<int, ExponentVector>, std::unique_ptr<ActionTable>> tables;
        std::lock_guard lock(m);
        auto& t = tables[{n, d}];
        if (!t) t = std::make_unique<ActionTable>(n, d);
        return *t;
    }

private:
    int n_;
    ExponentVector d_;
    const GeneratorTable& table_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<GenId, std::vector<Image>> cache_;
};

/// rho(e_D)(z_1 ^ .. ^ z_m) = sum_i z_1 ^ .. ^ (e_D . z_i) ^ .. ^ z_m
inline void action_wedge_into(const ActionTable& t, const Wedge& w, const Rational& coeff, CochainBuilder& out)
{
    const int m = w.degree();
    std::array<GenId, Wedge::kMaxFactors> f{};
    for (int i = 0; i < m; ++i) {
        for (const auto& img : t.of(w[i])) {
            for (int j = 0; j < m; ++j) f[j] = w[j];
            f[i] = img.target;
            const int sign = Wedge::canonicalize(f, m);
            if (sign == 0) continue;
            Wedge out_w;
            for (int j = 0; j < m; ++j) out_w.push_back_unchecked(f[j]);
            out.add_scaled(out_w, coeff, sign > 0 ? img.coeff : -img.coeff);
        }
    }
}

inline Cochain action_apply(const ExponentVector& d, const Cochain& c)
{
    const auto& t = ActionTable::get(c.n(), d);
    CochainBuilder b(c.n(), c.degree());
    for (const auto& [w, coeff] : c.terms()) action_wedge_into(t, w, coeff, b);
    return std::move(b).build();
}

/// Action of a general quadratic polynomial (a linear combination of the e_D).
inline Cochain action_apply(const PolyElement& x, const Cochain& c)
{
    Cochain out = Cochain::from_sorted(c.n(), c.degree(), {});
    for (const auto& [d, k] : x) {
        Cochain part = action_apply(d, c);
        part.scale(k);
        out += part;
    }
    return out;
}

/// Matrix of rho(e_D) on a slice (the action preserves every shape).
inline SparseRationalMatrix action_matrix(const ExponentVector& d, const ComplexSlice& s)
{
    if (d.total() != 2) throw std::invalid_argument("action_matrix: D must be quadratic");
    const auto& t = ActionTable::get(s.n(), d);
    std::vector<SparseVector> cols;
    cols.reserve(s.dim());
    for (const auto& w : s.basis()) {
        CochainBuilder b(s.n(), s.degree());
        action_wedge_into(t, w, Rational(1), b);
        cols.push_back(s.coordinates(std::move(b).build()));
    }
    return SparseRationalMatrix::from_columns(s.dim(), std::move(cols));
}

inline CartanWeight generator_weight(int n, GenId g)
{
    const auto& w = GeneratorTable::get(n).weight(g);
    return {w[0], w.size() > 1 ? w[1] : 0};
}

inline CartanWeight wedge_weight(int n, const Wedge& w)
{
    const auto& table = GeneratorTable::get(n);
    CartanWeight out;
    for (GenId g : w) {
        const auto& x = table.weight(g);
        out.a += x[0];
        if (x.size() > 1) out.b += x[1];
    }
    return out;
}

/// Shift of weight labels produced by rho(e_D).
inline CartanWeight action_shift(int n, const ExponentVector& d)
{
    const auto w = monomial_weight(SymplecticStructure::standard(n), d);
    return {w[0], w.size() > 1 ? w[1] : 0};
}

/// Basis indices grouped by total Cartan weight.
class WeightGrading {
public:
    explicit WeightGrading(const ComplexSlice& s)
    {
        for (Index i = 0; i < s.dim(); ++i) spaces_[wedge_weight(s.n(), s.basis_element(i))].push_back(i);
    }
    [[nodiscard]] const std::vector<Index>& at(const CartanWeight& l) const
    {
        static const std::vector<Index> empty;
        auto it = spaces_.find(l);
        return it == spaces_.end() ? empty : it->second;
    }
    [[nodiscard]] const std::map<CartanWeight, std::vector<Index>>& spaces() const { return spaces_; }

private:
    std::map<CartanWeight, std::vector<Index>> spaces_;
};

inline std::vector<Index> weight_subspace(const ComplexSlice& s, const CartanWeight& l)
{
    std::vector<Index> out;
    for (Index i = 0; i < s.dim(); ++i)
        if (wedge_weight(s.n(), s.basis_element(i)) == l) out.push_back(i);
    return out;
}

namespace detail {

/// Stacked simple raising operators restricted to the weight-l subspace,
/// rows indexed by the union of the target weight spaces.
inline SparseRationalMatrix raising_block(const ComplexSlice& s, const std::vector<Index>& columns)
{
    const auto gens = sp_generators(s.n());
    std::vector<std::vector<SparseVector::Entry>> col_pairs(columns.size());
    Index next_row = 0;
    for (std::size_t k = 0; k < gens.raising.size(); ++k) {
        const auto& t = ActionTable::get(s.n(), gens.raising[k]);
        std::unordered_map<Index, Index> local; // rows of this operator
        for (std::size_t j = 0; j < columns.size(); ++j) {
            CochainBuilder b(s.n(), s.degree());
            action_wedge_into(t, s.basis_element(columns[j]), Rational(1), b);
            const Cochain image = std::move(b).build();
            for (const auto& [w, c] : image.terms()) {
                auto idx = s.index_of(w);
                if (!idx) throw std::logic_error("raising operator left the slice");
                auto [it, inserted] = local.try_emplace(*idx, next_row);
                if (inserted) ++next_row;
                col_pairs[j].emplace_back(it->second, c);
            }
        }
    }
    std::vector<SparseVector> cols;
    cols.reserve(columns.size());
    for (auto& p : col_pairs) cols.push_back(SparseVector::from_pairs(next_row, std::move(p)));
    return SparseRationalMatrix::from_columns(next_row, std::move(cols));
}

inline SparseVector lift(const ComplexSlice& s, const std::vector<Index>& columns, const SparseVector& local)
{
    std::vector<SparseVector::Entry> pairs;
    pairs.reserve(local.nnz());
    for (const auto& [i, v] : local.entries()) pairs.emplace_back(columns[i], v);
    return SparseVector::from_pairs(s.dim(), std::move(pairs));
}

} // namespace detail

/// Basis (slice coordinates) of the weight-l vectors killed by the simple raising operators.
inline std::vector<SparseVector> highest_weight_vectors(const ComplexSlice& s, const CartanWeight& l)
{
    if (!l.dominant(s.n())) throw std::invalid_argument("highest_weight_vectors: weight must be dominant");
    const auto columns = weight_subspace(s, l);
    if (columns.empty()) return {};
    const auto block = detail::raising_block(s, columns);
    std::vector<SparseVector> out;
    for (const auto& v : kernel_basis(block)) out.push_back(detail::lift(s, columns, v));
    return out;
}

struct InvariantBasis {
    int n = 2;
    int weight = 0;
    int degree = 0;
    int min_gen = 3;
    std::size_t slice_dim = 0;
    std::vector<SparseVector> vectors; // slice coordinates
};

/// Throws if some quadratic fails to annihilate one of the vectors.
inline void verify_invariant(const ComplexSlice& s, const std::vector<SparseVector>& vectors)
{
    const auto gens = sp_generators(s.n());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const Cochain c = s.cochain(vectors[i]);
        for (const auto& d : gens.all)
            if (!action_apply(d, c).is_zero())
                throw std::logic_error("invariant check failed: e_" + d.str() + " does not annihilate vector " +
                                       std::to_string(i) + " of " + s.label());
    }
}

inline InvariantBasis invariant_basis(const ComplexSlice& s)
{
    InvariantBasis out{s.n(), s.weight(), s.degree(), s.min_gen(), s.dim(), {}};
    out.vectors = highest_weight_vectors(s, CartanWeight{0, 0});
    verify_invariant(s, out.vectors);
    return out;
}

struct IsotypicReport {
    std::string slice;
    std::size_t slice_dim = 0;
    Decomposition multiplicities;
};

/// Irreducible decomposition by counting highest-weight vectors. Ranks are
/// taken mod a large prime (which can only overcount multiplicities); the
/// dimension identity then certifies the counts.
inline IsotypicReport isotypic_report(const ComplexSlice& s)
{
    const WeightGrading grading(s);
    std::vector<std::pair<CartanWeight, SparseRationalMatrix>> blocks;
    for (const auto& [l, cols] : grading.spaces())
        if (l.dominant(s.n())) blocks.emplace_back(l, detail::raising_block(s, cols));

    IsotypicReport rep{s.label(), s.dim(), {}};
    for (std::size_t pi = 0; pi < 8; ++pi) {
        const auto p = modp::prime(pi);
        Decomposition mult;
        bool usable = true;
        for (const auto& [l, block] : blocks) {
            const auto mm = modp::reduce(block, p);
            if (!mm) {
                usable = false;
                break;
            }
            const auto k = static_cast<std::int64_t>(block.cols() - modp::rank(*mm));
            if (k) mult[IrrepLabel{l.a, l.b}] = k;
        }
        if (!usable) continue;
        if (static_cast<std::size_t>(total_dimension(mult, s.n())) == s.dim()) {
            rep.multiplicities = std::move(mult);
            return rep;
        }
    }
    // exact fallback
    for (const auto& [l, block] : blocks) {
        const auto k = static_cast<std::int64_t>(block.cols() - rank(block));
        if (k) rep.multiplicities[IrrepLabel{l.a, l.b}] = k;
    }
    if (static_cast<std::size_t>(total_dimension(rep.multiplicities, s.n())) != s.dim())
        throw std::logic_error("isotypic report fails the dimension identity on " + s.label());
    return rep;
}

/// Character of a slice read off from its weight grading.
inline WeightMultiset slice_character(const ComplexSlice& s)
{
    WeightMultiset ch;
    const WeightGrading grading(s);
    for (const auto& [l, cols] : grading.spaces()) ch[l] = static_cast<std::int64_t>(cols.size());
    return ch;
}

/// Character of a shape computed from generator weights alone (no wedge enumeration).
inline WeightMultiset shape_character(int n, const CochainShape& shape)
{
    const auto& table = GeneratorTable::get(n);
    WeightMultiset ch{{CartanWeight{0, 0}, 1}};
    for (const auto& [deg, k] : shape.multiplicity) {
        std::vector<CartanWeight> weights;
        const auto [first, last] = table.degree_range(deg);
        for (GenId g = first; g < last; ++g) weights.push_back(generator_weight(n, g));
        ch = tensor_character(ch, exterior_power_character(weights, k));
    }
    return ch;
}

} // namespace gkf
