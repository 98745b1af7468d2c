#pragma once

// Cochains of the Gel'fand-Fuks complex split by weight and degree.
//
// Dual generators z_C are numbered once per n in the total order
// (|C| ascending, then exponents lexicographically ascending), so a wedge
// monomial is simply a strictly increasing list of generator ids.

#include "gkf/linalg.hpp"
#include "gkf/poisson.hpp"
#include "gkf/rational.hpp"
#include "gkf/sparse.hpp"
#include "gkf/weight_combinatorics.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gkf {

using GenId = std::uint16_t;

/// Numbering of the dual generators z_C, |C| <= max_degree, in the canonical total order.
class GeneratorTable {
public:
    static constexpr int kMaxDegree = 24;

    explicit GeneratorTable(int n) : sym_(SymplecticStructure::standard(n))
    {
        const int vars = sym_.vars();
        lookup_.assign(std::size_t{1} << (5 * vars), kNone);
        degree_start_.assign(kMaxDegree + 2, 0);
        for (int d = 0; d <= kMaxDegree; ++d) {
            degree_start_[d] = static_cast<GenId>(exps_.size());
            for (const auto& e : monomials_of_degree(vars, d)) {
                lookup_[key(e)] = static_cast<GenId>(exps_.size());
                exps_.push_back(e);
                weights_.push_back(dual_weight(sym_, e));
            }
        }
        degree_start_[kMaxDegree + 1] = static_cast<GenId>(exps_.size());
    }

    /// Shared immutable table for n in {1, 2}.
    static const GeneratorTable& get(int n)
    {
        static const GeneratorTable t1(1);
        static const GeneratorTable t2(2);
        if (n == 1) return t1;
        if (n == 2) return t2;
        throw std::invalid_argument("GeneratorTable: n must be 1 or 2");
    }

    [[nodiscard]] int n() const { return sym_.n; }
    [[nodiscard]] const SymplecticStructure& symplectic() const { return sym_; }
    [[nodiscard]] std::size_t size() const { return exps_.size(); }
    [[nodiscard]] const ExponentVector& exponents(GenId id) const { return exps_[id]; }
    [[nodiscard]] int degree(GenId id) const { return exps_[id].total(); }
    [[nodiscard]] const std::vector<int>& weight(GenId id) const { return weights_[id]; }

    [[nodiscard]] std::optional<GenId> id(const ExponentVector& e) const
    {
        if (e.vars() != sym_.vars() || e.total() > kMaxDegree) return std::nullopt;
        const GenId g = lookup_[key(e)];
        if (g == kNone) return std::nullopt;
        return g;
    }
    [[nodiscard]] GenId id_or_throw(const ExponentVector& e) const
    {
        auto g = id(e);
        if (!g) throw std::out_of_range("generator degree exceeds table: " + e.str());
        return *g;
    }

    /// Ids of generators of degree d: [first, last).
    [[nodiscard]] std::pair<GenId, GenId> degree_range(int d) const
    {
        if (d < 0 || d > kMaxDegree) throw std::out_of_range("generator degree out of range");
        return {degree_start_[d], degree_start_[d + 1]};
    }

private:
    static constexpr GenId kNone = 0xFFFF;
    static std::size_t key(const ExponentVector& e)
    {
        std::size_t k = 0;
        for (int i = 0; i < e.vars(); ++i) k = (k << 5) | static_cast<std::size_t>(e[i] & 31);
        return k;
    }

    SymplecticStructure sym_;
    std::vector<ExponentVector> exps_;
    std::vector<std::vector<int>> weights_;
    std::vector<GenId> lookup_;
    std::vector<GenId> degree_start_;
};

/// z_{C_1} ^ ... ^ z_{C_m} with strictly increasing generator ids.
class Wedge {
public:
    static constexpr int kMaxFactors = 16;

    Wedge() = default;

    /// Sorts the factors into canonical order. Returns the permutation sign, or 0 on a repeat.
    static int canonicalize(std::array<GenId, kMaxFactors>& f, int size)
    {
        int sign = 1;
        for (int i = 1; i < size; ++i) {
            GenId x = f[i];
            int j = i - 1;
            while (j >= 0 && f[j] > x) {
                f[j + 1] = f[j];
                --j;
                sign = -sign;
            }
            if (j >= 0 && f[j] == x) return 0;
            f[j + 1] = x;
        }
        return sign;
    }

    /// Builds from an arbitrary factor list; `sign` receives the reordering sign (0 if degenerate).
    static Wedge from_factors(const std::vector<GenId>& factors, int& sign)
    {
        if (factors.size() > kMaxFactors) throw std::length_error("wedge degree exceeds capacity");
        Wedge w;
        w.size_ = static_cast<std::uint8_t>(factors.size());
        std::copy(factors.begin(), factors.end(), w.f_.begin());
        sign = canonicalize(w.f_, w.size_);
        return w;
    }

    [[nodiscard]] int degree() const { return size_; }
    [[nodiscard]] GenId operator[](int i) const { return f_[i]; }
    [[nodiscard]] const GenId* begin() const { return f_.data(); }
    [[nodiscard]] const GenId* end() const { return f_.data() + size_; }

    void push_back_unchecked(GenId g) { f_[size_++] = g; }

    friend bool operator==(const Wedge& a, const Wedge& b)
    {
        return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
    }
    friend std::strong_ordering operator<=>(const Wedge& a, const Wedge& b)
    {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        for (int i = 0; i < a.size_; ++i)
            if (auto c = a.f_[i] <=> b.f_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::size_t hash() const
    {
        std::uint64_t h = 1469598103934665603ULL ^ size_;
        for (int i = 0; i < size_; ++i) {
            h ^= f_[i];
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

private:
    std::array<GenId, kMaxFactors> f_{};
    std::uint8_t size_ = 0;
};

struct WedgeHash {
    std::size_t operator()(const Wedge& w) const noexcept { return w.hash(); }
};

/// Homogeneous sparse combination of wedge monomials, sorted by monomial.
class Cochain {
public:
    using Term = std::pair<Wedge, Rational>;

    Cochain() = default;
    Cochain(int n, int degree) : n_(n), degree_(degree) {}

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// Weight sum(|C_i| - 2) of the (homogeneous) cochain; nullopt when zero.
    [[nodiscard]] std::optional<int> weight() const
    {
        if (terms_.empty()) return std::nullopt;
        const auto& table = GeneratorTable::get(n_);
        int w = 0;
        for (GenId g : terms_.front().first) w += table.degree(g) - 2;
        return w;
    }

    [[nodiscard]] Rational coefficient(const Wedge& w) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                   [](const Term& t, const Wedge& k) { return t.first < k; });
        return (it != terms_.end() && it->first == w) ? it->second : Rational(0);
    }

    friend bool operator==(const Cochain& a, const Cochain& b)
    {
        if (a.is_zero() && b.is_zero()) return true;
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    void scale(const Rational& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& t : terms_) t.second *= c;
    }

    /// Takes ownership of already-sorted, zero-free terms.
    static Cochain from_sorted(int n, int degree, std::vector<Term> terms)
    {
        Cochain c(n, degree);
        c.terms_ = std::move(terms);
        return c;
    }

private:
    int n_ = 2;
    int degree_ = 0;
    std::vector<Term> terms_;
};

/// Hash-map accumulator that produces a Cochain.
class CochainBuilder {
public:
    CochainBuilder(int n, int degree) : n_(n), degree_(degree) {}

    void add(const Wedge& w, const Rational& c)
    {
        if (c.is_zero()) return;
        assert(w.degree() == degree_);
        auto [it, inserted] = acc_.try_emplace(w, c);
        if (!inserted) it->second += c;
    }
    void add_scaled(const Wedge& w, const Rational& c, const Rational& s)
    {
        if (c.is_zero() || s.is_zero()) return;
        auto [it, inserted] = acc_.try_emplace(w);
        it->second.add_mul(c, s);
    }

    [[nodiscard]] Cochain build() &&
    {
        std::vector<Cochain::Term> terms;
        terms.reserve(acc_.size());
        for (auto& [w, c] : acc_)
            if (!c.is_zero()) terms.emplace_back(w, std::move(c));
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return Cochain::from_sorted(n_, degree_, std::move(terms));
    }

private:
    int n_;
    int degree_;
    std::unordered_map<Wedge, Rational, WedgeHash> acc_;
};

inline Cochain& Cochain::operator+=(const Cochain& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (o.degree_ != degree_ || o.n_ != n_) throw std::invalid_argument("cochain sum: degree mismatch");
    CochainBuilder b(n_, degree_);
    for (const auto& [w, c] : terms_) b.add(w, c);
    for (const auto& [w, c] : o.terms_) b.add(w, c);
    *this = std::move(b).build();
    return *this;
}

inline Cochain& Cochain::operator-=(const Cochain& o)
{
    Cochain neg = o;
    neg.scale(Rational(-1));
    return *this += neg;
}

inline Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
inline Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

inline Cochain single_term(int n, const Wedge& w, const Rational& c = Rational(1))
{
    if (c.is_zero()) return Cochain(n, w.degree());
    return Cochain::from_sorted(n, w.degree(), {{w, c}});
}

// ---------------------------------------------------------------------------
// Coboundary

/// d z_C as a list of (A, B, t) with id(A) < id(B): d z_C = sum t z_A ^ z_B.
struct GeneratorDifferential {
    struct Term {
        GenId a;
        GenId b;
        Rational coeff;
    };
    std::vector<Term> terms;
};

namespace detail {

inline Rational multinomial_ratio(const ExponentVector& c, const ExponentVector& a, const ExponentVector& b)
{
    // C! / (A! B!)
    Rational r(1);
    for (int i = 0; i < c.vars(); ++i) {
        for (int k = 2; k <= c[i]; ++k) r *= Rational(k);
        for (int k = 2; k <= a[i]; ++k) r /= Rational(k);
        for (int k = 2; k <= b[i]; ++k) r /= Rational(k);
    }
    return r;
}

} // namespace detail

/// Coboundary of a single dual generator:
///   d z_C = - sum over symplectic pairs (p, q) and splits A + B = C + 1_p + 1_q
///           of (a_p b_q - a_q b_p) C!/(A!B!) z_A (x) z_B,
/// folded into the wedge basis (z_A ^ z_B = z_A (x) z_B - z_B (x) z_A). Splits with
/// |A| < min_gen or |B| < min_gen are dropped.
inline GeneratorDifferential d_generator(int n, const ExponentVector& c, int min_gen)
{
    const auto& table = GeneratorTable::get(n);
    const auto& sym = table.symplectic();
    GeneratorDifferential out;
    const int total = c.total() + 2;
    std::map<std::pair<GenId, GenId>, Rational> acc;
    for (int da = min_gen; da <= total - min_gen; ++da) {
        for (const auto& a : monomials_of_degree(sym.vars(), da)) {
            for (const auto& [p, q] : sym.pairs) {
                ExponentVector b = ExponentVector::zeros(sym.vars());
                bool valid = true;
                for (int i = 0; i < sym.vars(); ++i) {
                    const int v = c[i] + ((i == p || i == q) ? 1 : 0) - a[i];
                    if (v < 0) {
                        valid = false;
                        break;
                    }
                    b.set(i, v);
                }
                if (!valid) continue;
                const std::int64_t lead = static_cast<std::int64_t>(a[p]) * b[q] - static_cast<std::int64_t>(a[q]) * b[p];
                if (lead == 0) continue;
                const GenId ia = table.id_or_throw(a);
                const GenId ib = table.id_or_throw(b);
                if (ia >= ib) continue; // each unordered pair once, in canonical order
                Rational t = Rational(-lead) * detail::multinomial_ratio(c, a, b);
                auto [it, inserted] = acc.try_emplace({ia, ib}, t);
                if (!inserted) it->second += t;
            }
        }
    }
    for (auto& [key, t] : acc)
        if (!t.is_zero()) out.terms.push_back({key.first, key.second, std::move(t)});
    return out;
}

/// d z_C as a degree-2 cochain.
inline Cochain d_generator_cochain(int n, const ExponentVector& c, int min_gen)
{
    CochainBuilder b(n, 2);
    for (const auto& t : d_generator(n, c, min_gen).terms) {
        Wedge w;
        w.push_back_unchecked(t.a);
        w.push_back_unchecked(t.b);
        b.add(w, t.coeff);
    }
    return std::move(b).build();
}

/// Memoized generator differentials for one (n, min_gen).
class DifferentialCache {
public:
    DifferentialCache(int n, int min_gen) : n_(n), min_gen_(min_gen), table_(GeneratorTable::get(n)) {}

    const GeneratorDifferential& of(GenId g) const
    {
        std::lock_guard lock(mutex_);
        auto& slot = cache_[g];
        if (!slot) slot = std::make_unique<GeneratorDifferential>(d_generator(n_, table_.exponents(g), min_gen_));
        return *slot;
    }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int min_gen() const { return min_gen_; }

    static const DifferentialCache& get(int n, int min_gen)
    {
        static std::mutex m;
        static std::map<std::pair<int, int>, std::unique_ptr<DifferentialCache>> caches;
        std::lock_guard lock(m);
        auto& c = caches[{n, min_gen}];
        if (!c) c = std::make_unique<DifferentialCache>(n, min_gen);
        return *c;
    }

private:
    int n_;
    int min_gen_;
    const GeneratorTable& table_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<GenId, std::unique_ptr<GeneratorDifferential>> cache_;
};

/// Leibniz extension: d(z_1 ^ ... ^ z_m) = sum_i (-1)^i z_1 ^ .. ^ d z_i ^ .. ^ z_m (0-based i).
inline void d_wedge_into(const DifferentialCache& dc, const Wedge& w, const Rational& coeff, CochainBuilder& out)
{
    const int m = w.degree();
    if (m + 1 > Wedge::kMaxFactors) throw std::length_error("wedge degree exceeds capacity");
    std::array<GenId, Wedge::kMaxFactors> f{};
    for (int i = 0; i < m; ++i) {
        const auto& dz = dc.of(w[i]);
        if (dz.terms.empty()) continue;
        const Rational base = (i % 2 == 0) ? coeff : -coeff;
        for (const auto& t : dz.terms) {
            // z_1 .. z_{i-1} z_A z_B z_{i+1} .. z_m
            int k = 0;
            for (int j = 0; j < i; ++j) f[k++] = w[j];
            f[k++] = t.a;
            f[k++] = t.b;
            for (int j = i + 1; j < m; ++j) f[k++] = w[j];
            const int sign = Wedge::canonicalize(f, m + 1);
            if (sign == 0) continue;
            Wedge out_w;
            for (int j = 0; j <= m; ++j) out_w.push_back_unchecked(f[j]);
            out.add_scaled(out_w, base, sign > 0 ? t.coeff : -t.coeff);
        }
    }
}

inline Cochain d_apply(const Cochain& c, int min_gen)
{
    const auto& dc = DifferentialCache::get(c.n(), min_gen);
    CochainBuilder b(c.n(), c.degree() + 1);
    for (const auto& [w, coeff] : c.terms()) d_wedge_into(dc, w, coeff, b);
    return std::move(b).build();
}

inline Cochain d_wedge(int n, const Wedge& w, int min_gen)
{
    return d_apply(single_term(n, w), min_gen);
}

// ---------------------------------------------------------------------------
// Slices

/// Enumerated basis of C^m|_w (optionally one shape only).
class ComplexSlice {
public:
    ComplexSlice(int n, int weight, int degree, int min_gen, std::vector<CochainShape> shapes)
        : n_(n), weight_(weight), degree_(degree), min_gen_(min_gen), shapes_(std::move(shapes))
    {
        if (n != 1 && n != 2) throw std::invalid_argument("slice: n must be 1 or 2");
        if (min_gen != 2 && min_gen != 3) throw std::invalid_argument("slice: min_gen must be 2 or 3");
        if (degree > Wedge::kMaxFactors) throw std::invalid_argument("slice: degree exceeds wedge capacity");
        const auto& table = GeneratorTable::get(n);
        for (const auto& shape : shapes_) {
            if (shape.degree() != degree || shape.weight() != weight)
                throw std::invalid_argument("slice: shape " + shape.str() + " has wrong degree or weight");
            enumerate_shape(table, shape);
        }
        index_.reserve(basis_.size() * 2);
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<Index>(i));
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int weight() const { return weight_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] int min_gen() const { return min_gen_; }
    [[nodiscard]] const std::vector<CochainShape>& shapes() const { return shapes_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Wedge>& basis() const { return basis_; }
    [[nodiscard]] const Wedge& basis_element(Index i) const { return basis_[i]; }

    [[nodiscard]] std::optional<Index> index_of(const Wedge& w) const
    {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Coordinates of a cochain in this basis; throws if a term lies outside the slice.
    [[nodiscard]] SparseVector coordinates(const Cochain& c) const
    {
        std::vector<SparseVector::Entry> pairs;
        pairs.reserve(c.size());
        for (const auto& [w, v] : c.terms()) {
            auto i = index_of(w);
            if (!i) throw std::logic_error("cochain term outside slice");
            pairs.emplace_back(*i, v);
        }
        return SparseVector::from_pairs(dim(), std::move(pairs));
    }

    [[nodiscard]] Cochain cochain(const SparseVector& v) const
    {
        CochainBuilder b(n_, degree_);
        for (const auto& [i, x] : v.entries()) b.add(basis_[i], x);
        return std::move(b).build();
    }

    [[nodiscard]] std::string label() const
    {
        std::ostringstream os;
        os << "C^" << degree_ << "|_" << weight_ << " (n=" << n_ << ", min_gen=" << min_gen_;
        if (shapes_ != shapes_for(weight_, degree_, min_gen_)) {
            os << ", shapes";
            for (const auto& s : shapes_) os << ' ' << s.str();
        }
        os << ')';
        return os.str();
    }

private:
    void enumerate_shape(const GeneratorTable& table, const CochainShape& shape)
    {
        // groups in ascending generator degree, so concatenation is already sorted
        std::vector<std::pair<std::pair<GenId, GenId>, int>> groups;
        for (const auto& [deg, k] : shape.multiplicity) groups.push_back({table.degree_range(deg), k});
        std::vector<GenId> cur;
        auto rec = [&](auto&& self, std::size_t gi, GenId start, int left) -> void {
            if (gi == groups.size()) {
                Wedge w;
                for (GenId g : cur) w.push_back_unchecked(g);
                basis_.push_back(w);
                return;
            }
            const auto [first, last] = groups[gi].first;
            if (left == 0) {
                const std::size_t next = gi + 1;
                if (next < groups.size())
                    self(self, next, groups[next].first.first, groups[next].second);
                else
                    self(self, next, 0, 0);
                return;
            }
            for (GenId g = start; g + left <= last; ++g) {
                cur.push_back(g);
                self(self, gi, static_cast<GenId>(g + 1), left - 1);
                cur.pop_back();
            }
            (void)first;
        };
        if (groups.empty()) {
            basis_.emplace_back();
            return;
        }
        rec(rec, 0, groups[0].first.first, groups[0].second);
    }

    int n_;
    int weight_;
    int degree_;
    int min_gen_;
    std::vector<CochainShape> shapes_;
    std::vector<Wedge> basis_;
    std::unordered_map<Wedge, Index, WedgeHash> index_;
};

inline ComplexSlice slice(int n, int w, int m, int min_gen = 3)
{
    return ComplexSlice(n, w, m, min_gen, shapes_for(w, m, min_gen));
}

inline ComplexSlice shape_slice(int n, const CochainShape& shape)
{
    return ComplexSlice(n, shape.weight(), shape.degree(), shape.min_gen, {shape});
}

/// Matrix of d between two enumerated slices; column j is d(basis_j).
inline SparseRationalMatrix d_matrix(const ComplexSlice& from, const ComplexSlice& to)
{
    if (from.n() != to.n() || from.weight() != to.weight() || from.degree() + 1 != to.degree() ||
        from.min_gen() != to.min_gen())
        throw std::logic_error("d_matrix: target must be the next-degree slice of the same weight");
    const auto& dc = DifferentialCache::get(from.n(), from.min_gen());
    std::vector<SparseVector> cols;
    cols.reserve(from.dim());
    for (const auto& w : from.basis()) {
        CochainBuilder b(from.n(), to.degree());
        d_wedge_into(dc, w, Rational(1), b);
        cols.push_back(to.coordinates(std::move(b).build()));
    }
    return SparseRationalMatrix::from_columns(to.dim(), std::move(cols));
}

// ---------------------------------------------------------------------------
// Rendering

/// z_C as Z^{(|C|)}_{ijk} (n = 2) or Z^{(|C|)}_{i} (n = 1); the last exponent is implied.
inline std::string render_generator(const GeneratorTable& table, GenId g)
{
    const auto& e = table.exponents(g);
    std::string idx;
    bool wide = false;
    for (int i = 0; i + 1 < e.vars(); ++i) wide |= e[i] >= 10;
    for (int i = 0; i + 1 < e.vars(); ++i) {
        if (wide && i) idx += ',';
        idx += std::to_string(e[i]);
    }
    return "Z^{(" + std::to_string(e.total()) + ")}_{" + idx + "}";
}

inline std::string render_cochain(const Cochain& c)
{
    if (c.is_zero()) return "0";
    const auto& table = GeneratorTable::get(c.n());
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, v] : c.terms()) {
        const bool neg = v.sign() < 0;
        const Rational mag = neg ? -v : v;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        if (!mag.is_one()) os << mag.str() << ' ';
        for (int i = 0; i < w.degree(); ++i) os << (i ? " ^ " : "") << render_generator(table, w[i]);
        first = false;
    }
    return os.str();
}

} // namespace gkf
