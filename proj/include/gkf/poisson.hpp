#pragma once

// Polynomial Poisson algebra on R^(2n) in the factorial-normalized monomial
// basis e_A = prod x_i^{a_i} / a_i!, and the coadjoint action of the quadratic
// monomials (a copy of sp(2n)) on the dual generators z_A.
//
// Coordinates are x_1..x_{2n}. The symplectic pairs are (x_1, x_{2n}),
// (x_2, x_{2n-1}), ...: for n = 2 this is w(d1, d4) = w(d2, d3) = 1, i.e.
// x_4 = y_1 and x_3 = y_2 in Darboux coordinates.

#include "gkf/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkf {

/// Exponents (a_1, ..., a_{2n}) of a monomial e_A or of its dual generator z_A.
class ExponentVector {
public:
    static constexpr int kMaxVars = 4;

    ExponentVector() = default;
    ExponentVector(std::initializer_list<int> a)
    {
        if (a.size() > kMaxVars || a.size() % 2 != 0) throw std::invalid_argument("exponent vector must have 2 or 4 entries");
        size_ = static_cast<std::uint8_t>(a.size());
        int i = 0;
        for (int v : a) {
            if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
            a_[i++] = static_cast<std::uint8_t>(v);
        }
    }
    static ExponentVector zeros(int vars)
    {
        ExponentVector e;
        e.size_ = static_cast<std::uint8_t>(vars);
        return e;
    }

    [[nodiscard]] int vars() const { return size_; }
    [[nodiscard]] int operator[](int i) const { return a_[i]; }
    void set(int i, int v) { a_[i] = static_cast<std::uint8_t>(v); }
    [[nodiscard]] int total() const
    {
        int s = 0;
        for (int i = 0; i < size_; ++i) s += a_[i];
        return s;
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend std::strong_ordering operator<=>(const ExponentVector& l, const ExponentVector& r)
    {
        if (auto c = l.size_ <=> r.size_; c != 0) return c;
        for (int i = 0; i < l.size_; ++i)
            if (auto c = l.a_[i] <=> r.a_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// "2001" style rendering (digits concatenated; entries >= 10 are comma separated).
    [[nodiscard]] std::string str() const
    {
        bool wide = false;
        for (int i = 0; i < size_; ++i) wide |= a_[i] >= 10;
        std::string s;
        for (int i = 0; i < size_; ++i) {
            if (wide && i) s += ',';
            s += std::to_string(a_[i]);
        }
        return s;
    }

private:
    std::array<std::uint8_t, kMaxVars> a_{};
    std::uint8_t size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExponentVector& e) { return os << e.str(); }

/// Sparse polynomial in the e_A basis.
using PolyElement = std::map<ExponentVector, Rational>;

inline void add_term(PolyElement& p, const ExponentVector& e, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

struct SymplecticStructure {
    int n = 2;
    std::vector<std::pair<int, int>> pairs; // (p, q) with w(d_p, d_q) = +1

    static SymplecticStructure standard(int n)
    {
        if (n != 1 && n != 2) throw std::invalid_argument("only n = 1 and n = 2 are supported");
        SymplecticStructure s{n, {}};
        for (int i = 0; i < n; ++i) s.pairs.emplace_back(i, 2 * n - 1 - i);
        return s;
    }
    [[nodiscard]] int vars() const { return 2 * n; }
};

namespace detail {

inline std::int64_t binom_small(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// (a + b)! / (a! b!) or (a + b - 1)! / (a! b!) as a rational.
inline Rational merge_factor(int a, int b, bool lowered)
{
    const std::int64_t c = binom_small(a + b, a);
    if (!lowered) return Rational(c);
    return Rational(c, a + b);
}

} // namespace detail

/// {e_A, e_B} = sum over symplectic pairs (p, q) of
///   (a_p b_q - a_q b_p) * prod_i (a_i + b_i - [i in {p,q}])! / (a_i! b_i!) * e_{A + B - 1_p - 1_q}
inline PolyElement bracket(const SymplecticStructure& s, const ExponentVector& a, const ExponentVector& b)
{
    if (a.vars() != s.vars() || b.vars() != s.vars()) throw std::invalid_argument("bracket: wrong number of variables");
    PolyElement out;
    for (const auto& [p, q] : s.pairs) {
        const std::int64_t lead = static_cast<std::int64_t>(a[p]) * b[q] - static_cast<std::int64_t>(a[q]) * b[p];
        if (lead == 0) continue;
        Rational c(lead);
        ExponentVector e = ExponentVector::zeros(s.vars());
        for (int i = 0; i < s.vars(); ++i) {
            const bool lowered = (i == p || i == q);
            c *= detail::merge_factor(a[i], b[i], lowered);
            e.set(i, a[i] + b[i] - (lowered ? 1 : 0));
        }
        add_term(out, e, c);
    }
    return out;
}

inline PolyElement bracket(const SymplecticStructure& s, const PolyElement& f, const PolyElement& g)
{
    PolyElement out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g)
            for (const auto& [e, c] : bracket(s, a, b)) add_term(out, e, ca * cb * c);
    return out;
}

/// Cartan-weight convention: e_A has weight (a_p - a_q) per pair, so z_A has the negative.
inline std::vector<int> monomial_weight(const SymplecticStructure& s, const ExponentVector& a)
{
    std::vector<int> w;
    for (const auto& [p, q] : s.pairs) w.push_back(a[p] - a[q]);
    return w;
}

inline std::vector<int> dual_weight(const SymplecticStructure& s, const ExponentVector& a)
{
    std::vector<int> w = monomial_weight(s, a);
    for (int& x : w) x = -x;
    return w;
}

/// All exponent vectors of total degree d in `vars` variables, ascending lexicographic.
inline std::vector<ExponentVector> monomials_of_degree(int vars, int d)
{
    std::vector<ExponentVector> out;
    ExponentVector e = ExponentVector::zeros(vars);
    // enumerate in lexicographic ascending order: first coordinate slowest
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == vars - 1) {
            e.set(i, left);
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e.set(i, v);
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// Quadratic generators of sp(2n) together with the chosen Chevalley data.
struct SpGenerators {
    std::vector<ExponentVector> all;       // the 2n^2 + n quadratics, lexicographic order
    std::vector<ExponentVector> cartan;    // x_p x_q for each symplectic pair
    std::vector<ExponentVector> raising;   // simple root vectors, weights (1,-1), (0,2) for n = 2
    std::vector<ExponentVector> lowering;  // their negatives
};

inline SpGenerators sp_generators(int n)
{
    if (n != 1 && n != 2) throw std::invalid_argument("sp_generators: n must be 1 or 2");
    SpGenerators g;
    g.all = monomials_of_degree(2 * n, 2);
    if (n == 1) {
        g.cartan = {ExponentVector{1, 1}};
        g.raising = {ExponentVector{2, 0}};
        g.lowering = {ExponentVector{0, 2}};
    } else {
        g.cartan = {ExponentVector{1, 0, 0, 1}, ExponentVector{0, 1, 1, 0}};
        g.raising = {ExponentVector{1, 0, 1, 0}, ExponentVector{0, 2, 0, 0}};
        g.lowering = {ExponentVector{0, 1, 0, 1}, ExponentVector{0, 0, 2, 0}};
    }
    return g;
}

/// Coadjoint action of the quadratic e_D on z_C:
///   <e_D . z_C, e_A> = -<z_C, {e_D, e_A}>,
/// supported on exponents A with |A| = |C|.
inline std::map<ExponentVector, Rational> coadjoint_on_dual(const SymplecticStructure& s, const ExponentVector& d,
                                                            const ExponentVector& c)
{
    if (d.total() != 2) throw std::invalid_argument("coadjoint_on_dual: D must be quadratic");
    std::map<ExponentVector, Rational> out;
    // {e_D, e_A} hits e_C through pair (p, q) only if A = C + 1_p + 1_q - D
    for (const auto& [p, q] : s.pairs) {
        ExponentVector a = ExponentVector::zeros(s.vars());
        bool valid = true;
        for (int i = 0; i < s.vars(); ++i) {
            const int v = c[i] + ((i == p || i == q) ? 1 : 0) - d[i];
            if (v < 0) {
                valid = false;
                break;
            }
            a.set(i, v);
        }
        if (!valid || out.contains(a)) continue;
        const PolyElement br = bracket(s, d, a);
        auto it = br.find(c);
        if (it != br.end()) out.emplace(a, -it->second);
    }
    return out;
}

} // namespace gkf
