#pragma once

// Combinatorial representation theory of Sp(2n), n in {1, 2}.
//
// Weights are written in the orthogonal basis e_1..e_n of type C_n: positive
// roots e_i - e_j, e_i + e_j (i < j) and 2 e_i, rho = (n, n-1, .., 1), and
// the Weyl group acts by signed permutations. An irreducible V_{p,q} is the
// highest-weight module with highest weight (p, q), p >= q >= 0.

#include "gkf/weight_combinatorics.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkf {

/// Cartan weight (lambda_1, lambda_2); for n = 1 the second component is always 0.
struct CartanWeight {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const CartanWeight&, const CartanWeight&) = default;
    CartanWeight operator+(const CartanWeight& o) const { return {a + o.a, b + o.b}; }
    CartanWeight operator-(const CartanWeight& o) const { return {a - o.a, b - o.b}; }

    [[nodiscard]] bool dominant(int n) const { return n == 1 ? (a >= 0 && b == 0) : (a >= b && b >= 0); }
    [[nodiscard]] std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Label of an irreducible: (p) for n = 1, (p, q) with p >= q >= 0 for n = 2.
struct IrrepLabel {
    int p = 0;
    int q = 0;

    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;

    [[nodiscard]] CartanWeight highest_weight() const { return {p, q}; }

    /// "V0", "V4", "V5,1"
    [[nodiscard]] std::string str() const
    {
        if (q == 0) return "V" + std::to_string(p);
        return "V" + std::to_string(p) + "," + std::to_string(q);
    }

    /// Accepts "5,1", "4", "4,0", optionally prefixed by "V".
    static IrrepLabel parse(std::string text)
    {
        if (!text.empty() && (text[0] == 'V' || text[0] == 'v')) text.erase(0, 1);
        IrrepLabel l;
        const auto comma = text.find(',');
        try {
            l.p = std::stoi(text.substr(0, comma));
            if (comma != std::string::npos) l.q = std::stoi(text.substr(comma + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad irreducible label: " + text);
        }
        if (l.q < 0 || l.p < l.q) throw std::invalid_argument("label must satisfy p >= q >= 0: " + text);
        return l;
    }
};

inline std::ostream& operator<<(std::ostream& os, const IrrepLabel& l) { return os << l.str(); }

using Decomposition = std::map<IrrepLabel, std::int64_t>;
using SignedDecomposition = std::map<IrrepLabel, std::int64_t>;
using WeightMultiset = std::map<CartanWeight, std::int64_t>;

/// "V2 + 2V3,1 + ..." in label order.
inline std::string format_decomposition(const Decomposition& d)
{
    std::string s;
    for (const auto& [l, m] : d) {
        if (m == 0) continue;
        if (!s.empty()) s += m < 0 ? " - " : " + ";
        else if (m < 0) s += "-";
        const auto mag = std::llabs(m);
        if (mag != 1) s += std::to_string(mag);
        s += l.str();
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Dimensions

/// Weyl dimension formula for C_n, n in {1, 2}.
inline std::int64_t weyl_dim(const IrrepLabel& l, int n)
{
    if (n == 1) {
        if (l.q != 0 || l.p < 0) throw std::invalid_argument("weyl_dim: n = 1 labels are (p)");
        return l.p + 1;
    }
    if (n != 2) throw std::invalid_argument("weyl_dim: n must be 1 or 2");
    if (l.q < 0 || l.p < l.q) throw std::invalid_argument("weyl_dim: label must be dominant");
    const std::int64_t p = l.p, q = l.q;
    // roots e1-e2, e1+e2, 2e1, 2e2 against lambda + rho = (p + 2, q + 1)
    return (p - q + 1) * (p + q + 3) * (p + 2) * (q + 1) / 6;
}

inline std::int64_t total_dimension(const Decomposition& d, int n)
{
    std::int64_t s = 0;
    for (const auto& [l, m] : d) s += m * weyl_dim(l, n);
    return s;
}

// ---------------------------------------------------------------------------
// Weyl group of C_n

namespace detail {

inline std::vector<int> rho(int n)
{
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = n - i;
    return r;
}

inline std::vector<int> as_vec(const CartanWeight& w, int n)
{
    return n == 1 ? std::vector<int>{w.a} : std::vector<int>{w.a, w.b};
}

inline CartanWeight from_vec(const std::vector<int>& v) { return v.size() == 1 ? CartanWeight{v[0], 0} : CartanWeight{v[0], v[1]}; }

/// Moves x into the dominant chamber by a signed permutation; returns the
/// determinant of the element used, or 0 if x lies on a reflecting wall.
inline int reflect_to_dominant(std::vector<int>& x)
{
    int sign = 1;
    for (int& v : x)
        if (v < 0) {
            v = -v;
            sign = -sign;
        }
    for (std::size_t i = 1; i < x.size(); ++i)
        for (std::size_t j = i; j > 0 && x[j - 1] < x[j]; --j) {
            std::swap(x[j - 1], x[j]);
            sign = -sign;
        }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) return 0;
        if (i + 1 < x.size() && x[i] == x[i + 1]) return 0;
    }
    return sign;
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b)
{
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<std::vector<int>> positive_roots(int n)
{
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> a(n, 0), b(n, 0);
            a[i] = 1;
            a[j] = -1;
            b[i] = 1;
            b[j] = 1;
            roots.push_back(a);
            roots.push_back(b);
        }
    for (int i = 0; i < n; ++i) {
        std::vector<int> r(n, 0);
        r[i] = 2;
        roots.push_back(r);
    }
    return roots;
}

/// Dominant representative of a weight under signed permutations.
inline std::vector<int> dominant_rep(std::vector<int> x)
{
    for (int& v : x) v = std::abs(v);
    std::sort(x.begin(), x.end(), std::greater<>());
    return x;
}

/// Distinct images of x under signed permutations.
inline std::vector<std::vector<int>> orbit(const std::vector<int>& x)
{
    std::vector<std::vector<int>> out;
    std::vector<int> perm(x.begin(), x.end());
    std::sort(perm.begin(), perm.end());
    do {
        const std::size_t n = perm.size();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> y(perm);
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) y[i] = -y[i];
            out.push_back(y);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Freudenthal

/// Full weight diagram of V_label via Freudenthal's recursion.
inline WeightMultiset freudenthal_multiplicities(const IrrepLabel& label, int n)
{
    if (n != 1 && n != 2) throw std::invalid_argument("freudenthal: n must be 1 or 2");
    const std::vector<int> lam = detail::as_vec(label.highest_weight(), n);
    const std::vector<int> rho = detail::rho(n);
    const auto roots = detail::positive_roots(n);

    // dominant weights below lambda in the same root-lattice coset, by increasing depth
    std::vector<std::pair<int, std::vector<int>>> dominant;
    const int top = lam[0];
    auto consider = [&](const std::vector<int>& mu) {
        // lambda - mu = sum c_i alpha_i with alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n
        int partial = 0, depth = 0;
        for (int i = 0; i < n; ++i) {
            partial += lam[i] - mu[i];
            if (i + 1 < n) {
                if (partial < 0) return;
                depth += partial;
            }
        }
        if (partial < 0 || partial % 2 != 0) return;
        depth += partial / 2;
        dominant.emplace_back(depth, mu);
    };
    if (n == 1) {
        for (int a = top; a >= 0; --a) consider({a});
    } else {
        for (int a = top; a >= 0; --a)
            for (int b = a; b >= 0; --b) consider({a, b});
    }
    std::sort(dominant.begin(), dominant.end());

    std::map<std::vector<int>, std::int64_t> mult; // dominant weights only
    auto lookup = [&](const std::vector<int>& v) -> std::int64_t {
        auto it = mult.find(detail::dominant_rep(v));
        return it == mult.end() ? 0 : it->second;
    };
    std::vector<int> lr(n);
    for (int i = 0; i < n; ++i) lr[i] = lam[i] + rho[i];
    const int norm_top = detail::dot(lr, lr);
    for (const auto& [depth, mu] : dominant) {
        if (depth == 0) {
            mult[mu] = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (const auto& alpha : roots) {
            for (int k = 1;; ++k) {
                std::vector<int> v(n);
                for (int i = 0; i < n; ++i) v[i] = mu[i] + k * alpha[i];
                // weights outside the convex hull of the orbit of lambda vanish
                if (detail::dominant_rep(v)[0] > top) break;
                const std::int64_t m = lookup(v);
                if (m) acc += m * detail::dot(v, alpha);
            }
        }
        std::vector<int> mr(n);
        for (int i = 0; i < n; ++i) mr[i] = mu[i] + rho[i];
        const int denom = norm_top - detail::dot(mr, mr);
        if (denom <= 0 || (2 * acc) % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
        const std::int64_t m = 2 * acc / denom;
        if (m) mult[mu] = m;
    }

    WeightMultiset out;
    for (const auto& [mu, m] : mult)
        for (const auto& w : detail::orbit(mu)) out[detail::from_vec(w)] += m;
    return out;
}

// ---------------------------------------------------------------------------
// Klimyk / Racah-Speiser

/// V_lambda (x) V_mu = sum over weights nu of V_mu of sign(w) V_{w(lambda + nu + rho) - rho}.
inline Decomposition tensor_decompose_klimyk(const IrrepLabel& lambda, const IrrepLabel& mu, int n)
{
    const auto weights = freudenthal_multiplicities(mu, n);
    const auto rho = detail::rho(n);
    const auto lam = detail::as_vec(lambda.highest_weight(), n);
    Decomposition out;
    for (const auto& [nu, m] : weights) {
        auto x = detail::as_vec(nu, n);
        for (int i = 0; i < n; ++i) x[i] += lam[i] + rho[i];
        const int sign = detail::reflect_to_dominant(x);
        if (sign == 0) continue;
        for (int i = 0; i < n; ++i) x[i] -= rho[i];
        out[IrrepLabel{x[0], n == 2 ? x[1] : 0}] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0) throw std::logic_error("klimyk: negative multiplicity");
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

/// Decomposes a (virtual) character given as a weight multiset by repeatedly
/// removing the highest remaining dominant weight's irreducible.
inline Decomposition decompose_character(WeightMultiset ch, int n)
{
    Decomposition out;
    for (;;) {
        std::optional<CartanWeight> best;
        for (const auto& [w, m] : ch) {
            if (m == 0 || !w.dominant(n)) continue;
            // highest in dominance order: maximal a + b, then maximal a
            if (!best || std::pair{w.a + w.b, w.a} > std::pair{best->a + best->b, best->a}) best = w;
        }
        if (!best) break;
        const std::int64_t m = ch[*best];
        const IrrepLabel l{best->a, best->b};
        out[l] += m;
        for (const auto& [w, k] : freudenthal_multiplicities(l, n)) ch[w] -= m * k;
    }
    for (const auto& [w, m] : ch)
        if (m != 0) throw std::logic_error("decompose_character: residual weight " + w.str());
    for (const auto& [l, m] : out)
        if (m < 0) throw std::logic_error("decompose_character: not an honest character");
    return out;
}

inline WeightMultiset tensor_character(const WeightMultiset& a, const WeightMultiset& b)
{
    WeightMultiset out;
    for (const auto& [x, m] : a)
        for (const auto& [y, k] : b) out[x + y] += m * k;
    return out;
}

/// Character of the k-th exterior power of a space with the given weight list.
inline WeightMultiset exterior_power_character(const std::vector<CartanWeight>& weights, int k)
{
    std::vector<std::map<CartanWeight, std::int64_t>> layers(k + 1);
    layers[0][{0, 0}] = 1;
    for (const auto& w : weights)
        for (int j = k; j >= 1; --j)
            for (const auto& [x, m] : layers[j - 1]) layers[j][x + w] += m;
    return layers[k];
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson

namespace detail {

struct LrState {
    std::vector<int> shape;
    std::vector<std::vector<int>> letters; // letters[i][r] = # of letter i+1 in row r
};

inline void lr_add_letter(const std::vector<int>& beta, std::size_t letter, LrState& st,
                          std::map<Partition, std::int64_t>& out, std::size_t max_len);

inline void lr_place_row(const std::vector<int>& beta, std::size_t letter, std::size_t row, int left,
                         const std::vector<int>& old_shape, LrState& st, std::map<Partition, std::int64_t>& out,
                         std::size_t max_len, int cum_this, int cum_prev)
{
    if (left == 0) {
        lr_add_letter(beta, letter + 1, st, out, max_len);
        return;
    }
    if (row > old_shape.size() || row >= max_len) return;
    const int current = row < old_shape.size() ? old_shape[row] : 0;
    const int cap = row == 0 ? current + left : old_shape[row - 1];
    // # of (letter-1) in rows < row, needed by the lattice condition
    const int prev_above = cum_prev;
    int prev_here = 0;
    if (letter > 0) prev_here = row < st.letters[letter - 1].size() ? st.letters[letter - 1][row] : 0;
    for (int add = std::min(left, cap - current); add >= 0; --add) {
        if (letter > 0 && cum_this + add > prev_above) continue;
        if (add > 0) {
            if (row == st.shape.size()) st.shape.push_back(0);
            st.shape[row] += add;
            if (st.letters[letter].size() <= row) st.letters[letter].resize(row + 1, 0);
            st.letters[letter][row] += add;
        }
        lr_place_row(beta, letter, row + 1, left - add, old_shape, st, out, max_len, cum_this + add,
                     prev_above + prev_here);
        if (add > 0) {
            st.shape[row] -= add;
            st.letters[letter][row] -= add;
            if (st.shape[row] == 0 && row + 1 == st.shape.size()) st.shape.pop_back();
        }
    }
}

inline void lr_add_letter(const std::vector<int>& beta, std::size_t letter, LrState& st,
                          std::map<Partition, std::int64_t>& out, std::size_t max_len)
{
    if (letter == beta.size()) {
        ++out[Partition{st.shape}];
        return;
    }
    const std::vector<int> old_shape = st.shape;
    lr_place_row(beta, letter, 0, beta[letter], old_shape, st, out, max_len, 0, 0);
}

} // namespace detail

/// s_alpha * s_beta = sum c^nu_{alpha beta} s_nu, restricted to length(nu) <= max_len.
inline std::map<Partition, std::int64_t> lr_coefficients(const Partition& alpha, const Partition& beta,
                                                        std::size_t max_len = 64)
{
    static std::mutex m;
    static std::map<std::tuple<Partition, Partition, std::size_t>, std::map<Partition, std::int64_t>> memo;
    {
        std::lock_guard lock(m);
        auto it = memo.find({alpha, beta, max_len});
        if (it != memo.end()) return it->second;
    }
    detail::LrState st;
    st.shape = alpha.parts;
    st.letters.assign(beta.parts.size(), {});
    std::map<Partition, std::int64_t> out;
    detail::lr_add_letter(beta.parts, 0, st, out, max_len);
    std::lock_guard lock(m);
    memo.emplace(std::tuple{alpha, beta, max_len}, out);
    return out;
}

inline bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts[i] > outer.parts[i]) return false;
    return true;
}

/// All partitions contained in the given one (including the empty partition).
inline std::vector<Partition> subpartitions(const Partition& outer)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t i, int bound) -> void {
        Partition p{cur};
        while (!p.parts.empty() && p.parts.back() == 0) p.parts.pop_back();
        if (i == outer.length()) {
            out.push_back(p);
            return;
        }
        for (int v = 0; v <= std::min(bound, outer.parts[i]); ++v) {
            cur.push_back(v);
            self(self, i + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, outer.length() ? outer.parts[0] : 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// s_{lambda / delta} = sum_alpha c^lambda_{delta alpha} s_alpha
inline std::map<Partition, std::int64_t> skew_expand(const Partition& lambda, const Partition& delta)
{
    std::map<Partition, std::int64_t> out;
    if (!contains(lambda, delta)) return out;
    const int size = lambda.size() - delta.size();
    for (const auto& alpha : subpartitions(lambda)) {
        if (alpha.size() != size) continue;
        const auto prod = lr_coefficients(delta, alpha, lambda.length());
        auto it = prod.find(lambda);
        if (it != prod.end() && it->second) out[alpha] += it->second;
    }
    return out;
}

/// Newell-Littlewood product: sum over zeta of (lambda/zeta) . (mu/zeta), unmodified labels.
inline std::map<Partition, std::int64_t> newell_littlewood(const Partition& lambda, const Partition& mu)
{
    std::map<Partition, std::int64_t> out;
    for (const auto& zeta : subpartitions(lambda)) {
        if (!contains(mu, zeta)) continue;
        const auto left = skew_expand(lambda, zeta);
        const auto right = skew_expand(mu, zeta);
        for (const auto& [a, ca] : left)
            for (const auto& [b, cb] : right)
                for (const auto& [nu, c] : lr_coefficients(a, b)) out[nu] += ca * cb * c;
    }
    return out;
}

/// Result of the modification rule: sign * V_label, or zero.
struct ModifiedLabel {
    int sign = 1;
    IrrepLabel label;
};

/// Modification rule for Sp(2n) labels longer than n: remove a boundary strip of
/// length h = 2l - 2n - 2 starting at the foot of the first column, with sign
/// (-1)^(columns of the strip), and repeat. In beta-number form
/// (beta_i = nu_i + l - i) the strip removal moves the bead at position h to 0.
inline std::optional<ModifiedLabel> modify_label(const Partition& raw, int n = 2)
{
    Partition nu = raw;
    while (!nu.parts.empty() && nu.parts.back() == 0) nu.parts.pop_back();
    int sign = 1;
    while (static_cast<int>(nu.length()) > n) {
        const int len = static_cast<int>(nu.length());
        const int h = 2 * len - 2 * n - 2;
        std::vector<int> beads(len);
        for (int i = 0; i < len; ++i) beads[i] = nu.parts[i] + len - 1 - i;
        auto it = std::find(beads.begin(), beads.end(), h);
        if (h == 0 || it == beads.end()) return std::nullopt;
        // beads strictly between 0 and h give the strip height
        int between = 0;
        for (int b : beads)
            if (b > 0 && b < h) ++between;
        if (between % 2) sign = -sign;
        *it = 0;
        std::sort(beads.begin(), beads.end(), std::greater<>());
        Partition next;
        for (int i = 0; i < len; ++i) next.parts.push_back(beads[i] - (len - 1 - i));
        while (!next.parts.empty() && next.parts.back() == 0) next.parts.pop_back();
        for (std::size_t i = 1; i < next.parts.size(); ++i)
            if (next.parts[i] > next.parts[i - 1] || next.parts[i] < 0) return std::nullopt;
        nu = next;
    }
    ModifiedLabel out;
    out.sign = sign;
    out.label = IrrepLabel{nu.length() > 0 ? nu.parts[0] : 0, nu.length() > 1 ? nu.parts[1] : 0};
    if (n == 1 && nu.length() > 1) return std::nullopt;
    return out;
}

inline Partition label_partition(const IrrepLabel& l)
{
    Partition p;
    if (l.p > 0) p.parts.push_back(l.p);
    if (l.q > 0) p.parts.push_back(l.q);
    return p;
}

/// Stable Littlewood-Richardson product followed by the modification rule.
inline SignedDecomposition tensor_decompose_stable(const IrrepLabel& lambda, const IrrepLabel& mu, int n = 2)
{
    SignedDecomposition out;
    for (const auto& [nu, c] : newell_littlewood(label_partition(lambda), label_partition(mu))) {
        const auto mod = modify_label(nu, n);
        if (!mod) continue;
        out[mod->label] += mod->sign * c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace gkf
