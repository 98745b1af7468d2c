#pragma once

// Partitions of the weight and the cochain shapes (k_3, k_4, ...) they index.
//
// A cochain shape with min_gen = g counts how many dual generators of each
// polynomial degree i >= g appear in a wedge monomial. A generator of degree i
// has weight i - 2, so a shape of degree m and weight w is the same thing as a
// partition of w into m parts of size >= g - 2 (zero parts allowed for g = 2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkf {

struct Partition {
    std::vector<int> parts; // weakly decreasing

    [[nodiscard]] int size() const
    {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    [[nodiscard]] std::size_t length() const { return parts.size(); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    os << '(';
    for (std::size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
    return os << ')';
}

struct CochainShape {
    int min_gen = 3;
    std::map<int, int> multiplicity; // generator degree -> count, zero counts omitted

    [[nodiscard]] int degree() const
    {
        int m = 0;
        for (const auto& [i, k] : multiplicity) m += k;
        return m;
    }
    [[nodiscard]] int weight() const
    {
        int w = 0;
        for (const auto& [i, k] : multiplicity) w += k * (i - 2);
        return w;
    }
    [[nodiscard]] int count(int generator_degree) const
    {
        auto it = multiplicity.find(generator_degree);
        return it == multiplicity.end() ? 0 : it->second;
    }

    friend bool operator==(const CochainShape&, const CochainShape&) = default;

    /// e.g. "3:2,4:1" for Lambda^2 S_3 (x) S_4
    [[nodiscard]] std::string str() const
    {
        std::string s;
        for (const auto& [i, k] : multiplicity) {
            if (!s.empty()) s += ',';
            s += std::to_string(i) + ':' + std::to_string(k);
        }
        return s;
    }

    static CochainShape parse(const std::string& text, int min_gen = 3)
    {
        CochainShape shape{min_gen, {}};
        std::size_t pos = 0;
        while (pos < text.size()) {
            const std::size_t comma = text.find(',', pos);
            const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            const std::size_t colon = item.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("shape item must be degree:count, got " + item);
            const int deg = std::stoi(item.substr(0, colon));
            const int k = std::stoi(item.substr(colon + 1));
            if (deg < min_gen || k < 0) throw std::invalid_argument("shape item out of range: " + item);
            if (k > 0) shape.multiplicity[deg] += k;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return shape;
    }
};

namespace detail {

inline void partitions_rec(int remaining, int parts_left, int max_part, int min_part, std::vector<int>& cur,
                           std::vector<Partition>& out)
{
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(Partition{cur});
        return;
    }
    // descending first part keeps the output lexicographically descending
    const int hi = std::min(max_part, remaining - min_part * (parts_left - 1));
    for (int part = hi; part >= min_part; --part) {
        if (part * parts_left < remaining) break;
        cur.push_back(part);
        partitions_rec(remaining - part, parts_left - 1, part, min_part, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of w into exactly m parts of size >= min_part, lexicographically descending.
inline std::vector<Partition> partitions_of(int w, int m, int min_part = 1)
{
    if (w < 0 || m < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(w, m, w, min_part, cur, out);
    return out;
}

/// k_{l + 2} = #{parts equal to l}.
inline CochainShape shape_from_partition(const Partition& p, int min_gen = 3)
{
    CochainShape s{min_gen, {}};
    for (int part : p.parts) {
        if (part + 2 < min_gen) throw std::invalid_argument("partition part below the minimum generator degree");
        ++s.multiplicity[part + 2];
    }
    return s;
}

inline Partition partition_from_shape(const CochainShape& s)
{
    Partition p;
    for (auto it = s.multiplicity.rbegin(); it != s.multiplicity.rend(); ++it)
        for (int k = 0; k < it->second; ++k) p.parts.push_back(it->first - 2);
    return p;
}

/// Shapes of degree m and weight w, ordered descending-lexicographically on
/// (k_min_gen, k_min_gen+1, ...).
inline std::vector<CochainShape> shapes_for(int w, int m, int min_gen = 3)
{
    if (min_gen < 2) throw std::invalid_argument("shapes_for: min_gen must be >= 2");
    std::vector<CochainShape> out;
    for (const auto& p : partitions_of(w, m, min_gen - 2)) out.push_back(shape_from_partition(p, min_gen));
    const int top = w + 2;
    auto key = [&](const CochainShape& s) {
        std::vector<int> k;
        for (int i = min_gen; i <= top; ++i) k.push_back(s.count(i));
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const CochainShape& a, const CochainShape& b) { return key(a) > key(b); });
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// dim S_q = (q + 2n - 1)! / (q! (2n - 1)!)
inline std::uint64_t dim_generators(int n, int q) { return binomial(static_cast<std::uint64_t>(q + 2 * n - 1), static_cast<std::uint64_t>(2 * n - 1)); }

/// Product over generator degrees of binom(dim S_i, k_i).
inline std::uint64_t shape_dimension(int n, const CochainShape& s)
{
    std::uint64_t d = 1;
    for (const auto& [i, k] : s.multiplicity) d *= binomial(dim_generators(n, i), static_cast<std::uint64_t>(k));
    return d;
}

inline std::uint64_t slice_dimension(int n, int w, int m, int min_gen = 3)
{
    std::uint64_t total = 0;
    for (const auto& s : shapes_for(w, m, min_gen)) total += shape_dimension(n, s);
    return total;
}

} // namespace gkf
