#include "gkf/cochain.hpp"
#include "gkf/properties.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace gkf;

namespace {

GenId id(std::initializer_list<int> e) { return GeneratorTable::get(e.size() / 2).id_or_throw(ExponentVector(e)); }

Wedge wedge(std::vector<GenId> f)
{
    int sign = 0;
    return Wedge::from_factors(f, sign);
}

int parity_sign(std::vector<GenId> v)
{
    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) inversions += v[i] > v[j];
    return inversions % 2 ? -1 : 1;
}

} // namespace

TEST(Generators, TotalOrderByDegreeThenLex)
{
    const auto& t = GeneratorTable::get(2);
    for (GenId g = 1; g < 2000; ++g) {
        const auto& a = t.exponents(g - 1);
        const auto& b = t.exponents(g);
        EXPECT_TRUE(a.total() < b.total() || (a.total() == b.total() && a < b));
    }
    const auto [f, l] = t.degree_range(3);
    EXPECT_EQ(l - f, 20);
    EXPECT_EQ(t.exponents(t.id_or_throw(ExponentVector{2, 0, 0, 2})), (ExponentVector{2, 0, 0, 2}));
}

TEST(Wedge, CanonicalSignIsPermutationParity)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<GenId> v(6);
        std::iota(v.begin(), v.end(), GenId{30});
        std::shuffle(v.begin(), v.end(), rng);
        int sign = 0;
        const Wedge w = Wedge::from_factors(v, sign);
        EXPECT_EQ(sign, parity_sign(v));
        EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
    }
    int sign = 1;
    Wedge::from_factors({4, 7, 4}, sign);
    EXPECT_EQ(sign, 0);
}

TEST(Differential, GoldenCubicSplit)
{
    // d z_2002 = -z3000^z0003 - 3 z2001^z1002 - z2100^z0012 - 4 z1101^z1011 + z2010^z0102
    CochainBuilder b(2, 2);
    auto add = [&](std::initializer_list<int> x, std::initializer_list<int> y, int c) {
        int sign = 0;
        const Wedge w = Wedge::from_factors({id(x), id(y)}, sign);
        b.add(w, Rational(c * sign));
    };
    add({3, 0, 0, 0}, {0, 0, 0, 3}, -1);
    add({2, 0, 0, 1}, {1, 0, 0, 2}, -3);
    add({2, 1, 0, 0}, {0, 0, 1, 2}, -1);
    add({1, 1, 0, 1}, {1, 0, 1, 1}, -4);
    add({2, 0, 1, 0}, {0, 1, 0, 2}, 1);
    const Cochain expect = std::move(b).build();
    EXPECT_EQ(d_generator_cochain(2, ExponentVector{2, 0, 0, 2}, 3), expect);
    // degree-3 generators have no split into two factors of degree >= 3
    EXPECT_TRUE(d_generator_cochain(2, ExponentVector{1, 1, 1, 0}, 3).is_zero());
}

TEST(Differential, MinGenTwoAddsQuadraticSplits)
{
    const auto d2 = d_generator_cochain(2, ExponentVector{2, 0, 0, 2}, 2);
    const auto d3 = d_generator_cochain(2, ExponentVector{2, 0, 0, 2}, 3);
    const auto extra = d2 - d3;
    EXPECT_FALSE(extra.is_zero());
    const auto& t = GeneratorTable::get(2);
    for (const auto& [w, c] : extra.terms()) EXPECT_EQ(t.degree(w[0]), 2);
}

TEST(Slices, EnumerationMatchesBinomialCount)
{
    for (int w : {2, 3, 4, 5, 6})
        for (int m = 0; m <= w; ++m) {
            const auto s = slice(2, w, m);
            EXPECT_EQ(s.dim(), slice_dimension(2, w, m)) << w << " " << m;
        }
    EXPECT_EQ(slice(1, 6, 6).dim(), 0u);
    EXPECT_EQ(slice(1, 4, 4).dim(), 1u);
}

TEST(Slices, CoordinateRoundTrip)
{
    const auto s = slice(2, 4, 3);
    std::vector<SparseVector::Entry> pairs;
    for (Index i = 0; i < s.dim(); i += 97) pairs.emplace_back(i, Rational(static_cast<std::int64_t>(i % 11) - 5, 3));
    const SparseVector v = SparseVector::from_pairs(s.dim(), pairs);
    EXPECT_EQ(s.coordinates(s.cochain(v)), v);
    EXPECT_THROW(s.coordinates(single_term(2, wedge({id({3, 0, 0, 0})}))), std::logic_error);
}

TEST(Slices, DSquaredZeroAsMatrices)
{
    for (int w : {2, 3, 4})
        for (int m = 1; m + 2 <= w; ++m) {
            const auto a = slice(2, w, m), b = slice(2, w, m + 1), c = slice(2, w, m + 2);
            const auto prod = d_matrix(b, c) * d_matrix(a, b);
            EXPECT_TRUE(prod.is_zero()) << w << " " << m;
        }
}

TEST(Slices, DSquaredZeroSampled)
{
    for (int w : {5, 6})
        for (int m = 1; m < w; ++m) {
            const auto s = slice(2, w, m);
            EXPECT_EQ(checks::d_squared_zero(s, checks::sample_indices(s.dim(), 40), 3), "");
            EXPECT_EQ(checks::d_squared_zero(s, checks::sample_indices(s.dim(), 15), 2), "");
        }
}

TEST(Slices, DPreservesWeights)
{
    for (int w : {2, 4, 6})
        for (int m = 1; m < w; ++m) {
            const auto s = slice(2, w, m);
            EXPECT_EQ(checks::weight_preserved(s, checks::sample_indices(s.dim(), 60), 3), "");
            EXPECT_EQ(checks::weight_preserved(s, checks::sample_indices(s.dim(), 20), 2), "");
        }
}

TEST(Slices, NEqualsOne)
{
    EXPECT_EQ(GeneratorTable::get(1).degree_range(3).second - GeneratorTable::get(1).degree_range(3).first, 4);
    for (int w : {2, 4})
        for (int m = 1; m + 1 < w; ++m) {
            const auto s = slice(1, w, m);
            EXPECT_EQ(checks::d_squared_zero(s, checks::sample_indices(s.dim(), 100), 3), "");
        }
}

TEST(Rendering, AppendixNotation)
{
    const auto& t = GeneratorTable::get(2);
    EXPECT_EQ(render_generator(t, id({1, 2, 0, 3})), "Z^{(6)}_{120}");
    const Cochain c = single_term(2, wedge({id({0, 0, 0, 3}), id({3, 0, 0, 0})}), Rational(-2));
    EXPECT_EQ(render_cochain(c), "-2 Z^{(3)}_{000} ^ Z^{(3)}_{300}");
}
