#include "gkf/characters.hpp"
#include "gkf/sp_invariants.hpp"
#include "reference_data.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gkf;
using testdata::dec;

namespace {

// GL(4) dimension of a Schur module: prod_{i<j} (l_i - l_j + j - i) / (j - i)
std::int64_t gl4_dim(const Partition& p)
{
    if (p.length() > 4) return 0;
    std::vector<int> l(4, 0);
    for (std::size_t i = 0; i < p.length(); ++i) l[i] = p.parts[i];
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            num *= l[i] - l[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

std::vector<Partition> partitions_up_to(int size)
{
    std::vector<Partition> out{Partition{}};
    for (int s = 1; s <= size; ++s)
        for (int len = 1; len <= s; ++len)
            for (const auto& p : partitions_of(s, len)) out.push_back(p);
    return out;
}

Decomposition character_of(int n, const std::vector<CochainShape>& shapes)
{
    WeightMultiset ch;
    for (const auto& s : shapes)
        for (const auto& [x, k] : shape_character(n, s)) ch[x] += k;
    return decompose_character(ch, n);
}

Decomposition shape_decomposition(const char* shape) { return character_of(2, {CochainShape::parse(shape)}); }
Decomposition slice_decomposition(int w, int m) { return character_of(2, shapes_for(w, m)); }

} // namespace

TEST(WeylDim, ClosedFormAndSmallCases)
{
    EXPECT_EQ(weyl_dim({0, 0}, 2), 1);
    EXPECT_EQ(weyl_dim({1, 0}, 2), 4);
    EXPECT_EQ(weyl_dim({1, 1}, 2), 5);
    EXPECT_EQ(weyl_dim({2, 0}, 2), 10);
    EXPECT_EQ(weyl_dim({2, 2}, 2), 14);
    EXPECT_EQ(weyl_dim({5, 1}, 2), 105);
    EXPECT_EQ(weyl_dim({4, 0}, 1), 5);
    // V_q is the space of degree-q polynomials in four variables
    for (int q = 0; q <= 12; ++q) EXPECT_EQ(weyl_dim({q, 0}, 2), static_cast<std::int64_t>(dim_generators(2, q)));
    EXPECT_THROW(weyl_dim({1, 2}, 2), std::invalid_argument);
}

TEST(Freudenthal, TotalMassIsWeylDimension)
{
    for (int p = 0; p <= 12; ++p)
        for (int q = 0; q <= p; ++q) {
            std::int64_t total = 0;
            for (const auto& [w, m] : freudenthal_multiplicities({p, q}, 2)) total += m;
            EXPECT_EQ(total, weyl_dim({p, q}, 2)) << p << "," << q;
        }
    for (int p = 0; p <= 10; ++p) EXPECT_EQ(static_cast<std::int64_t>(freudenthal_multiplicities({p, 0}, 1).size()), p + 1);
}

TEST(Freudenthal, SmallDiagrams)
{
    EXPECT_EQ(freudenthal_multiplicities({0, 0}, 2), (WeightMultiset{{{0, 0}, 1}}));
    const WeightMultiset v1{{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    EXPECT_EQ(freudenthal_multiplicities({1, 0}, 2), v1);
    // V_{1,1}: four short roots plus a 1-dimensional zero weight space
    const auto v11 = freudenthal_multiplicities({1, 1}, 2);
    EXPECT_EQ(v11.at({0, 0}), 1);
    EXPECT_EQ(v11.size(), 5u);
}

TEST(Freudenthal, AgreesWithGeneratorWeights)
{
    // the weights of S_q, read off monomials, form the diagram of V_q
    for (int q = 1; q <= 8; ++q) {
        const CochainShape s{3, {{q, 1}}};
        EXPECT_EQ(shape_character(2, s), freudenthal_multiplicities({q, 0}, 2)) << q;
    }
}

TEST(LittlewoodRichardson, UnitAndPieri)
{
    const Partition empty{}, one{{1}}, col2{{1, 1}};
    EXPECT_EQ(lr_coefficients(empty, Partition{{3, 1}}), (std::map<Partition, std::int64_t>{{Partition{{3, 1}}, 1}}));
    const auto r = lr_coefficients(one, col2);
    EXPECT_EQ(r.at(Partition{{2, 1}}), 1);
    EXPECT_EQ(r.at(Partition{{1, 1, 1}}), 1);
    EXPECT_EQ(r.size(), 2u);
    // c^{(3,2,1)}_{(2,1),(2,1)} = 2
    EXPECT_EQ(lr_coefficients(Partition{{2, 1}}, Partition{{2, 1}}).at(Partition{{3, 2, 1}}), 2);
}

TEST(LittlewoodRichardson, SymmetricAndGl4Consistent)
{
    const auto ps = partitions_up_to(4);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            const auto ab = lr_coefficients(a, b);
            EXPECT_EQ(ab, lr_coefficients(b, a));
            std::int64_t sum = 0;
            for (const auto& [nu, c] : ab) {
                EXPECT_EQ(nu.size(), a.size() + b.size());
                sum += c * gl4_dim(nu);
            }
            EXPECT_EQ(sum, gl4_dim(a) * gl4_dim(b)) << a << " " << b;
        }
}

TEST(Modification, KnownIdentities)
{
    auto mod = [](std::vector<int> p) { return modify_label(Partition{std::move(p)}, 2); };
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= i; ++j) {
            const auto m = mod({i, j, 1, 1});
            ASSERT_TRUE(m);
            EXPECT_EQ(m->sign, -1);
            EXPECT_EQ(m->label, (IrrepLabel{i, j}));
            for (int k = 2; k <= j; ++k) {
                EXPECT_FALSE(mod({i, j, k, 1}));
                EXPECT_FALSE(mod({i, j, k, 2}));
            }
        }
    EXPECT_FALSE(mod({4, 3, 2, 1}));
    EXPECT_FALSE(mod({5, 3, 3, 3}));
    const auto id = mod({5, 1});
    ASSERT_TRUE(id);
    EXPECT_EQ(id->sign, 1);
    EXPECT_EQ(id->label, (IrrepLabel{5, 1}));
    // length-3 labels have an empty strip and vanish
    EXPECT_FALSE(mod({3, 2, 1}));
}

TEST(Tensor, ReferenceProductsBothMethods)
{
    for (const auto& c : testdata::tensor_cases()) {
        const auto expect = dec(c.expect);
        EXPECT_EQ(tensor_decompose_klimyk(c.a, c.b, 2), expect) << c.a << " x " << c.b;
        EXPECT_EQ(tensor_decompose_stable(c.a, c.b, 2), expect) << c.a << " x " << c.b;
        EXPECT_EQ(total_dimension(expect, 2), weyl_dim(c.a, 2) * weyl_dim(c.b, 2));
    }
    EXPECT_EQ(testdata::tensor_cases().size(), 22u);
}

TEST(Tensor, RandomPairsAgree)
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> part(0, 8);
    for (int t = 0; t < 50; ++t) {
        int p1 = part(rng), q1 = part(rng), p2 = part(rng), q2 = part(rng);
        if (p1 < q1) std::swap(p1, q1);
        if (p2 < q2) std::swap(p2, q2);
        const IrrepLabel a{p1, q1}, b{p2, q2};
        const auto k = tensor_decompose_klimyk(a, b, 2);
        EXPECT_EQ(tensor_decompose_stable(a, b, 2), k) << a << " x " << b;
        EXPECT_EQ(total_dimension(k, 2), weyl_dim(a, 2) * weyl_dim(b, 2));
        EXPECT_EQ(tensor_decompose_klimyk(b, a, 2), k);
    }
}

TEST(Tensor, RankOne)
{
    // Clebsch-Gordan for SL(2) = Sp(2)
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            Decomposition expect;
            for (int c = std::abs(a - b); c <= a + b; c += 2) expect[{c, 0}] = 1;
            EXPECT_EQ(tensor_decompose_klimyk({a, 0}, {b, 0}, 1), expect);
            EXPECT_EQ(tensor_decompose_stable({a, 0}, {b, 0}, 1), expect);
        }
}

TEST(Tensor, RawLengthFourTermsOfExteriorProduct)
{
    // stable product of the decomposed factors before modification
    std::map<Partition, std::int64_t> raw;
    for (const auto& [l1, m1] : dec(testdata::kLambda2S3))
        for (const auto& [l2, m2] : dec(testdata::kLambda2S4))
            for (const auto& [nu, c] : newell_littlewood(label_partition(l1), label_partition(l2))) raw[nu] += m1 * m2 * c;
    std::map<Partition, std::int64_t> got, expect;
    for (const auto& [nu, c] : raw) {
        EXPECT_LE(nu.length(), 4u);
        if (nu.length() == 4 && !(nu.parts[2] == 1 && nu.parts[3] == 1)) got[nu] = c;
    }
    for (const auto& [p, c] : testdata::raw_length_four()) expect[Partition{p}] = c;
    EXPECT_EQ(got, expect);
}

TEST(Characters, ExteriorPowersOfGenerators)
{
    EXPECT_EQ(shape_decomposition("3:2"), dec(testdata::kLambda2S3));
    EXPECT_EQ(shape_decomposition("4:2"), dec(testdata::kLambda2S4));
    EXPECT_EQ(shape_decomposition("5:2"), dec(testdata::kLambda2S5));
    EXPECT_EQ(shape_decomposition("3:3"), dec(testdata::kLambda3S3));
    EXPECT_EQ(shape_decomposition("3:4"), dec(testdata::kLambda4S3));
    EXPECT_EQ(shape_decomposition("3:6"), dec(testdata::kLambda6S3));
}

TEST(Characters, ReferenceSliceDecompositions)
{
    EXPECT_EQ(slice_decomposition(4, 2), dec(testdata::kC2W4));
    EXPECT_EQ(slice_decomposition(4, 3), dec(testdata::kC3W4));
    EXPECT_EQ(slice_decomposition(6, 2), dec(testdata::kC2W6));
    EXPECT_EQ(slice_decomposition(6, 3), dec(testdata::kC3W6));
    EXPECT_EQ(shape_decomposition("3:3,5:1"), dec(testdata::kLambda3S3xS5));
    EXPECT_EQ(shape_decomposition("3:2,4:2"), dec(testdata::kLambda2S3xLambda2S4));
    EXPECT_EQ(slice_decomposition(6, 4), dec(testdata::kC4W6));
    EXPECT_EQ(slice_decomposition(6, 5), dec(testdata::kC5W6));
    EXPECT_EQ(total_dimension(dec(testdata::kLambda2S3xLambda2S4), 2), 190 * 595);
}

TEST(Characters, TrivialMultiplicities)
{
    EXPECT_EQ((slice_decomposition(2, 2)[{0, 0}]), 1);
    EXPECT_EQ((slice_decomposition(4, 3)[{0, 0}]), 1);
    EXPECT_EQ((slice_decomposition(4, 4)[{0, 0}]), 3);
    EXPECT_EQ((slice_decomposition(6, 2)[{0, 0}]), 1);
    EXPECT_EQ((slice_decomposition(6, 3)[{0, 0}]), 1);
    EXPECT_EQ((slice_decomposition(6, 4)[{0, 0}]), 0);
    EXPECT_EQ((slice_decomposition(6, 5)[{0, 0}]), 4);
    EXPECT_EQ((slice_decomposition(6, 6)[{0, 0}]), 4);
}

TEST(Characters, OddWeightHasNoInvariants)
{
    for (int w : {1, 3, 5})
        for (int m = 1; m <= w; ++m) EXPECT_EQ((slice_decomposition(w, m)[{0, 0}]), 0) << w << " " << m;
}

TEST(Labels, ParseAndFormat)
{
    EXPECT_EQ(IrrepLabel::parse("3,1"), (IrrepLabel{3, 1}));
    EXPECT_EQ(IrrepLabel::parse("V4"), (IrrepLabel{4, 0}));
    EXPECT_EQ(IrrepLabel::parse("4,0").str(), "V4");
    EXPECT_THROW(IrrepLabel::parse("1,2"), std::invalid_argument);
    EXPECT_THROW(IrrepLabel::parse("x"), std::invalid_argument);
    EXPECT_EQ(format_decomposition(dec("2V2 + V3_1")), "2V2 + V3,1");
}
