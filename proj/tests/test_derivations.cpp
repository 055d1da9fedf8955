#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace schubert;
using testutil::kv;

TEST(LeibnizD, Examples)
{
    EXPECT_EQ(leibniz_D(1, kv("e[2,4]", 2)), kv("e[3,4] + e[2,5]", 2));
    EXPECT_EQ(leibniz_D(2, kv("e[2,3,5]", 3)), kv("e[2,4,6] + e[2,3,7]", 3));
    const auto v = kv("3*e[1,4] - q*e[2,3]", 2);
    EXPECT_EQ(leibniz_D(0, v), v);
    EXPECT_THROW(leibniz_D(-1, v), invalid_input);
}

TEST(LeibnizD, ExpansionCountsCompositions)
{
    // binom(h + k - 1, k - 1) raw words per basis term
    EXPECT_EQ(leibniz_expansion(2, kv("e[2,3,5]", 3)).size(), 6u);
    EXPECT_EQ(leibniz_expansion(4, kv("e[1,2]", 2)).size(), 5u);
}

TEST(PieriD, Examples)
{
    EXPECT_EQ(pieri_D(1, kv("e[2,4]", 2)), kv("e[3,4] + e[2,5]", 2));
    // e^2 ^ e^3 and e^3 ^ e^2 cancel in the Leibniz expansion
    EXPECT_EQ(pieri_D(2, kv("e[1,2]", 2)), kv("e[1,4]", 2));
    EXPECT_EQ(leibniz_D(2, kv("e[1,2]", 2)), kv("e[1,4]", 2));
    for (int i = 1; i <= 5; ++i) {
        const auto block = KVector::basis(SchubertSymbol({i, i + 1}));
        EXPECT_EQ(pieri_D(3, block), KVector::basis(SchubertSymbol({i, i + 4})));
    }
    // on M, D_h shifts by h
    EXPECT_EQ(pieri_D(5, kv("e[3]", 1)), kv("e[8]", 1));
}

TEST(PieriD, WeightGrading)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const int h = static_cast<int>(rng() % 7);
        const auto sym = testutil::random_symbol(rng, k, 10);
        const auto image = pieri_D(h, KVector::basis(sym));
        for (const auto& [s, c] : image.terms()) EXPECT_EQ(s.weight(), sym.weight() + h);
    }
}

TEST(PieriD, AgreesWithLeibnizRandomized)
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const int h = static_cast<int>(rng() % 9);
        const auto v = testutil::random_kvector(rng, k, 12);
        ASSERT_EQ(pieri_D(h, v), leibniz_D(h, v)) << "h=" << h << " v=" << to_string(v);
    }
}

TEST(PieriD, Commutativity)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const auto v = testutil::random_kvector(rng, k, 9);
        const int i = 1 + static_cast<int>(rng() % 6);
        const int j = 1 + static_cast<int>(rng() % 6);
        EXPECT_EQ(pieri_D(i, pieri_D(j, v)), pieri_D(j, pieri_D(i, v)));
    }
}

TEST(PieriD, Linearity)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const auto a = testutil::random_kvector(rng, k, 9);
        const auto b = testutil::random_kvector(rng, k, 9);
        const int h = static_cast<int>(rng() % 6);
        EXPECT_EQ(pieri_D(h, a + b), pieri_D(h, a) + pieri_D(h, b));
        EXPECT_EQ(pieri_D(h, a * QInt(-4)), pieri_D(h, a) * QInt(-4));
        EXPECT_EQ(leibniz_D(h, a + b), leibniz_D(h, a) + leibniz_D(h, b));
    }
}

TEST(InverseComponents, LowDegrees)
{
    const auto e = inverse_components(3);
    ASSERT_EQ(e.size(), 4u);
    EXPECT_EQ(to_string(e[0]), "1");
    EXPECT_EQ(to_string(e[1]), "-D1");
    EXPECT_EQ(to_string(e[2]), "D1^2 - D2");
    EXPECT_EQ(e[3], DPolynomial::generator(1) * DPolynomial::generator(1) * DPolynomial::generator(1) * Integer(-1)
                        + DPolynomial::generator(1) * DPolynomial::generator(2) * Integer(2) - DPolynomial::generator(3));
    for (std::size_t m = 0; m < e.size(); ++m) EXPECT_EQ(e[m].homogeneous_degree(), static_cast<int>(m));
    // E_3 annihilates M
    EXPECT_TRUE(apply_operator(e[3], kv("e[1]", 1)).is_zero());
    EXPECT_TRUE(apply_operator(e[2], kv("e[4]", 1)).is_zero());
}

TEST(InverseComponents, GroupLaw)
{
    // sum_{i+j=d} E_i D_j is the identity in degree 0 and zero above
    const auto e = inverse_components(6);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const auto v = testutil::random_kvector(rng, k, 7);
        for (int d = 0; d <= 6; ++d) {
            KVector total(k);
            for (int i = 0; i <= d; ++i) total += apply_operator(e[static_cast<std::size_t>(i)], pieri_D(d - i, v));
            EXPECT_EQ(total, d == 0 ? v : KVector(k));
        }
    }
}

TEST(InverseComponents, VanishAboveDegree)
{
    const auto e = inverse_components(6);
    for (int k = 1; k <= 2; ++k)
        for (const auto& s : symbols_up_to_weight(k, 6))
            for (int h = k + 1; h <= 6; ++h)
                EXPECT_TRUE(apply_operator(e[static_cast<std::size_t>(h)], KVector::basis(s)).is_zero());
    // but not at h = k
    EXPECT_FALSE(apply_operator(e[2], kv("e[1,2]", 2)).is_zero());
}

TEST(ApplyOperator, Examples)
{
    const auto v = kv("e[1,2]", 2);
    EXPECT_EQ(apply_operator(DPolynomial::identity(), v), v);
    const auto p = DPolynomial::generator(1) * DPolynomial::generator(2) - DPolynomial::generator(3);
    EXPECT_EQ(apply_operator(p, v), kv("e[2,4]", 2));
    EXPECT_TRUE(apply_operator(DPolynomial(), v).is_zero());
}

TEST(IteratedD1, Examples)
{
    EXPECT_EQ(iterated_D1(4, kv("e[1,2]", 2)), kv("2*e[3,4] + 3*e[2,5] + e[1,6]", 2));
    EXPECT_EQ(iterated_D1(2, kv("e[1,2]", 2)), kv("e[2,3] + e[1,4]", 2));
    const auto v = kv("e[2,7] - e[1,3]", 2);
    EXPECT_EQ(iterated_D1(0, v), v);
}

TEST(IteratedD1, BinomialFormulaOnWedgeOfTwoVectors)
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = testutil::random_kvector(rng, 1, 8);
        const auto b = testutil::random_kvector(rng, 1, 8);
        for (int m = 0; m <= 6; ++m) {
            KVector expected(2);
            for (int i = 0; i <= m; ++i)
                expected += wedge(pieri_D(i, a), pieri_D(m - i, b)) * QInt(binomial(m, i));
            EXPECT_EQ(iterated_D1(m, wedge(a, b)), expected);
        }
    }
}

TEST(DPolynomial, Rendering)
{
    const auto d1 = DPolynomial::generator(1);
    const auto d2 = DPolynomial::generator(2);
    EXPECT_EQ(to_string(d1 * d2 - DPolynomial::generator(3)), "D1*D2 - D3");
    EXPECT_EQ(to_string(d1 * d1 - d2), "D1^2 - D2");
    EXPECT_EQ(to_string(DPolynomial::generator(0)), "1");
    EXPECT_EQ(to_string(DPolynomial::generator(-2)), "0");
    EXPECT_EQ(to_string(d2 * Integer(-3)), "-3*D2");
}
