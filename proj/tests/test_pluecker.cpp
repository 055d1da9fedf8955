#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_util.hpp"

using namespace schubert;

namespace {

IntegerMatrix parse(const std::string& s)
{
    std::istringstream in(s);
    return IntegerMatrix::parse(in);
}

} // namespace

TEST(IntegerMatrix, Parse)
{
    const auto m = parse("1 0 0 0\n\n0 1 0 0\n");
    EXPECT_EQ(m.rows(), 2);
    EXPECT_EQ(m.cols(), 4);
    EXPECT_THROW(parse("1 2\n3\n"), invalid_input);
    EXPECT_THROW(parse("1 x\n"), invalid_input);
    EXPECT_THROW(parse("\n"), invalid_input);
    EXPECT_EQ(parse("-3 +4\n").at(0, 1), 4);
}

TEST(IntegerMatrix, RankAndDeterminant)
{
    EXPECT_EQ(parse("1 2 3\n2 4 6\n").rank(), 1);
    EXPECT_EQ(parse("1 2\n3 4\n").determinant(), -2);
    EXPECT_EQ(parse("0 1\n1 0\n").determinant(), -1);
    EXPECT_EQ(parse("2 0 0\n0 3 0\n0 0 4\n").determinant(), 24);
    EXPECT_THROW(parse("1 2 3\n").determinant(), invalid_input);
}

TEST(Pluecker, IdentityBlock)
{
    const auto m = parse("1 0 0 0\n0 1 0 0\n");
    EXPECT_EQ(schubert_symbol_of(m), SchubertSymbol({1, 2}));
    const auto coords = pluecker_coordinates(m);
    ASSERT_EQ(coords.size(), 6u);
    EXPECT_EQ(coords.front().first, SchubertSymbol({1, 2}));
    EXPECT_EQ(coords.front().second, 1);
    for (std::size_t i = 1; i < coords.size(); ++i) EXPECT_EQ(coords[i].second, 0);
}

TEST(Pluecker, PivotsTwoAndFour)
{
    const auto m = parse("0 1 2 0\n0 0 0 3\n");
    const auto sym = schubert_symbol_of(m);
    EXPECT_EQ(sym, SchubertSymbol({2, 4}));
    EXPECT_EQ(symbol_to_partition(sym).weight(), 3);
    const auto cert = bruhat_certificate(m, sym);
    EXPECT_TRUE(cert.holds);
    EXPECT_EQ(cert.symbol_minor, 3);
}

TEST(Pluecker, RankDeficient)
{
    EXPECT_THROW(schubert_symbol_of(parse("1 2 3 4\n2 4 6 8\n")), rank_deficient);
    EXPECT_THROW(schubert_symbol_of(parse("1 0\n0 1\n1 1\n")), rank_deficient);
}

TEST(Pluecker, CertificateFailsForNonMinimalSymbol)
{
    const auto m = parse("1 0 0 0\n0 1 0 0\n");
    const auto cert = bruhat_certificate(m, SchubertSymbol({2, 4}));
    EXPECT_FALSE(cert.holds);
}

TEST(Pluecker, GreedySymbolIsBruhatMinimalRandomized)
{
    // rows of random full-rank matrices; the greedy symbol has a nonzero
    // minor and every componentwise smaller symbol a zero one
    std::mt19937 rng(2024);
    int tested = 0;
    while (tested < 100) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const int n = k + 1 + static_cast<int>(rng() % 4);
        IntegerMatrix m(k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = rng() % 3 == 0 ? static_cast<int>(rng() % 5) - 2 : 0;
        if (m.rank() < k) continue;
        ++tested;
        const auto cert = bruhat_certificate(m, schubert_symbol_of(m));
        EXPECT_TRUE(cert.holds);
        EXPECT_NE(cert.symbol_minor, 0);
    }
}

TEST(Bruhat, Order)
{
    EXPECT_TRUE(bruhat_leq(SchubertSymbol({1, 3}), SchubertSymbol({2, 4})));
    EXPECT_FALSE(bruhat_leq(SchubertSymbol({1, 4}), SchubertSymbol({2, 3})));
    EXPECT_FALSE(bruhat_leq(SchubertSymbol({1}), SchubertSymbol({1, 2})));
}
