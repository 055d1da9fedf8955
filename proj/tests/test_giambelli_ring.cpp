#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace schubert;
using testutil::kv;

namespace {

DPolynomial D(int i) { return DPolynomial::generator(i); }

} // namespace

TEST(Determinant, IntegerMatricesBothPaths)
{
    using M = std::vector<std::vector<Integer>>;
    EXPECT_EQ(determinant<Integer>(M{}, 1, 0), 1);
    EXPECT_EQ(determinant<Integer>(M{{2, 3}, {1, 4}}, 1, 0), 5);
    // 7x7 goes through the Laplace branch; compare with Bareiss
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int size = 5 + trial % 4;
        M m(static_cast<std::size_t>(size), std::vector<Integer>(static_cast<std::size_t>(size)));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
        EXPECT_EQ(determinant<Integer>(m, 1, 0), IntegerMatrix(m).determinant());
    }
}

TEST(GiambelliDet, Examples)
{
    EXPECT_EQ(to_string(giambelli_det(Partition({2, 1}), 2)), "D1*D2 - D3");
    EXPECT_EQ(giambelli_det(Partition({}), 3), DPolynomial::identity());
    EXPECT_EQ(to_string(giambelli_det(Partition({1, 1}), 2)), "D1^2 - D2");
    EXPECT_EQ(giambelli_det(Partition({4}), 3), D(4));
    EXPECT_EQ(giambelli_det(Partition({2, 1}), 2).homogeneous_degree(), 3);
    EXPECT_THROW(giambelli_det(Partition({1, 1, 1}), 2), invalid_input);
    EXPECT_THROW(giambelli_det(Partition({}), 0), invalid_input);
}

TEST(GiambelliDet, ActsOnFundamentalVector)
{
    for (int k = 1; k <= 4; ++k)
        for (const auto& lambda : partitions_in_box(k, 4))
            EXPECT_EQ(apply_operator(giambelli_det(lambda, k), KVector::fundamental(k)),
                      KVector::basis(partition_to_symbol(lambda, k)))
                << to_string(lambda) << " k=" << k;
}

TEST(ReduceGenerator, Examples)
{
    EXPECT_EQ(reduce_generator(2, 1), D(1) * D(1));
    EXPECT_EQ(reduce_generator(3, 2), D(1) * D(2) * Integer(2) - D(1) * D(1) * D(1));
    EXPECT_EQ(reduce_generator(4, 2), D(1) * D(1) * D(2) + D(2) * D(2) - D(1) * D(1) * D(1) * D(1));
    EXPECT_THROW(reduce_generator(2, 2), invalid_input);
    EXPECT_THROW(reduce_generator(3, 0), invalid_input);
}

TEST(ReduceGenerator, SoundOnExteriorPowers)
{
    for (int k = 1; k <= 3; ++k)
        for (int h = k + 1; h <= k + 4; ++h) {
            const auto r = reduce_generator(h, k);
            EXPECT_LE(r.max_generator(), k);
            EXPECT_EQ(r.homogeneous_degree(), h);
            for (const auto& s : symbols_up_to_weight(k, 6)) EXPECT_EQ(apply_operator(r, KVector::basis(s)), pieri_D(h, KVector::basis(s)));
        }
}

TEST(ReduceGenerators, LeavesSmallGeneratorsAlone)
{
    const auto p = D(1) * D(2) - D(3);
    EXPECT_EQ(reduce_generators(p, 3), p);
    EXPECT_LE(reduce_generators(p, 2).max_generator(), 2);
}

TEST(YPolynomials, LowTerms)
{
    const auto y = y_polynomials(4, 2);
    ASSERT_EQ(y.size(), 5u);
    EXPECT_EQ(y[0], DPolynomial::identity());
    EXPECT_EQ(y[1], D(1));
    EXPECT_EQ(y[2], D(1) * D(1) - D(2));
    EXPECT_EQ(y[3], D(1) * D(1) * D(1) - D(1) * D(2) * Integer(2));
    EXPECT_EQ(y[4], D(1) * D(1) * D(1) * D(1) - D(1) * D(1) * D(2) * Integer(3) + D(2) * D(2));
    EXPECT_THROW(y_polynomials(3, 3), invalid_input);
}

TEST(Presentation, ClassicalAndQuantum)
{
    for (auto [k, n] : {std::pair{1, 4}, {2, 4}, {2, 5}, {3, 6}, {1, 2}, {2, 3}}) {
        for (Mode mode : {Mode::classical, Mode::quantum}) {
            const auto report = verify_presentation(k, n, mode);
            EXPECT_TRUE(report.all_hold()) << k << "," << n << " " << to_string(mode);
            for (const auto& r : report.checked_relations) EXPECT_TRUE(r.witness.is_zero()) << r.name;
        }
    }
}

TEST(Presentation, RelationNames)
{
    const auto report = verify_presentation(2, 4, Mode::classical);
    std::vector<std::string> names;
    for (const auto& r : report.checked_relations) names.push_back(r.name);
    EXPECT_EQ(names, (std::vector<std::string>{"D3", "D4", "Y3", "Y4", "E3 identity", "E4 identity"}));

    const auto q = verify_presentation(1, 4, Mode::quantum);
    EXPECT_EQ(q.checked_relations.front().polynomial, "D1^4 = q");
}

TEST(Presentation, QuantumRelationsFailClassically)
{
    // D_n acts as zero classically, so the quantum relation D_n = (-1)^{k-1} q
    // must be rejected on the classical quotient.
    const auto ctx = GrassmannContext::classical(2, 4);
    const auto r = detail::action_check("D4", D(4), ctx, KVector::fundamental(2) * ctx.wrap_factor());
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.witness, kv("q*e[1,2]", 2));
}

TEST(Presentation, RejectsBadArguments)
{
    EXPECT_THROW(verify_presentation(0, 4, Mode::classical), invalid_input);
    EXPECT_THROW(verify_presentation(5, 4, Mode::classical), invalid_input);
    EXPECT_THROW(verify_presentation(2, 4, Mode::infinite), invalid_input);
}

TEST(OperatorRing, MonomialsIndependentAndUnimodular)
{
    for (int k = 1; k <= 3; ++k) {
        const auto o = checks::operator_independence(k, 5);
        EXPECT_TRUE(o.passed) << o.detail;
        EXPECT_EQ(o.cases, 6u);
    }
}

TEST(OperatorRing, OutsideTheBoxLiesInTheIdeal)
{
    for (auto [k, n] : {std::pair{1, 4}, {2, 4}, {2, 5}, {3, 6}}) {
        const auto o = checks::ideal_membership(k, n);
        EXPECT_TRUE(o.passed) << o.detail;
        EXPECT_GT(o.cases, 0u);
    }
}
