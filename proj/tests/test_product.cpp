#include "symcoh/expr.hpp"
#include "symcoh/product.hpp"
#include "symcoh/random.hpp"

#include <gtest/gtest.h>

using namespace symcoh;

namespace {
const SpaceSpec kTriple{FactorSpec::sym(5, 3), FactorSpec::sym(5, 3), FactorSpec::sym(5, 4)};
}

TEST(Product, InjectEta) {
    SpaceSpec one{FactorSpec::sym(5, 4)};
    EXPECT_EQ(inject(gen_eta(one, 0), kTriple, 2), gen_eta(kTriple, 2));
}

TEST(Product, ThetaIsSumOfSigmas) {
    CohClass s(kTriple);
    for (int i = 1; i <= 5; ++i) s += gen_sigma(kTriple, 0, i);
    EXPECT_EQ(gen_theta(kTriple, 0), s);
}

TEST(Product, DeltaHasTenTerms) {
    CohClass d = delta(kTriple, 0, 2);
    EXPECT_EQ(d.size(), 10u);
    EXPECT_EQ(d.degree(), 2);
    EXPECT_EQ(d, delta(kTriple, 2, 0));
    EXPECT_THROW(delta(kTriple, 1, 1), std::invalid_argument);
}

TEST(Product, KoszulSignAcrossFactors) {
    // xi on factor 2 times xi on factor 1 anticommutes into canonical order
    CohClass a = gen_xi(kTriple, 1, 1), b = gen_xi(kTriple, 0, 2);
    EXPECT_EQ(mul(a, b), -mul(b, a));
}

TEST(Product, KunnethComponentsPartitionDelta13Squared) {
    CohClass d = delta(kTriple, 0, 2);
    CohClass sq = mul(d, d);
    std::set<MultiDegree> mds;
    for (const auto& [m, c] : sq.terms()) mds.insert(multidegree(m));
    CohClass sum(kTriple);
    for (const auto& md : mds) sum += kunneth_component(sq, md);
    EXPECT_EQ(sum, sq);
    EXPECT_TRUE(kunneth_component(sq, {1, 0, 0}).is_zero());
}

TEST(Product, InjectCommutesWithIntegrate) {
    std::mt19937_64 rng(3);
    SpaceSpec s1{FactorSpec::sym(5, 1)}, s2{FactorSpec::sym(5, 2)};
    SpaceSpec prod{FactorSpec::sym(5, 1), FactorSpec::sym(5, 2)};
    for (int t = 0; t < 50; ++t) {
        int ka = static_cast<int>(rng() % 3);
        CohClass a = random_class(s1, ka, rng, 2), b = random_class(s2, 6 - ka, rng, 3);
        CohClass ab = mul(inject(a, prod, 0), inject(b, prod, 1));
        EXPECT_EQ(integrate(ab), integrate(a) * integrate(b));
    }
}

TEST(Product, KunnethDimension) {
    SpaceSpec p{FactorSpec::sym(5, 1), FactorSpec::sym(5, 1)};
    EXPECT_EQ(kunneth_dimension(p, 1), 20);
    EXPECT_EQ(kunneth_dimension(p, 2), 102);
}

TEST(Product, PlaceRejectsMismatchedFactor) {
    SpaceSpec one{FactorSpec::sym(5, 2)};
    EXPECT_THROW(place(gen_eta(one, 0), kTriple, {0}), std::invalid_argument);
}
