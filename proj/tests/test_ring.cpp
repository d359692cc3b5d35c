#include "symcoh/expr.hpp"
#include "symcoh/geo_maps.hpp"
#include "symcoh/oracle.hpp"
#include "symcoh/random.hpp"
#include "symcoh/ring.hpp"

#include <gtest/gtest.h>

using namespace symcoh;

namespace {

CohClass ev(const std::string& s, const SpaceSpec& sp) { return evaluate_class(s, sp); }
const SpaceSpec kS3 = SpaceSpec{FactorSpec::sym(5, 3)};

}  // namespace

TEST(Ring, SigmaSigmaRelation) {
    EXPECT_EQ(mul(gen_sigma(kS3, 0, 1), gen_sigma(kS3, 0, 2)), ev("eta*(sigma(1)+sigma(2)) - eta^2", kS3));
}

TEST(Ring, ThetaSquaredHalf) { EXPECT_EQ(ev("theta^2/2", kS3), ev("4*eta*theta - 10*eta^2", kS3)); }

TEST(Ring, UnitLaw) {
    std::mt19937_64 rng(1);
    for (int k = 0; k <= 6; ++k) {
        CohClass x = random_class(kS3, k, rng);
        EXPECT_EQ(mul(CohClass::unit(kS3), x), x);
    }
}

TEST(Ring, EtaSquaredSigma) { EXPECT_EQ(ev("eta^2*sigma(4)", kS3), ev("eta^3", kS3)); }

TEST(Ring, OddSquareVanishes) { EXPECT_TRUE(mul(gen_xi(kS3, 0, 1), gen_xi(kS3, 0, 1)).is_zero()); }

TEST(Ring, FourXiWithoutEtaVanishes) {
    EXPECT_TRUE(ev("xi(1)*xi(2)*xi(3)*xi(4)", kS3).is_zero());
    EXPECT_TRUE(ev("xi(1)*xi(2)*xi(8)*xi(9)", kS3).is_zero());
}

TEST(Ring, TripleSigma) { EXPECT_EQ(ev("sigma(1)*sigma(2)*sigma(3)", kS3), ev("eta^3", kS3)); }

TEST(Ring, BasisCounts) {
    EXPECT_EQ(basis(5, 4, 4).size(), 256u);
    EXPECT_EQ(basis(5, 3, 2).size(), 46u);
    auto b0 = basis(5, 3, 0);
    ASSERT_EQ(b0.size(), 1u);
    EXPECT_EQ(b0[0].xi, 0u);
    EXPECT_EQ(b0[0].eta, 0);
}

TEST(Ring, BettiNumbers) {
    EXPECT_EQ(betti_sym(5, 4), (std::vector<long long>{1, 10, 46, 130, 256, 130, 46, 10, 1}));
    EXPECT_EQ(betti_sym(5, 3), (std::vector<long long>{1, 10, 46, 130, 46, 10, 1}));
    for (int g = 1; g <= 6; ++g) EXPECT_EQ(betti_sym(g, 1), (std::vector<long long>{1, 2LL * g, 1}));
}

TEST(Ring, Integrals) {
    EXPECT_EQ(integrate(ev("(theta-eta)*eta^2", kS3)), Rational(4));
    EXPECT_EQ(integrate(ev("theta^3", kS3)), Rational(60));
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(integrate(pow(gen_eta(SpaceSpec{FactorSpec::sym(5, n)}, 0), n)), Rational(1));
    EXPECT_EQ(integrate(ev("theta^5/120", SpaceSpec{FactorSpec::ab(5)})), Rational(1));
}

TEST(Ring, IntegralIgnoresLowDegreeButReports) {
    auto rep = integrate_report(ev("eta + eta^3", kS3));
    EXPECT_EQ(rep.value, Rational(1));
    EXPECT_TRUE(rep.non_top_degree);
}

TEST(Oracle, EtaEmbedsAsPointSum) {
    EXPECT_EQ(oracle_integrate(pow(gen_eta(kS3, 0), 3)), Rational(1));
}

// oracle equivalence on 240 random classes over g <= 5, n <= 4
TEST(Oracle, MultiplicationAgrees) {
    std::mt19937_64 rng(7);
    int count = 0;
    for (int g = 2; g <= 5; ++g)
        for (int n = 1; n <= 4; ++n)
            for (int t = 0; t < 15; ++t, ++count) {
                SpaceSpec s{FactorSpec::sym(g, n)};
                CohClass a = random_class(s, static_cast<int>(rng() % (n + 1)), rng, 3);
                CohClass b = random_class(s, static_cast<int>(rng() % (n + 1)), rng, 3);
                ASSERT_EQ(mul(a, b), oracle_mul(a, b)) << s.str();
            }
    EXPECT_GE(count, 200);
}

TEST(Oracle, IntegrationAgrees) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + t % 4, g = 2 + (t / 4) % 4;
        SpaceSpec s{FactorSpec::sym(g, n)};
        CohClass a = random_class(s, 2 * n, rng, 5);
        ASSERT_EQ(integrate(a), oracle_integrate(a)) << s.str();
    }
}

TEST(Oracle, DegreeSixOnC3) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        CohClass a = random_class(kS3, 6, rng, 6);
        ASSERT_EQ(integrate(a), oracle_integrate(a));
    }
}

TEST(Poincare, NonsingularInEveryDegree) {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 2 * n; ++k) EXPECT_TRUE(inverse(pairing_matrix(5, n, k)).has_value()) << n << "," << k;
}

TEST(Rational, ExactArithmetic) {
    Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
    EXPECT_TRUE(Rational(0).is_zero());
    EXPECT_EQ(Rational(-3, 2).sign(), -1);
}
