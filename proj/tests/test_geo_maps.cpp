#include "symcoh/expr.hpp"
#include "symcoh/format.hpp"
#include "symcoh/geo_maps.hpp"
#include "symcoh/random.hpp"

#include <gtest/gtest.h>

using namespace symcoh;

namespace {
CohClass ev(const std::string& s, const SpaceSpec& sp) { return evaluate_class(s, sp); }
}  // namespace

TEST(PullSum, Theta) {
    EXPECT_EQ(pull_sum(gen_theta(sym_space(5, 6), 0), 2, 4), ev("theta@1 + theta@2 + delta(1,2)", sym_pair(5, 2, 4)));
    EXPECT_EQ(pull_sum(CohClass::unit(sym_space(5, 4)), 2, 2), CohClass::unit(sym_pair(5, 2, 2)));
}

TEST(PullSum, IsRingHomomorphism) {
    std::mt19937_64 rng(11);
    SpaceSpec s = sym_space(5, 4);
    for (int t = 0; t < 40; ++t) {
        CohClass x = random_class(s, static_cast<int>(rng() % 4), rng, 2);
        CohClass y = random_class(s, static_cast<int>(rng() % 4), rng, 2);
        int a = 1 + static_cast<int>(rng() % 3);
        EXPECT_EQ(pull_sum(mul(x, y), a, 4 - a), mul(pull_sum(x, a, 4 - a), pull_sum(y, a, 4 - a)));
    }
}

TEST(Gysin, TableExamples) {
    EXPECT_EQ(gysin_sum(ev("theta@2", sym_pair(5, 2, 2))), ev("theta + 10*eta", sym_space(5, 4)));
    EXPECT_EQ(gysin_sum(ev("sigma(3)@1*sigma(3)@2", sym_pair(5, 2, 2))), ev("2*sigma(3)*eta", sym_space(5, 4)));
    EXPECT_EQ(gysin_sum(ev("eta@2^2", sym_pair(5, 1, 3))), ev("2*eta^2", sym_space(5, 4)));
    EXPECT_EQ(gysin_sum(ev("xi(2)@1*xi(7)@2", sym_pair(5, 2, 2))), ev("2*xi(2)*xi(7) - 2*eta", sym_space(5, 4)));
}

TEST(Gysin, OracleAgreesOnExamples) {
    for (const char* e : {"theta@2", "sigma(3)@1*sigma(3)@2", "eta@1*xi(4)@2*xi(9)@2"}) {
        CohClass c = ev(e, sym_pair(5, 2, 2));
        EXPECT_EQ(gysin_sum(c), gysin_sum_oracle(c)) << e;
    }
    CohClass c = ev("eta@2^2", sym_pair(5, 1, 3));
    EXPECT_EQ(gysin_sum(c), gysin_sum_oracle(c));
}

TEST(Gysin, DegreeOfSymmetrization) {
    // m_*(1) is deg m_1 = (a+b)!/(a! b!) times the fundamental class divided by the C(4) degree
    EXPECT_EQ(gysin_sum(CohClass::unit(sym_pair(5, 2, 2))), CohClass::unit(sym_space(5, 4)) * Rational(6));
}

TEST(Gysin, ProjectionFormula) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        SpaceSpec s = t % 2 ? sym_pair(5, 2, 2) : sym_pair(5, 1, 3);
        CohClass y = random_class(s, static_cast<int>(rng() % 5), rng, 3);
        CohClass x = random_class(sym_space(5, 4), static_cast<int>(rng() % 4), rng, 2);
        EXPECT_EQ(gysin_sum(mul(pull_sum(x, s[0].exponent, s[1].exponent), y)), mul(x, gysin_sum(y)));
    }
}

TEST(Gysin, OracleAgreesOnRandomClasses) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        SpaceSpec s = t % 3 == 0 ? sym_pair(5, 1, 3) : t % 3 == 1 ? sym_pair(5, 2, 2) : sym_pair(5, 1, 2);
        CohClass y = random_class(s, static_cast<int>(rng() % 5), rng, 3);
        ASSERT_EQ(gysin_sum(y), gysin_sum_oracle(y)) << to_raw_string(y);
    }
}

TEST(Involution, Rules) {
    SpaceSpec s4 = sym_space(5, 4);
    EXPECT_EQ(serre_involution(ev("eta^2", s4)), ev("theta^2/2 - eta*theta + eta^2", s4));
    EXPECT_EQ(serre_involution(ev("theta*xi(1)*xi(2)", s4)), ev("theta*xi(1)*xi(2)", s4));
    EXPECT_THROW(serre_involution(ev("eta^2", sym_space(5, 3))), std::invalid_argument);
}

TEST(Involution, IsAnInvolution) {
    std::mt19937_64 rng(14);
    SpaceSpec s4 = sym_space(5, 4);
    for (int t = 0; t < 50; ++t) {
        CohClass x = random_class(s4, 4, rng, 4);
        EXPECT_EQ(serre_involution(serre_involution(x)), x);
    }
}

TEST(WRestrict, DeltaCancels) {
    SpaceSpec t{FactorSpec::sym(5, 3), FactorSpec::sym(5, 3), FactorSpec::sym(5, 4)};
    WClass w = w_restrict(delta(t, 0, 2) + delta(t, 1, 2));
    for (const auto& [e, c] : w.by_eta2) EXPECT_TRUE(c.is_zero());
}

TEST(WRestrict, XiFreeClassesUnchanged) {
    SpaceSpec t{FactorSpec::sym(5, 3), FactorSpec::sym(5, 3), FactorSpec::sym(5, 4)};
    CohClass c = ev("eta@1*eta@3^2", t);
    WClass w = w_restrict(c);
    ASSERT_EQ(w.by_eta2.count(0), 1u);
    EXPECT_EQ(w.by_eta2.at(0), ev("eta@1*eta@2^2", w.space));
}

TEST(WIntegrate, Examples) {
    SpaceSpec s = sym_space(5, 3);
    CohClass one = CohClass::unit(s), et = gen_eta(s, 0);
    EXPECT_EQ(integrate_over_W(one, et, et), Rational(6));
    EXPECT_EQ(integrate_over_W(et, one, et), Rational(4));
    EXPECT_EQ(integrate_over_W(one, one, one), Rational(0));
}
