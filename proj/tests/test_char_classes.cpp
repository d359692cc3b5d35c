#include "symcoh/char_classes.hpp"
#include "symcoh/expr.hpp"

#include <gtest/gtest.h>

using namespace symcoh;

namespace {
CohClass ev(const std::string& s, int g, int n) { return evaluate_class(s, SpaceSpec{FactorSpec::sym(g, n)}); }
}  // namespace

TEST(Secant, Examples) {
    EXPECT_EQ(secant_class(6, 5, 2, 3), ev("theta - eta", 5, 3));
    EXPECT_EQ(secant_class(6, 5, 2, 4), ev("theta^2/2 - eta*theta + eta^2", 5, 4));
    EXPECT_EQ(secant_class(4, 6, 1, 2), ev("theta - 3*eta", 6, 2));
    EXPECT_EQ(secant_class(6, 5, 3, 3), ev("1", 5, 3));
    EXPECT_THROW(secant_class(6, 5, 4, 3), std::invalid_argument);
}

TEST(Chern, SymProduct) {
    EXPECT_EQ(chern_sym(5, 3), ev("1 - eta - theta - 9*eta^2 + 6*eta*theta - 56*eta^3", 5, 3));
    for (int g = 2; g <= 6; ++g) EXPECT_EQ(chern_sym(g, 1), ev("1 + " + std::to_string(2 - 2 * g) + "*eta", g, 1));
    EXPECT_EQ(integrate(chern_sym(6, 2)), Rational(45));
}

TEST(Chern, RestrictToDivisor) {
    EXPECT_EQ(chern_restrict_sub(chern_sym(5, 3), secant_class(6, 5, 2, 3)),
              ev("1 - 2*theta - 9*eta^2 + 4*eta*theta + 2*theta^2", 5, 3));
}

TEST(Chern, RestrictTrivialAmbient) {
    SpaceSpec s{FactorSpec::sym(5, 3)};
    CohClass d = gen_theta(s, 0);
    EXPECT_EQ(chern_restrict_sub(CohClass::unit(s), d), ev("1 - theta + theta^2", 5, 3));
}

// integral of the top Chern class equals [t^n] (1 - t)^{2g-2}
TEST(Chern, EulerCharacteristicIdentity) {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {5, 3}, {6, 1}, {6, 2}}) {
        Rational e = binomial(2 * g - 2, n) * Rational(n % 2 ? -1 : 1);
        EXPECT_EQ(integrate(chern_sym(g, n)), e) << g << "," << n;
    }
}

TEST(Hilbert, RiemannRochCurve) {
    EXPECT_EQ(rr_curve_chi(11, 10), (PolynomialQ{-10, 10}));
    EXPECT_EQ(rr_curve_chi(13, 12), (PolynomialQ{-12, 12}));
    EXPECT_EQ(rr_curve_chi(0, 0), (PolynomialQ{1}));
}

TEST(Hilbert, SurfaceX2) {
    SurfaceData x2 = surface_sym2(6);
    CohClass th = gen_theta(x2.ambient, 0);
    PolynomialQ chi = hrr_surface_chi(x2, SurfaceDivisor{th, "theta", {}});
    EXPECT_EQ(chi, (PolynomialQ{10, -24, 15}));
    EXPECT_EQ(chi(Rational(0)), Rational(10));
}

TEST(Hilbert, AdjunctionGenus) {
    SurfaceData x2 = surface_sym2(6);
    EXPECT_EQ(curve_genus_adjunction(x2, secant_class(4, 6, 1, 2)), 13);
}

TEST(Hilbert, ToyExceptionalCurve) {
    // a (-1)-curve: c1.E = 1, E^2 = -1 gives genus 0
    SpaceSpec s{FactorSpec::sym(5, 2)};
    SurfaceData toy{s, CohClass::unit(s), CohClass(s), CohClass(s), {{"E", -1, {{"c1", 1}}}}};
    EXPECT_EQ(curve_genus_adjunction(toy, SurfaceDivisor{std::nullopt, "", {{"E", 1}}}), 0);
}

TEST(Hilbert, Suite) {
    auto rep = hilbert_suite(CitedConstants::load(data_path("cited_constants.json")));
    EXPECT_TRUE(rep.all_pass());
    ASSERT_EQ(rep.checks.size(), 6u);
    EXPECT_EQ(rep.checks[0].computed, (PolynomialQ{22, -50, 30}));
    EXPECT_EQ(rep.checks[4].computed, (PolynomialQ{32, -60, 30}));
    EXPECT_EQ(rep.checks[5].computed, rep.checks[4].computed);
}

TEST(Constants, MissingKeyIsReported) {
    auto k = CitedConstants::load(data_path("cited_constants.json"));
    EXPECT_THROW(k.at("no.such.key"), std::out_of_range);
}
