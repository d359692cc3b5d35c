#include "symcoh/degeneration.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symcoh;
using nlohmann::json;

TEST(Leray, TrivialFibers) {
    EXPECT_EQ(leray_curve_betti({0, {1}, {}}), (BettiRow{1, 0, 1}));
    EXPECT_EQ(leray_curve_betti({2, {1}, {}}), (BettiRow{1, 4, 1}));
    // P^1-bundle over a genus 11 curve
    EXPECT_EQ(leray_curve_betti({11, {1, 0, 1}, {}}), (BettiRow{1, 22, 2, 22, 1}));
    EXPECT_EQ(leray_curve_betti({0, {1, 0, 1}, {{2, 3}}}), (BettiRow{1, 0, 5, 0, 1}));
    EXPECT_THROW(leray_curve_betti({-1, {1}, {}}), std::invalid_argument);
    EXPECT_THROW(leray_curve_betti({0, {2}, {}}), std::invalid_argument);
}

TEST(Leray, EulerIsProduct) {
    for (int g = 0; g < 6; ++g) {
        BettiRow fiber{1, 0, 3, 2, 1};
        EXPECT_EQ(euler_number(leray_curve_betti({g, fiber, {}})), (2 - 2 * g) * euler_number(fiber));
    }
}

TEST(Blowup, PointInSurface) {
    EXPECT_EQ(blowup_betti({1, 0, 1, 0, 1}, {1}, 2), (BettiRow{1, 0, 2, 0, 1}));
    EXPECT_EQ(blowup_betti({1, 0, 1, 0, 1, 0, 1}, {1}, 3), (BettiRow{1, 0, 2, 0, 2, 0, 1}));
    EXPECT_THROW(blowup_betti({1}, {1}, 1), std::invalid_argument);
}

TEST(Blowup, EulerRelation) {
    // e(blow-up) = e(X) + (codim - 1) e(Z)
    BettiRow x = betti_sym(5, 4), z = leray_curve_betti({11, {1, 0, 1}, {}});
    for (int c = 2; c <= 4; ++c)
        EXPECT_EQ(euler_number(blowup_betti(x, z, c)), euler_number(x) + (c - 1) * euler_number(z));
}

TEST(Strata, Rows) {
    EXPECT_EQ(strata_row("C14"), (BettiRow{1, 22, 2, 22, 1, 0, 0, 0, 0}));
    EXPECT_EQ(strata_row("M1"), (BettiRow{1, 10, 47, 152, 258, 152, 47, 10, 1}));
    EXPECT_EQ(strata_row("M12"), (BettiRow{1, 22, 3, 44, 3, 22, 1, 0, 0}));
    EXPECT_EQ(strata_row("M2"), (BettiRow{1, 22, 2, 22, 12, 22, 2, 22, 1}));
    EXPECT_THROW(strata_row("M3"), std::out_of_range);
}

TEST(Strata, ModelMatchesTable) {
    const SNCModel& m = theta_tilde_0();
    for (const auto& [name, st] : std::map<std::string, std::string>{{"M1", "M1"}, {"M2", "M2"}, {"M12", "M12"}})
        for (int q : m.degrees) {
            std::size_t n = 0;
            for (const auto& s : m.strata)
                if (s.name == st)
                    for (const auto& sm : s.summands)
                        if (sm.degree == q) n += sm.dim;
            EXPECT_EQ(static_cast<long long>(n), strata_row(name)[q]) << name << " degree " << q;
        }
}

TEST(ShippedModel, D1Ranks) {
    const SNCModel& m = theta_tilde_0();
    EXPECT_EQ(d1_map(m, 0, 3).rank(), 32u);
    EXPECT_EQ(d1_map(m, 0, 3).cokernel_dim(), 12u);
    LinearMapQ d4 = d1_degree4_blocks();
    EXPECT_EQ(d4.domain.size(), 270u);
    EXPECT_EQ(d4.codomain.size(), 3u);
    EXPECT_TRUE(d4.is_surjective());
    EXPECT_TRUE(stratum_restriction(m, "M1", 4).is_surjective());
    EXPECT_TRUE(stratum_restriction(m, "M2", 4).is_surjective());
}

TEST(ShippedModel, WeightPieces) {
    GradedDims c = mv_e2(theta_tilde_0(), 4);
    EXPECT_EQ(c.at(3), 12);
    EXPECT_EQ(c.at(4), 267);
    EXPECT_EQ(c.at(0) + c.at(1) + c.at(2), 0);
    GradedDims g = clemens_schmid_gr(c, strata_row("M12")[2]);
    EXPECT_EQ(g.at(3), 12);
    EXPECT_EQ(g.at(4), 264);
    EXPECT_EQ(g.at(5), 12);
    EXPECT_EQ(g.total(), 288);
}

TEST(ShippedModel, RestrictionBlock) {
    auto checks = check_restriction_blocks(theta_tilde_0());
    ASSERT_EQ(checks.size(), 1u);
    EXPECT_TRUE(checks[0].ok());
    EXPECT_EQ(checks[0].computed_rank, 1u);
}

TEST(ShippedModel, Summary) {
    auto s = degeneration_summary();
    EXPECT_EQ(s.d1_rank_deg3, 32u);
    EXPECT_EQ(s.d1_rank_deg4, 3u);
    EXPECT_TRUE(s.j1_surjective && s.j2_surjective);
}

TEST(ClemensSchmid, Symmetric) {
    GradedDims h;
    h.m = 4;
    h.gr = {{4, 7}};
    GradedDims g = clemens_schmid_gr(h, 2);
    EXPECT_EQ(g.at(4), 5);
    EXPECT_EQ(g.at(5), 0);
    EXPECT_EQ(g.total(), 5);
    EXPECT_THROW(clemens_schmid_gr(h, 8), std::invalid_argument);
    h.m = 3;
    EXPECT_THROW(clemens_schmid_gr(h, 0), std::invalid_argument);
}

TEST(Arithmetic, ThetaNumbers) {
    EXPECT_EQ(theta_low_betti(5, 3), 120);
    EXPECT_EQ(primitive_rank(5), 78);
    EXPECT_EQ(primitive_rank(2), 0);
}

namespace {

json one_stratum(std::size_t dim) {
    return {{"degrees", {2}},
            {"strata", {{{"name", "X"}, {"codim", 0}, {"summands", {{{"label", "a"}, {"degree", 2}, {"dim", dim}}}}}}}};
}

json random_model(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 4), entry(-2, 2);
    json strata = json::array(), blocks = json::array();
    std::vector<std::pair<std::string, int>> top, bottom;
    for (const char* name : {"A", "B"}) {
        int n = dim(rng);
        strata.push_back({{"name", name}, {"codim", 0}, {"d1_sign", name[0] == 'A' ? 1 : -1},
                          {"summands", {{{"label", "s"}, {"degree", 2}, {"dim", n}}}}});
        top.emplace_back(std::string(name) + "/s", n);
    }
    int m = dim(rng);
    strata.push_back({{"name", "AB"}, {"codim", 1}, {"summands", {{{"label", "t"}, {"degree", 2}, {"dim", m}}}}});
    for (const auto& [key, n] : top) {
        json rows = json::array();
        for (int r = 0; r < m; ++r) {
            json row = json::array();
            for (int c = 0; c < n; ++c) row.push_back(entry(rng));
            rows.push_back(row);
        }
        blocks.push_back({{"from", key}, {"to", "AB/t"}, {"rule", "matrix"}, {"rows", rows}});
    }
    return {{"degrees", {2}}, {"strata", strata}, {"blocks", blocks}};
}

}  // namespace

TEST(SNCModel, OneStratum) {
    SNCModel m = parse_snc_model(one_stratum(5));
    GradedDims g = mv_e2(m, 2);
    EXPECT_EQ(g.at(2), 5);
    EXPECT_EQ(g.total(), 5);
    EXPECT_EQ(e1_euler(m), 5);
}

TEST(SNCModel, RandomEulerCharacteristic) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        SNCModel m = parse_snc_model(random_model(rng));
        long long e2 = e2_dim(m, 0, 2) - e2_dim(m, 1, 2);
        EXPECT_EQ(e2, e1_euler(m));
        EXPECT_EQ(mv_e2(m, 2).at(2), e2_dim(m, 0, 2));
    }
}

TEST(SNCModel, Errors) {
    json j = one_stratum(2);
    j["strata"].push_back({{"name", "Y"}, {"codim", 1}, {"summands", {{{"label", "b"}, {"degree", 2}, {"dim", 3}}}}});
    json bad = j;
    bad["blocks"] = {{{"from", "X/a"}, {"to", "Y/b"}, {"rule", "iso"}}};
    EXPECT_THROW(parse_snc_model(bad), ModelError);
    bad["blocks"] = {{{"from", "X/a"}, {"to", "Y/b"}, {"rule", "matrix"}, {"rows", {{1, 0}, {0}}}}};
    EXPECT_THROW(parse_snc_model(bad), ModelError);
    bad["blocks"] = {{{"from", "Y/b"}, {"to", "X/a"}, {"rule", "zero"}}};
    EXPECT_THROW(parse_snc_model(bad), ModelError);
    bad["blocks"] = {{{"from", "X/a"}, {"to", "Y/b"}, {"rule", "twist"}}};
    EXPECT_THROW(parse_snc_model(bad), ModelError);
    bad["blocks"] = {{{"from", "X/a"}, {"to", "Y/c"}, {"rule", "zero"}}};
    EXPECT_ANY_THROW(parse_snc_model(bad));
    bad = j;
    bad["strata"][0]["summands"].push_back({{"label", "a"}, {"degree", 2}, {"dim", 1}});
    EXPECT_THROW(parse_snc_model(bad), ModelError);
    json k = one_stratum(2);
    k["degrees"] = {3};
    EXPECT_THROW(mv_e2(parse_snc_model(k), 2), ModelError);
}

TEST(SNCModel, InjectiveBlock) {
    json j = one_stratum(2);
    j["strata"].push_back({{"name", "Y"}, {"codim", 1}, {"summands", {{{"label", "b"}, {"degree", 2}, {"dim", 3}}}}});
    j["blocks"] = {{{"from", "X/a"}, {"to", "Y/b"}, {"rule", "injective"}}};
    SNCModel m = parse_snc_model(j);
    EXPECT_EQ(d1_map(m, 0, 2).rank(), 2u);
    EXPECT_EQ(mv_e2(m, 2).at(2), 0);
    EXPECT_EQ(mv_e2(m, 3).at(2), 1);
}
