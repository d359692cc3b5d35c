#pragma once

#include "symcoh/char_classes.hpp"
#include "symcoh/cycle_aj.hpp"
#include "symcoh/degeneration.hpp"
#include "symcoh/expr.hpp"
#include "symcoh/format.hpp"
#include "symcoh/geo_maps.hpp"
#include "symcoh/oracle.hpp"
#include "symcoh/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace symcoh {

enum class CheckStatus { pass, fail, deviation };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::deviation: return "deviation-documented";
    }
    return "?";
}

struct CheckResult {
    std::string id;
    std::string location;  // where the expected value is stated
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::fail;
    double elapsed_ms = 0;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    std::size_t count(CheckStatus s) const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
    }
    bool ok() const { return count(CheckStatus::fail) == 0; }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"id", c.id},
                                   {"paper_location", c.location},
                                   {"expected", c.expected},
                                   {"computed", c.computed},
                                   {"status", status_name(c.status)},
                                   {"elapsed_ms", c.elapsed_ms},
                                   {"note", c.note}});
        j["summary"] = {{"pass", count(CheckStatus::pass)},
                        {"fail", count(CheckStatus::fail)},
                        {"deviation_documented", count(CheckStatus::deviation)}};
        return j;
    }

    std::string text() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            const char* tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "DEV ";
            os << "[" << tag << "] " << c.id << "  (" << c.location << ")\n";
            if (c.status != CheckStatus::pass || c.expected != c.computed) {
                os << "       expected: " << c.expected << "\n";
                os << "       computed: " << c.computed << "\n";
            }
            if (!c.note.empty()) os << "       note: " << c.note << "\n";
        }
        os << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail) << " failed, "
           << count(CheckStatus::deviation) << " deviation-documented\n";
        return os.str();
    }
};

struct VerifyOptions {
    bool oracle = false;
    std::uint64_t seed = 20240611;
    int oracle_samples = 200;
};

namespace verify_detail {

struct Outcome {
    std::string expected, computed;
    CheckStatus status;
    std::string note;
};

inline Outcome same(const std::string& expected, const std::string& computed) {
    return {expected, computed, expected == computed ? CheckStatus::pass : CheckStatus::fail, ""};
}

inline Outcome same_class(const std::string& expected_text, const CohClass& computed) {
    CohClass e = evaluate_class(expected_text, computed.space());
    return {to_pretty_string(e), to_pretty_string(computed), e == computed ? CheckStatus::pass : CheckStatus::fail, ""};
}

inline Outcome truth(bool ok, const std::string& expected, const std::string& computed) {
    return {expected, computed, ok ? CheckStatus::pass : CheckStatus::fail, ""};
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

class Runner {
public:
    explicit Runner(VerifyReport& r) : report_(r) {}

    void run(const std::string& id, const std::string& location, const std::function<Outcome()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult c{id, location, "", "", CheckStatus::fail, 0, ""};
        try {
            Outcome o = fn();
            c.expected = o.expected;
            c.computed = o.computed;
            c.status = o.status;
            c.note = o.note;
        } catch (const std::exception& e) {
            c.computed = std::string("exception: ") + e.what();
        }
        c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        report_.checks.push_back(std::move(c));
    }

private:
    VerifyReport& report_;
};

// ---- Gysin tables ----

struct GysinInstance {
    std::string lhs, rhs;
};

struct GysinRow {
    std::string id;
    std::string statement;
    std::vector<GysinInstance> instances;
};

inline int partner(int i) { return i <= 5 ? i + 5 : i - 5; }
/// Sign "-/+" attached to i +/- 5: minus when the partner is i + 5.
inline std::string mp(int i) { return i <= 5 ? " - " : " + "; }
inline std::string X(int i, int f = 0) { return "xi(" + std::to_string(i) + ")" + (f ? "@" + std::to_string(f) : ""); }
inline std::string S(int k, int f = 0) { return "sigma(" + std::to_string(k) + ")" + (f ? "@" + std::to_string(f) : ""); }

inline std::vector<GysinRow> gysin_rows_h2() {
    std::vector<GysinRow> rows;
    rows.push_back({"h2.1", "1 (x) theta -> theta + 10 eta", {{"theta@2", "theta + 10*eta"}}});
    rows.push_back({"h2.2", "1 (x) eta -> 3 eta", {{"eta@2", "3*eta"}}});
    GysinRow r3{"h2.3", "xi_i (x) xi_j -> 2 xi_i xi_j, j != i+-5", {}};
    GysinRow r4{"h2.4", "xi_i (x) xi_{i+-5} -> 2 xi_i xi_{i+-5} -+ 2 eta", {}};
    GysinRow r5{"h2.5", "xi_i xi_j (x) 1 -> xi_i xi_j, j != i+-5", {}};
    for (int i = 1; i <= 10; ++i) {
        r4.instances.push_back({X(i, 1) + "*" + X(partner(i), 2), "2*" + X(i) + "*" + X(partner(i)) + mp(i) + "2*eta"});
        for (int j = 1; j <= 10; ++j) {
            if (j == partner(i)) continue;
            r3.instances.push_back({X(i, 1) + "*" + X(j, 2), "2*" + X(i) + "*" + X(j)});
            if (j > i) r5.instances.push_back({X(i, 1) + "*" + X(j, 1), X(i) + "*" + X(j)});
        }
    }
    rows.push_back(r3);
    rows.push_back(r4);
    rows.push_back(r5);
    return rows;
}

inline std::vector<GysinRow> gysin_rows_h4_22() {
    std::vector<GysinRow> rows;
    GysinRow r1{"h4.1", "eta (x) xi_i xi_{i+5} -> eta xi_i xi_{i+5} + eta^2", {}};
    GysinRow r2{"h4.2", "eta (x) xi_i xi_j -> eta xi_i xi_j, j != i+-5", {}};
    GysinRow r4{"h4.4", "eta xi_i (x) xi_j -> eta xi_i xi_j, j != i+-5", {}};
    GysinRow r5{"h4.5", "eta xi_i (x) xi_{i+-5} -> eta xi_i xi_{i+-5} -+ eta^2", {}};
    GysinRow r6{"h4.6", "sigma_k (x) sigma_k -> 2 sigma_k eta", {}};
    GysinRow r7{"h4.7", "sigma_k (x) sigma_l -> sigma_k sigma_l + eta^2, k != l", {}};
    GysinRow r8{"h4.8", "sigma_k (x) xi_k xi_j -> xi_k xi_j eta, j != k+5", {}};
    GysinRow r9{"h4.9", "sigma_k (x) xi_i xi_j -> sigma_k xi_i xi_j, i,j not in {k,k+5}", {}};
    for (int i = 1; i <= 5; ++i)
        r1.instances.push_back({"eta@1*" + X(i, 2) + "*" + X(i + 5, 2), "eta*" + X(i) + "*" + X(i + 5) + " + eta^2"});
    for (int i = 1; i <= 10; ++i) {
        r5.instances.push_back({"eta@1*" + X(i, 1) + "*" + X(partner(i), 2), "eta*" + X(i) + "*" + X(partner(i)) + mp(i) + "eta^2"});
        for (int j = 1; j <= 10; ++j) {
            if (j == partner(i)) continue;
            if (j > i) r2.instances.push_back({"eta@1*" + X(i, 2) + "*" + X(j, 2), "eta*" + X(i) + "*" + X(j)});
            r4.instances.push_back({"eta@1*" + X(i, 1) + "*" + X(j, 2), "eta*" + X(i) + "*" + X(j)});
        }
    }
    for (int k = 1; k <= 5; ++k) {
        r6.instances.push_back({S(k, 1) + "*" + S(k, 2), "2*" + S(k) + "*eta"});
        for (int l = 1; l <= 5; ++l)
            if (l != k) r7.instances.push_back({S(k, 1) + "*" + S(l, 2), S(k) + "*" + S(l) + " + eta^2"});
        for (int j = 1; j <= 10; ++j)
            if (j != k + 5 && j != k) r8.instances.push_back({S(k, 1) + "*" + X(k, 2) + "*" + X(j, 2), X(k) + "*" + X(j) + "*eta"});
        // xi_i xi_j with j = i+-5 would be a sigma and fall under the previous row
        for (int i = 1; i <= 10; ++i)
            for (int j = i + 1; j <= 10; ++j) {
                if (i == k || i == k + 5 || j == k || j == k + 5 || j == partner(i)) continue;
                r9.instances.push_back({S(k, 1) + "*" + X(i, 2) + "*" + X(j, 2), S(k) + "*" + X(i) + "*" + X(j)});
            }
    }
    rows.push_back(r1);
    rows.push_back(r2);
    rows.push_back({"h4.3", "eta (x) eta -> 2 eta^2", {{"eta@1*eta@2", "2*eta^2"}}});
    rows.push_back(r4);
    rows.push_back(r5);
    rows.push_back(r6);
    rows.push_back(r7);
    rows.push_back(r8);
    rows.push_back(r9);
    rows.push_back({"h4.10", "eta^2 (x) 1 -> eta^2", {{"eta@1^2", "eta^2"}}});
    return rows;
}

inline std::vector<GysinRow> gysin_rows_h4_13() {
    std::vector<GysinRow> rows;
    GysinRow r1{"c13.1", "eta (x) xi_i xi_j -> eta xi_i xi_j, 1 <= i,j <= 10", {}};
    GysinRow r2{"c13.2", "1 (x) eta xi_i xi_j -> eta xi_i xi_j, j != i+-5", {}};
    GysinRow r3{"c13.3", "1 (x) eta sigma_i -> eta sigma_i + eta^2", {}};
    GysinRow r4{"c13.4", "xi_i (x) xi_j xi_k xi_l -> xi_i xi_j xi_k xi_l, j,k,l != i+-5", {}};
    GysinRow r5{"c13.5", "xi_i (x) xi_{i+-5} xi_k xi_l -> xi_i xi_{i+-5} xi_k xi_l -+ eta xi_k xi_l, k,l != i+-5", {}};
    GysinRow r6{"c13.6", "xi_i (x) eta xi_j -> eta xi_i xi_j, j != i+-5", {}};
    GysinRow r7{"c13.7", "xi_i (x) eta xi_{i+-5} -> eta xi_i xi_{i+-5} -+ eta^2", {}};
    for (int i = 1; i <= 10; ++i) {
        int p = partner(i);
        r7.instances.push_back({X(i, 1) + "*eta@2*" + X(p, 2), "eta*" + X(i) + "*" + X(p) + mp(i) + "eta^2"});
        for (int j = 1; j <= 10; ++j) {
            if (j > i) r1.instances.push_back({"eta@1*" + X(i, 2) + "*" + X(j, 2), "eta*" + X(i) + "*" + X(j)});
            if (j == p) continue;
            if (j > i) r2.instances.push_back({"eta@2*" + X(i, 2) + "*" + X(j, 2), "eta*" + X(i) + "*" + X(j)});
            r6.instances.push_back({X(i, 1) + "*eta@2*" + X(j, 2), "eta*" + X(i) + "*" + X(j)});
        }
        for (int j = 1; j <= 10; ++j)
            for (int k = j + 1; k <= 10; ++k)
                for (int l = k + 1; l <= 10; ++l) {
                    if (j == p || k == p || l == p) continue;
                    std::string w = X(j) + "*" + X(k) + "*" + X(l);
                    r4.instances.push_back({X(i, 1) + "*" + X(j, 2) + "*" + X(k, 2) + "*" + X(l, 2), X(i) + "*" + w});
                }
        for (int k = 1; k <= 10; ++k)
            for (int l = k + 1; l <= 10; ++l) {
                if (k == p || l == p) continue;
                std::string kl = X(k) + "*" + X(l);
                r5.instances.push_back({X(i, 1) + "*" + X(p, 2) + "*" + X(k, 2) + "*" + X(l, 2),
                                        X(i) + "*" + X(p) + "*" + kl + mp(i) + "eta*" + kl});
            }
    }
    for (int i = 1; i <= 5; ++i) r3.instances.push_back({"eta@2*" + S(i, 2), "eta*" + S(i) + " + eta^2"});
    rows.push_back(r1);
    rows.push_back(r2);
    rows.push_back(r3);
    rows.push_back(r4);
    rows.push_back(r5);
    rows.push_back(r6);
    rows.push_back(r7);
    rows.push_back({"c13.8", "eta (x) eta -> eta^2", {{"eta@1*eta@2", "eta^2"}}});
    rows.push_back({"c13.9", "1 (x) eta^2 -> 2 eta^2", {{"eta@2^2", "2*eta^2"}}});
    return rows;
}

inline void gysin_table(Runner& run, const std::string& table, const std::string& location, const SpaceSpec& src,
                        const std::vector<GysinRow>& rows, bool oracle) {
    SpaceSpec dst = sym_space(5, src[0].exponent + src[1].exponent);
    for (const auto& row : rows) {
        run.run("gysin." + row.id, location + ": " + row.statement, [&] {
            std::size_t ok = 0;
            std::string first_bad;
            for (const auto& inst : row.instances) {
                CohClass lhs = evaluate_class(inst.lhs, src);
                CohClass got = gysin_sum(lhs);
                CohClass want = evaluate_class(inst.rhs, dst);
                if (got == want) ++ok;
                else if (first_bad.empty()) first_bad = inst.lhs + " -> " + to_pretty_string(got) + ", table: " + to_pretty_string(want);
            }
            std::string n = std::to_string(row.instances.size());
            Outcome o = same(n + "/" + n + " instances", std::to_string(ok) + "/" + n + " instances");
            o.note = first_bad;
            return o;
        });
        if (!oracle) continue;
        run.run("gysin." + row.id + ".oracle", location + ": " + row.statement + " (Cartesian oracle)", [&] {
            std::size_t ok = 0;
            std::string first_bad;
            for (const auto& inst : row.instances) {
                CohClass lhs = evaluate_class(inst.lhs, src);
                CohClass got = gysin_sum_oracle(lhs);
                CohClass want = evaluate_class(inst.rhs, dst);
                if (got == want) ++ok;
                else if (first_bad.empty()) first_bad = inst.lhs + " -> " + to_pretty_string(got);
            }
            std::string n = std::to_string(row.instances.size());
            Outcome o = same(n + "/" + n + " instances", std::to_string(ok) + "/" + n + " instances");
            o.note = first_bad;
            return o;
        });
    }
    (void)table;
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// Suites

inline void verify_ring(VerifyReport& rep, const VerifyOptions& opt) {
    using namespace verify_detail;
    Runner run(rep);
    SpaceSpec s3 = sym_space(5, 3);
    run.run("ring.betti_sym_5_4", "Betti table, row C(4)",
            [] { return same("(1,10,46,130,256,130,46,10,1)", join(betti_sym(5, 4))); });
    run.run("ring.betti_sym_5_3", "Macdonald basis of C(3)",
            [] { return same("(1,10,46,130,46,10,1)", join(betti_sym(5, 3))); });
    run.run("ring.basis_5_4_4", "Betti table, h^4 of C(4)",
            [] { return same("256", std::to_string(basis(5, 4, 4).size())); });
    run.run("ring.sigma_sigma", "Macdonald relation in degree 4 on C(3)",
            [&] { return same_class("eta*(sigma(1)+sigma(2)) - eta^2", mul(gen_sigma(s3, 0, 1), gen_sigma(s3, 0, 2))); });
    run.run("ring.theta_sq_half", "span of theta^2, theta eta, eta^2 on C(3)",
            [&] { return same_class("4*eta*theta - 10*eta^2", evaluate_class("theta^2/2", s3)); });
    run.run("ring.eta2_sigma", "Macdonald relation (sigma_i - eta) eta^2 = 0",
            [&] { return same_class("eta^3", evaluate_class("eta^2*sigma(3)", s3)); });
    run.run("ring.sigma_triple", "reduction used in the Chern class expansion",
            [&] { return same_class("eta^3", evaluate_class("sigma(1)*sigma(2)*sigma(3)", s3)); });
    run.run("ring.int_theta_minus_eta_eta2", "integral (theta - eta) eta^2 on C(3)",
            [&] { return same("4", integrate(evaluate_class("(theta-eta)*eta^2", s3)).str()); });
    run.run("ring.int_theta3", "integral theta^3 on C(3)",
            [&] { return same("60", integrate(evaluate_class("theta^3", s3)).str()); });
    run.run("ring.int_pic", "principal polarization on Pic",
            [] { return same("1", integrate(evaluate_class("theta^5/120", SpaceSpec{FactorSpec::ab(5)})).str()); });
    run.run("ring.poincare_nonsingular", "Poincare duality on C(n), n <= 4", [] {
        std::string bad;
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= 2 * n; ++k)
                if (!inverse(pairing_matrix(5, n, k))) bad += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return truth(bad.empty(), "nonsingular in every degree", bad.empty() ? "nonsingular in every degree" : "singular at" + bad);
    });
    if (!opt.oracle) return;
    run.run("ring.oracle_mul", "products against the Cartesian power", [&] {
        std::mt19937_64 rng(opt.seed);
        int ok = 0, n = opt.oracle_samples;
        for (int t = 0; t < n; ++t) {
            int nn = 1 + t % 4;
            SpaceSpec s = sym_space(t % 7 == 0 ? 3 : 5, nn);
            int ka = static_cast<int>(rng() % (nn + 1)), kb = static_cast<int>(rng() % (nn + 1));
            CohClass a = random_class(s, ka, rng, 3), b = random_class(s, kb, rng, 3);
            if (mul(a, b) == oracle_mul(a, b)) ++ok;
        }
        return same(std::to_string(n) + "/" + std::to_string(n), std::to_string(ok) + "/" + std::to_string(n));
    });
    run.run("ring.oracle_integrate", "integrals against the Cartesian power", [&] {
        std::mt19937_64 rng(opt.seed + 1);
        int ok = 0, n = opt.oracle_samples;
        for (int t = 0; t < n; ++t) {
            int nn = 1 + t % 4;
            SpaceSpec s = sym_space(5, nn);
            CohClass a = random_class(s, 2 * nn, rng, 5);
            if (integrate(a) == oracle_integrate(a)) ++ok;
        }
        return same(std::to_string(n) + "/" + std::to_string(n), std::to_string(ok) + "/" + std::to_string(n));
    });
}

inline void verify_gysin(VerifyReport& rep, const VerifyOptions& opt) {
    using namespace verify_detail;
    Runner run(rep);
    // the three tables are small enough that the oracle cross-check always runs
    gysin_table(run, "h2", "pushforward table H^2(C(2) x C(2)) -> H^2(C(4))", sym_pair(5, 2, 2), gysin_rows_h2(), true);
    gysin_table(run, "h4", "pushforward table H^4(C(2) x C(2)) -> H^4(C(4))", sym_pair(5, 2, 2), gysin_rows_h4_22(), true);
    gysin_table(run, "c13", "pushforward table H^4(C x C(3)) -> H^4(C(4))", sym_pair(5, 1, 3), gysin_rows_h4_13(), true);
    run.run("gysin.pull_theta", "pullback of theta under C(2) x C(4) -> C(6)",
            [] { return same_class("theta@1 + theta@2 + delta(1,2)", pull_sum(gen_theta(sym_space(5, 6), 0), 2, 4)); });
    run.run("gysin.involution_eta2", "Serre involution on C(4)",
            [] { return same_class("theta^2/2 - eta*theta + eta^2", serre_involution(evaluate_class("eta^2", sym_space(5, 4)))); });
    run.run("gysin.involution_pic", "Serre involution is the identity on H^4(Pic)",
            [] {
                CohClass x = evaluate_class("theta*xi(1)*xi(2)", sym_space(5, 4));
                return same_class("theta*xi(1)*xi(2)", serre_involution(x));
            });
    run.run("gysin.w_integrate", "integral over W of q_1^* a q_2^* b",
            [] {
                SpaceSpec s = sym_space(5, 3);
                return same("6", integrate_over_W(CohClass::unit(s), gen_eta(s, 0), gen_eta(s, 0)).str());
            });
    run.run("gysin.involution_twice", "Serre involution squares to the identity", [&] {
        std::mt19937_64 rng(opt.seed + 3);
        int ok = 0, n = 50;
        for (int t = 0; t < n; ++t) {
            CohClass x = random_class(sym_space(5, 4), 4, rng, 4);
            if (serre_involution(serre_involution(x)) == x) ++ok;
        }
        return same(std::to_string(n) + "/" + std::to_string(n), std::to_string(ok) + "/" + std::to_string(n));
    });
    if (!opt.oracle) return;
    run.run("gysin.oracle_random", "projection formula and oracle agreement on random classes", [&] {
        std::mt19937_64 rng(opt.seed + 2);
        int ok = 0, n = opt.oracle_samples;
        for (int t = 0; t < n; ++t) {
            SpaceSpec s = t % 2 ? sym_pair(5, 2, 2) : sym_pair(5, 1, 3);
            CohClass y = random_class(s, 1 + static_cast<int>(rng() % 4), rng, 3);
            CohClass x = random_class(sym_space(5, 4), static_cast<int>(rng() % 3), rng, 2);
            CohClass lhs = gysin_sum(mul(pull_sum(x, s[0].exponent, s[1].exponent), y));
            if (lhs == mul(x, gysin_sum(y)) && gysin_sum(y) == gysin_sum_oracle(y)) ++ok;
        }
        return same(std::to_string(n) + "/" + std::to_string(n), std::to_string(ok) + "/" + std::to_string(n));
    });
}

inline void verify_chern(VerifyReport& rep, const VerifyOptions&) {
    using namespace verify_detail;
    Runner run(rep);
    SpaceSpec s3 = sym_space(5, 3);
    run.run("chern.sym_5_3", "expansion of c(T C(3))",
            [] { return same_class("1 - eta - theta - 9*eta^2 + 6*eta*theta - 56*eta^3", chern_sym(5, 3)); });
    run.run("chern.restrict_W", "c(T W_pq) for W of class theta - eta",
            [] { return same_class("1 - 2*theta - 9*eta^2 + 4*eta*theta + 2*theta^2", chern_restrict_sub(chern_sym(5, 3), secant_class(6, 5, 2, 3))); });
    run.run("chern.printed_product", "product formula as printed, prod (1 + eta + sigma_i)", [&] {
        CohClass one = CohClass::unit(s3), et = gen_eta(s3, 0);
        CohClass c = one;
        for (int j = 1; j <= 3; ++j) c += pow(et, j) * binomial(-6, j);
        for (int i = 1; i <= 5; ++i) c = mul(c, one + et + gen_sigma(s3, 0, i));
        CohClass printed_target = evaluate_class("1 - eta - theta - 9*eta^2 + 6*eta*theta - 56*eta^3", s3);
        Outcome o{to_pretty_string(printed_target), to_pretty_string(c), CheckStatus::deviation,
                  "the printed sign does not reproduce the printed expansion; prod (1 + eta - sigma_i) does and is used"};
        if (c == printed_target) o.status = CheckStatus::pass;
        return o;
    });
    run.run("chern.curve", "tangent bundle of a curve", [] {
        return same_class("1 - 8*eta", chern_sym(5, 1));
    });
    for (auto [g, n] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {5, 3}, {6, 1}, {6, 2}}) {
        run.run("chern.euler_" + std::to_string(g) + "_" + std::to_string(n), "Euler characteristic of C(n)", [g = g, n = n] {
            // [t^n] (1 - t)^{2g-2}
            Rational e = binomial(2 * g - 2, n) * Rational(n % 2 ? -1 : 1);
            return same(e.str(), integrate(chern_sym(g, n)).str());
        });
    }
}

inline void verify_hilbert(VerifyReport& rep, const VerifyOptions&) {
    using namespace verify_detail;
    Runner run(rep);
    CitedConstants k = CitedConstants::load_default();
    auto h = hilbert_suite(k);
    for (const auto& c : h.checks)
        run.run("hilbert." + c.id, c.citation, [&] { return same(c.expected.str(), c.computed.str()); });
    run.run("hilbert.genus_X2_g14", "genus of X_2(g^1_4) by adjunction", [&] { return same("13", std::to_string(h.genus_X2_g14)); });
    run.run("hilbert.secant_6_5_2_3", "secant class of W_pq", [] { return same_class("theta - eta", secant_class(6, 5, 2, 3)); });
    run.run("hilbert.secant_6_5_2_4", "secant class in C(4)", [] { return same_class("theta^2/2 - eta*theta + eta^2", secant_class(6, 5, 2, 4)); });
    run.run("hilbert.secant_4_6_1_2", "class of X_2(g^1_4) in X(2)", [] { return same_class("theta - 3*eta", secant_class(4, 6, 1, 2)); });
    run.run("hilbert.c1_prose_sign", "c1(T W_pq) = 2 theta and c1 . X_q = 20 as stated in prose", [&] {
        SurfaceData w = surface_W_pq(k);
        w.c1 = -w.c1;
        w.extra_curves[0].pairings["c1"] = -k.value("c1.X_q");
        PolynomialQ chi = hrr_surface_chi(w, SurfaceDivisor{gen_theta(w.ambient, 0), "theta", {{"X_q", 1}}});
        PolynomialQ target{22, -50, 30};
        Outcome o{target.str(), chi.str(), chi == target ? CheckStatus::pass : CheckStatus::deviation,
                  "only c1 = -2 theta|_W with c1 . X_q = -20 reproduces the published polynomial; that convention is used"};
        return o;
    });
}

inline void verify_cycle(VerifyReport& rep, const VerifyOptions&) {
    using namespace verify_detail;
    Runner run(rep);
    SpaceSpec t = correspondence_space();
    const std::map<MultiDegree, std::pair<std::string, std::string>> parts = {
        {{2, 0, 0, 4}, {"cycle.class_41_23_a", "3*(theta@3*eta@3 - eta@3^2)*(theta@1 - eta@1)"}},
        {{0, 2, 2, 2}, {"cycle.class_41_23_b", "2*eta@3*delta(2,3)^2 + 4*(theta@2*eta@3*theta@3 - theta@2*eta@3^2 - eta@2*eta@3*theta@3 + 2*eta@2*eta@3^2)"}},
        {{1, 1, 1, 3}, {"cycle.class_41_23_c", "delta(1,2)*(eta@3*theta@3 - eta@3^2) + delta(1,3)*delta(2,3)*theta@3"}}};
    auto types = bidegree_41_23_types();
    for (const auto& [md, idtext] : parts)
        run.run(idtext.first, "bidegree (4,1)(2,3) component", [&, md = md, text = idtext.second] {
            auto it = types.find(md);
            if (it == types.end()) throw std::runtime_error("component missing");
            return same_class(text, gysin_on_factors(it->second, 2));
        });
    run.run("cycle.class_23_41", "bidegree (2,3)(4,1) class", [&] {
        return same_class("eta@3*delta(1,3)^2 + 2*(theta@1-eta@1)*eta@3*theta@3 + 2*(-theta@1+2*eta@1)*eta@3^2",
                          bidegree_class(BidegreeTag::B23_41));
    });
    run.run("cycle.class_23_23", "bidegree (2,3)(2,3) class", [&] {
        return same_class("(theta@1-eta@1)*theta@3*(theta@3-eta@3) + 3*(theta@1-eta@1)*(theta@3^2/2-theta@3*eta@3+eta@3^2)"
                          " + 4*(theta@2-eta@2)*(theta@3^2/2-theta@3*eta@3+eta@3^2) + delta(1,3)*delta(2,3)*(theta@3-eta@3)"
                          " + delta(1,2)*(theta@3^2/2-theta@3*eta@3+eta@3^2)",
                          bidegree_class(BidegreeTag::B23_23));
    });
    run.run("cycle.total_mod_theta_pic", "total class modulo theta H^2(Pic)", [&] {
        CohClass expected = evaluate_class(
            "(-2*theta@1+4*eta@1+4*eta@2)*eta@3^2 + (2*delta(2,3)^2+delta(1,3)^2-delta(1,3)*delta(2,3)+(theta@1-eta@1)*theta@3)*eta@3", t);
        CohClass got = reduce_mod_theta_pic(total_class(), 2);
        return truth(reduce_mod_theta_pic(expected, 2) == got, to_pretty_string(reduce_mod_theta_pic(expected, 2)), to_pretty_string(got));
    });
    run.run("cycle.delta_cancellation", "delta_13 restricted to W x C(4) is -delta_23", [&] {
        WClass w = w_restrict(delta(t, 0, 2) + delta(t, 1, 2));
        bool zero = true;
        for (const auto& [e, c] : w.by_eta2) zero = zero && c.is_zero();
        return truth(zero, "0", zero ? "0" : "nonzero");
    });
    run.run("cycle.restricted_total", "total class restricted to W_1 x C(4)", [&] {
        CohClass rc = evaluate_class("(-2*theta@1+4*eta@1+4*eta@2)*eta@3^2 + 4*delta(1,3)^2*eta@3 + (theta@1-eta@1)*theta@3*eta@3", t);
        bool ok = total_class_restricted() == reduce_mod_theta_pic(w_restrict(rc));
        return truth(ok, "(-2 theta_1 + 4 eta_1 + 4 eta_2) eta_3^2 + 4 delta_13^2 eta_3 + (theta_1 - eta_1) theta_3 eta_3",
                     ok ? "(-2 theta_1 + 4 eta_1 + 4 eta_2) eta_3^2 + 4 delta_13^2 eta_3 + (theta_1 - eta_1) theta_3 eta_3"
                        : "different class");
    });
    run.run("cycle.degree_six", "every term of the total class has degree 6",
            [&] { return same("6", std::to_string(total_class().degree())); });
}

inline void verify_aj(VerifyReport& rep, const VerifyOptions&) {
    using namespace verify_detail;
    Runner run(rep);
    SpaceSpec s = aj_source();
    run.run("aj.aj1_eta", "image of eta under the first Abel-Jacobi map", [&] {
        Outcome o = same_class("10*eta^2 - 11*theta*eta", aj1_bar(gen_eta(s, 0)));
        if (o.status == CheckStatus::fail)
            o.note = "both evaluation paths give this value; the theta eta coefficient is (theta - eta)^2 eta = 11 from the "
                     "diagonal term minus 24 from the xi terms";
        return o;
    });
    for (int k = 1; k <= 5; ++k)
        run.run("aj.aj1_sigma_" + std::to_string(k), "image of sigma_k under the first Abel-Jacobi map", [&, k] {
            return same_class("8*eta^2 - 11*theta*eta + 16*sigma(" + std::to_string(k) + ")*eta", aj1_bar(gen_sigma(s, 0, k)));
        });
    Aj1ImageReport img;
    run.run("aj.aj1_image", "image contains eta H^2(Pic) + Q eta^2 modulo theta H^2(Pic)", [&] {
        img = aj1_image_check();
        Outcome o = truth(img.contains_target, "contains", img.contains_target ? "contains" : "does not contain");
        o.note = "rank of the image: " + std::to_string(img.rank);
        return o;
    });
    run.run("aj.aj1_two_paths", "formula and correspondence agree on the degree 2 basis", [&] {
        std::string n = std::to_string(img.domain_dim);
        return same(n + "/" + n, std::to_string(img.domain_dim - img.disagreements.size()) + "/" + n);
    });
    run.run("aj.aj1_cij", "c_ij nonzero integers", [&] {
        auto tab = aj1_cij_table();
        std::set<std::string> values;
        bool ok = true;
        for (const auto& e : tab) {
            ok = ok && e.pure && e.c.is_integer() && !e.c.is_zero();
            values.insert(e.c.str());
        }
        std::string vs;
        for (const auto& v : values) vs += (vs.empty() ? "" : ",") + v;
        return truth(ok, "nonzero integer on every pair", (ok ? "nonzero integer on every pair: " : "failed: ") + vs);
    });
    for (Aj2Reading r : {Aj2Reading::A, Aj2Reading::B}) {
        std::string rn = reading_name(r);
        run.run("aj.aj2_example_" + rn, "second Abel-Jacobi map on (12C_1 - 3C_tot + 2q_2^*(eta - sigma_1), 3C_1), reading " + rn, [&, r] {
            AJ2Target y = aj2_map(aj2_example_input(1), r);
            AJ2Target want;
            want.p[0] = -58;
            for (int j = 1; j < 5; ++j) want.p[j] = 44;
            Outcome o{want.str(), y.str(), y == want ? CheckStatus::pass : CheckStatus::deviation,
                      "the pushforward convention pairing q_2^*(eta - sigma_i) with the curves is not pinned down; both readings are reported"};
            return o;
        });
        run.run("aj.aj2_curve_pair_" + rn, "second Abel-Jacobi map on (C_1, C'_1) modulo P_j, reading " + rn, [&, r] {
            AJ2Target y = aj2_map(aj2_curve_pair_input(1), r);
            AJ2Target want, got;
            for (int j = 6; j < 10; ++j) want.p[j] = -6;
            for (int j = 5; j < 10; ++j) got.p[j] = y.p[j];
            Outcome o = same(want.str(), got.str());
            o.note = "full value " + y.str();
            return o;
        });
        run.run("aj.aj2_rank_" + rn, "rank of the second Abel-Jacobi map in the plane quotient, reading " + rn, [&, r] {
            auto rr = aj2_rank_check(r);
            Outcome o = same("10", std::to_string(rr.full_rank));
            o.note = "ambient classes alone: rank " + std::to_string(rr.ambient_rank) + " of " + std::to_string(rr.domain_dim) + " generators";
            return o;
        });
    }
    run.run("aj.span_theta_eta", "span of the curve pushforwards is <theta eta, eta^2>", [] {
        auto sp = span_check_theta_eta();
        Outcome o = truth(sp.equals_theta_eta, "dimension 2, equal to <theta eta, eta^2>",
                          "dimension " + std::to_string(sp.dim) + (sp.equals_theta_eta ? ", equal to <theta eta, eta^2>" : ", different span"));
        o.note = "theta^2 = " + to_pretty_string(sp.theta_squared);
        return o;
    });
}

inline void verify_degeneration(VerifyReport& rep, const VerifyOptions&) {
    using namespace verify_detail;
    Runner run(rep);
    const std::vector<std::pair<std::string, std::string>> table = {
        {"C14", "(1,22,2,22,1,0,0,0,0)"},   {"C(4)", "(1,10,46,130,256,130,46,10,1)"},
        {"M1", "(1,10,47,152,258,152,47,10,1)"}, {"Q3", "(1,0,1,0,1,0,1,0,0)"},
        {"Q3sing", "(1,0,1,0,2,0,1,0,0)"},  {"M12", "(1,22,3,44,3,22,1,0,0)"},
        {"M2", "(1,22,2,22,12,22,2,22,1)"}};
    for (const auto& [name, row] : table)
        run.run("degeneration.table_" + name, "Betti table of the strata, row " + name,
                [&, name = name, row = row] { return same(row, join(strata_row(name))); });
    run.run("degeneration.gr_h4_central", "weight pieces of H^4 of the central fiber", [] {
        GradedDims g = mv_e2(theta_tilde_0(), 4);
        return same("Gr3=12 Gr4=267 Gr<=2=0", "Gr3=" + std::to_string(g.at(3)) + " Gr4=" + std::to_string(g.at(4)) +
                                                   " Gr<=2=" + std::to_string(g.at(0) + g.at(1) + g.at(2)));
    });
    run.run("degeneration.d1_degree3", "image of d1 in degree 3 and its cokernel", [] {
        LinearMapQ d = d1_map(theta_tilde_0(), 0, 3);
        return same("rank 32, cokernel 12", "rank " + std::to_string(d.rank()) + ", cokernel " + std::to_string(d.cokernel_dim()));
    });
    run.run("degeneration.d1_degree4", "j_1^* - j_2^* in degree 4", [] {
        LinearMapQ d = d1_degree4_blocks();
        return same("270 -> 3, surjective, kernel 267", std::to_string(d.domain.size()) + " -> " + std::to_string(d.codomain.size()) +
                                                            (d.is_surjective() ? ", surjective" : ", not surjective") +
                                                            ", kernel " + std::to_string(d.kernel_dim()));
    });
    run.run("degeneration.jk_surjective", "j_k^* surjective for k = 1, 2", [] {
        bool a = stratum_restriction(theta_tilde_0(), "M1", 4).is_surjective();
        bool b = stratum_restriction(theta_tilde_0(), "M2", 4).is_surjective();
        return same("true,true", std::string(a ? "true" : "false") + "," + (b ? "true" : "false"));
    });
    run.run("degeneration.planes_to_f_tau1", "each plane restricts to f . tau_1", [] {
        LinearMapQ d = d1_degree4_blocks();
        std::size_t ok = 0, planes = 0;
        for (std::size_t c = 0; c < d.domain.size(); ++c) {
            if (d.domain[c].rfind("M2/P2_i", 0) != 0) continue;
            ++planes;
            // d1 carries the minus sign of j_2^*
            if (d.matrix(0, c) == Rational(-1) && d.matrix(1, c).is_zero() && d.matrix(2, c).is_zero()) ++ok;
        }
        return same("10/10", std::to_string(ok) + "/" + std::to_string(planes));
    });
    run.run("degeneration.restriction_block", "restriction of p_1^* H^4(C(4)) computed against the declared block", [] {
        auto checks = check_restriction_blocks(theta_tilde_0());
        std::string e, c;
        bool ok = !checks.empty();
        for (const auto& b : checks) {
            e += b.from + " rank " + std::to_string(b.declared_rank);
            c += b.from + " rank " + std::to_string(b.computed_rank);
            ok = ok && b.ok();
        }
        return truth(ok, e, c);
    });
    run.run("degeneration.gr_h4_general", "weight pieces of H^4 of the general fiber", [] {
        GradedDims t = clemens_schmid_gr(mv_e2(theta_tilde_0(), 4), strata_row("M12")[2]);
        return same("Gr3=12 Gr4=264 Gr5=12 total=288", "Gr3=" + std::to_string(t.at(3)) + " Gr4=" + std::to_string(t.at(4)) +
                                                          " Gr5=" + std::to_string(t.at(5)) + " total=" + std::to_string(t.total()));
    });
    run.run("degeneration.low_degrees", "h^m of the theta divisor for m <= 3",
            [] {
                std::vector<long long> v;
                for (int m = 0; m <= 3; ++m) v.push_back(theta_low_betti(5, m));
                return same("(1,10,45,120)", join(v));
            });
    run.run("degeneration.rank_K", "g! - C(2g,g)/(g+1) for g = 5", [] { return same("78", std::to_string(primitive_rank(5))); });
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n = {"ring", "gysin", "chern", "hilbert", "cycle", "aj", "degeneration"};
    return n;
}

/// Runs the named suites ("all" expands to every suite) in a fixed order; checks are sorted by id.
inline VerifyReport run_verify(std::vector<std::string> suites, const VerifyOptions& opt = {}) {
    if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
    VerifyReport rep;
    for (const auto& name : suite_names()) {
        if (std::find(suites.begin(), suites.end(), name) == suites.end()) continue;
        if (name == "ring") verify_ring(rep, opt);
        else if (name == "gysin") verify_gysin(rep, opt);
        else if (name == "chern") verify_chern(rep, opt);
        else if (name == "hilbert") verify_hilbert(rep, opt);
        else if (name == "cycle") verify_cycle(rep, opt);
        else if (name == "aj") verify_aj(rep, opt);
        else if (name == "degeneration") verify_degeneration(rep, opt);
    }
    std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return rep;
}

}  // namespace symcoh
