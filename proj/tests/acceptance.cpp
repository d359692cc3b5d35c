// Acceptance report: one PASS/FAIL line per criterion, built on the verification suites.
// All comparisons are exact rational or integer equality (tolerance 0).
#include "symcoh/verify.hpp"

#include <cstdio>
#include <cstring>
#include <iostream>
#include <set>

using namespace symcoh;

namespace {

constexpr int kTolerance = 0;  // exact arithmetic throughout; kept explicit for the report

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> prefixes;  // check ids (or id prefixes) that make up the criterion
    bool allow_deviation = false;
};

bool matches(const std::string& id, const std::string& prefix) {
    return prefix.back() == '*' ? id.rfind(prefix.substr(0, prefix.size() - 1), 0) == 0 : id == prefix;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--known-failures") == 0 && i + 1 < argc) {
            for (const char* p = argv[++i]; *p;) {
                char* end = nullptr;
                long v = std::strtol(p, &end, 10);
                if (end == p) break;
                known.insert(static_cast<int>(v));
                p = *end == ',' ? end + 1 : end;
            }
        } else {
            std::cerr << "usage: acceptance [--known-failures N[,N...]]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "Betti table and strata table", {"ring.betti_sym_5_4", "degeneration.table_*"}},
        {2, "Gysin tables, engine and oracle", {"gysin.h2.*", "gysin.h4.*", "gysin.c13.*"}},
        {3, "Chern classes of C(3) and W_pq", {"chern.sym_5_3", "chern.restrict_W"}},
        {4, "Hilbert polynomials and both routes", {"hilbert.chi_*", "hilbert.route_*"}},
        {5, "cycle classes and restricted total class", {"cycle.class_*", "cycle.restricted_total"}},
        {6, "first Abel-Jacobi map", {"aj.aj1_*"}},
        {7, "second Abel-Jacobi map", {"aj.aj2_*"}, true},
        {8, "degeneration weight pieces", {"degeneration.gr_h4_central", "degeneration.gr_h4_general"}},
        {9, "property suites",
         {"ring.oracle_mul", "ring.oracle_integrate", "gysin.oracle_random", "ring.poincare_nonsingular",
          "gysin.involution_twice", "chern.euler_*"}},
        {10, "arithmetic sanity", {"degeneration.rank_K", "aj.span_theta_eta"}},
    };

    VerifyOptions opt;
    opt.oracle = true;
    VerifyReport rep = run_verify({"all"}, opt);

    std::set<int> failed;
    for (const auto& c : criteria) {
        std::vector<const CheckResult*> mine, bad;
        for (const auto& r : rep.checks)
            for (const auto& p : c.prefixes)
                if (matches(r.id, p)) {
                    mine.push_back(&r);
                    bool ok = r.status == CheckStatus::pass || (c.allow_deviation && r.status == CheckStatus::deviation);
                    if (!ok) bad.push_back(&r);
                    break;
                }
        bool pass = !mine.empty() && bad.empty();
        if (!pass) failed.insert(c.number);
        std::printf("%s %2d  %s  (%zu checks, tolerance %d)\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), mine.size(),
                    kTolerance);
        for (const auto* r : mine)
            if (r->status != CheckStatus::pass) {
                std::printf("        %s [%s]\n          expected: %s\n          computed: %s\n", r->id.c_str(),
                            status_name(r->status), r->expected.c_str(), r->computed.c_str());
                if (!r->note.empty()) std::printf("          note: %s\n", r->note.c_str());
            }
        if (mine.empty()) std::printf("        no checks found\n");
    }
    double total = 0;
    for (const auto& r : rep.checks) total += r.elapsed_ms;
    std::printf("%zu of %zu criteria pass; %.1f s of checks\n", criteria.size() - failed.size(), criteria.size(), total / 1000);

    if (known.empty()) return failed.empty() ? 0 : 1;
    if (failed == known) {
        std::printf("failing criteria match the known-failure list\n");
        return 0;
    }
    std::printf("failing criteria differ from the known-failure list\n");
    return 1;
}
