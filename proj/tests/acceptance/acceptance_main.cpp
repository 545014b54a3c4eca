// Acceptance suite: every release criterion, run end to end with wall-clock
// budgets, one PASS/FAIL line per criterion. Exit code = number of failures.

#include "errors.hpp"
#include "exceptional.hpp"
#include "format.hpp"
#include "scan.hpp"
#include "solver.hpp"
#include "system.hpp"

#include "pexeq/pexeq.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

using namespace pexeq;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > budget_seconds) {
        error = "exceeded the " + std::to_string(budget_seconds) + "s budget";
    }
    if (error.empty()) {
        std::printf("PASS criterion %d: %s (%.2fs)\n", number, name.c_str(), elapsed);
    } else {
        std::printf("FAIL criterion %d: %s (%.2fs): %s\n", number, name.c_str(), elapsed,
                    error.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

void expect(bool ok, const std::string& msg) {
    if (!ok) throw VerifyError(msg);
}

} // namespace

int main() {
    // 1. Counting landmark: N(3,5,2) = N(5,3,2) = 3 below 2^60.
    criterion(1, "counting landmark N(3,5,2) = N(5,3,2) = 3", 1.0, [] {
        Int h = pow_int(Int(2), 60);
        expect(count_solutions(Triple(Int(3), Int(5), Int(2)), h) == 3,
               "count(3,5,2) != 3");
        expect(count_solutions(Triple(Int(5), Int(3), Int(2)), h) == 3,
               "count(5,3,2) != 3");
    });

    // 2. Exceptional set: all sporadic triples and family r in {2} + [4,20].
    criterion(2, "exceptional set verifies with r_max = 20, auto height", 30.0, [] {
        char* out = nullptr;
        pexeq_status status = pexeq_exceptional_verify(20, "auto", &out);
        expect(status == PEXEQ_OK, std::string("C API reported: ") + pexeq_last_error());
        std::string rows(out);
        pexeq_string_free(out);
        std::size_t lines = 0;
        for (char ch : rows) lines += ch == '\n';
        expect(lines == 30, "expected 30 verified entries (12 sporadic + 18 family)");

        std::string cmd = std::string(PEXEQ_CLI_PATH) +
                          " exceptional --r-max 20 --height auto > /dev/null 2>&1";
        expect(std::system(cmd.c_str()) == 0, "CLI exit code nonzero");
    });

    // 3. Theorem oracle: the exhaustive search over every base c <= 200.
    criterion(3, "system oracle over c <= 200, a <= 10^4, z <= 40", 600.0, [] {
        std::vector<SystemSolution> all;
        for (unsigned long c = 2; c <= 200; ++c) {
            auto part = brute_force_system(Int(c), Int(10000), 40);
            all.insert(all.end(), part.begin(), part.end());
        }
        std::vector<SystemSolution> expected{
            SystemSolution{Int(2), Int(5), Int(3), 2, 3},
            SystemSolution{Int(5), Int(2), Int(3), 3, 2},
        };
        expect(all == expected, "oracle solution set is not {(2,5,3,2,3),(5,2,3,3,2)}");
    });

    // 4. Proof replay: the certified pipeline with its three case families.
    criterion(4, "certificate pipeline: f=1 only at r=1, survivor (3,2,5), m=2", 60.0, [] {
        Certificate cert = theorem_certificate(); // r_scan 10^4, oracle c <= 200
        expect(cert.solutions.size() == 2, "expected exactly 2 solutions");
        expect(cert.solutions[0] == SystemSolution{Int(2), Int(5), Int(3), 2, 3} &&
                   cert.solutions[1] == SystemSolution{Int(5), Int(2), Int(3), 3, 2},
               "solution quintuples are wrong");
        expect(cert.oracle_agrees, "oracle cross-check not recorded");

        std::size_t f1_traces = 0, f1_solutions = 0;
        bool survivor_rejected = false, m2_contradiction = false;
        for (const ProofTrace& t : cert.traces) {
            switch (t.branch) {
                case Branch::FEq1:
                    ++f1_traces;
                    if (t.verdict == Verdict::Solution) {
                        ++f1_solutions;
                        expect(t.a == 2, "f=1 solution not at r=1");
                    }
                    break;
                case Branch::FGe2MGt2:
                    if (t.a == 3 && t.f == 2 && t.verdict == Verdict::Contradiction) {
                        survivor_rejected = true;
                    }
                    break;
                case Branch::FGe2MEq2:
                    if (t.verdict == Verdict::Contradiction &&
                        t.detail.find("z+1 > 2z impossible") != std::string::npos) {
                        m2_contradiction = true;
                    }
                    break;
            }
        }
        expect(f1_traces == 10000, "f=1 branch must cover r <= 10^4");
        expect(f1_solutions == 1, "f=1 branch must pass only at r = 1");
        expect(survivor_rejected, "survivor (3,2,5) was not rejected");
        expect(m2_contradiction, "m = 2 parity contradiction missing");
    });

    // 5. Identity suite on the (a, f) grid.
    criterion(5, "identity suite on a in [2,100], f in [1,100]", 10.0, [] {
        for (unsigned long a = 2; a <= 100; ++a) {
            for (unsigned long f = 1; f <= 100; ++f) {
                Int ai(a), fi(f);
                Int D = discriminant(ai, fi);
                if (D < 0) continue;
                auto gu = gu_squared_terms(ai, fi);
                Int fa = fi * ai;
                expect(Rat(Int(fa * fa)) * gu.radicand == Rat(D),
                       "radicand identity failed");
                auto s = is_perfect_square(D);
                if (!s) continue;
                // the quadratic root b = (a + sqrt(D))/f, exact as a rational
                Rat b = make_rat(ai + *s, fi);
                Rat residual =
                    Rat(fi) * b * b - Rat(Int(2 * ai)) * b - Rat(Int(ai * ai * ai)) +
                    Rat(Int(fi * ai)) + 1;
                expect(residual == 0, "quadratic residual nonzero");
                expect(gu.linear + make_rat(*s, fa) == b / Rat(ai),
                       "g_u != b/a at a square discriminant");
            }
        }
    });

    // 6. f = 1 polynomial consistency.
    criterion(6, "f=1 polynomial identity and the r=1 values", 1.0, [] {
        for (unsigned long r = 1; r <= 1000; ++r) {
            Int rr(r);
            expect((rr * rr + rr + 1) * (rr * rr + 2) ==
                       rr * rr * rr * rr + rr * rr * rr + 3 * rr * rr + 2 * rr + 2,
                   "product identity failed at r = " + std::to_string(r));
        }
        ProofTrace t = f1_branch(1);
        expect(t.verdict == Verdict::Solution, "f1_branch(1) must accept");
        expect(t.detail.find("a=2 b=5 c^z=9 c^Z=27") != std::string::npos,
               "f1_branch(1) values wrong");
    });

    // 7 + 8. Census up to 13 stays inside the known set; odd bases stay <= 2.
    static ScanReport census;
    criterion(7, "census a,b,c <= 13, H = 10^9 stays inside the known set", 300.0, [] {
        ScanConfig cfg;
        cfg.a_max = cfg.b_max = cfg.c_max = 13;
        cfg.height = Int(1000000000);
        cfg.workers = 8;
        census = scan_range(cfg);
        expect(!census.rows.empty(), "census found no multi-solution rows");
        expect(census.findings.empty(), "census produced findings");
        for (const ScanRow& row : census.rows) {
            expect(row.exceptional, "row (" + std::to_string(row.a) + "," +
                                        std::to_string(row.b) + "," + std::to_string(row.c) +
                                        ") is outside the known set");
            expect(in_exceptional_set(Int(row.a), Int(row.b), Int(row.c)),
                   "membership flag inconsistent");
        }
        std::set<std::tuple<unsigned long, unsigned long, unsigned long>> seen;
        for (const ScanRow& row : census.rows) seen.insert({row.a, row.b, row.c});
        for (auto need : std::vector<std::tuple<unsigned long, unsigned long, unsigned long>>{
                 {3, 5, 2}, {2, 5, 3}, {2, 7, 3}, {2, 3, 11}, {3, 13, 2}, {2, 3, 5},
                 {3, 10, 13}}) {
            expect(seen.count(need) == 1, "expected census member missing");
        }
    });

    criterion(8, "odd bases in the census have at most two solutions", 1.0, [] {
        expect(!census.rows.empty(), "criterion 7 census unavailable");
        for (const ScanRow& row : census.rows) {
            if (row.c % 2 == 1) {
                expect(row.solutions.size() <= 2, "odd-base row above the bound");
            }
        }
    });

    // 9. Determinism across worker counts.
    criterion(9, "workers = 1 and workers = 8 produce identical checksums", 600.0, [] {
        ScanConfig cfg;
        cfg.a_max = cfg.b_max = cfg.c_max = 13;
        cfg.height = Int(1000000000);
        cfg.workers = 1;
        ScanReport one = scan_range(cfg);
        cfg.workers = 8;
        ScanReport eight = scan_range(cfg);
        expect(one.checksum == eight.checksum, "checksums differ across worker counts");
        expect(one.rows == eight.rows, "rows differ across worker counts");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
