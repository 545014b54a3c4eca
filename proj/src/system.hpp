#pragma once

#include "arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pexeq {

/// A solution of the pair a^2 + b = c^z, a + b^2 = c^Z with min(a,b,c) > 1
/// and gcd(a,b) = 1.
struct SystemSolution {
    Int a, b, c;
    unsigned long z = 0, Z = 0;

    friend bool operator==(const SystemSolution&, const SystemSolution&) = default;
};

enum class Branch { FEq1, FGe2MGt2, FGe2MEq2 };
enum class Verdict { Solution, Contradiction };

/// Machine-readable record of one step of the case analysis. `m` stands for
/// the power ratio c^(Z-z) handled by the branch; fields that a branch does
/// not constrain are zero.
struct ProofTrace {
    Branch branch = Branch::FEq1;
    Int a = 0;
    Int f = 0;
    std::optional<Int> g;
    Int D = 0;
    Int m = 0;
    Verdict verdict = Verdict::Contradiction;
    std::string detail;
};

const char* branch_name(Branch b);
const char* verdict_name(Verdict v);

struct SystemSearchOptions {
    /// Skip residues a mod c that cannot make a + b^2 divisible by c. Exact
    /// pruning; results are identical either way (see the equivalence test).
    bool residue_filter = true;
};

/// Exhaustive oracle: all system solutions with the given base c, a <= a_max
/// and z <= z_max, sorted by (c^z, a). b is determined as c^z - a^2.
std::vector<SystemSolution> brute_force_system(const Int& c, const Int& a_max,
                                               unsigned long z_max,
                                               const SystemSearchOptions& opt = {});

/// f = (a^3 + 2ab - 1) / c^Z. Requires a < b, gcd(a,c) = 1 and c^Z = a + b^2;
/// throws VerifyError when the quotient is not integral.
Int compute_f(const Int& a, const Int& b, const Int& c, unsigned long Z);

/// g = (ab - 1) / c^z. Requires a < b, gcd(ab,c) = 1 and c^z = a^2 + b;
/// throws VerifyError when the quotient is not integral.
Int compute_g(const Int& a, const Int& b, const Int& c, unsigned long z);

/// The signed discriminant f*a^3 + a^2 - f^2*a - f of the quadratic in b.
/// Negative values are legal outputs (no real root).
Int discriminant(const Int& a, const Int& f);

/// Solves the quadratic for b: requires the discriminant to be a nonnegative
/// perfect square s^2 with f | a + s and (a + s)/f > a; empty otherwise.
std::optional<Int> b_from_af(const Int& a, const Int& f);

/// The f = 1 branch at parameter r (a = r^2 + 1): evaluates the closed-form
/// polynomial values and decides by the exact ratio (r^2+r+1)/(r^2+2), which
/// equals 1 only at r = 1.
ProofTrace f1_branch(unsigned long r);

/// g_u = linear + sqrt(radicand), both exact rationals: linear = 1/f,
/// radicand = a/f + 1/f^2 - 1/a - 1/(f*a^2). Throws VerifyError when the
/// radicand is negative.
struct GuTerms {
    Rat radicand;
    Rat linear;
};
GuTerms gu_squared_terms(const Int& a, const Int& f);

/// Exact test of (1 - 1/m) * a <= g_u/m + g_u^2 with m = c^(Z-z), evaluated
/// without floating point by isolating the radical and squaring.
bool inequality_holds(const Int& a, const Int& f, const Int& m);

struct CandidatePair {
    Int a, f;

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct Survivor {
    Int a, f, b;

    friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct CandidateSearchResult {
    /// Largest a passing the inequality at f = 2, m = 3 (the weakest filter),
    /// located by a 64-consecutive-failure cutoff.
    unsigned long a_limit = 0;
    std::vector<CandidatePair> candidates; // D >= 0 and inequality holds at m = 3
    std::vector<Survivor> survivors;       // discriminant is a perfect square
};

/// Enumerates the whole f >= 2, m >= 3 grid and asserts the survivor set is
/// exactly {(3,2,5)}; anything else throws VerifyError.
CandidateSearchResult candidate_search_f_ge2();

/// Shows a survivor pair (a,b) admits no base c with both a^2 + b and a + b^2
/// powers of c at ratio >= 3. Pairs with f = 1 report a branch mismatch.
ProofTrace reject_survivor(const Int& a, const Int& b);

/// The c^(Z-z) = 2 branch: replays the parity contradiction (2^z divides
/// b - a forces b > 2^z, while a + b^2 = 2^(z+1) forces z + 1 > 2z) and
/// confirms the c = 2 oracle finds nothing.
ProofTrace case_m_eq_2();

struct CertificateParams {
    unsigned long r_scan = 10000;
    unsigned long oracle_c_max = 200;
    Int oracle_a_max = 10000;
    unsigned long oracle_z_max = 40;
};

/// The composed pipeline: f = 1 scan, f >= 2 grid search plus survivor
/// rejection, the m = 2 branch, and a full cross-check against the brute
/// force oracle for every base up to oracle_c_max.
struct Certificate {
    std::vector<SystemSolution> solutions;
    std::vector<ProofTrace> traces;
    unsigned long f2_a_limit = 0;
    bool oracle_agrees = false;
    CertificateParams params;
};
Certificate theorem_certificate(const CertificateParams& params = {});

} // namespace pexeq
