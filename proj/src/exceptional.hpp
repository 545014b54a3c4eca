#pragma once

#include "solver.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace pexeq {

enum class EntryKind { Sporadic, Family };

/// One member of the known multi-solution set: either a sporadic triple or a
/// member of the family (2, 2^r - 1, 2^r + 1) with r = 2 or r >= 4.
struct ExceptionalEntry {
    Triple triple;
    EntryKind kind;
    unsigned long family_r = 0;      // meaningful when kind == Family
    std::vector<Solution> witnesses; // filled by verification; >= 2 entries
    Int verified_height = 0;         // bound the witnesses were found under

    ExceptionalEntry(Triple t, EntryKind k, unsigned long r = 0)
        : triple(std::move(t)), kind(k), family_r(r) {}
};

/// The twelve sporadic triples, in their canonical listing order.
const std::array<std::array<unsigned long, 3>, 12>& sporadic_triples();

/// The two family solutions for (2, 2^r - 1, 2^r + 1): (1,1,1) and (r+2,2,2),
/// both verified exactly. r must be 2 or >= 4.
std::pair<Solution, Solution> family_solutions(unsigned long r);

struct VerifyPolicy {
    /// Explicit starting bound; empty means automatic: max(c^3, 10^8).
    std::optional<Int> height;
    /// Whether the bound may be doubled while fewer than two witnesses are
    /// found. Always on in automatic mode; an explicit bound is taken at
    /// face value unless this is set.
    bool auto_raise = false;
    unsigned max_doublings = 16;
};

/// Re-enumerates the entry's solutions and stores them as witnesses. Throws
/// VerifyError when fewer than two solutions exist within the final bound.
/// Idempotent: verifying a verified entry reproduces the same witnesses.
ExceptionalEntry verify_exceptional(const ExceptionalEntry& e, const VerifyPolicy& policy = {});

/// The full set for family parameters r = 2 and 4 <= r <= r_max: twelve
/// sporadic entries followed by family entries in increasing r, each verified
/// under the given policy. r_max must be >= 2.
std::vector<ExceptionalEntry> exceptional_set(unsigned long r_max,
                                              const VerifyPolicy& policy = {});

/// Membership test against the whole set, including every family member and
/// the (b, a, c) swap. Unbounded in r.
bool in_exceptional_set(const Int& a, const Int& b, const Int& c);

} // namespace pexeq
