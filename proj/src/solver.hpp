#pragma once

#include "arith.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace pexeq {

/// Fixed bases of a^x + b^y = c^z. Construction validates: every base >= 2
/// and the three are pairwise coprime (which also rules out equal bases).
struct Triple {
    Int a, b, c;

    Triple(Int a_, Int b_, Int c_);
};

/// One exponent triple with a^x + b^y = c^z exactly (x, y, z >= 1).
struct Solution {
    unsigned long x = 0, y = 0, z = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Enumeration order: lexicographic by (z, x, y).
inline bool solution_order(const Solution& lhs, const Solution& rhs) {
    if (lhs.z != rhs.z) return lhs.z < rhs.z;
    if (lhs.x != rhs.x) return lhs.x < rhs.x;
    return lhs.y < rhs.y;
}

struct EnumerateOptions {
    /// Cap on the common value c^z. A bound below c yields an empty search
    /// space and an empty result.
    Int height;
    /// Stop after this many solutions (enumeration order is preserved).
    std::size_t max_solutions = static_cast<std::size_t>(-1);
    /// Modular pre-sieve: skip (x, z) residue classes that are impossible
    /// modulo each listed modulus. Empty = off (the default). The sieve is a
    /// pure pruning step and never changes results.
    std::vector<unsigned long> sieve_moduli;
};

/// All (x, y, z) with a^x + b^y = c^z and c^z <= height, sorted by (z, x, y).
/// Every returned solution is re-verified by an independent exact evaluation.
std::vector<Solution> enumerate_solutions(const Triple& t, const EnumerateOptions& opt);
std::vector<Solution> enumerate_solutions(const Triple& t, const Int& height);

/// N_H(a, b, c): the number of solutions below the height bound.
Int count_solutions(const Triple& t, const Int& height);

/// True iff at least two solutions exist below the bound; stops searching as
/// soon as the second one is found.
bool has_multiple_solutions(const Triple& t, const Int& height);

/// Fresh evaluation of a^x + b^y == c^z, independent of the search path.
bool solution_satisfies(const Triple& t, const Solution& s);

} // namespace pexeq
