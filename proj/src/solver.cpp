#include "solver.hpp"

#include "errors.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pexeq {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Power residues of base^e mod m for e >= 1 form an eventually periodic
// sequence: a tail of length `tail` followed by a cycle of length `cycle`.
struct PowerOrbit {
    std::vector<unsigned long> residues; // residues[i] = base^(i+1) mod m
    std::size_t tail = 0;
    std::size_t cycle = 1;

    std::size_t class_of(unsigned long e) const {
        // e >= 1; collapses e to an index with the same residue
        std::size_t i = static_cast<std::size_t>(e - 1);
        if (i < residues.size()) return i;
        return tail + (i - tail) % cycle;
    }
};

PowerOrbit power_orbit(const Int& base, unsigned long m) {
    PowerOrbit orbit;
    std::map<unsigned long, std::size_t> seen;
    unsigned long r = mpz_fdiv_ui(base.get_mpz_t(), m);
    unsigned long b0 = r;
    std::size_t i = 0;
    while (true) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            orbit.tail = it->second;
            orbit.cycle = i - it->second;
            break;
        }
        seen.emplace(r, i);
        orbit.residues.push_back(r);
        r = static_cast<unsigned long>((static_cast<unsigned long long>(r) * b0) % m);
        ++i;
    }
    return orbit;
}

// Per-modulus tables answering: can a^x + b^y == c^z (mod m) for some y?
struct SieveTable {
    unsigned long m;
    PowerOrbit a_orbit, c_orbit;
    std::vector<char> b_reachable;          // residues hit by b^y, y >= 1
    std::vector<char> possible;             // [class_x][class_z]

    bool admits(unsigned long x, unsigned long z) const {
        return possible[a_orbit.class_of(x) * c_orbit.residues.size() +
                        c_orbit.class_of(z)] != 0;
    }
};

SieveTable build_sieve_table(const Triple& t, unsigned long m) {
    SieveTable table;
    table.m = m;
    table.a_orbit = power_orbit(t.a, m);
    table.c_orbit = power_orbit(t.c, m);
    table.b_reachable.assign(m, 0);
    PowerOrbit b_orbit = power_orbit(t.b, m);
    for (unsigned long r : b_orbit.residues) table.b_reachable[r] = 1;

    const std::size_t nx = table.a_orbit.residues.size();
    const std::size_t nz = table.c_orbit.residues.size();
    table.possible.assign(nx * nz, 0);
    for (std::size_t ix = 0; ix < nx; ++ix) {
        for (std::size_t iz = 0; iz < nz; ++iz) {
            unsigned long need =
                (table.c_orbit.residues[iz] + m - table.a_orbit.residues[ix]) % m;
            table.possible[ix * nz + iz] = table.b_reachable[need];
        }
    }
    return table;
}

} // namespace

Triple::Triple(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    require(a >= 2 && b >= 2 && c >= 2, "triple bases must all be >= 2");
    require(gcd(a, b) == 1, "triple bases must be pairwise coprime: gcd(a,b) = " +
                                to_decimal(gcd(a, b)));
    require(gcd(a, c) == 1, "triple bases must be pairwise coprime: gcd(a,c) = " +
                                to_decimal(gcd(a, c)));
    require(gcd(b, c) == 1, "triple bases must be pairwise coprime: gcd(b,c) = " +
                                to_decimal(gcd(b, c)));
}

bool solution_satisfies(const Triple& t, const Solution& s) {
    return pow_int(t.a, s.x) + pow_int(t.b, s.y) == pow_int(t.c, s.z);
}

std::vector<Solution> enumerate_solutions(const Triple& t, const EnumerateOptions& opt) {
    std::vector<SieveTable> sieve;
    sieve.reserve(opt.sieve_moduli.size());
    for (unsigned long m : opt.sieve_moduli) {
        require(m >= 2 && m <= 4096, "sieve modulus must be in [2, 4096]");
        sieve.push_back(build_sieve_table(t, m));
    }

    std::vector<Solution> out;
    Int cz = t.c; // c^z, z starting at 1
    for (unsigned long z = 1; cz <= opt.height; ++z, cz *= t.c) {
        Int ax = t.a; // a^x, x starting at 1
        for (unsigned long x = 1; ax < cz; ++x, ax *= t.a) {
            bool admissible = true;
            for (const SieveTable& table : sieve) {
                if (!table.admits(x, z)) {
                    admissible = false;
                    break;
                }
            }
            if (!admissible) continue;

            Int rest = cz - ax;
            auto y = pow_of_base(rest, t.b);
            if (!y || *y < 1) continue;

            Solution s{x, *y, z};
            if (!solution_satisfies(t, s)) {
                throw VerifyError("enumeration produced a non-solution for (" +
                                  to_decimal(t.a) + "," + to_decimal(t.b) + "," +
                                  to_decimal(t.c) + ")");
            }
            out.push_back(s);
            if (out.size() >= opt.max_solutions) return out;
        }
    }
    return out;
}

std::vector<Solution> enumerate_solutions(const Triple& t, const Int& height) {
    EnumerateOptions opt;
    opt.height = height;
    return enumerate_solutions(t, opt);
}

Int count_solutions(const Triple& t, const Int& height) {
    return Int(static_cast<unsigned long>(enumerate_solutions(t, height).size()));
}

bool has_multiple_solutions(const Triple& t, const Int& height) {
    EnumerateOptions opt;
    opt.height = height;
    opt.max_solutions = 2;
    return enumerate_solutions(t, opt).size() >= 2;
}

} // namespace pexeq
