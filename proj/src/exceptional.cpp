#include "exceptional.hpp"

#include "errors.hpp"

#include <stdexcept>

namespace pexeq {

const std::array<std::array<unsigned long, 3>, 12>& sporadic_triples() {
    static const std::array<std::array<unsigned long, 3>, 12> table = {{
        {3, 5, 2},
        {3, 13, 2},
        {2, 5, 3},
        {2, 7, 3},
        {2, 3, 11},
        {3, 10, 13},
        {2, 3, 35},
        {2, 89, 91},
        {2, 5, 133},
        {2, 3, 259},
        {3, 13, 2200},
        {2, 91, 8283},
    }};
    return table;
}

namespace {

bool valid_family_r(unsigned long r) {
    return r == 2 || r >= 4;
}

Triple family_triple(unsigned long r) {
    Int p = pow_int(Int(2), r);
    return Triple(Int(2), p - 1, p + 1);
}

} // namespace

std::pair<Solution, Solution> family_solutions(unsigned long r) {
    if (!valid_family_r(r)) {
        throw std::invalid_argument("family parameter must be 2 or >= 4");
    }
    Triple t = family_triple(r);
    Solution first{1, 1, 1};
    Solution second{r + 2, 2, 2};
    if (!solution_satisfies(t, first) || !solution_satisfies(t, second)) {
        throw VerifyError("family solutions failed exact expansion at r = " +
                          std::to_string(r));
    }
    return {first, second};
}

ExceptionalEntry verify_exceptional(const ExceptionalEntry& e, const VerifyPolicy& policy) {
    Int h;
    bool raising = policy.auto_raise;
    if (policy.height) {
        h = *policy.height;
    } else {
        h = e.triple.c * e.triple.c * e.triple.c;
        if (h < 100000000) h = 100000000;
        raising = true;
    }

    ExceptionalEntry verified = e;
    for (unsigned attempt = 0;; ++attempt) {
        auto found = enumerate_solutions(e.triple, h);
        if (found.size() >= 2) {
            verified.witnesses = std::move(found);
            verified.verified_height = h;
            return verified;
        }
        if (!raising || attempt >= policy.max_doublings) {
            throw VerifyError("triple (" + to_decimal(e.triple.a) + "," +
                              to_decimal(e.triple.b) + "," + to_decimal(e.triple.c) +
                              ") has fewer than 2 solutions within height " +
                              to_decimal(h));
        }
        h *= 2;
    }
}

std::vector<ExceptionalEntry> exceptional_set(unsigned long r_max, const VerifyPolicy& policy) {
    if (r_max < 2) {
        throw std::invalid_argument("r_max must be >= 2");
    }
    std::vector<ExceptionalEntry> entries;
    for (const auto& s : sporadic_triples()) {
        ExceptionalEntry e{Triple(Int(s[0]), Int(s[1]), Int(s[2])), EntryKind::Sporadic};
        entries.push_back(verify_exceptional(e, policy));
    }
    for (unsigned long r = 2; r <= r_max; r == 2 ? r = 4 : ++r) {
        ExceptionalEntry e{family_triple(r), EntryKind::Family, r};
        e = verify_exceptional(e, policy);
        // The verify pass must rediscover both closed-form family solutions.
        auto [first, second] = family_solutions(r);
        bool has_first = false, has_second = false;
        for (const Solution& w : e.witnesses) {
            has_first = has_first || w == first;
            has_second = has_second || w == second;
        }
        if (!has_first || !has_second) {
            throw VerifyError("family witnesses missing at r = " + std::to_string(r));
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

bool in_exceptional_set(const Int& a, const Int& b, const Int& c) {
    auto matches = [](const Int& x, const Int& y, const Int& z) {
        for (const auto& s : sporadic_triples()) {
            if (x == s[0] && y == s[1] && z == s[2]) return true;
        }
        // family: (2, 2^r - 1, 2^r + 1), r = 2 or r >= 4
        if (x != 2 || z - y != 2) return false;
        Int p = z - 1; // should be 2^r
        if (p < 4 || y != p - 1) return false;
        auto r = pow_of_base(p, Int(2));
        return r.has_value() && valid_family_r(*r);
    };
    return matches(a, b, c) || matches(b, a, c);
}

} // namespace pexeq
