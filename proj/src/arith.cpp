#include "arith.hpp"

#include <stdexcept>

namespace pexeq {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::invalid_argument("rational denominator must be nonzero");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int isqrt(const Int& n) {
    if (n < 0) {
        throw std::invalid_argument("isqrt requires n >= 0");
    }
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) {
        return std::nullopt;
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return isqrt(n);
}

std::optional<PowerForm> is_perfect_power(const Int& n) {
    if (n < 2) {
        throw std::invalid_argument("is_perfect_power requires n >= 2");
    }
    // Trial exponents from the largest possible downward; the first exact
    // k-th root gives the smallest base.
    const unsigned long max_exp = mpz_sizeinbase(n.get_mpz_t(), 2); // floor(log2 n)+1
    for (unsigned long k = max_exp; k >= 2; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
            return PowerForm{root, k};
        }
    }
    return std::nullopt;
}

std::optional<unsigned long> pow_of_base(const Int& n, const Int& c) {
    if (c < 2) {
        throw std::invalid_argument("pow_of_base requires c >= 2");
    }
    if (n < 1) {
        throw std::invalid_argument("pow_of_base requires n >= 1");
    }
    unsigned long z = 0;
    Int v = n;
    if (c.fits_ulong_p()) {
        const unsigned long cu = c.get_ui();
        while (v > 1) {
            if (mpz_tdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), cu) != 0) {
                return std::nullopt;
            }
            ++z;
        }
    } else {
        Int q, r;
        while (v > 1) {
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
            if (r != 0) {
                return std::nullopt;
            }
            v = q;
            ++z;
        }
    }
    return z;
}

Int gcd(const Int& m, const Int& n) {
    Int g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    return g;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string to_decimal(const Int& n) {
    return n.get_str();
}

std::string to_decimal(const Rat& q) {
    return q.get_str();
}

Int parse_int(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    Int v;
    if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: " + text);
    }
    return v;
}

} // namespace pexeq
