#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arith.hpp"

#include <cstdint>

using namespace pexeq;

namespace {

// Independent oracle: exact k-th root of n (n < 2^63) by binary search on
// 64-bit integers, no GMP involved.
bool has_exact_kth_root_u64(uint64_t n, unsigned k) {
    uint64_t lo = 1, hi = n;
    while (lo <= hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        // mid^k with overflow clamp
        uint64_t p = 1;
        bool over = false;
        for (unsigned i = 0; i < k; ++i) {
            if (p > n / mid) {
                over = true;
                break;
            }
            p *= mid;
        }
        if (!over && p == n) return true;
        if (over || p > n) {
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    return false;
}

bool is_perfect_power_oracle(uint64_t n) {
    for (unsigned k = 2; (1ull << k) <= n; ++k) {
        if (has_exact_kth_root_u64(n, k)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("isqrt on the pinned examples") {
    CHECK(isqrt(Int(49)) == 7);
    CHECK(isqrt(Int(50)) == 7);
    CHECK(isqrt(Int(0)) == 0);
    CHECK_THROWS_AS(isqrt(Int(-1)), std::invalid_argument);
}

TEST_CASE("isqrt bracket holds exhaustively up to 10^6") {
    for (long n = 0; n <= 1000000; ++n) {
        Int r = isqrt(Int(n));
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("is_perfect_square on the pinned examples") {
    auto r = is_perfect_square(Int(49));
    REQUIRE(r.has_value());
    CHECK(*r == 7);
    CHECK(!is_perfect_square(Int(53)).has_value());
    auto one = is_perfect_square(Int(1));
    REQUIRE(one.has_value());
    CHECK(*one == 1);
    CHECK(!is_perfect_square(Int(-4)).has_value());
}

TEST_CASE("is_perfect_square agrees with isqrt") {
    for (long n = 0; n <= 20000; ++n) {
        Int r = isqrt(Int(n));
        bool square = (r * r == n);
        CHECK(is_perfect_square(Int(n)).has_value() == square);
    }
}

TEST_CASE("is_perfect_power on the pinned examples") {
    auto p8 = is_perfect_power(Int(8));
    REQUIRE(p8.has_value());
    CHECK(p8->base == 2);
    CHECK(p8->exp == 3);

    auto p9 = is_perfect_power(Int(9));
    REQUIRE(p9.has_value());
    CHECK(p9->base == 3);
    CHECK(p9->exp == 2);

    CHECK(!is_perfect_power(Int(7)).has_value());
    CHECK_THROWS_AS(is_perfect_power(Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(is_perfect_power(Int(0)), std::invalid_argument);
}

TEST_CASE("is_perfect_power picks the smallest base") {
    auto p64 = is_perfect_power(Int(64));
    REQUIRE(p64.has_value());
    CHECK(p64->base == 2);
    CHECK(p64->exp == 6);

    auto p729 = is_perfect_power(Int(729));
    REQUIRE(p729.has_value());
    CHECK(p729->base == 3);
    CHECK(p729->exp == 6);

    auto p216 = is_perfect_power(Int(216)); // 6^3
    REQUIRE(p216.has_value());
    CHECK(p216->base == 6);
    CHECK(p216->exp == 3);
}

TEST_CASE("is_perfect_power agrees with the trial-root oracle on [2, 10^5]") {
    for (uint64_t n = 2; n <= 100000; ++n) {
        bool expected = is_perfect_power_oracle(n);
        auto got = is_perfect_power(Int(static_cast<unsigned long>(n)));
        REQUIRE(got.has_value() == expected);
        if (got) {
            CHECK(pow_int(got->base, got->exp) == Int(static_cast<unsigned long>(n)));
            CHECK(got->exp >= 2);
        }
    }
}

TEST_CASE("pow_of_base on the pinned examples") {
    CHECK(pow_of_base(Int(9), Int(3)) == 2);
    CHECK(pow_of_base(Int(27), Int(3)) == 3);
    CHECK(!pow_of_base(Int(28), Int(3)).has_value());
    CHECK(pow_of_base(Int(1), Int(7)) == 0);
    CHECK_THROWS_AS(pow_of_base(Int(9), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(pow_of_base(Int(0), Int(3)), std::invalid_argument);
}

TEST_CASE("pow_of_base round-trips c^z for c in [2,20], z in [0,40]") {
    for (unsigned long c = 2; c <= 20; ++c) {
        for (unsigned long z = 0; z <= 40; ++z) {
            Int n = pow_int(Int(c), z);
            auto back = pow_of_base(n, Int(c));
            REQUIRE(back.has_value());
            CHECK(*back == z);
        }
    }
}

TEST_CASE("gcd on the pinned examples") {
    CHECK(gcd(Int(2), Int(5)) == 1);
    CHECK(gcd(Int(6), Int(4)) == 2);
    CHECK(gcd(Int(0), Int(7)) == 7);
    CHECK(gcd(Int(7), Int(0)) == 7);
}

TEST_CASE("rationals normalize eagerly") {
    Rat q = make_rat(Int(6), Int(-4));
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(q == make_rat(Int(-3), Int(2)));

    Rat zero = make_rat(Int(0), Int(9));
    CHECK(zero.get_num() == 0);
    CHECK(zero.get_den() == 1);

    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::invalid_argument);

    // arithmetic stays canonical
    Rat s = make_rat(Int(1), Int(6)) + make_rat(Int(1), Int(3));
    CHECK(s.get_num() == 1);
    CHECK(s.get_den() == 2);
}

TEST_CASE("decimal parsing and printing") {
    CHECK(to_decimal(Int(0)) == "0");
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);

    // 4096-bit magnitudes stay exact
    Int big = pow_int(Int(2), 4096);
    CHECK(parse_int(to_decimal(big)) == big);
    CHECK(to_decimal(big).size() > 1200);
}
