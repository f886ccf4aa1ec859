#include "doctest.h"

#include "spm/arith.hpp"
#include "spm/oracles.hpp"

#include <numeric>

using namespace spm;

namespace {

// the slow way, for comparison
std::int64_t triples(std::int64_t n) {
    std::int64_t c = 0;
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = 1; a * b <= n; ++b)
            if (n % (a * b) == 0) ++c;
    return c;
}

int mobius_by_hand(std::int64_t n) {
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

}  // namespace

TEST_CASE("mobius examples and agreement") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    for (std::int64_t n = 1; n <= 2000; ++n) CHECK(mobius(n) == mobius_by_hand(n));
    CHECK_THROWS_AS(mobius(0), std::domain_error);
}

TEST_CASE("d3 against triple enumeration and the prime-power formula") {
    CHECK(d3(1) == 1);
    CHECK(d3(2) == 3);
    CHECK(d3(4) == 6);
    auto table = oracle::d3_table(500);
    for (std::int64_t n = 1; n <= 500; ++n) {
        CHECK(d3(n) == triples(n));
        CHECK(d3(n) == oracle::d3_prime_powers(n));
        CHECK(static_cast<double>(d3(n)) == table[n]);
    }
}

TEST_CASE("divisors, phi and factorize are consistent") {
    for (std::int64_t n = 1; n <= 1000; ++n) {
        auto ds = divisors(n);
        CHECK(static_cast<std::int64_t>(ds.size()) == divisor_count(n));
        std::int64_t phi = 0;
        for (std::int64_t x = 1; x <= n; ++x) phi += std::gcd(x, n) == 1;
        CHECK(euler_phi(n) == phi);
        std::int64_t back = 1;
        for (auto [p, e] : factorize(n))
            for (int i = 0; i < e; ++i) back *= p;
        CHECK(back == n);
    }
    auto f = factorize(1000000007LL * 3);
    REQUIRE(f.size() == 2);
    CHECK(f[1].first == 1000000007LL);
}

TEST_CASE("inv_mod") {
    CHECK(inv_mod(1, 5) == 1);
    CHECK(inv_mod(3, 7) == 5);
    CHECK(inv_mod(-3, 7) == 2);
    CHECK_THROWS_AS(inv_mod(2, 4), std::domain_error);
    for (std::int64_t c = 2; c <= 60; ++c)
        for (std::int64_t x = 0; x < c; ++x)
            if (std::gcd(x, c) == 1) CHECK(mod(x * inv_mod(x, c), c) == 1);
}

TEST_CASE("additive character") {
    CHECK(std::abs(additive_character(0, 7) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(additive_character(1, 2) - cplx(-1, 0)) < 1e-15);
    CHECK(std::abs(additive_character(1, 4) - cplx(0, 1)) < 1e-15);
    // reduction before dividing keeps huge numerators exact
    CHECK(std::abs(additive_character(4000000000001LL, 4) - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(additive_character(-1, 4) - cplx(0, -1)) < 1e-15);
}

TEST_CASE("farey fractions") {
    for (std::int64_t B = 1; B <= 30; ++B) {
        std::int64_t count = 0;
        for (std::int64_t b = 1; b <= B; ++b) count += euler_phi(b);
        auto fs = farey_fractions(B);
        CHECK(static_cast<std::int64_t>(fs.size()) == count);
        for (const auto& f : fs) CHECK(std::gcd(f.numerator, f.modulus) == 1);
    }
    CHECK_THROWS_AS(FareyFraction(2, 4, true), std::domain_error);
    CHECK_THROWS_AS(FareyFraction(5, 4), std::domain_error);
}

TEST_CASE("compensated sum recovers cancelled digits") {
    CompensatedSum<double> s;
    s += 1e16;
    for (int i = 0; i < 1000; ++i) s += 1.0;
    s += -1e16;
    CHECK(s.value() == 1000.0);
    CompensatedSum<cplx> z;
    z += cplx(1e16, -1e16);
    for (int i = 0; i < 10; ++i) z += cplx(1, 1);
    z += cplx(-1e16, 1e16);
    CHECK(z.value() == cplx(10, 10));
}
