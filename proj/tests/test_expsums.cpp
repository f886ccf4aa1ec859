#include "doctest.h"

#include "spm/expsums.hpp"
#include "spm/oracles.hpp"

#include <cmath>
#include <numeric>

using namespace spm;

TEST_CASE("kloosterman examples and enumeration") {
    CHECK(std::abs(kloosterman(1, 1, 1) - cplx(1)) < 1e-12);
    CHECK(std::abs(kloosterman(1, 1, 2) - cplx(1)) < 1e-12);
    CHECK(std::abs(kloosterman(1, 1, 3) - cplx(-1)) < 1e-12);
    for (std::int64_t c = 1; c <= 40; ++c)
        for (std::int64_t k = -3; k <= 3; ++k)
            for (std::int64_t n : {0, 1, 2, 5, -7, 12}) {
                cplx s = kloosterman(k, n, c);
                CHECK(std::abs(s - oracle::kloosterman(k, n, c).value) < 1e-9);
                CHECK(std::abs(s.imag()) < 1e-9);
            }
}

TEST_CASE("ramanujan sums") {
    for (std::int64_t r = 1; r <= 100; ++r) {
        CHECK(ramanujan(0, r) == doctest::Approx(static_cast<double>(euler_phi(r))));
        CHECK(ramanujan(1, r) == doctest::Approx(mobius(r)));
        for (std::int64_t n = 0; n <= 30; ++n) {
            double v = ramanujan(n, r);
            CHECK(std::abs(v - oracle::ramanujan_divisor_form(n, r)) < 1e-9);
            CHECK(std::abs(v - oracle::ramanujan(n, r).value.real()) < 1e-9);
        }
    }
    CHECK(ramanujan(1, 6) == doctest::Approx(1));
    CHECK(ramanujan(2, 4) == doctest::Approx(-2));
}

TEST_CASE("v sums") {
    CHECK(std::abs(v_sum(-1, 1, 1, 2)) < 1e-12);
    CHECK(std::abs(v_sum(1, 0, 0, 5) - cplx(3)) < 1e-12);
    for (std::int64_t r = 1; r <= 20; ++r)
        for (std::int64_t m = 0; m < 6; ++m)
            for (std::int64_t n = 0; n < 6; ++n) {
                CHECK(std::abs(v_sum(0, m, n, r) - ramanujan(m - n, r)) < 1e-9);
                for (std::int64_t d : {-2, 1, 3})
                    CHECK(std::abs(v_sum(d, m, n, r) - oracle::v_sum(d, m, n, r).value) < 1e-9);
            }
}

TEST_CASE("poisson identity") {
    CHECK(poisson_identity_residual(1, 1, 1, 2) <= 1e-9);
    CHECK(poisson_identity_residual(3, 5, 7, 12) <= 1e-9 * 12);
    for (std::int64_t r = 1; r <= 20; ++r)
        for (std::int64_t m = 1; m <= 20; m += 3)
            for (std::int64_t n = 1; n <= 20; n += 4) CHECK(poisson_identity_residual(0, m, n, r) <= 1e-9 * r);
    for (std::int64_t r = 1; r <= 8; ++r) {
        cplx lhs = oracle::poisson_lhs(2, 3, 5, r).value;
        cplx rhs = kloosterman(2, 3, r) * kloosterman(2, 5, r);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
    CHECK(poisson_identity_max_residual(12) <= 1e-9 * 12);
}

TEST_CASE("sigma partial sums") {
    CHECK(sigma_pair(1, 1, 1).value == doctest::Approx(1));
    CHECK(std::abs(sigma_pair(2, 3, 100).value - oracle::sigma_partial(2, 3, 100).value.real()) < 1e-10);
    SigmaPartial s = sigma_pair(1, 1, 20000);
    double limit = 15 / (M_PI * M_PI);
    // certified bracket around the Euler-product value
    CHECK(std::abs(s.value - limit) <= s.tail_bound);
    CHECK_THROWS_AS(sigma_pair(0, 1, 5), std::domain_error);
}

TEST_CASE("weil margin") {
    CHECK(weil_margin(1, 1, 2) == doctest::Approx(2 * std::sqrt(2.0) - 1));
    CHECK(weil_margin(5, 7, 101) > 0);
    for (std::int64_t c = 1; c <= 200; ++c) {
        CHECK(weil_margin(0, 0, c) >= -1e-9);
        CHECK(weil_margin(3, 11, c) >= -1e-9);
    }
}

TEST_CASE("ramanujan weighted second moment") {
    CHECK(ramanujan_weighted_second_moment(1) == doctest::Approx(1));
    CHECK(ramanujan_weighted_second_moment(2) == doctest::Approx(1.5));
    for (std::int64_t r = 1; r <= 500; r += 7)
        CHECK(ramanujan_weighted_second_moment(r) <= 50 * r * (1 + std::log(static_cast<double>(r))));
}

TEST_CASE("cache agrees with the free functions") {
    ExpSumCache c(36);
    CHECK(c.units().size() == 12);
    for (std::int64_t n = -5; n <= 40; ++n) {
        CHECK(std::abs(c.kloosterman(4, n) - kloosterman(4, n, 36)) < 1e-12);
        CHECK(c.ramanujan(n) == doctest::Approx(ramanujan(n, 36)));
    }
}
