#include "doctest.h"

#include "spm/calibration.hpp"
#include "spm/oracles.hpp"
#include "spm/report.hpp"
#include "spm/sieve.hpp"

#include <cmath>
#include <random>

using namespace spm;

namespace {

Sequence random_sequence(std::int64_t start, std::int64_t M, std::uint64_t seed) {
    auto rng = case_rng(seed, "test-sieve");
    std::normal_distribution<double> g;
    std::vector<cplx> v(M);
    for (auto& x : v) x = cplx(g(rng), g(rng));
    return Sequence(start, v);
}

Sequence unit(std::int64_t start, std::int64_t M, std::int64_t at) {
    std::vector<cplx> v(M, 0.0);
    v[at] = 1;
    return Sequence(start, v);
}

}  // namespace

TEST_CASE("sequence contract") {
    CHECK_THROWS_AS(Sequence(0, {1.0}), std::domain_error);
    CHECK_THROWS_AS(Sequence(1, {}), std::domain_error);
    Sequence s(5, {cplx(3, 4), 1.0});
    CHECK(s.norm2() == doctest::Approx(26));
}

TEST_CASE("farey lhs") {
    Sequence s = random_sequence(17, 12, 1);
    cplx total = 0;
    for (auto v : s.values()) total += v;
    CHECK(farey_lhs(s, 1) == doctest::Approx(std::norm(total)).epsilon(1e-12));
    std::int64_t count = 0;
    for (std::int64_t B = 1; B <= 12; ++B) {
        count += euler_phi(B);
        CHECK(farey_lhs(unit(40, 6, 2), B) == doctest::Approx(static_cast<double>(count)));
    }
    for (std::int64_t B : {3, 10, 17}) {
        double o = oracle::farey_lhs(s, B).value.real();
        CHECK(std::abs(farey_lhs(s, B) - o) <= 1e-9 * o);
    }
    auto F = farey_kernel(9, 30);
    for (std::int64_t d = 0; d <= 30; ++d) CHECK(F[d] == doctest::Approx(oracle::farey_kernel(9, d)).epsilon(1e-12));
}

TEST_CASE("classical large sieve") {
    Sequence ones(1, std::vector<cplx>(10, 1.0));
    CHECK(classical_ratio(ones, 1) == doctest::Approx(100.0 / 110));
    CHECK(classical_ratio(unit(3, 9, 4), 5) < 1);
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto rng = case_rng(i, "classical-unit");
        std::int64_t B = 1 + static_cast<std::int64_t>(rng() % 25), M = 1 + static_cast<std::int64_t>(rng() % 25);
        CHECK(classical_ratio(random_sequence(1 + static_cast<std::int64_t>(rng() % 500), M, i), B) <= 1);
    }
    CHECK_THROWS_AS(classical_ratio(Sequence(1, {0.0}), 2), std::domain_error);
}

TEST_CASE("phase functions") {
    CHECK_NOTHROW(PhaseFunction::cube_root(10, 20).validate(100));
    PhaseFunction bad{"parabola", [](double y) { return (y - 5) * (y - 5); }, [](double y) { return 2 * (y - 5); }, 1, 9};
    CHECK_THROWS_AS(bad.validate(10), std::domain_error);
    CHECK(PhaseFunction::linear(1, 2).X(10) == doctest::Approx(1));
    CHECK_THROWS_AS(phase_on("square", unit(1, 3, 0)), std::invalid_argument);
}

TEST_CASE("oscillatory sieve against the exact oracle") {
    for (int i = 0; i < 6; ++i) {
        Sequence s = random_sequence(30 + 7 * i, 8 + i, 100 + i);
        for (const char* kind : {"linear", "log", "cube-root"}) {
            PhaseFunction f = phase_on(kind, s);
            double T = 0.5 + i;
            double lhs = oscillatory_lhs(s, 3, T, f, max_sieve_step(s, f));
            double o = oracle::oscillatory_lhs(s, 3, T, f).value.real();
            CHECK(std::abs(lhs - o) <= 1e-8 * (std::abs(o) + 1e-9 * s.norm2()));
        }
    }
}

TEST_CASE("oscillatory sieve identities") {
    Sequence s = random_sequence(50, 10, 9);
    PhaseFunction f = phase_on("log", s);
    // t -> tT
    double T = 3;
    PhaseFunction g = f.scaled(T);
    double lhs = oscillatory_lhs(s, 4, T, f, max_sieve_step(s, f));
    double rhs = T * oscillatory_lhs(s, 4, 1, g, max_sieve_step(s, g));
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    // shrinking window
    double tiny = 1e-7;
    CHECK(oscillatory_lhs(s, 4, tiny, f, max_sieve_step(s, f)) / (2 * tiny) ==
          doctest::Approx(farey_lhs(s, 4)).epsilon(1e-6));
    CHECK_THROWS_AS(oscillatory_lhs(s, 4, 1, f, 10 * max_sieve_step(s, f)), std::domain_error);
    // unit vector, f(y) = y: the bound is attained only up to C_sieve
    CHECK(oscillatory_ratio(unit(10, 5, 2), 1, 1, phase_on("linear", unit(10, 5, 2))) <= calibration::kSieveC);
    Sequence big = random_sequence(100, 16, 3);
    CHECK(oscillatory_ratio(big, 5, 2, phase_on("cube-root", big)) <= calibration::kSieveC);
}
