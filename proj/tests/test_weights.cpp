#include "doctest.h"

#include "spm/oracles.hpp"
#include "spm/quadrature.hpp"
#include "spm/weights.hpp"

#include <cmath>

using namespace spm;

namespace {
double bump(double t) {
    auto s = [](double x) { return x > 0 ? std::exp(-1 / x) : 0.0; };
    return s(2 * t - 1) / (s(2 * t - 1) + s(2 - 2 * t));
}
}  // namespace

TEST_CASE("eta") {
    CHECK(eta(0.4) == 0);
    CHECK(eta(1.3) == 1);
    double v = eta(0.75);
    CHECK(v > 0);
    CHECK(v < 1);
    CHECK(v == doctest::Approx(bump(0.75)).epsilon(1e-14));
    for (double t = 0.5; t <= 1; t += 0.01) {
        CHECK(eta(t) == doctest::Approx(bump(t)).epsilon(1e-13));
        CHECK(eta(t) <= eta(t + 0.01));
    }
}

TEST_CASE("weight params") {
    CHECK_THROWS_AS(WeightParams(0, 1), std::domain_error);
    CHECK_THROWS_AS(WeightParams(1, 0), std::domain_error);
    auto p = WeightParams::from_rkT(3, 2, 50);
    double sd = std::sin(1.0 / 100);
    CHECK(p.A == doctest::Approx(3 / (2 * M_PI * sd)));
    CHECK(p.B == doctest::Approx(9 / (2 * M_PI * 2 * sd)));
}

TEST_CASE("W against the oracle") {
    CHECK(w_ab(0, {1, 1}) == cplx(0));
    for (auto [A, B] : {std::pair{1.0, 1.0}, {4.0, 1.0}, {1.0, 4.0}, {2.0, -3.0}})
        for (double x : {0.05, 0.3, 1.0, 2.5, -4.0, 9.0}) {
            cplx w = w_ab(x, {A, B});
            cplx o = oracle::w_ab(x, A, B).value;
            CHECK(std::abs(w - o) <= 1e-8 * (1 + std::abs(o)));
        }
    // W is even in x
    CHECK(std::abs(w_ab(1.7, {2, 3}) - w_ab(-1.7, {2, 3})) < 1e-14);
}

TEST_CASE("hat at zero") {
    for (auto [A, B] : {std::pair{1.0, 1.0}, {4.0, 1.0}, {1.0, 4.0}}) {
        // 2A int eta(t) e(-At/B) dt, the tail beyond t = 1 done by hand
        cplx head = integrate_panels([&](double t) { return eta(t) * e(-A * t / B); }, 0.5, 1.0, 32);
        cplx tail = e(-A / B) * B / (cplx(0, 2 * M_PI) * A);
        cplx want = 2 * A * (head + tail);
        CHECK(std::abs(w_ab_hat_closed(0, {A, B}) - want) <= 1e-8 * std::abs(want));
    }
}

TEST_CASE("transform matches a direct Fourier integral") {
    WeightParams p(1, 1);
    std::vector<double> us{0.05, 0.2, 0.7};
    auto direct = oracle::fourier_transform_even([&](double x) { return w_ab(x, p); }, us, 400, 4000);
    for (std::size_t i = 0; i < us.size(); ++i) {
        cplx h = w_ab_hat_closed(us[i], p);
        CHECK(std::abs(h - direct[i]) <= 1e-5 * (1 + std::abs(h)));
    }
}

TEST_CASE("inversion") {
    WeightParams p(1, 1);
    CHECK(w_inversion_residual(0, p, 8).residual <= 1e-5);
    std::vector<double> xs{-3, 0.5, 4};
    auto rs = w_inversion_residuals(xs, p, 8);
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].residual <= 1e-5 * (1 + std::abs(w_ab(xs[i], p))));
    CHECK_THROWS_AS(w_inversion_residual(1, p, 0), std::domain_error);
}

TEST_CASE("decay envelopes") {
    WeightParams p(2, 1);
    // (A + |x|) / |B| = 10
    CHECK(decay_margin(8, p, 3) >= 0);
    for (int K = 0; K <= 4; ++K)
        for (double x = 0.1; x < 200; x *= 1.7) CHECK(decay_margin(x, {4, 16}, K) >= 0);
    CHECK_THROWS_AS(decay_margin(1, p, 5), std::domain_error);
    for (double u = 0.05; u < 200; u *= 2) CHECK(hat_margin(u, {4, 4}) >= 0);
    CHECK_THROWS_AS(hat_envelope(0, p), std::domain_error);
    // doubling x with A + |x| >= |B| decays at least like the K = 2 profile
    WeightParams q(1, 1);
    for (double x = 4; x < 300; x *= 2) {
        double profile = std::pow((1 + q.A + x) / (1 + q.A + 2 * x), 2);
        CHECK(std::abs(w_ab(2 * x, q)) <= profile * std::abs(w_ab(x, q)) + 1e-15);
    }
}

TEST_CASE("cauchy kernel") {
    CHECK(cauchy_kernel_residual(1, 1e4) <= 2 / (M_PI * 1e4));
    CHECK(cauchy_kernel_residual(0, 1e4) <= 2 / (M_PI * 1e4));
    CHECK(oracle::cauchy_integral(0, 1e5).value.real() == doctest::Approx(1).epsilon(1e-5));
    CHECK_THROWS_AS(cauchy_kernel_residual(1, 0.5), std::domain_error);
}
