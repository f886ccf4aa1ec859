#include "doctest.h"

#include "spm/expsums.hpp"
#include "spm/oracles.hpp"
#include "spm/voronoi.hpp"

#include <cmath>

using namespace spm;

namespace {

const VoronoiParams desk{1, 1, 1, -0.18, 200, 2000, 2.37};

// x whose stationary point is y0
double x_for(double y0, const VoronoiParams& p) {
    double rT = static_cast<double>(p.r) * p.T;
    return std::pow(y0 * static_cast<double>(p.N) * std::pow(std::abs(p.u), 1.5) / std::pow(rT, 1.5), 2);
}

}  // namespace

TEST_CASE("parameter contract") {
    CHECK_NOTHROW(desk.validate());
    VoronoiParams p = desk;
    p.r = 3;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = desk;
    p.u = 0.5;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = desk;
    p.k = 0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = desk;
    p.N = 100000;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    CHECK(voronoi_X(200, 1, 2000) == doctest::Approx(std::cbrt(2000.0) / std::log(202.0)));
    CHECK(window_w3(1.0) == 0);
    CHECK(window_w3(1.9) == 0);
    CHECK(window_w3(1.5) == doctest::Approx(1 / std::sqrt(1.5)));
}

TEST_CASE("C sum") {
    auto A = GL3Coefficients::d3_model(4000);
    RowCoefficients zero = [](std::int64_t) { return cplx(0); };
    CHECK(c_sum(desk, zero) == cplx(0));
    // plain loop
    cplx want = 0;
    for (std::int64_t n = 2001; n <= 4000; ++n)
        want += A(1, n) * oracle::kloosterman(1, n, 1).value * window_w3(n / 2000.0) * e(-0.18 * n / 200.0);
    want /= std::sqrt(2000.0);
    CHECK(std::abs(c_sum(desk, A) - want) <= 1e-9 * (1 + std::abs(want)));
    VoronoiParams p{2, 1, 2, 0.1, 200, 2000, 2.37};
    VoronoiParams q = p;
    q.k = -2;
    q.u = -0.1;
    CHECK(std::abs(c_sum(q, A) - std::conj(c_sum(p, A))) <= 1e-10 * (1 + std::abs(c_sum(p, A))));
    CHECK(std::abs(c_sum(p, A)) <= c_trivial_bound(p, [&](std::int64_t n) { return cplx(A(1, n)); }));
    CHECK_THROWS_AS(c_sum(desk, GL3Coefficients::d3_model(100)), std::out_of_range);
}

TEST_CASE("stationary point") {
    CHECK(stationary_point(x_for(1.0, desk), desk) == doctest::Approx(1).epsilon(1e-14));
    for (double y0 : {0.5, 1.3, 3.0}) {
        double x = x_for(y0, desk);
        double root = oracle::stationary_root(x, desk.u, 2000, 1, 200).value.real();
        CHECK(stationary_point(x, desk) == doctest::Approx(root).epsilon(1e-12));
        CHECK(std::abs(voronoi_phase_d1(y0, x, desk)) < 1e-9);
    }
    VoronoiParams flat = desk;
    flat.u = 0;
    CHECK_THROWS_AS(stationary_point(1, flat), std::domain_error);
}

TEST_CASE("phase derivatives") {
    double x = 0.37, h = 1e-5;
    for (double y : {1.2, 1.5, 1.8}) {
        double d1 = (voronoi_phase(y + h, x, desk) - voronoi_phase(y - h, x, desk)) / (2 * h);
        double d2 = (voronoi_phase_d1(y + h, x, desk) - voronoi_phase_d1(y - h, x, desk)) / (2 * h);
        CHECK(voronoi_phase_d1(y, x, desk) == doctest::Approx(d1).epsilon(1e-7));
        CHECK(voronoi_phase_d2(y, x, desk) == doctest::Approx(d2).epsilon(1e-6));
    }
}

TEST_CASE("phase integral") {
    auto w3 = [](double y) { return window_w3(y); };
    for (double y0 : {1.5, 4.5, 10.0}) {
        double x = x_for(y0, desk);
        PhaseIntegral p = phase_integral(x, desk);
        cplx o = oracle::phase_integral(x, desk.u, 2000, 1, 200, w3).value;
        CHECK(std::abs(p.value - o) <= 1e-7 * (1 + std::abs(o)));
    }
    // stationary point inside the support: the leading term within a factor 5
    for (double y0 : {1.3, 1.5, 1.7}) {
        double x = x_for(y0, desk);
        double ratio = std::abs(phase_integral(x, desk).value) / stationary_phase_scale(x, desk);
        CHECK(ratio >= 0.2);
        CHECK(ratio <= 5);
    }
    // outside: integration by parts twice
    for (double y0 : {4.5, 6.0, 20.0}) {
        PhaseIntegral p = phase_integral(x_for(y0, desk), desk);
        CHECK(std::abs(p.bare) <= 10 * amplitude_norm() / std::pow(1 + p.min_slope, 2));
    }
    // u = 0: monotone phase, the integral falls as x grows
    VoronoiParams flat = desk;
    flat.u = 0;
    double prev = 1e300;
    for (double x : {0.01, 0.03, 0.1, 0.3, 1.0}) {
        double v = std::abs(phase_integral(x, flat).bare);
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(phase_integral(1e-4, desk), std::domain_error);
}

TEST_CASE("negligibility at the desk parameters") {
    SpectralDataset src = load_dataset(SPM_SYM2_SOURCE);
    auto A = GL3Coefficients::sym_square(src.forms.front(), 4000);
    NegligibilityReport r = negligibility_report(200, 1, 2000, A);
    CHECK(r.cells > 0);
    CHECK(r.max_normalized <= 0.05);
    CHECK(r.dual_empty);
    for (double reach : r.reach) CHECK(reach < 1);
    CHECK(dual_reach_bound(200, 1, 2000, 1) == doctest::Approx(16 * 2000.0 * 2000.0 / std::pow(std::log(202.0), 3) / 8e6));
    CHECK_THROWS_AS(negligibility_report(200, 1, 100000, A), std::domain_error);
    // positive d3 coefficients with r = 1, u = 0 add up without cancelling
    NegligibilityReport d = negligibility_report(200, 1, 2000, GL3Coefficients::d3_model(4000));
    CHECK(d.max_normalized == doctest::Approx(1));
}
