#include "doctest.h"

#include "spm/oracles.hpp"
#include "spm/report.hpp"
#include "spm/spectral.hpp"

#include <cmath>
#include <random>

using namespace spm;

namespace {

const SpectralDataset& dataset() {
    static const SpectralDataset ds = load_dataset(SPM_DATASET);
    return ds;
}

Sequence gaussian(std::int64_t start, std::int64_t M, std::uint64_t seed) {
    auto rng = case_rng(seed, "test-spectral");
    std::normal_distribution<double> g;
    std::vector<cplx> v(M);
    for (auto& x : v) x = cplx(g(rng), g(rng));
    return Sequence(start, v);
}

}  // namespace

TEST_CASE("harmonic weight") {
    CHECK_THROWS_AS(AnalysisWindow(0.3), std::domain_error);
    AnalysisWindow win(20);
    for (double t = 0.01; t < 300; t *= 1.3) CHECK(harmonic_weight(t, win) > 0);
    for (double t = 1; t < 300; t *= 1.2) CHECK(harmonic_comparability(t, win).holds());
    long double w = harmonic_weight(500, AnalysisWindow(100));
    CHECK(std::isfinite(static_cast<double>(std::log(w))));
    CHECK(w > 0);
    // against the sinh ratio where it does not overflow
    double t = 3.5, c = M_PI - 1 / 20.0;
    CHECK(std::exp(log_harmonic_weight(t, win)) == doctest::Approx(2 * std::sinh(c * t) / std::sinh(2 * M_PI * t)));
}

TEST_CASE("discrete spectral sum") {
    const SpectralDataset& ds = dataset();
    AnalysisWindow win(10);
    CHECK(s_discrete(ds, Sequence(5, std::vector<cplx>(4, 0.0)), win).value == 0);
    // one n: a per-form loop
    std::int64_t n = 7;
    Sequence one(n, {cplx(2, -1)});
    double want = 0;
    for (const GL2Form& f : ds.forms) want += std::exp(log_harmonic_weight(f.t, win)) * f.alpha * std::cosh(M_PI * f.t) * 5 * f(n) * f(n);
    CHECK(s_discrete(ds, one, win).value == doctest::Approx(want).epsilon(1e-10));
    // dropping a form never increases S
    SpectralDataset fewer = ds;
    fewer.forms.pop_back();
    Sequence s = gaussian(20, 15, 3);
    CHECK(s_discrete(fewer, s, win).value <= s_discrete(ds, s, win).value);
    CHECK_THROWS_AS(s_discrete(ds, s, AnalysisWindow(500)), std::domain_error);
}

TEST_CASE("continuous spectral term") {
    AnalysisWindow win(10);
    CHECK(t_continuous(Sequence(3, std::vector<cplx>(5, 0.0)), win) == 0);
    for (std::int64_t p : {7, 11}) {
        Sequence s(p, {1.0});
        double o = oracle::t_continuous(s, 10, 60).value.real();
        CHECK(std::abs(t_continuous(s, win) - o) <= 1e-8 * o);
    }
    Sequence g = gaussian(11, 10, 5);
    double o = oracle::t_continuous(g, 10, 60).value.real();
    CHECK(std::abs(t_continuous(g, win) - o) <= 1e-8 * o);
    // the r = 1 term keeps T(A) above a multiple of T |sum a_n|^2
    Sequence ones(10, std::vector<cplx>(10, 1.0));
    CHECK(t_continuous(ones, win) >= 0.01 * 10 * 100);
}

TEST_CASE("S1 right-hand side") {
    AnalysisWindow win(10);
    Sequence g = gaussian(11, 10, 8);
    for (double X : {1.5, 3.5}) {
        double q = oracle::s1_direct(g, X, 10, 1 / std::log(12.0)).value.real();
        CHECK(std::abs(s1_bound_rhs(g, X, win) - q) <= 1e-8 * q);
    }
    CHECK(s1_bound_rhs(Sequence(11, std::vector<cplx>(6, 0.0)), 3, win) == 0);
    CHECK_THROWS_AS(s1_bound_rhs(g, 0.5, win), std::domain_error);
}

TEST_CASE("bound shapes") {
    for (double T : {100.0, 1000.0}) {
        AnalysisWindow win(T);
        double at1 = luo_bound(1, win, 1);
        CHECK(at1 / (T * T * std::pow(T, 0.01)) == doctest::Approx(1).epsilon(0.05));
        // N = T^2: N^{5/4} = T^{5/2}, tied with T^{3/2} N^{1/2}, so the ratio is 2 + T^{-1/2}
        double N = T * T, scale = std::pow(N * T, 0.01);
        CHECK(luo_bound(N, win, 1) / (std::pow(N, 1.25) * scale) == doctest::Approx(2 + 1 / std::sqrt(T)));
        // N = T^{3/2}: T^{9/4}
        N = std::pow(T, 1.5);
        double ratio = luo_bound(N, win, 1) / (std::pow(T, 2.25) * std::pow(N * T, 0.01));
        CHECK(ratio >= 1);
        CHECK(ratio < 3);
    }
}

TEST_CASE("h_l decomposition") {
    auto phi = GL3Coefficients::d3_model(400);
    AnalysisWindow win(10);
    CHECK(h_l_decomposition_residual(dataset(), phi, 200, win) >= 0);
    CHECK(h_l_decomposition_residual(dataset(), phi, 50, win) >= 0);
    CHECK_THROWS_AS(h_l_decomposition(dataset(), phi, 4, win), std::domain_error);
}

TEST_CASE("moments") {
    const SpectralDataset& ds = dataset();
    CHECK(sixth_moment(ds, {5}, {}).values.at(0) == 0);
    auto phi = GL3Coefficients::d3_model(ds.n_max);
    MomentReport second = second_moment(ds, phi, {15, 20}, {});
    MomentReport sixth = sixth_moment(ds, {15, 20}, {});
    // the d3 model makes L(u x phi) = L(u)^3
    for (std::size_t i = 0; i < 2; ++i) CHECK(second.values[i] == doctest::Approx(sixth.values[i]).epsilon(1e-4));
    for (const FormValue& f : second.forms) {
        CHECK(f.contribution <= 1e3 * std::pow(f.t, 1.5));
        CHECK(std::abs(f.L) <= f.trivial);
    }
    CHECK(!sixth_moment(ds, {20}, {}).fitted_exponent);
    CHECK_THROWS_AS(sixth_moment(ds, {20, 10}, {}), std::domain_error);
}

TEST_CASE("exponent fit") {
    CHECK(!fit_exponent({10}, {3}));
    auto k = fit_exponent({10, 20, 40}, {5e2, 4e3, 3.2e4});
    REQUIRE(k);
    CHECK(*k == doctest::Approx(3));
    CHECK_THROWS_AS(fit_exponent({1, 2}, {1}), std::invalid_argument);
}
