#include "spm/voronoi.hpp"

#include "spm/expsums.hpp"
#include "spm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spm {

void VoronoiParams::validate() const {
    double L = std::log(2 + T);
    if (!(T > 0) || N < 1 || l < 1 || r < 1) throw std::domain_error("VoronoiParams: T, N, l, r must be positive");
    if (!(static_cast<double>(r) < X)) throw std::domain_error("VoronoiParams: needs r < X");
    if (std::abs(u) > 1 / L) throw std::domain_error("VoronoiParams: needs |u| <= 1/ln(2+T)");
    if (k == 0 || static_cast<double>(std::abs(k)) > static_cast<double>(r) * L)
        throw std::domain_error("VoronoiParams: needs 0 < |k| <= r ln(2+T)");
    if (static_cast<double>(N) > std::pow(T, 1.5) * L / static_cast<double>(l * l))
        throw std::domain_error("VoronoiParams: N beyond T^{3/2} ln(2+T) / l^2");
}

double window_w3(double x) { return x > 0 ? window_w2(x) / std::sqrt(x) : 0.0; }

double voronoi_X(double T, std::int64_t l, std::int64_t N) {
    return std::cbrt(static_cast<double>(N) / static_cast<double>(l)) / std::log(2 + T);
}

cplx c_sum(const VoronoiParams& p, const RowCoefficients& A) {
    ExpSumCache cache(p.r);
    const double Nd = static_cast<double>(p.N);
    CompensatedSum<cplx> s;
    for (std::int64_t n = p.N + 1; n <= 2 * p.N; ++n) {
        double w = window_w3(static_cast<double>(n) / Nd);
        if (w == 0) continue;
        s += A(n) * cache.kloosterman(p.k, n) * w * e(p.u * static_cast<double>(n) / (static_cast<double>(p.r) * p.T));
    }
    return s.value() / std::sqrt(Nd);
}

cplx c_sum(const VoronoiParams& p, const GL3Coefficients& A) {
    if (A.n_max() < 2 * p.N || A.m_max() < p.l) throw std::out_of_range("c_sum: coefficients do not cover (N, 2N]");
    return c_sum(p, [&](std::int64_t n) { return cplx(A(p.l, n)); });
}

double c_trivial_bound(const VoronoiParams& p, const RowCoefficients& A) {
    ExpSumCache cache(p.r);
    const double Nd = static_cast<double>(p.N);
    double s = 0;
    for (std::int64_t n = p.N + 1; n <= 2 * p.N; ++n) {
        double w = window_w3(static_cast<double>(n) / Nd);
        if (w != 0) s += std::abs(A(n)) * std::abs(cache.kloosterman(p.k, n)) * w;
    }
    return s / std::sqrt(Nd);
}

double stationary_point(double x, const VoronoiParams& p) {
    if (p.u == 0) throw std::domain_error("stationary_point: u = 0 has no stationary point");
    if (!(x > 0)) throw std::domain_error("stationary_point: x must be positive");
    double rT = static_cast<double>(p.r) * p.T;
    return std::sqrt(x) * std::pow(rT, 1.5) / (static_cast<double>(p.N) * std::pow(std::abs(p.u), 1.5));
}

double voronoi_phase(double y, double x, const VoronoiParams& p) {
    double N = static_cast<double>(p.N);
    return p.u * y * N / (static_cast<double>(p.r) * p.T) + 3 * std::cbrt(x * y * N);
}

double voronoi_phase_d1(double y, double x, const VoronoiParams& p) {
    double N = static_cast<double>(p.N);
    return p.u * N / (static_cast<double>(p.r) * p.T) + std::cbrt(N * x) / std::pow(y, 2.0 / 3);
}

double voronoi_phase_d2(double y, double x, const VoronoiParams& p) {
    return -2.0 / 3 * std::cbrt(static_cast<double>(p.N) * x) / std::pow(y, 5.0 / 3);
}

namespace {
// support of w3
constexpr double kLo = 9.0 / 8, kHi = 15.0 / 8;

double amplitude(double y) { return window_w3(y) / std::cbrt(y); }
}  // namespace

PhaseIntegral phase_integral(double x, const VoronoiParams& p) {
    if (!(x > 0) || x * static_cast<double>(p.N) < std::log(2 + p.T))
        throw std::domain_error("phase_integral: needs x N >= ln(2+T)");
    auto g = [&](double y) { return amplitude(y) * e(voronoi_phase(y, x, p)); };
    double slope_max = std::max(std::abs(voronoi_phase_d1(kLo, x, p)), std::abs(voronoi_phase_d1(kHi, x, p)));
    PhaseIntegral r{};
    r.min_slope = 1e300;
    for (int i = 0; i <= 1000; ++i) {
        double y = kLo + (kHi - kLo) * i / 1000.0;
        r.min_slope = std::min(r.min_slope, std::abs(voronoi_phase_d1(y, x, p)));
    }
    int panels = std::max(8, static_cast<int>(std::ceil(2 * slope_max * (kHi - kLo))));
    cplx prev = integrate_panels(g, kLo, kHi, panels);
    for (int it = 0; it < 12; ++it) {
        panels *= 2;
        cplx cur = integrate_panels(g, kLo, kHi, panels);
        if (std::abs(cur - prev) <= 1e-12 * (1 + std::abs(cur))) {
            r.bare = cur;
            r.value = std::pow(static_cast<double>(p.N) * x, 2.0 / 3) * cur;
            r.panels = panels;
            return r;
        }
        prev = cur;
    }
    throw std::runtime_error("phase_integral: quadrature did not settle");
}

double stationary_phase_scale(double x, const VoronoiParams& p) {
    double y0 = stationary_point(x, p);
    return std::pow(static_cast<double>(p.N) * x, 2.0 / 3) * amplitude(y0) /
           std::sqrt(std::abs(voronoi_phase_d2(y0, x, p)));
}

double amplitude_norm() {
    static const double value = [] {
        const double h = 1e-4;
        auto d1 = [&](double y) { return (amplitude(y + h) - amplitude(y - h)) / (2 * h); };
        auto d2 = [&](double y) { return (amplitude(y + h) - 2 * amplitude(y) + amplitude(y - h)) / (h * h); };
        return integrate_panels([](double y) { return std::abs(amplitude(y)); }, kLo, kHi, 64) +
               integrate_panels([&](double y) { return std::abs(d1(y)); }, kLo, kHi, 64) +
               integrate_panels([&](double y) { return std::abs(d2(y)); }, kLo, kHi, 64);
    }();
    return value;
}

double dual_reach_bound(double T, std::int64_t l, std::int64_t N, std::int64_t r) {
    (void)r;  // r^3 cancels between x and m1^2 m2 = r^3 l x
    double U = 1 / std::log(2 + T), Nd = static_cast<double>(N);
    return 16 * static_cast<double>(l) * Nd * Nd * U * U * U / (T * T * T);
}

NegligibilityReport negligibility_report(double T, std::int64_t l, std::int64_t N, const GL3Coefficients& A,
                                         std::optional<double> X, int u_points) {
    const double L = std::log(2 + T);
    if (static_cast<double>(N) > std::pow(T, 1.5) * L / static_cast<double>(l * l))
        throw std::domain_error("negligibility_report: N beyond T^{3/2} ln(2+T) / l^2");
    if (u_points < 1) throw std::domain_error("negligibility_report: u_points must be positive");
    if (A.n_max() < 2 * N || A.m_max() < l) throw std::out_of_range("negligibility_report: coefficients do not cover (N, 2N]");
    NegligibilityReport rep;
    rep.T = T;
    rep.l = l;
    rep.N = N;
    rep.X = X ? *X : voronoi_X(T, l, N);
    std::vector<double> row(2 * N + 1, 0.0);
    for (std::int64_t n = N + 1; n <= 2 * N; ++n) row[n] = A(l, n);
    RowCoefficients Al = [&row](std::int64_t n) { return cplx(row[n]); };
    const double U = 1 / L;
    for (std::int64_t r = 1; static_cast<double>(r) < rep.X; ++r) {
        double reach = dual_reach_bound(T, l, N, r);
        rep.reach.push_back(reach);
        if (!(reach < 1)) rep.dual_empty = false;
        double worst_r = 0;
        auto kmax = static_cast<std::int64_t>(std::floor(static_cast<double>(r) * L));
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            if (k == 0) continue;
            for (int j = 0; j < u_points; ++j) {
                double u = u_points == 1 ? 0.0 : -U + 2 * U * j / (u_points - 1);
                VoronoiParams p{k, l, r, u, T, N, rep.X};
                VoronoiCell cell{r, k, u, c_sum(p, Al), c_trivial_bound(p, Al), 0};
                cell.normalized = cell.trivial > 0 ? std::abs(cell.C) / cell.trivial : 0.0;
                ++rep.cells;
                worst_r = std::max(worst_r, cell.normalized);
                if (cell.normalized >= rep.max_normalized) {
                    rep.max_normalized = cell.normalized;
                    rep.worst = cell;
                }
            }
        }
        rep.max_normalized_by_r.push_back(worst_r);
    }
    return rep;
}

}  // namespace spm
