#pragma once

#include "spm/coeffs.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace spm {

struct VoronoiParams {
    std::int64_t k;
    std::int64_t l;
    std::int64_t r;
    double u;
    double T;
    std::int64_t N;
    double X;

    // r < X, |u| <= 1/ln(2+T), 0 < |k| <= r ln(2+T), N <= T^{3/2} ln(2+T) / l^2
    void validate() const;
};

// w3(x) = x^{-1/2} w2(x)
double window_w3(double x);

// X = (N/l)^{1/3} / ln(2+T)
double voronoi_X(double T, std::int64_t l, std::int64_t N);

using RowCoefficients = std::function<cplx(std::int64_t)>;  // n -> A(l, n)

// C = N^{-1/2} sum_{N < n <= 2N} A(l,n) S(k,n;r) w3(n/N) e(un/(rT))
cplx c_sum(const VoronoiParams& p, const RowCoefficients& A);
cplx c_sum(const VoronoiParams& p, const GL3Coefficients& A);
// N^{-1/2} sum |A(l,n) S(k,n;r) w3(n/N)|
double c_trivial_bound(const VoronoiParams& p, const RowCoefficients& A);

// y0 = x^{1/2} (rT)^{3/2} / (N |u|^{3/2}); throws for u = 0
double stationary_point(double x, const VoronoiParams& p);
// f(y) = u y N/(rT) + 3 (x y N)^{1/3} and its derivatives
double voronoi_phase(double y, double x, const VoronoiParams& p);
double voronoi_phase_d1(double y, double x, const VoronoiParams& p);
double voronoi_phase_d2(double y, double x, const VoronoiParams& p);

struct PhaseIntegral {
    cplx value;        // (Nx)^{2/3} times bare
    cplx bare;         // int w3(y) y^{-1/3} e(f(y)) dy
    double min_slope;  // min |f'| on the support of w3
    int panels;
};

// Adaptive Gauss-Legendre over the support of w3, panels doubling until two
// successive values agree to 1e-12 (1 + |bare|). Needs x N >= ln(2+T).
PhaseIntegral phase_integral(double x, const VoronoiParams& p);

// Leading stationary-phase size (Nx)^{2/3} w3(y0) y0^{-1/3} / sqrt|f''(y0)|
double stationary_phase_scale(double x, const VoronoiParams& p);

// sum over j <= 2 of int |g^{(j)}|, g(y) = w3(y) y^{-1/3}
double amplitude_norm();

struct VoronoiCell {
    std::int64_t r, k;
    double u;
    cplx C;
    double trivial;
    double normalized;
};

struct NegligibilityReport {
    double T;
    std::int64_t l, N;
    double X;
    std::size_t cells = 0;
    double max_normalized = 0;
    VoronoiCell worst{};
    // per r < X: bound on m1^2 m2 for dual terms whose stationary point lies in [1/4, 4]
    std::vector<double> reach;
    bool dual_empty = true;
    std::vector<double> max_normalized_by_r;
};

// Sweeps r < X, 0 < |k| <= r ln(2+T) and u_points values across |u| <= 1/ln(2+T).
NegligibilityReport negligibility_report(double T, std::int64_t l, std::int64_t N, const GL3Coefficients& A,
                                         std::optional<double> X = {}, int u_points = 21);

// m1^2 m2 = r^3 l x at the largest x whose stationary point reaches y0 = 4:
// 16 l N^2 |u|^3 / T^3 with |u| = 1/ln(2+T)
double dual_reach_bound(double T, std::int64_t l, std::int64_t N, std::int64_t r);

}  // namespace spm
