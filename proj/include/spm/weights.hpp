#pragma once

#include "spm/arith.hpp"

#include <vector>

namespace spm {

// Smooth step: 0 for t <= 1/2, 1 for t >= 1, built from exp(-1/t).
struct SmoothCutoff {
    double operator()(double t) const;
};

double eta(double t, const SmoothCutoff& cutoff = {});

struct WeightParams {
    double A;
    double B;
    SmoothCutoff cutoff;

    WeightParams(double A, double B);
    // A = r / (2 pi sin delta), B = r^2 / (2 pi k sin delta), delta = 1 / (2T)
    static WeightParams from_rkT(double r, double k, double T);
};

// W(x) = int_0^inf t^-2 eta(|x| t / A) exp(-1/t) e(-|x| t / B) dt
cplx w_ab(double x, const WeightParams& p, double tol = 1e-10);

// What(u) = int W(x) e(u x) dx, from the kernel representation
//   (1/A) What(u/A) = 2 int eta(t) e(-A t/B) (1 - (2 pi u t)^2) / (1 + (2 pi u t)^2)^2 dt
cplx w_ab_hat_closed(double u, const WeightParams& p, double tol = 1e-10);

struct InversionResult {
    double residual;
    double u_cut;
    double tail_estimate;
};

// |W(x) - int_{-U}^{U} What(u) e(-u x) du|; U doubles from u_cut until the
// 1/u^2 tail estimate 2 U |What(U)| is below tail_tol (throws past 2^12 u_cut).
InversionResult w_inversion_residual(double x, const WeightParams& p, double u_cut, double tail_tol = 5e-6);

// Residuals at many x sharing one table of What.
std::vector<InversionResult> w_inversion_residuals(const std::vector<double>& xs, const WeightParams& p,
                                                   double u_cut, double tail_tol = 5e-6);

// C_hat min(1/|u|, (|B|/A)/(1 + u^2)) - |(1/A) What(u/A)|
double hat_envelope(double u, const WeightParams& p);
double hat_margin(double u, const WeightParams& p);

// C_K (1 + (A + |x|)/|B|)^-K - |W(x)|
double decay_margin(double x, const WeightParams& p, int K);
double decay_envelope(double x, const WeightParams& p, int K);

// |exp(-2 pi |x|) - (1/pi) int_{-V}^{V} e(x v) / (1 + v^2) dv|
double cauchy_kernel_residual(double x, double v_cut);

}  // namespace spm
