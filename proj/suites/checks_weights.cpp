#include "common.hpp"

#include "spm/calibration.hpp"
#include "spm/oracles.hpp"
#include "spm/quadrature.hpp"
#include "spm/weights.hpp"

#include <algorithm>
#include <cmath>

namespace spm::suites {

using detail::cj;
using detail::json;
using detail::le;
using detail::record;

namespace {
std::string ab_id(const std::string& stem, double A, double B) {
    return stem + "-A" + std::to_string(static_cast<int>(A)) + "-B" + std::to_string(static_cast<int>(B));
}
}  // namespace

Report check_weight_eval(const Options& o) {
    Report rep;
    double a = eta(0.4), b = eta(1.3), c = eta(0.75);
    // the bump written out: s(2t-1) / (s(2t-1) + s(2-2t)), s(x) = exp(-1/x)
    double want = std::exp(-1 / 0.5) / (2 * std::exp(-1 / 0.5));
    rep.add(record("weights", "eta-values", {{"t", {0.4, 1.3, 0.75}}}, {{"eta", {a, b, c}}}, {{"expected", {0, 1, want}}},
                   a == 0 && b == 1 && std::abs(c - want) <= 1e-15 && c > 0 && c < 1));
    WeightParams p(4, 2);
    cplx w0 = w_ab(0, p);
    rep.add(record("weights", "w-at-zero", {{"A", 4}, {"B", 2}}, {{"W", cj(w0)}}, {{"expected", 0}}, std::abs(w0) == 0));
    // What(0) = 2A int eta(t) e(-A t / B) dt
    for (double A : {1.0, 4.0})
        for (double B : {1.0, -3.0}) {
            WeightParams q(A, B);
            cplx closed = w_ab_hat_closed(0, q, 1e-12);
            // eta = 1 past t = 1, where int_1^inf e(-A t/B) dt is taken in the Abel sense: e(-A/B) B / (2 pi i A)
            cplx direct = 2 * A * integrate_panels([&](double t) { return eta(t) * e(-A * t / B); }, 0.5, 1.0, 64) +
                          2 * A * e(-A / B) * B / (cplx(0, kTwoPi) * A);
            double err = std::abs(closed - direct) / std::abs(direct);
            rep.add(record("weights", ab_id("hat-at-zero", A, B), {{"A", A}, {"B", B}},
                           {{"closed", cj(closed)}, {"direct", cj(direct)}, {"rel", err}}, o.tol(1e-8),
                           le(err, o.tol(1e-8))));
        }
    double res = cauchy_kernel_residual(1, 1e4), bound = 2 / (kPi * 1e4);
    rep.add(record("weights", "cauchy-kernel", {{"x", 1}, {"v_cut", 1e4}}, {{"residual", res}}, o.tol(bound),
                   le(res, o.tol(bound))));
    return rep;
}

Report check_weight_transform(const Options& o) {
    Report rep;
    for (double A : {1.0, 4.0, 16.0})
        for (double B : {1.0, 4.0, 16.0}) {
            WeightParams p(A, B);
            double X = 10 * A;
            while (std::abs(w_ab(X, p)) > 1e-12) X *= 1.5;
            std::vector<double> us = log_grid(1e-2 / A, 10 / A, 40);
            auto panels = std::max<std::int64_t>(200, static_cast<std::int64_t>(std::ceil(0.4 * X * us.back())));
            auto ft = oracle::fourier_transform_even([&](double x) { return w_ab(x, p); }, us, X, panels);
            double worst = 0, at = 0;
            for (std::size_t j = 0; j < us.size(); ++j) {
                cplx c = w_ab_hat_closed(us[j], p, 1e-12);
                double rel = std::abs(ft[j] - c) / std::abs(c);
                if (rel > worst) worst = rel, at = us[j];
            }
            rep.add(record("weights", ab_id("transform", A, B),
                           {{"A", A}, {"B", B}, {"u_points", us.size()}, {"x_max", X}, {"panels", panels}},
                           {{"max_rel", worst}, {"at_u", at}}, o.tol(1e-5), le(worst, o.tol(1e-5))));
        }
    return rep;
}

Report check_weight_inversion(const Options& o) {
    Report rep;
    for (auto [A, B] : {std::pair{1.0, 1.0}, std::pair{4.0, 1.0}, std::pair{1.0, 4.0}}) {
        WeightParams p(A, B);
        std::vector<double> xs;
        for (int i = 0; i <= 20; ++i) xs.push_back(-10 * A + A * i);
        auto res = w_inversion_residuals(xs, p, 8 / A);
        double worst = 0, at = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double scaled = res[i].residual / (1 + std::abs(w_ab(xs[i], p)));
            if (scaled > worst) worst = scaled, at = xs[i];
        }
        rep.add(record("weights", ab_id("inversion", A, B), {{"A", A}, {"B", B}, {"x_points", xs.size()}},
                       {{"max_scaled_residual", worst}, {"at_x", at}, {"u_cut", res[0].u_cut}}, o.tol(1e-5),
                       le(worst, o.tol(1e-5))));
    }
    return rep;
}

Report check_weight_decay(const Options& o) {
    Report rep;
    for (double A : {1.0, 4.0, 16.0})
        for (double B : {1.0, 4.0, 16.0}) {
            WeightParams p(A, B);
            std::vector<double> xs = log_grid(0.05 * A, 50 * (A + B), 60);
            std::vector<double> W;
            for (double x : xs) W.push_back(std::abs(w_ab(x, p)));
            for (int K = 0; K <= 4; ++K) {
                double worst = 1e300, at = 0;
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    double m = (decay_envelope(xs[i], p, K) - W[i]) / calibration::kDecayC[K];
                    if (m < worst) worst = m, at = xs[i];
                }
                rep.add(record("weights", ab_id("decay", A, B) + "-K" + std::to_string(K),
                               {{"A", A}, {"B", B}, {"K", K}, {"x_points", xs.size()}},
                               {{"min_margin_over_C", worst}, {"at_x", at}}, {{"C_K", calibration::kDecayC[K]}, {"min", 0}},
                               worst >= 0));
            }
            double worst = 1e300, at = 0;
            for (double u : log_grid(0.03, 300, 40)) {
                double m = hat_margin(u, p) / calibration::kHatC;
                if (m < worst) worst = m, at = u;
            }
            rep.add(record("weights", ab_id("hat-envelope", A, B), {{"A", A}, {"B", B}},
                           {{"min_margin_over_C", worst}, {"at_u", at}}, {{"C_hat", calibration::kHatC}, {"min", 0}},
                           worst >= 0));
        }
    // (A + |x|) / |B| = 10 at K = 3
    {
        WeightParams p(2, 1);
        double x = 8, w = std::abs(w_ab(x, p)), bound = decay_envelope(x, p, 3);
        rep.add(record("weights", "decay-example-ratio10", {{"A", 2}, {"B", 1}, {"x", x}, {"K", 3}}, {{"W", w}},
                       o.tol(bound), le(w, o.tol(bound))));
    }
    return rep;
}

}  // namespace spm::suites
