#include "spm/weights.hpp"

#include "spm/calibration.hpp"
#include "spm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spm {

double SmoothCutoff::operator()(double t) const {
    if (t <= 0.5) return 0.0;
    if (t >= 1.0) return 1.0;
    auto s = [](double x) { return x > 0 ? std::exp(-1 / x) : 0.0; };
    double a = s(2 * t - 1), b = s(2 - 2 * t);
    return a / (a + b);
}

double eta(double t, const SmoothCutoff& cutoff) { return cutoff(t); }

WeightParams::WeightParams(double A_, double B_) : A(A_), B(B_) {
    if (!(A > 0)) throw std::domain_error("WeightParams: A must be positive");
    if (B == 0 || !std::isfinite(B)) throw std::domain_error("WeightParams: B must be nonzero");
}

WeightParams WeightParams::from_rkT(double r, double k, double T) {
    double sd = std::sin(1 / (2 * T));
    return WeightParams(r / (kTwoPi * sd), r * r / (kTwoPi * k * sd));
}

namespace {

const cplx I(0, 1);

// int_0^S f(s) ds on panels 0, h0, 2 h0, 4 h0, ... each split `refine` ways
template <typename F>
cplx graded(F&& f, double h0, double S, int refine) {
    cplx total = 0;
    double a = 0, b = h0;
    while (a < S) {
        total += integrate_panels(f, a, std::min(b, S), refine, 20);
        a = b;
        b *= 2;
    }
    return total;
}

cplx w_fixed(double X, const WeightParams& p, int refine) {
    const double A = p.A, B = p.B, sg = B > 0 ? 1.0 : -1.0;
    const double lo = A / (2 * X), mid = A / X;
    auto direct = [&](double t) {
        return std::exp(-1 / t) / (t * t) * p.cutoff(X * t / A) * e(-X * t / B);
    };
    cplx total = integrate_panels(direct, lo, mid, 8 * refine, 20);
    // eta = 1 beyond mid: rotate to t = mid - i sgn(B) s, where e(-X t / B) decays
    const double kappa = kTwoPi * X / std::abs(B);
    const cplx head = e(-X * mid / B) * (-I * sg);
    auto rotated = [&](double s) {
        cplx t(mid, -sg * s);
        return std::exp(-1.0 / t) / (t * t) * std::exp(-kappa * s);
    };
    total += head * graded(rotated, 0.5 * std::min(mid, 1 / kappa), 46 / kappa, refine);
    return total;
}

cplx kernel(cplx w) {
    cplx v = kTwoPi * w;
    cplx v2 = v * v;
    return (1.0 - v2) / ((1.0 + v2) * (1.0 + v2));
}

cplx hat_fixed(double u, const WeightParams& p, int refine) {
    const double A = p.A, B = p.B, sg = B > 0 ? 1.0 : -1.0;
    const double au = A * u;
    auto direct = [&](double t) { return p.cutoff(t) * e(-A * t / B) * kernel(au * t); };
    cplx total = integrate_panels(direct, 0.5, 1.0, 16 * refine, 20);
    // the kernel poles sit on the imaginary axis, clear of Re t = 1
    const double kappa = kTwoPi * A / std::abs(B);
    const cplx head = e(-A / B) * (-I * sg);
    auto rotated = [&](double s) {
        cplx t(1.0, -sg * s);
        return kernel(au * t) * std::exp(-kappa * s);
    };
    total += head * graded(rotated, 0.5 * std::min(1.0, 1 / kappa), 46 / kappa, refine);
    return 2 * A * total;
}

template <typename F>
cplx adaptive(F&& eval, double tol, const char* what) {
    cplx prev = eval(1);
    for (int refine = 2; refine <= 32; refine *= 2) {
        cplx next = eval(refine);
        if (std::abs(next - prev) <= tol) return next;
        prev = next;
    }
    throw std::runtime_error(std::string(what) + ": quadrature did not converge");
}

}  // namespace

cplx w_ab(double x, const WeightParams& p, double tol) {
    if (!(tol > 0)) throw std::domain_error("w_ab: tol must be positive");
    double X = std::abs(x);
    if (X == 0) return 0.0;
    return adaptive([&](int r) { return w_fixed(X, p, r); }, tol, "w_ab");
}

cplx w_ab_hat_closed(double u, const WeightParams& p, double tol) {
    if (!(tol > 0)) throw std::domain_error("w_ab_hat_closed: tol must be positive");
    return adaptive([&](int r) { return hat_fixed(std::abs(u), p, r); }, tol, "w_ab_hat_closed");
}

std::vector<InversionResult> w_inversion_residuals(const std::vector<double>& xs, const WeightParams& p,
                                                   double u_cut, double tail_tol) {
    if (!(u_cut > 0)) throw std::domain_error("w_inversion_residual: u_cut must be positive");
    double xmax = 1 / p.A;
    for (double x : xs) xmax = std::max(xmax, std::abs(x));
    // two periods of e(u x) per panel at the largest |x|
    const double width = 2 / xmax;
    const GaussRule& g = gauss_legendre(20);

    std::vector<cplx> acc(xs.size(), 0.0);
    auto extend = [&](double a, double b) {
        int panels = static_cast<int>(std::ceil((b - a) / width));
        double h = (b - a) / panels;
        for (int k = 0; k < panels; ++k) {
            double mid = a + (k + 0.5) * h;
            for (std::size_t i = 0; i < g.x.size(); ++i) {
                double u = mid + 0.5 * h * g.x[i];
                cplx w = 0.5 * h * g.w[i] * hat_fixed(u, p, 1);
                for (std::size_t j = 0; j < xs.size(); ++j) acc[j] += w * std::cos(kTwoPi * u * xs[j]);
            }
        }
    };
    double U = u_cut, tail = 0;
    extend(0, U);
    for (int doubling = 0;; ++doubling) {
        tail = 2 * U * std::abs(hat_fixed(U, p, 1));
        if (tail <= tail_tol) break;
        if (doubling == 12) throw std::runtime_error("w_inversion_residual: tail bound not reached");
        extend(U, 2 * U);
        U *= 2;
    }
    std::vector<InversionResult> out;
    for (std::size_t j = 0; j < xs.size(); ++j)
        out.push_back({std::abs(w_ab(xs[j], p) - 2.0 * acc[j]), U, tail});
    return out;
}

InversionResult w_inversion_residual(double x, const WeightParams& p, double u_cut, double tail_tol) {
    return w_inversion_residuals({x}, p, u_cut, tail_tol).front();
}

double hat_envelope(double u, const WeightParams& p) {
    if (u == 0) throw std::domain_error("hat_envelope: u must be nonzero");
    return calibration::kHatC * std::min(1 / std::abs(u), (std::abs(p.B) / p.A) / (1 + u * u));
}

double hat_margin(double u, const WeightParams& p) {
    return hat_envelope(u, p) - std::abs(w_ab_hat_closed(u / p.A, p)) / p.A;
}

double decay_envelope(double x, const WeightParams& p, int K) {
    if (K < 0 || K > 4) throw std::domain_error("decay_margin: K must be in [0, 4]");
    return calibration::kDecayC[K] * std::pow(1 + (p.A + std::abs(x)) / std::abs(p.B), -K);
}

double decay_margin(double x, const WeightParams& p, int K) {
    return decay_envelope(x, p, K) - std::abs(w_ab(x, p));
}

double cauchy_kernel_residual(double x, double v_cut) {
    if (!(v_cut >= 1)) throw std::domain_error("cauchy_kernel_residual: v_cut must be >= 1");
    double X = std::abs(x);
    auto f = [&](double v) { return std::cos(kTwoPi * X * v) / (1 + v * v); };
    int panels = static_cast<int>(std::ceil(v_cut * std::max(1.0, X)));
    double integral = 2 / kPi * integrate_panels(f, 0.0, v_cut, panels, 20);
    return std::abs(std::exp(-kTwoPi * X) - integral);
}

}  // namespace spm
