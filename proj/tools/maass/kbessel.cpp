#include "kbessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maass {

namespace {
constexpr double kPi = std::numbers::pi;
}

ScaledKBessel::ScaledKBessel(double R) : R_(R) {
    if (R < 0) throw std::invalid_argument("ScaledKBessel: negative order");
    double delta = R > 8.0 / kPi ? 4.0 / R : kPi / 2;
    alpha_ = kPi / 2 - delta;
    scale_ = std::exp(R * delta);
    // Strip of analyticity has half-width delta above the contour.
    h_ = kPi * delta / (2.0 * (40.0 + R * delta / 2.0));
    h_ = std::min(h_, 0.05);
    // Nodes out to where exp(-x_min cos(alpha) cosh t) is negligible for x_min = 0.25.
    double x_min = 0.25;
    double c = std::cos(alpha_);
    double t_max = std::acosh(std::max(2.0, 45.0 / (x_min * c)));
    int n = static_cast<int>(std::ceil(t_max / h_)) + 1;
    cosh_.resize(n);
    sinh_.resize(n);
    phase_.resize(n);
    for (int k = 0; k < n; ++k) {
        double t = k * h_;
        cosh_[k] = std::cosh(t) * c;
        sinh_[k] = std::sinh(t) * std::sin(alpha_);
        phase_[k] = R * t;
    }
}

double ScaledKBessel::operator()(double x) const {
    if (!(x > 0)) throw std::invalid_argument("ScaledKBessel: x must be positive");
    double sum = 0.5 * std::exp(-x * cosh_[0]) * std::cos(phase_[0] - x * sinh_[0]);
    for (std::size_t k = 1; k < cosh_.size(); ++k) {
        double damp = x * cosh_[k];
        if (damp > 745.0) break;
        sum += std::exp(-damp) * std::cos(phase_[k] - x * sinh_[k]);
    }
    return scale_ * h_ * sum;
}

KBesselTable::KBesselTable(const ScaledKBessel& k, double x_lo, double x_hi)
    : x_lo_(x_lo), x_hi_(x_hi), exact_(&k) {
    // Panels narrow enough that the local oscillation (frequency <= R/x) is resolved.
    double R = k.order();
    width_ = std::min(1.0, 8.0 / std::max(1.0, R / x_lo));
    int panels = static_cast<int>(std::ceil((x_hi - x_lo) / width_));
    x_hi_ = x_lo + panels * width_;
    coef_.assign(static_cast<std::size_t>(panels) * (kDegree + 1), 0.0);
    std::vector<double> f(kDegree + 1);
    for (int p = 0; p < panels; ++p) {
        double a = x_lo + p * width_;
        for (int j = 0; j <= kDegree; ++j) {
            double theta = kPi * (j + 0.5) / (kDegree + 1);
            f[j] = k(a + 0.5 * width_ * (1.0 + std::cos(theta)));
        }
        double* c = &coef_[static_cast<std::size_t>(p) * (kDegree + 1)];
        for (int i = 0; i <= kDegree; ++i) {
            double s = 0;
            for (int j = 0; j <= kDegree; ++j)
                s += f[j] * std::cos(kPi * i * (j + 0.5) / (kDegree + 1));
            c[i] = s * 2.0 / (kDegree + 1);
        }
        c[0] *= 0.5;
    }
}

double KBesselTable::operator()(double x) const {
    if (x >= x_hi_) return 0.0;
    if (x < x_lo_) return (*exact_)(x);
    auto p = static_cast<std::size_t>((x - x_lo_) / width_);
    double a = x_lo_ + p * width_;
    double u = 2.0 * (x - a) / width_ - 1.0;
    const double* c = &coef_[p * (kDegree + 1)];
    // Clenshaw
    double b1 = 0, b2 = 0;
    for (int i = kDegree; i >= 1; --i) {
        double b0 = 2 * u * b1 - b2 + c[i];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + c[0];
}

double kbessel_cutoff(double R, double eps) {
    // e^{pi R/2} K_{iR}(x) ~ exp(pi R/2 - sqrt(x^2 - R^2) - R asin(R/x)) for x > R.
    double x = std::max(R, 1.0);
    auto log_size = [R](double x) {
        double s = std::sqrt(std::max(0.0, x * x - R * R));
        return kPi * R / 2 - s - R * std::asin(std::min(1.0, R / x)) - 0.5 * std::log(x);
    };
    while (log_size(x) > std::log(eps)) x += 0.25;
    return x;
}

}  // namespace maass
