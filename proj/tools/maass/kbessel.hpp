#pragma once

#include <vector>

namespace maass {

// e^{pi R / 2} K_{iR}(x) for real R >= 0 and x > 0.
//
// The integral representation K_{iR}(x) = int_0^inf exp(-x cosh t) cos(R t) dt
// loses everything to cancellation once x < R, so the contour is lifted to
// Im t = pi/2 - delta where the integrand carries the e^{-pi R / 2} factor
// explicitly. The trapezoidal rule is then spectrally accurate.
class ScaledKBessel {
public:
    explicit ScaledKBessel(double R);

    double operator()(double x) const;

    double order() const { return R_; }

private:
    double R_;
    double alpha_;       // contour height
    double scale_;       // e^{R (pi/2 - alpha)}
    double h_;
    std::vector<double> cosh_, sinh_, phase_;
};

// Piecewise Chebyshev interpolant of ScaledKBessel on [x_lo, x_hi]; zero
// beyond x_hi. Used where the same order is evaluated many thousands of times.
class KBesselTable {
public:
    KBesselTable(const ScaledKBessel& k, double x_lo, double x_hi);

    double operator()(double x) const;

    double upper() const { return x_hi_; }

private:
    static constexpr int kDegree = 24;
    double x_lo_, x_hi_, width_;
    std::vector<double> coef_;  // (kDegree + 1) per panel
    const ScaledKBessel* exact_;
};

// Smallest x beyond which |e^{pi R/2} K_{iR}(x)| < eps (asymptotic estimate).
double kbessel_cutoff(double R, double eps);

}  // namespace maass
