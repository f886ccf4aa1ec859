// Offline generator for data/maass.jsonl: locates the Hecke-Maass cusp forms
// on SL(2,Z) with spectral parameter in [t_lo, t_hi] by Hejhal's method and
// writes their Hecke eigenvalues and harmonic weights.

#include "hejhal.hpp"
#include "kbessel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <vector>

using namespace maass;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kY0 = 0.86602540378443864676;

struct Found {
    double R;
    Parity parity;
};

double refine(Parity p, double a, double b, double fa, double fb) {
    auto f = [p](double R) { return defect(make_collocation(R, p)).f2; };
    std::uintmax_t iters = 60;
    auto tol = [](double x, double y) { return std::abs(x - y) < 1e-13; };
    auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    return 0.5 * (r.first + r.second);
}

std::vector<Found> scan(Parity p, double lo, double hi, double step) {
    std::vector<Found> out;
    double prev_R = lo;
    Defect prev = defect(make_collocation(lo, p));
    for (double R = lo + step; R <= hi + 1e-12; R += step) {
        Defect d = defect(make_collocation(R, p));
        if (std::signbit(d.f2) != std::signbit(prev.f2)) {
            double root = refine(p, prev_R, R, prev.f2, d.f2);
            Defect at = defect(make_collocation(root, p));
            // Sign changes across poles of f2 leave f3 and the Hecke defect large.
            if (std::abs(at.f3) < 1e-7 && std::abs(at.hecke) < 1e-7) {
                out.push_back({root, p});
                std::fprintf(stderr, "  %s R = %.12f  f3 = %.1e  hecke = %.1e\n",
                             p == Parity::Even ? "even" : "odd ", root, at.f3, at.hecke);
            }
        }
        prev = d;
        prev_R = R;
    }
    return out;
}

// ||u||^2 over the fundamental domain for the expansion with e^{pi R/2} K_{iR}.
// Above y = Y0 by Parseval, below by two-dimensional Gauss-Legendre.
double norm_squared(double R, Parity p, const std::vector<double>& c) {
    ScaledKBessel K(R);
    using GL = boost::math::quadrature::gauss<double, 20>;
    double cut = kbessel_cutoff(R, 1e-18);
    double upper = 0;
    for (std::size_t n = 1; n <= c.size(); ++n) {
        double y_hi = cut / (2 * kPi * n);
        if (y_hi <= kY0) break;
        int panels = static_cast<int>(std::ceil((y_hi - kY0) / 0.02));
        double w = (y_hi - kY0) / panels, s = 0;
        for (int k = 0; k < panels; ++k) {
            double a = kY0 + k * w;
            s += GL::integrate([&](double y) { double v = K(2 * kPi * n * y); return v * v / y; },
                               a, a + w);
        }
        upper += 0.5 * c[n - 1] * c[n - 1] * s;
    }
    // Below Y0: symmetric in x, so integrate over x in [0, 1/2].
    auto u = [&](double x, double y) {
        double s = 0;
        for (std::size_t n = 1; n <= c.size(); ++n) {
            double arg = 2 * kPi * n * y;
            if (arg > cut) break;
            double phase = 2 * kPi * n * x;
            s += c[n - 1] * K(arg) * (p == Parity::Even ? std::cos(phase) : std::sin(phase));
        }
        return s * std::sqrt(y);
    };
    double lower = 0;
    const int xpanels = 16;
    for (int k = 0; k < xpanels; ++k) {
        double a = 0.5 * k / xpanels;
        lower += GL::integrate(
            [&](double x) {
                double y0 = std::sqrt(1 - x * x);
                return GL::integrate([&](double y) { double v = u(x, y); return v * v / (y * y); },
                                     y0, kY0);
            },
            a, a + 0.5 / xpanels);
    }
    return upper + 2 * lower;
}

double worst_hecke(const std::vector<double>& lam) {
    const int N = static_cast<int>(lam.size());
    double worst = 0;
    for (int m = 2; m <= N; ++m)
        for (int n = m; static_cast<long>(m) * n <= N; ++n) {
            int g = std::gcd(m, n);
            double rhs = 0;
            for (int d = 1; d <= g; ++d)
                if (g % d == 0) rhs += lam[m / d * (n / d) - 1];
            worst = std::max(worst, std::abs(lam[m - 1] * lam[n - 1] - rhs));
        }
    return worst;
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke-Maass cusp form table generator"};
    double t_lo = 8.0, t_hi = 38.0, step = 0.002;
    int n_max = 2000;
    std::string out_path = "data/maass.jsonl";
    app.add_option("--t-lo", t_lo);
    app.add_option("--t-hi", t_hi);
    app.add_option("--step", step);
    app.add_option("--n-max", n_max);
    app.add_option("--out", out_path);
    CLI11_PARSE(app, argc, argv);

    std::vector<Found> forms;
    for (Parity p : {Parity::Even, Parity::Odd}) {
        auto f = scan(p, t_lo, t_hi, step);
        forms.insert(forms.end(), f.begin(), f.end());
    }
    std::sort(forms.begin(), forms.end(), [](const Found& a, const Found& b) { return a.R < b.R; });

    std::ofstream os(out_path);
    if (!os) {
        std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
        return 1;
    }
    // Hand-assembled so that every decimal carries 16 significant digits.
    os << "{\"t_max_complete\": " << fixed(t_hi, 10) << ", \"n_max\": " << n_max << "}\n";
    for (const auto& f : forms) {
        auto lam = all_coefficients(f.R, f.parity, n_max);
        double err = worst_hecke(lam);
        auto low = solve_low_coefficients(make_collocation(f.R, f.parity), 0.8 * kY0);
        double nrm = norm_squared(f.R, f.parity, low);
        // |rho(1)|^2 / cosh(pi R) with rho(1) = 1/2 before normalisation.
        double alpha = 0.5 / (nrm * (1 + std::exp(-2 * kPi * f.R)));
        std::fprintf(stderr, "R = %.10f %s  hecke %.1e  alpha %.6f\n", f.R,
                     f.parity == Parity::Even ? "even" : "odd", err, alpha);
        if (err > 1e-7) {
            std::fprintf(stderr, "Hecke relations fail at R = %.10f\n", f.R);
            return 1;
        }
        os << "{\"t\": " << fixed(f.R, 16) << ", \"parity\": \""
           << (f.parity == Parity::Even ? "even" : "odd") << "\", \"alpha\": " << fixed(alpha, 16)
           << ", \"lambda\": [";
        for (int n = 0; n < n_max; ++n) os << (n ? ", " : "") << fixed(lam[n], 16);
        os << "]}\n";
    }
    std::fprintf(stderr, "%zu forms written\n", forms.size());
    return 0;
}
