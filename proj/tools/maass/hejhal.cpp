#include "hejhal.hpp"

#include "kbessel.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kY0 = 0.86602540378443864676;  // sqrt(3)/2
constexpr double kEps = 1e-16;

struct Point {
    double x, y;
};

Point pullback(double x, double y) {
    for (int it = 0; it < 1000; ++it) {
        x -= std::nearbyint(x);
        double r2 = x * x + y * y;
        if (r2 >= 1.0 - 1e-15) return {x, y};
        x = -x / r2;
        y = y / r2;
    }
    throw std::runtime_error("pullback did not terminate");
}

double cs(Parity p, double t) { return p == Parity::Even ? std::cos(t) : std::sin(t); }

int terms_needed(double R, double y) {
    return static_cast<int>(std::ceil(kbessel_cutoff(R, kEps) / (2 * kPi * y)));
}

// Value of the truncated expansion at a point of the fundamental domain.
double expansion(const std::vector<double>& coef, Parity parity, const KBesselTable& kb, Point z) {
    double s = 0, sy = std::sqrt(z.y);
    for (std::size_t l = 1; l <= coef.size(); ++l) {
        double arg = 2 * kPi * l * z.y;
        if (arg >= kb.upper()) break;
        s += coef[l - 1] * kb(arg) * cs(parity, 2 * kPi * l * z.x);
    }
    return s * sy;
}

}  // namespace

Collocation make_collocation(double R, Parity parity) {
    Collocation c{R, parity, 0, 0};
    c.M0 = terms_needed(R, kY0) + 2;
    int M_line = terms_needed(R, 0.70 * kY0);
    c.Q = (M_line + c.M0) / 2 + 12;
    return c;
}

std::vector<double> solve_low_coefficients(const Collocation& c, double Y) {
    ScaledKBessel K(c.R);
    const int M = c.M0, Q = c.Q;
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(M, M);
    std::vector<Point> pts(Q);
    std::vector<double> xm(Q);
    for (int m = 1; m <= Q; ++m) {
        xm[m - 1] = (m - 0.5) / (2.0 * Q);
        pts[m - 1] = pullback(xm[m - 1], Y);
    }
    // kb(2 pi l y*) for every point and column
    Eigen::MatrixXd B(Q, M);
    for (int m = 0; m < Q; ++m) {
        double sy = std::sqrt(pts[m].y);
        for (int l = 1; l <= M; ++l)
            B(m, l - 1) = sy * K(2 * kPi * l * pts[m].y) * cs(c.parity, 2 * kPi * l * pts[m].x);
    }
    Eigen::MatrixXd C(M, Q);
    for (int n = 1; n <= M; ++n)
        for (int m = 0; m < Q; ++m) C(n - 1, m) = (2.0 / Q) * cs(c.parity, 2 * kPi * n * xm[m]);
    V = -C * B;
    for (int n = 1; n <= M; ++n) V(n - 1, n - 1) += std::sqrt(Y) * K(2 * kPi * n * Y);
    // c_1 = 1; drop the first equation.
    Eigen::MatrixXd A = V.block(1, 1, M - 1, M - 1);
    Eigen::VectorXd rhs = -V.block(1, 0, M - 1, 1);
    Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
    std::vector<double> out(M);
    out[0] = 1.0;
    for (int i = 1; i < M; ++i) out[i] = sol(i - 1);
    return out;
}

Defect defect(const Collocation& c) {
    auto a = solve_low_coefficients(c, 0.80 * kY0);
    auto b = solve_low_coefficients(c, 0.72 * kY0);
    return {a[1] - b[1], a[2] - b[2], a[1] * a[2] - a[5]};
}

std::vector<double> all_coefficients(double R, Parity parity, int n_max) {
    Collocation col = make_collocation(R, parity);
    auto low = solve_low_coefficients(col, 0.80 * kY0);
    ScaledKBessel K(R);
    KBesselTable table(K, 2 * kPi * kY0 * 0.999, kbessel_cutoff(R, kEps) + 1.0);

    std::vector<double> coef(n_max, 0.0);
    std::vector<double> best(n_max, 0.0);  // |K| at which each coefficient was recovered
    int direct = std::min(n_max, col.M0 / 2);
    for (int n = 1; n <= direct; ++n) coef[n - 1] = low[n - 1], best[n - 1] = 1e300;

    double xcut = kbessel_cutoff(R, kEps);
    int n_lo = direct + 1;
    while (n_lo <= n_max) {
        int n_hi = std::min(n_max, static_cast<int>(std::ceil(n_lo * 1.5)));
        double Y = std::max(R, 4.0) / (2 * kPi * n_lo);
        if (Y > 0.9 * kY0) Y = 0.9 * kY0;
        int M_line = static_cast<int>(std::ceil(xcut / (2 * kPi * Y)));
        int Q = (M_line + n_hi) / 2 + 16;
        std::vector<double> u(Q), xm(Q);
        for (int m = 1; m <= Q; ++m) {
            xm[m - 1] = (m - 0.5) / (2.0 * Q);
            u[m - 1] = expansion(low, parity, table, pullback(xm[m - 1], Y));
        }
        for (int n = n_lo; n <= n_hi; ++n) {
            double s = 0;
            for (int m = 0; m < Q; ++m) s += u[m] * cs(parity, 2 * kPi * n * xm[m]);
            double kv = std::sqrt(Y) * K(2 * kPi * n * Y);
            if (std::abs(kv) > best[n - 1]) {
                coef[n - 1] = (2.0 / Q) * s / kv;
                best[n - 1] = std::abs(kv);
            }
        }
        n_lo = n_hi + 1;
    }
    return coef;
}

}  // namespace maass
