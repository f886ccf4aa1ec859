#include "spm/oracles.hpp"

#include "spm/sieve.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <stdexcept>

namespace spm::oracle {

namespace {

using Gauss20 = boost::math::quadrature::gauss<double, 20>;

cplx ee(double x) { return std::polar(1.0, 2 * M_PI * x); }

// bump step, written out again rather than borrowed
double s_exp(double t) { return t > 0 ? std::exp(-1 / t) : 0.0; }
double eta(double t) {
    if (t <= 0.5) return 0;
    if (t >= 1) return 1;
    double a = s_exp(2 * t - 1), b = s_exp(2 - 2 * t);
    return a / (a + b);
}

double real_quad(const std::function<double(double)>& f, double a, double b, std::int64_t panels) {
    double h = (b - a) / static_cast<double>(panels), s = 0;
    for (std::int64_t k = 0; k < panels; ++k) {
        double lo = a + h * static_cast<double>(k);
        s += Gauss20::integrate(f, lo, lo + h);
    }
    return s;
}

}  // namespace

OracleResult dense_quadrature(const std::function<cplx(double)>& f, double a, double b, std::int64_t panels) {
    if (panels < 1 || panels * 20 > 10000000) throw std::domain_error("dense_quadrature: node budget");
    double h = (b - a) / static_cast<double>(panels);
    cplx s = 0;
    for (std::int64_t k = 0; k < panels; ++k) {
        double lo = a + h * static_cast<double>(k);
        double re = Gauss20::integrate([&](double x) { return f(x).real(); }, lo, lo + h);
        double im = Gauss20::integrate([&](double x) { return f(x).imag(); }, lo, lo + h);
        s += cplx(re, im);
    }
    return {s, "dense-quadrature", panels * 40};
}

OracleResult w_ab(double x, double A, double B) {
    if (!(A > 0) || B == 0) throw std::domain_error("oracle w_ab: needs A > 0, B != 0");
    double ax = std::abs(x);
    if (ax == 0) return {0.0, "dense-quadrature", 0};
    // W = |x| int_{A/2}^inf s^-2 eta(s/A) e^{-|x|/s} e(-s/B) ds
    auto amp = [&](double s) { return s <= 0 ? 0.0 : eta(s / A) * std::exp(-ax / s) / (s * s); };
    double omega = 2 * M_PI / std::abs(B), sg = B > 0 ? 1.0 : -1.0;
    // transition part on [A/2, A] directly
    double re = real_quad([&](double s) { return amp(s) * std::cos(omega * s); }, A / 2, A, 64);
    double im = real_quad([&](double s) { return -sg * amp(s) * std::sin(omega * s); }, A / 2, A, 64);
    // smooth tail on [A, inf): shift to [0, inf) and use Ooura
    auto tail = [&](double v) { return std::exp(-ax / (A + v)) / ((A + v) * (A + v)); };
    boost::math::quadrature::ooura_fourier_cos<double> oc(1e-13, 10);
    boost::math::quadrature::ooura_fourier_sin<double> os(1e-13, 10);
    double c = oc.integrate(tail, omega).first, s = os.integrate(tail, omega).first;
    // cos(w(A+v)) = cos wA cos wv - sin wA sin wv; sin(w(A+v)) = sin wA cos wv + cos wA sin wv
    double cA = std::cos(omega * A), sA = std::sin(omega * A);
    re += cA * c - sA * s;
    im += -sg * (sA * c + cA * s);
    return {ax * cplx(re, im), "dense-quadrature", 2 * 64 * 20};
}

std::vector<cplx> fourier_transform_even(const std::function<cplx(double)>& W, const std::vector<double>& us,
                                         double x_max, std::int64_t panels) {
    const auto& nodes = Gauss20::abscissa();
    const auto& weights = Gauss20::weights();
    std::vector<double> xs, ws;
    double h = x_max / static_cast<double>(panels);
    for (std::int64_t k = 0; k < panels; ++k) {
        double mid = h * (static_cast<double>(k) + 0.5);
        // Boost stores the non-negative half of a symmetric rule
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            double w = weights[i] * h / 2;
            if (nodes[i] == 0) {
                xs.push_back(mid);
                ws.push_back(w);
            } else {
                xs.push_back(mid - nodes[i] * h / 2);
                ws.push_back(w);
                xs.push_back(mid + nodes[i] * h / 2);
                ws.push_back(w);
            }
        }
    }
    std::vector<cplx> Wx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) Wx[i] = W(xs[i]);
    std::vector<cplx> out;
    for (double u : us) {
        cplx s = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) s += ws[i] * Wx[i] * std::cos(2 * M_PI * u * xs[i]);
        out.push_back(2.0 * s);
    }
    return out;
}

OracleResult cauchy_integral(double x, double v_cut) {
    auto f = [&](double v) { return std::cos(2 * M_PI * x * v) / (1 + v * v); };
    auto panels = static_cast<std::int64_t>(std::ceil(v_cut * (4 * std::abs(x) + 1)));
    double s = 2 * real_quad(f, 0, v_cut, std::max<std::int64_t>(panels, 16));
    return {s / M_PI, "dense-quadrature", panels * 20};
}

OracleResult stationary_root(double x, double u, double N, double r, double T) {
    if (!(u < 0)) throw std::domain_error("stationary_root: a real root needs u < 0");
    auto fp = [&](double y) { return u * N / (r * T) + std::cbrt(N * x) / std::pow(y, 2.0 / 3); };
    double lo = 1e-12, hi = 1;
    while (fp(hi) > 0) hi *= 2;
    std::uintmax_t iters = 200;
    auto tol = [](double a, double b) { return std::abs(a - b) <= 1e-15 * std::max(std::abs(a), std::abs(b)); };
    auto [a, b] = boost::math::tools::toms748_solve(fp, lo, hi, tol, iters);
    return {0.5 * (a + b), "root-find", static_cast<std::int64_t>(iters)};
}

OracleResult phase_integral(double x, double u, double N, double r, double T, const std::function<double(double)>& w3) {
    auto g = [&](double y) { return w3(y) / std::cbrt(y) * ee(u * y * N / (r * T) + 3 * std::cbrt(x * y * N)); };
    // 4x the production starting density, then Gauss-Kronrod on each panel
    double slope = std::abs(u) * N / (r * T) + std::cbrt(N * x);
    auto panels = std::max<std::int64_t>(64, static_cast<std::int64_t>(std::ceil(8 * slope)));
    double a = 1.0, b = 2.0, h = (b - a) / static_cast<double>(panels);
    cplx s = 0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    for (std::int64_t k = 0; k < panels; ++k) {
        double lo = a + h * static_cast<double>(k);
        double re = GK::integrate([&](double y) { return g(y).real(); }, lo, lo + h, 5, 1e-14);
        double im = GK::integrate([&](double y) { return g(y).imag(); }, lo, lo + h, 5, 1e-14);
        s += cplx(re, im);
    }
    return {std::pow(N * x, 2.0 / 3) * s, "dense-quadrature", panels * 122};
}

OracleResult t_continuous(const Sequence& seq, double T, double t_cut) {
    auto weight = [&](double t) {
        double a = std::abs(t), c = M_PI - 1 / T;
        if (a == 0) return c / M_PI;
        if (a < 5) return 2 * std::sinh(c * a) / std::sinh(2 * M_PI * a);
        return 2 * std::exp(-(M_PI + 1 / T) * a) * (1 - std::exp(-2 * c * a)) / (1 - std::exp(-4 * M_PI * a));
    };
    auto f = [&](double t) {
        cplx s = 0;
        for (std::int64_t i = 0; i < seq.length(); ++i) {
            std::int64_t n = seq.start() + i;
            cplx eta = 0;
            for (std::int64_t a = 1; a <= n; ++a)
                if (n % a == 0) eta += std::polar(1.0, t * std::log(static_cast<double>(a) / static_cast<double>(n / a)));
            s += seq.values()[i] * eta * std::polar(1.0, t * std::log(static_cast<double>(n)));
        }
        return weight(t) * std::norm(s);
    };
    auto panels = static_cast<std::int64_t>(std::ceil(2 * t_cut * 4 * (1 + std::log(static_cast<double>(seq.start() + seq.length())))));
    double v = real_quad(f, -t_cut, t_cut, panels);
    return {v / (4 * M_PI), "dense-quadrature", panels * 20};
}

OracleResult s1_direct(const Sequence& seq, double X, double T, double U) {
    double total = 0;
    std::int64_t cost = 0;
    for (std::int64_t r = 1; static_cast<double>(r) < X; ++r) {
        auto kmax = static_cast<std::int64_t>(std::floor(static_cast<double>(r) * std::log(2 + T)));
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            if (k == 0) continue;
            std::vector<cplx> b(seq.length());
            for (std::int64_t i = 0; i < seq.length(); ++i)
                b[i] = seq.values()[i] * kloosterman(k, seq.start() + i, r).value;
            auto f = [&](double u) {
                cplx s = 0;
                for (std::int64_t i = 0; i < seq.length(); ++i)
                    s += b[i] * ee(u * static_cast<double>(seq.start() + i) / (static_cast<double>(r) * T));
                return std::norm(s);
            };
            auto panels = std::max<std::int64_t>(
                8, static_cast<std::int64_t>(std::ceil(4 * U * static_cast<double>(seq.length()) / (static_cast<double>(r) * T))));
            total += real_quad(f, -U, U, panels) / (static_cast<double>(r) * static_cast<double>(std::abs(k)));
            cost += panels * 20;
        }
    }
    return {T * total, "dense-quadrature", cost};
}

}  // namespace spm::oracle
