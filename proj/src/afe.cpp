#include "spm/afe.hpp"

#include "spm/loggamma.hpp"

#include <cmath>
#include <stdexcept>

namespace spm {

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw std::invalid_argument("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace {
const cplx I(0, 1);
double parity_shift(Parity p) { return p == Parity::Even ? 0.0 : 1.0; }
}  // namespace

GammaData GammaData::gl2(double t, Parity parity) {
    double d = parity_shift(parity);
    return {1.0, {I * t + d, -I * t + d}};
}

GammaData GammaData::gl3(const GL3Spectral& nu) {
    return {1.5, {1.0 - 2.0 * nu.nu1 - nu.nu2, nu.nu1 - nu.nu2, -1.0 + nu.nu1 + 2.0 * nu.nu2}};
}

GammaData GammaData::gl3xgl2(const GL3Spectral& nu, double t, Parity parity) {
    double d = parity_shift(parity);
    GammaData g{3.0, {}};
    for (double sg : {-1.0, 1.0})
        for (cplx a : {nu.alpha(), nu.beta(), nu.gamma()}) g.shifts.push_back(sg * I * t - a + d);
    return g;
}

cplx log_gamma_factor(cplx s, const GammaData& g) {
    cplx r = -g.pi_power * s * std::log(kPi);
    for (const cplx& mu : g.shifts) r += log_gamma(0.5 * (s + mu));
    return r;
}

cplx gamma_factor(cplx s, const GammaData& g) { return std::exp(log_gamma_factor(s, g)); }

AFEWeight::AFEWeight(cplx s0, const GammaData& g, double sigma)
    : s0_(s0), g_(g), sigma_(sigma), log_g0_(log_gamma_factor(s0, g)) {
    if (!(sigma > 0)) throw std::domain_error("AFEWeight: sigma must be positive");
    double min_re = g.shifts.empty() ? 0.0 : g.shifts.front().real();
    for (const cplx& mu : g.shifts) min_re = std::min(min_re, mu.real());
    double pole = -s0.real() - min_re;  // rightmost pole of gamma(s0 + w)
    if (pole >= 0) throw std::domain_error("AFEWeight: gamma(s0 + w) has a pole right of w = 0");
    right_ = build(3.0);
    left_ = build(0.5 * pole);
}

AFEWeight::Line AFEWeight::build(double c) const {
    Line line{c, {}, {}};
    const double height = 10 * sigma_;
    int n = static_cast<int>(std::lround(2 * height / kStep));
    for (int k = 0; k <= n; ++k) {
        cplx w(c, -height + k * kStep);
        cplx ratio = std::exp(log_gamma_factor(s0_ + w, g_) - log_g0_);
        line.w.push_back(w);
        line.weight.push_back(kStep / kTwoPi * ratio * AFEConfig::G(w, sigma_) / w);
    }
    return line;
}

cplx AFEWeight::operator()(double y) const {
    if (!(y > 0)) throw std::domain_error("AFEWeight: y must be positive");
    const Line& line = y >= 1 ? right_ : left_;
    double L = std::log(y);
    // y^{-w} along the line: y^{-c} times a geometric rotation in Im w
    cplx z = std::exp(-line.w.front() * L);
    const cplx step = std::exp(cplx(0, -kStep * L));
    CompensatedSum<cplx> s;
    for (std::size_t k = 0; k < line.w.size(); ++k) {
        s += line.weight[k] * z;
        z *= step;
    }
    cplx v = s.value();
    return y >= 1 ? v : v + 1.0;
}

double AFEWeight::decay_point(double eps) const {
    double y = 1;
    for (int it = 0; it < 2000; ++it, y *= 1.05)
        if (std::abs((*this)(y)) < eps && std::abs((*this)(1.05 * y)) < eps && std::abs((*this)(1.1025 * y)) < eps)
            return y;
    throw std::runtime_error("AFEWeight: no decay found");
}

cplx afe_weight_V(double y, cplx s0, const GammaData& g, double sigma) { return AFEWeight(s0, g, sigma)(y); }

cplx afe_weight_V(double y, double t, const GammaData& g) { return afe_weight_V(y, cplx(0.5, t), g); }

namespace {

cplx scaled_ratio(cplx w, double t, const GammaData& g) {
    cplx s0(0.5, t);
    return std::exp(log_gamma_factor(s0 + w, g) - log_gamma_factor(s0, g) - 1.5 * w * std::log(t)) *
           AFEConfig::G(w);
}

}  // namespace

double stirling_ratio_residual(cplx w, double t, const std::function<GammaData(double)>& family) {
    if (!(w.real() > 0)) throw std::domain_error("stirling_ratio_residual: needs Re w > 0");
    const double T0 = 1e6;
    cplx h_est = 2.0 * scaled_ratio(w, 2 * T0, family(2 * T0)) - scaled_ratio(w, T0, family(T0));
    return std::abs(scaled_ratio(w, t, family(t)) - h_est);
}

cplx stirling_h_d3(cplx w) {
    cplx lg = log_gamma(0.5 * (0.5 + w)) - log_gamma(0.25);
    return AFEConfig::G(w) * std::exp(-3.0 * w * std::log(kPi) + 3.0 * lg + 0.75 * I * kPi * w);
}

AFEResult afe_value(const Coefficients& a, const Coefficients& b, cplx s0, const GammaData& g,
                    const GammaData& g_dual, const AFEConfig& cfg, std::int64_t length_cap) {
    if (!(cfg.Y > 0)) throw std::domain_error("afe_value: Y must be positive");
    const double eps = 1e-10;
    AFEWeight V(s0, g, cfg.sigma), Vd(1.0 - s0, g_dual, cfg.sigma);
    auto n1 = static_cast<std::int64_t>(std::ceil(cfg.Y * V.decay_point(eps)));
    auto n2 = static_cast<std::int64_t>(std::ceil(Vd.decay_point(eps) / cfg.Y));
    if (std::max(n1, n2) > length_cap)
        throw std::domain_error("afe_value: coefficient range " + std::to_string(length_cap) + " below needed " +
                                std::to_string(std::max(n1, n2)));
    CompensatedSum<cplx> first, second;
    for (std::int64_t n = 1; n <= n1; ++n) {
        double an = a(n);
        if (an == 0) continue;
        double x = static_cast<double>(n);
        first += an * std::exp(-s0 * std::log(x)) * V(x / cfg.Y);
    }
    for (std::int64_t n = 1; n <= n2; ++n) {
        double bn = b(n);
        if (bn == 0) continue;
        double x = static_cast<double>(n);
        second += bn * std::exp(-(1.0 - s0) * std::log(x)) * Vd(x * cfg.Y);
    }
    cplx root = cfg.epsilon * std::exp(log_gamma_factor(1.0 - s0, g_dual) - log_gamma_factor(s0, g));
    AFEResult r;
    r.first = first.value();
    r.second = root * second.value();
    r.value = r.first + r.second;
    r.n_first = n1;
    r.n_second = n2;
    return r;
}

cplx gl2_root_number(Parity parity) { return parity == Parity::Even ? 1.0 : -1.0; }

}  // namespace spm
