#pragma once

#include "spm/arith.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spm {

enum class Parity { Even, Odd };

Parity parse_parity(const std::string& s);
std::string to_string(Parity p);

// Type (nu1, nu2) of a GL(3) form and the derived shifts.
struct GL3Spectral {
    cplx nu1, nu2;

    cplx alpha() const { return -nu1 - 2.0 * nu2 + 1.0; }
    cplx beta() const { return -nu1 + nu2; }
    cplx gamma() const { return 2.0 * nu1 + nu2 - 1.0; }
    GL3Spectral dual() const { return {nu2, nu1}; }

    // nu1 = nu2 = 1/3, all shifts zero: the d3 Eisenstein model
    static GL3Spectral minimal_eisenstein() { return {1.0 / 3, 1.0 / 3}; }
    // shifts (2it, 0, -2it) of the symmetric-square lift of a form with parameter t
    static GL3Spectral sym_square(double t) {
        cplx nu = (1.0 - cplx(0, 2 * t)) / 3.0;
        return {nu, nu};
    }
};

// gamma(s) = pi^{-pi_power s} prod_i Gamma((s + mu_i) / 2)
struct GammaData {
    double pi_power;
    std::vector<cplx> shifts;

    std::size_t degree() const { return shifts.size(); }

    // pi^{-s} Gamma((s + it)/2) Gamma((s - it)/2), shifted by 1 for odd forms
    static GammaData gl2(double t, Parity parity);
    // pi^{-3s/2} with shifts 1 - 2 nu1 - nu2, nu1 - nu2, -1 + nu1 + 2 nu2
    static GammaData gl3(const GL3Spectral& nu);
    // pi^{-3s} with shifts -+ i t - alpha, beta, gamma (plus 1 per factor for odd forms)
    static GammaData gl3xgl2(const GL3Spectral& nu, double t, Parity parity);
};

cplx log_gamma_factor(cplx s, const GammaData& g);
cplx gamma_factor(cplx s, const GammaData& g);

// Mollifier G(w) = exp((w / sigma)^2); Y balances the two sums; epsilon is the
// root number. With sigma = 1, |V(y)| only falls like exp(-(log y)^2 / 4), so
// the Dirichlet-polynomial runs take kPipelineSigma. Much wider sigma lets the
// Gamma ratio's vertical growth e^{d pi |v| / 4} swamp G off the special point.
inline constexpr double kPipelineSigma = 2.0;

struct AFEConfig {
    double Y = 1.0;
    cplx epsilon = 1.0;
    double sigma = 1.0;

    static cplx G(cplx w, double sigma = 1.0) { return std::exp(w * w / (sigma * sigma)); }
};

// V_{s0}(y) = (1/2 pi i) int_{(c)} y^-w gamma(s0 + w)/gamma(s0) G(w)/w dw.
// c = 3 for y >= 1. For y < 1 the line moves left of 0, between 0 and the first
// pole of gamma(s0 + w), and the residue 1 at w = 0 is added back.
// Trapezoid rule with step 0.05 on |Im w| <= 10 sigma (|G| < e^{9 - 100} beyond).
class AFEWeight {
public:
    AFEWeight(cplx s0, const GammaData& g, double sigma = 1.0);

    cplx operator()(double y) const;
    // smallest y (on a 1.05-geometric grid from 1) past which |V| stays below eps
    double decay_point(double eps) const;

    static constexpr double kStep = 0.05;

private:
    struct Line {
        double c;
        std::vector<cplx> w, weight;
    };
    Line build(double c) const;

    cplx s0_;
    GammaData g_;
    double sigma_;
    cplx log_g0_;
    Line right_, left_;
};

cplx afe_weight_V(double y, cplx s0, const GammaData& g, double sigma = 1.0);

// At the special point s0 = 1/2 + i t.
cplx afe_weight_V(double y, double t, const GammaData& g);

// |G(w) gamma(s0 + w)/gamma(s0) / t^{3w/2} - h_est(w)| with s0 = 1/2 + i t
// and h_est the Richardson extrapolate from t = 1e6 and 2e6.
double stirling_ratio_residual(cplx w, double t, const std::function<GammaData(double)>& family);

// Leading Stirling term for the d3 GL(3) x GL(2) shape:
// h(w) = G(w) pi^{-3w} (Gamma((1/2 + w)/2) / Gamma(1/4))^3 e^{3 i pi w / 4}
cplx stirling_h_d3(cplx w);

using Coefficients = std::function<double(std::int64_t)>;

struct AFEResult {
    cplx value;
    cplx first, second;
    std::int64_t n_first, n_second;  // lengths actually summed
};

// sum a_n n^{-s0} V(n/Y) + eps gamma*(1 - s0)/gamma(s0) sum b_n n^{-(1-s0)} V*(nY)
// Both sums stop once the weight is below 1e-10; throws std::domain_error if
// that happens beyond length_cap. The gamma ratio is folded into the root
// number so that eps is the constant of Lambda(s) = eps Lambda*(1 - s).
AFEResult afe_value(const Coefficients& a, const Coefficients& b, cplx s0, const GammaData& g,
                    const GammaData& g_dual, const AFEConfig& cfg, std::int64_t length_cap);

// Root number of L(u, s) for a level-one Maass form.
cplx gl2_root_number(Parity parity);

}  // namespace spm
