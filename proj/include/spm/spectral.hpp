#pragma once

#include "spm/afe.hpp"
#include "spm/coeffs.hpp"
#include "spm/sieve.hpp"

#include <optional>
#include <vector>

namespace spm {

struct AnalysisWindow {
    double T;

    explicit AnalysisWindow(double T_);
    double delta() const { return 1 / (2 * T); }
};

// log w(t), w(t) = 2 sinh((pi - 1/T) t) / sinh(2 pi t), via
// w = 2 e^{-(pi + 1/T) t} (1 - e^{-2(pi - 1/T) t}) / (1 - e^{-4 pi t}).
double log_harmonic_weight(double t, const AnalysisWindow& win);
// Extended range: finite and positive at t = 1000.
long double harmonic_weight(double t, const AnalysisWindow& win);

struct Comparability {
    double deviation;  // |w e^{pi t + t/T} / 2 - 1|
    double bound;      // 1.1 (e^{-2(pi - 1/T) t} + e^{-4 pi t})
    double rounding;   // 64 eps (1 + (pi + 1/T) t): conditioning of e^{pi t} in double
    bool holds() const { return deviation <= bound + rounding; }
};
Comparability harmonic_comparability(double t, const AnalysisWindow& win);

// w(t_j) |rho_j(1)|^2 with |rho_j(1)|^2 = alpha_j cosh(pi t_j)
double spectral_weight(const GL2Form& f, const AnalysisWindow& win);

struct DiscreteSum {
    double value;
    double tail_fraction;  // (1 + x) e^{-x}, x = t_max_complete / T
    std::size_t forms;
};

// S(A) = sum_j w(t_j) |rho_j(1)|^2 |sum_n a_n lambda_j(n) n^{i t_j}|^2 over forms with
// t_j <= t_max_complete. w |rho|^2 ~ alpha e^{-t/T}, so the share of weight
// mass beyond the dataset is estimated with a Weyl-density model; above
// tail_budget it is an error.
DiscreteSum s_discrete(const SpectralDataset& ds, const Sequence& seq, const AnalysisWindow& win,
                       double tail_budget = 0.5);

// T(A) = (1/4 pi) int w(t) |sum_n a_n eta_t(n) n^{it}|^2 dt over |t| <= t_cut.
// t_cut grows in steps of 5 until the tail majorant is below 1e-12 of the value;
// throws if that takes past 100.
double t_continuous(const Sequence& seq, const AnalysisWindow& win, double t_cut = 10.0);

// T sum_{r < X} (1/r) sum_{0 < |k| <= r ln(2+T)} (1/|k|) int_{-U}^{U} |sum_n a_n S(k,n;r) e(un/(rT))|^2 du
// with U = u_cut (default 1 / ln(2+T)); the u-integral is done in closed form.
double s1_bound_rhs(const Sequence& seq, double X, const AnalysisWindow& win, std::optional<double> u_cut = {});

// (T^2 + T^{3/2} N^{1/2} + N^{5/4}) (NT)^{0.01} norm2
double luo_bound(double N, const AnalysisWindow& win, double norm2);

// (T^2 + NT/X + N^{3/2}/T) N^{0.01} norm2, the error term beside S_1
double s1_error_envelope(double N, double X, const AnalysisWindow& win, double norm2);

struct Decomposition {
    double H;
    double rhs;
    double residual() const { return rhs - H; }
};

// H = sum_j w |rho|^2 |sum_{P<n<=2P} w2(n/P) lambda_{u x phi}(n) n^{-1/2 - i t_j}|^2 against
// log P sum_{l <= sqrt(2P)} (1/l) sum_j w |rho|^2 |sum_n w2(n l^2/P) A(l,n) lambda_j(n) n^{-1/2 - i t_j}|^2
// Needs P >= 8, where sum_{l <= sqrt(2P)} 1/l <= log P.
Decomposition h_l_decomposition(const SpectralDataset& ds, const GL3Coefficients& phi, std::int64_t P,
                                const AnalysisWindow& win);
double h_l_decomposition_residual(const SpectralDataset& ds, const GL3Coefficients& phi, std::int64_t P,
                                  const AnalysisWindow& win);

struct FormValue {
    double t;
    Parity parity;
    cplx L;
    double contribution;  // |L|^2 or |L|^6
    double y_drift;       // relative change of L between Y = 1 and Y = 2
    double convexity;     // |L| / t^{3/4} (GL(3) x GL(2)) or |L| / t^{1/4} (GL(2))
    double trivial;       // termwise absolute bound on |L|
    std::int64_t length;
};

struct MomentReport {
    std::string kind;
    std::vector<double> T_grid;
    std::vector<double> values;
    std::vector<std::size_t> counts;
    std::optional<double> fitted_exponent;
    double reference_exponent = 2.0;
    std::vector<double> fitted_T;
    std::vector<FormValue> forms;
};

struct MomentOptions {
    bool include_odd = false;
    double sigma = kPipelineSigma;
    std::size_t min_forms_for_fit = 5;
    // root number override; by default eps_j^3, right for the minimal-type GL(3) models
    std::optional<cplx> epsilon;
    std::size_t threads = 0;  // 0: hardware concurrency
};

// sum_{t_j <= T} |L(u_j x phi, 1/2 + i t_j)|^2 through the GL(3) x GL(2) AFE with
// Rankin-Selberg coefficients, available to min(phi range, form table).
MomentReport second_moment(const SpectralDataset& ds, const GL3Coefficients& phi, const std::vector<double>& T_grid,
                           const MomentOptions& opt);

// sum_{t_j <= T} |L(u_j, 1/2 + i t_j)|^6 through the GL(2) AFE.
MomentReport sixth_moment(const SpectralDataset& ds, const std::vector<double>& T_grid, const MomentOptions& opt);

// Least-squares slope of log(values) against log(T); absent with fewer than two points.
std::optional<double> fit_exponent(const std::vector<double>& T, const std::vector<double>& values);

// L(u, 1/2 + i t) from the GL(2) AFE
AFEResult gl2_special_value(const GL2Form& f, double Y, double sigma);
// L(u x phi, 1/2 + i t) from the GL(3) x GL(2) AFE
AFEResult gl3xgl2_special_value(const GL2Form& f, const GL3Coefficients& phi, const GL3Spectral& nu, cplx epsilon,
                                double Y, double sigma);

}  // namespace spm
