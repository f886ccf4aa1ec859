#include "spm/spectral.hpp"

#include "spm/expsums.hpp"
#include "spm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <exception>
#include <limits>
#include <thread>

namespace spm {

AnalysisWindow::AnalysisWindow(double T_) : T(T_) {
    if (!(T_ > 1 / kPi)) throw std::domain_error("AnalysisWindow: T must exceed 1/pi for a positive weight");
}

namespace {

// log(1 - e^{-x}) for x > 0
double log1m_exp(double x) { return std::log(-std::expm1(-x)); }

double log_cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2 * x)) - std::log(2.0);
}

// w(t) on the whole line; even in t
double weight_any(double t, const AnalysisWindow& win) {
    double a = std::abs(t);
    double c = kPi - 1 / win.T;
    if (a == 0) return c / kPi;
    if (a < 1) return 2 * std::sinh(c * a) / std::sinh(2 * kPi * a);
    return std::exp(log_harmonic_weight(a, win));
}

std::size_t worker_count(std::size_t requested, std::size_t jobs) {
    std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(n, jobs));
}

// Runs f(i) for i < jobs over a fixed strided partition.
template <typename F>
void parallel_for(std::size_t jobs, std::size_t threads, F f) {
    std::size_t n = worker_count(threads, jobs);
    if (n == 1) {
        for (std::size_t i = 0; i < jobs; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n);
    for (std::size_t w = 0; w < n; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < jobs; i += n) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// sum_n c_n n^{-s}
cplx dirichlet_poly(const std::vector<cplx>& c, std::int64_t start, cplx s) {
    CompensatedSum<cplx> acc;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        double n = static_cast<double>(start + static_cast<std::int64_t>(i));
        acc += c[i] * std::exp(-s * std::log(n));
    }
    return acc.value();
}

}  // namespace

double log_harmonic_weight(double t, const AnalysisWindow& win) {
    if (!(t > 0)) throw std::domain_error("harmonic_weight: t must be positive");
    double c = kPi - 1 / win.T;
    return std::log(2.0) - (kPi + 1 / win.T) * t + log1m_exp(2 * c * t) - log1m_exp(4 * kPi * t);
}

long double harmonic_weight(double t, const AnalysisWindow& win) {
    return std::exp(static_cast<long double>(log_harmonic_weight(t, win)));
}

Comparability harmonic_comparability(double t, const AnalysisWindow& win) {
    double c = kPi + 1 / win.T;
    long double w = harmonic_weight(t, win);
    Comparability r{};
    r.deviation = static_cast<double>(std::fabs(w * std::exp(static_cast<long double>(c * t)) / 2 - 1));
    r.bound = 1.1 * (std::exp(-2 * (kPi - 1 / win.T) * t) + std::exp(-4 * kPi * t));
    r.rounding = 64 * std::numeric_limits<double>::epsilon() * (1 + c * t);
    return r;
}

double spectral_weight(const GL2Form& f, const AnalysisWindow& win) {
    return f.alpha * std::exp(log_harmonic_weight(f.t, win) + log_cosh(kPi * f.t));
}

DiscreteSum s_discrete(const SpectralDataset& ds, const Sequence& seq, const AnalysisWindow& win,
                       double tail_budget) {
    double x = ds.t_max_complete / win.T;
    DiscreteSum r{0, (1 + x) * std::exp(-x), 0};
    if (r.tail_fraction > tail_budget)
        throw std::domain_error("s_discrete: weight beyond t = " + std::to_string(ds.t_max_complete) +
                                " is a fraction " + std::to_string(r.tail_fraction) + " of the total at T = " +
                                std::to_string(win.T));
    CompensatedSum<double> acc;
    for (const GL2Form& f : ds.forms) {
        if (f.t > ds.t_max_complete) continue;
        CompensatedSum<cplx> inner;
        for (std::int64_t i = 0; i < seq.length(); ++i) {
            cplx a = seq.values()[i];
            if (a == 0.0) continue;
            std::int64_t n = seq.start() + i;
            inner += a * f.extended(n) * std::exp(cplx(0, f.t * std::log(static_cast<double>(n))));
        }
        acc += spectral_weight(f, win) * std::norm(inner.value());
        ++r.forms;
    }
    r.value = acc.value();
    return r;
}

double t_continuous(const Sequence& seq, const AnalysisWindow& win, double t_cut) {
    if (!(t_cut > 0)) throw std::domain_error("t_continuous: t_cut must be positive");
    // eta_t(n) = sum over ab = n of cos(t log(a/b)): keep log(a/b) per divisor
    std::vector<std::int64_t> index;
    std::vector<cplx> coef;
    std::vector<std::vector<double>> logs;
    std::vector<double> logn;
    double majorant = 0;
    for (std::int64_t i = 0; i < seq.length(); ++i) {
        cplx a = seq.values()[i];
        if (a == 0.0) continue;
        std::int64_t n = seq.start() + i;
        index.push_back(n);
        coef.push_back(a);
        logn.push_back(std::log(static_cast<double>(n)));
        std::vector<double> l;
        for (std::int64_t d : divisors(n)) l.push_back(std::log(static_cast<double>(d) * d / n));
        majorant += std::abs(a) * static_cast<double>(l.size());
        logs.push_back(std::move(l));
    }
    if (index.empty()) return 0;
    auto integrand = [&](double t) {
        CompensatedSum<cplx> s;
        for (std::size_t j = 0; j < index.size(); ++j) {
            double eta = 0;
            for (double l : logs[j]) eta += std::cos(t * l);
            s += coef[j] * eta * std::exp(cplx(0, t * logn[j]));
        }
        return weight_any(t, win) * std::norm(s.value());
    };
    double freq = 2 * std::log(static_cast<double>(index.back()) + 1) + 1;
    double c = kPi + 1 / win.T;
    double value = 0;
    double prev_cut = 0;
    for (double cut = t_cut; cut <= 100; cut += 5) {
        // integrate only the new shells [prev_cut, cut] on both sides
        auto panels = [&](double a, double b) {
            return std::max(1, static_cast<int>(std::ceil((b - a) * freq / 2)));
        };
        if (prev_cut == 0) {
            value += integrate_panels(integrand, -cut, cut, panels(-cut, cut)) / (4 * kPi);
        } else {
            value += integrate_panels(integrand, -cut, -prev_cut, panels(-cut, -prev_cut)) / (4 * kPi);
            value += integrate_panels(integrand, prev_cut, cut, panels(prev_cut, cut)) / (4 * kPi);
        }
        prev_cut = cut;
        // w(t) <= 2.01 e^{-ct} for t >= 1, |sum|^2 <= majorant^2
        double tail = 2 * 2.01 / (4 * kPi) * majorant * majorant * std::exp(-c * cut) / c;
        if (tail <= 1e-12 * value) return value;
    }
    throw std::domain_error("t_continuous: tail above 1e-12 of the value up to |t| = 100");
}

double s1_bound_rhs(const Sequence& seq, double X, const AnalysisWindow& win, std::optional<double> u_cut) {
    if (!(X >= 1)) throw std::domain_error("s1_bound_rhs: X must be at least 1");
    const double T = win.T;
    const double U = u_cut ? *u_cut : 1 / std::log(2 + T);
    if (!(U > 0)) throw std::domain_error("s1_bound_rhs: u_cut must be positive");
    const std::int64_t L = seq.length();
    CompensatedSum<double> total;
    std::vector<cplx> b(L);
    std::vector<double> kernel(L);
    for (std::int64_t r = 1; static_cast<double>(r) < X; ++r) {
        ExpSumCache cache(r);
        // int_{-U}^{U} e(u d / (r T)) du = 2U sinc(2 pi U d / (r T))
        for (std::int64_t d = 0; d < L; ++d) {
            double z = kTwoPi * U * static_cast<double>(d) / (static_cast<double>(r) * T);
            kernel[d] = d == 0 ? 2 * U : 2 * U * std::sin(z) / z;
        }
        auto kmax = static_cast<std::int64_t>(std::floor(r * std::log(2 + T)));
        CompensatedSum<double> over_k;
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            if (k == 0) continue;
            for (std::int64_t i = 0; i < L; ++i) {
                cplx a = seq.values()[i];
                b[i] = a == 0.0 ? cplx(0) : a * cache.kloosterman(k, seq.start() + i);
            }
            CompensatedSum<double> q;
            for (std::int64_t i = 0; i < L; ++i) q += kernel[0] * std::norm(b[i]);
            for (std::int64_t d = 1; d < L; ++d) {
                cplx c = 0;
                for (std::int64_t i = 0; i + d < L; ++i) c += b[i + d] * std::conj(b[i]);
                q += 2 * kernel[d] * c.real();
            }
            over_k += q.value() / static_cast<double>(std::abs(k));
        }
        total += over_k.value() / static_cast<double>(r);
    }
    return T * total.value();
}

double luo_bound(double N, const AnalysisWindow& win, double norm2) {
    double T = win.T;
    return (T * T + std::pow(T, 1.5) * std::sqrt(N) + std::pow(N, 1.25)) * std::pow(N * T, 0.01) * norm2;
}

double s1_error_envelope(double N, double X, const AnalysisWindow& win, double norm2) {
    double T = win.T;
    return (T * T + N * T / X + std::pow(N, 1.5) / T) * std::pow(N, 0.01) * norm2;
}

Decomposition h_l_decomposition(const SpectralDataset& ds, const GL3Coefficients& phi, std::int64_t P,
                                const AnalysisWindow& win) {
    if (P < 8) throw std::domain_error("h_l_decomposition: P must be at least 8");
    if (phi.n_max() < 2 * P) throw std::out_of_range("h_l_decomposition: GL(3) coefficients do not cover 2P");
    auto lmax = static_cast<std::int64_t>(std::floor(std::sqrt(2.0 * static_cast<double>(P))));
    if (phi.m_max() < lmax) throw std::out_of_range("h_l_decomposition: GL(3) coefficients do not cover sqrt(2P)");
    const double Pd = static_cast<double>(P);
    CompensatedSum<double> H, rhs;
    for (const GL2Form& f : ds.forms) {
        if (f.t > ds.t_max_complete) continue;
        double wt = spectral_weight(f, win);
        auto lambda = [&](std::int64_t n) { return f.extended(n); };
        cplx s0(0.5, f.t);
        std::vector<cplx> c(P, 0.0);
        for (std::int64_t n = P + 1; n <= 2 * P; ++n)
            c[n - P - 1] = window_w2(static_cast<double>(n) / Pd) * rankin_coeff(n, lambda, phi);
        H += wt * std::norm(dirichlet_poly(c, P + 1, s0));
        CompensatedSum<double> inner;
        for (std::int64_t l = 1; l <= lmax; ++l) {
            std::vector<cplx> cl;
            std::int64_t lo = P / (l * l) + 1, hi = 2 * P / (l * l);
            for (std::int64_t n = lo; n <= hi; ++n)
                cl.push_back(window_w2(static_cast<double>(n * l * l) / Pd) * phi(l, n) * f.extended(n));
            if (!cl.empty()) inner += std::norm(dirichlet_poly(cl, lo, s0)) / static_cast<double>(l);
        }
        rhs += wt * inner.value();
    }
    return {H.value(), std::log(Pd) * rhs.value()};
}

double h_l_decomposition_residual(const SpectralDataset& ds, const GL3Coefficients& phi, std::int64_t P,
                                  const AnalysisWindow& win) {
    return h_l_decomposition(ds, phi, P, win).residual();
}

AFEResult gl2_special_value(const GL2Form& f, double Y, double sigma) {
    GammaData g = GammaData::gl2(f.t, f.parity);
    AFEConfig cfg{Y, gl2_root_number(f.parity), sigma};
    Coefficients a = [&f](std::int64_t n) { return f.extended(n); };
    return afe_value(a, a, cplx(0.5, f.t), g, g, cfg, f.n_max());
}

AFEResult gl3xgl2_special_value(const GL2Form& f, const GL3Coefficients& phi, const GL3Spectral& nu, cplx epsilon,
                                double Y, double sigma) {
    // Rankin-Selberg coefficients need lambda(k) for k <= n
    const std::int64_t cap = std::min({phi.n_max(), phi.m_max(), f.n_max()});
    std::vector<double> a(cap + 1, 0.0), b(cap + 1, 0.0);
    for (std::int64_t n = 1; n <= cap; ++n)
        for (std::int64_t m = 1; m * m <= n; ++m) {
            if (n % (m * m)) continue;
            std::int64_t k = n / (m * m);
            double l = f.extended(k);
            a[n] += l * phi(m, k);
            b[n] += l * phi(k, m);
        }
    Coefficients ca = [&a](std::int64_t n) { return a[n]; };
    Coefficients cb = [&b](std::int64_t n) { return b[n]; };
    GammaData g = GammaData::gl3xgl2(nu, f.t, f.parity), gd = GammaData::gl3xgl2(nu.dual(), f.t, f.parity);
    AFEConfig cfg{Y, epsilon, sigma};
    return afe_value(ca, cb, cplx(0.5, f.t), g, gd, cfg, cap);
}

namespace {

double termwise(const Coefficients& a, std::int64_t n) {
    double s = 0;
    for (std::int64_t k = 1; k <= n; ++k) s += std::abs(a(k)) / std::sqrt(static_cast<double>(k));
    return s;
}

void accumulate(MomentReport& rep, const std::vector<double>& T_grid, const MomentOptions& opt) {
    if (!std::is_sorted(T_grid.begin(), T_grid.end())) throw std::domain_error("moment: T grid must increase");
    rep.T_grid = T_grid;
    for (double T : T_grid) {
        CompensatedSum<double> s;
        std::size_t count = 0;
        for (const FormValue& v : rep.forms)
            if (v.t <= T) {
                s += v.contribution;
                ++count;
            }
        rep.values.push_back(s.value());
        rep.counts.push_back(count);
    }
    std::vector<double> Ts, vs;
    for (std::size_t i = 0; i < T_grid.size(); ++i)
        if (rep.counts[i] >= opt.min_forms_for_fit && rep.values[i] > 0) {
            Ts.push_back(T_grid[i]);
            vs.push_back(rep.values[i]);
        }
    rep.fitted_T = Ts;
    rep.fitted_exponent = fit_exponent(Ts, vs);
}

std::vector<const GL2Form*> forms_for(const SpectralDataset& ds, const std::vector<double>& T_grid,
                                      const MomentOptions& opt) {
    if (T_grid.empty()) throw std::domain_error("moment: empty T grid");
    for (double T : T_grid)
        if (!(T > 0)) throw std::domain_error("moment: T must be positive");
    return ds.up_to(*std::max_element(T_grid.begin(), T_grid.end()), opt.include_odd);
}

}  // namespace

MomentReport second_moment(const SpectralDataset& ds, const GL3Coefficients& phi, const std::vector<double>& T_grid,
                           const MomentOptions& opt) {
    auto forms = forms_for(ds, T_grid, opt);
    MomentReport rep;
    rep.kind = "second";
    rep.forms.resize(forms.size());
    parallel_for(forms.size(), opt.threads, [&](std::size_t i) {
        const GL2Form& f = *forms[i];
        cplx eps = opt.epsilon ? *opt.epsilon : std::pow(gl2_root_number(f.parity), 3);
        AFEResult r1 = gl3xgl2_special_value(f, phi, phi.type(), eps, 1.0, opt.sigma);
        AFEResult r2 = gl3xgl2_special_value(f, phi, phi.type(), eps, 2.0, opt.sigma);
        Coefficients a = [&](std::int64_t n) { return rankin_coeff(n, [&](std::int64_t k) { return f.extended(k); }, phi); };
        FormValue v;
        v.t = f.t;
        v.parity = f.parity;
        v.L = r1.value;
        v.contribution = std::norm(r1.value);
        v.y_drift = std::abs(r2.value - r1.value) / std::max(std::abs(r1.value), 1e-300);
        v.convexity = std::abs(r1.value) / std::pow(f.t, 0.75);
        v.trivial = termwise(a, r1.n_first) + termwise(a, r1.n_second);
        v.length = std::max(r1.n_first, r1.n_second);
        rep.forms[i] = v;
    });
    accumulate(rep, T_grid, opt);
    return rep;
}

MomentReport sixth_moment(const SpectralDataset& ds, const std::vector<double>& T_grid, const MomentOptions& opt) {
    auto forms = forms_for(ds, T_grid, opt);
    MomentReport rep;
    rep.kind = "sixth";
    rep.forms.resize(forms.size());
    parallel_for(forms.size(), opt.threads, [&](std::size_t i) {
        const GL2Form& f = *forms[i];
        AFEResult r1 = gl2_special_value(f, 1.0, opt.sigma);
        AFEResult r2 = gl2_special_value(f, 2.0, opt.sigma);
        Coefficients a = [&](std::int64_t n) { return f.extended(n); };
        FormValue v;
        v.t = f.t;
        v.parity = f.parity;
        v.L = r1.value;
        v.contribution = std::pow(std::abs(r1.value), 6);
        v.y_drift = std::abs(r2.value - r1.value) / std::max(std::abs(r1.value), 1e-300);
        v.convexity = std::abs(r1.value) / std::pow(f.t, 0.25);
        v.trivial = termwise(a, r1.n_first) + termwise(a, r1.n_second);
        v.length = std::max(r1.n_first, r1.n_second);
        rep.forms[i] = v;
    });
    accumulate(rep, T_grid, opt);
    return rep;
}

std::optional<double> fit_exponent(const std::vector<double>& T, const std::vector<double>& values) {
    if (T.size() != values.size()) throw std::invalid_argument("fit_exponent: size mismatch");
    if (T.size() < 2) return std::nullopt;
    double n = static_cast<double>(T.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (!(T[i] > 0) || !(values[i] > 0)) throw std::domain_error("fit_exponent: needs positive data");
        double x = std::log(T[i]), y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double den = n * sxx - sx * sx;
    if (den == 0) return std::nullopt;
    return (n * sxy - sx * sy) / den;
}

}  // namespace spm
