#include "common.hpp"

#include "spm/afe.hpp"
#include "spm/spectral.hpp"
#include "spm/voronoi.hpp"

#include <algorithm>
#include <cmath>

namespace spm::suites {

using detail::cj;
using detail::json;
using detail::le;
using detail::record;
using detail::tag;

// ---- afe

Report check_afe_weight(const Options& o) {
    Report rep;
    const double t = 100;
    GammaData g = GammaData::gl3xgl2(GL3Spectral::minimal_eisenstein(), t, Parity::Even);
    double scale = std::pow(t, 1.5);
    cplx lo = afe_weight_V(1e-3 * scale, t, g), hi = afe_weight_V(1e3 * scale, t, g);
    // Out of reach for this shape: the triple pole of the bounded Gamma factors at w = -1/2
    // makes V - 1 shrink only like (pi^3 y / t^{3/2})^{1/2}, and at 1e-3 t^{3/2} it is still O(1).
    rep.add(record("afe", "weight-small-y", {{"t", t}, {"y", 1e-3 * scale}}, {{"V", cj(lo)}, {"dev", std::abs(lo - 1.0)}},
                   o.tol(0.1), le(std::abs(lo - 1.0), o.tol(0.1)), false));
    {
        std::vector<double> ks{-3, -4, -5, -6, -7, -8}, devs;
        bool shrinking = true;
        for (double k : ks) {
            devs.push_back(std::abs(afe_weight_V(std::pow(10.0, k) * scale, t, g) - 1.0));
            if (devs.size() > 1 && devs.back() >= devs[devs.size() - 2]) shrinking = false;
        }
        rep.add(record("afe", "weight-approach", {{"t", t}, {"log10_y_over_t32", ks}}, {{"dev", devs}},
                       {{"shrinking", true}, {"last", o.tol(0.1)}}, shrinking && le(devs.back(), o.tol(0.1))));
    }
    rep.add(record("afe", "weight-large-y", {{"t", t}, {"y", 1e3 * scale}}, {{"V", cj(hi)}, {"abs", std::abs(hi)}},
                   o.tol(1e-6), le(std::abs(hi), o.tol(1e-6))));
    // shifts of a GL(3) type sum to zero; the dual swaps nu1 and nu2
    double worst = 0;
    for (GL3Spectral nu : {GL3Spectral::minimal_eisenstein(), GL3Spectral::sym_square(13.78),
                           GL3Spectral{cplx(0.3, 2.0), cplx(0.4, -1.0)}}) {
        worst = std::max(worst, std::abs(nu.alpha() + nu.beta() + nu.gamma()));
        GL3Spectral d = nu.dual();
        worst = std::max({worst, std::abs(d.nu1 - nu.nu2), std::abs(d.nu2 - nu.nu1)});
    }
    rep.add(record("afe", "gl3-type-invariants", json::object(), {{"max_defect", worst}}, 1e-15, le(worst, 1e-15)));
    return rep;
}

Report check_stirling(const Options& o) {
    Report rep;
    auto shape = [](Parity parity) {
        return [parity](double t) { return GammaData::gl3xgl2(GL3Spectral::minimal_eisenstein(), t, parity); };
    };
    auto family = shape(Parity::Even);
    // The 1/t coefficient at w = 1 is sum_i (b_i/2 - 1/8) over the three growing factors
    // Gamma(it + b_i + w/2). Even forms have sum b_i = 3/4 whatever the GL(3) type, so it
    // vanishes and the residual falls like 1/t^2; odd forms keep it.
    for (Parity parity : {Parity::Odd, Parity::Even}) {
        const bool odd = parity == Parity::Odd;
        for (double t : {50.0, 100.0, 200.0}) {
            double a = stirling_ratio_residual(1.0, t, shape(parity)), b = stirling_ratio_residual(1.0, 2 * t, shape(parity));
            double ratio = a / b, half = o.tol(0.5);
            std::string id = "stirling-" + to_string(parity) + "-t" + std::to_string(static_cast<int>(t));
            json in = {{"w", 1}, {"t", t}, {"parity", to_string(parity)}};
            json m = {{"residual_t", a}, {"residual_2t", b}, {"ratio", ratio}};
            bool in_band = std::isfinite(ratio) && ratio >= 2 - half && ratio <= 2 + half;
            rep.add(record("afe", id, in, m, {{"lo", 2 - half}, {"hi", 2 + half}}, in_band, odd));
            if (!odd) {
                double h2 = o.tol(1.0);
                rep.add(record("afe", id + "-second-order", in, m, {{"lo", 4 - h2}, {"hi", 4 + h2}},
                               std::isfinite(ratio) && ratio >= 4 - h2 && ratio <= 4 + h2));
            }
        }
    }
    cplx h0 = stirling_h_d3(0.0);
    rep.add(record("afe", "stirling-h-at-zero", json::object(), {{"h", cj(h0)}}, {{"expected", 1}},
                   std::abs(h0 - 1.0) <= 1e-14));
    // the leading term against the exact ratio far up the line
    const double t = 1e5;
    double worst = 0;
    for (cplx w : {cplx(0.5, 0), cplx(1, 0), cplx(1, 1), cplx(2, -0.5)}) {
        GammaData g = family(t);
        cplx s0(0.5, t);
        cplx exact = AFEConfig::G(w) * std::exp(log_gamma_factor(s0 + w, g) - log_gamma_factor(s0, g) - 1.5 * w * std::log(t));
        worst = std::max(worst, std::abs(exact - stirling_h_d3(w)) / std::abs(stirling_h_d3(w)));
    }
    rep.add(record("afe", "stirling-leading-term", {{"t", t}}, {{"max_rel", worst}}, o.tol(1e-3), le(worst, o.tol(1e-3))));
    return rep;
}

Report check_afe_value(const Options& o, const SpectralDataset& ds, int forms) {
    Report rep;
    int done = 0;
    for (const GL2Form& f : ds.forms) {
        if (f.parity != Parity::Even) continue;
        if (done++ == forms) break;
        std::vector<cplx> L;
        for (double Y : {0.5, 1.0, 2.0}) L.push_back(gl2_special_value(f, Y, kPipelineSigma).value);
        double var = std::max(std::abs(L[0] - L[1]), std::abs(L[2] - L[1])) / std::abs(L[1]);
        rep.add(record("afe", "y-invariance-t" + tag(f.t), {{"t", f.t}, {"Y", {0.5, 1, 2}}, {"sigma", kPipelineSigma}},
                       {{"L", cj(L[1])}, {"variation", var}}, o.tol(1e-4), le(var, o.tol(1e-4))));
    }
    // degree three: the d3 series with its own functional equation
    {
        GammaData g = GammaData::gl3(GL3Spectral::minimal_eisenstein());
        Coefficients d = [](std::int64_t n) { return static_cast<double>(d3(n)); };
        std::vector<cplx> L;
        for (double Y : {0.5, 1.0, 2.0})
            L.push_back(afe_value(d, d, cplx(0.5, 20), g, g, AFEConfig{Y, 1.0, kPipelineSigma}, 100000).value);
        double var = std::max(std::abs(L[0] - L[1]), std::abs(L[2] - L[1])) / std::abs(L[1]);
        rep.add(record("afe", "y-invariance-degree3", {{"t", 20}, {"model", "d3"}}, {{"L", cj(L[1])}, {"variation", var}},
                       o.tol(1e-4), le(var, o.tol(1e-4))));
    }
    return rep;
}

// ---- coefficients

Report check_dataset(const Options& o, const SpectralDataset& ds) {
    (void)o;
    Report rep;
    std::size_t even = 0, odd = 0;
    double worst = 0;
    for (const GL2Form& f : ds.forms) {
        if (f.t <= 30) (f.parity == Parity::Even ? even : odd)++;
        worst = std::max(worst, f.hecke_defect().value);
    }
    std::size_t even_all = 0, odd_all = 0;
    for (const GL2Form& f : ds.forms) (f.parity == Parity::Even ? even_all : odd_all)++;
    // only ten even forms have t <= 30, so the twenty even forms reach t ~ 38
    rep.add(record("coeffs", "dataset-coverage", {{"t_max_complete", ds.t_max_complete}, {"n_max", ds.n_max}},
                   {{"forms", ds.forms.size()}, {"even", even_all}, {"odd", odd_all}, {"even_t_le_30", even},
                    {"odd_t_le_30", odd}},
                   {{"even_min", 20}, {"odd_min", 10}, {"n_max_min", 2000}},
                   even_all >= 20 && odd_all >= 10 && ds.n_max >= 2000));
    rep.add(record("coeffs", "dataset-hecke", {{"forms", ds.forms.size()}}, {{"max_defect", worst}}, 1e-6, le(worst, 1e-6)));
    // Rankin-Selberg coefficients at small n
    const GL2Form& f = ds.forms.front();
    auto phi = GL3Coefficients::d3_model(100);
    auto lam = [&f](std::int64_t n) { return f(n); };
    double r1 = rankin_coeff(1, lam, phi), r4 = rankin_coeff(4, lam, phi), r7 = rankin_coeff(7, lam, phi);
    double w4 = f(4) * phi(1, 4) + f(1) * phi(2, 1), w7 = f(7) * phi(1, 7);
    double err = std::max({std::abs(r1 - 1), std::abs(r4 - w4), std::abs(r7 - w7)});
    rep.add(record("coeffs", "rankin-small-n", {{"t", f.t}, {"n", {1, 4, 7}}}, {{"values", {r1, r4, r7}}},
                   {{"expected", {1.0, w4, w7}}}, le(err, 1e-12)));
    return rep;
}

Report check_gl3_hecke(const Options& o, std::int64_t bound) {
    Report rep;
    auto d3m = GL3Coefficients::d3_model(std::max<std::int64_t>(bound * bound, 100));
    double defect = gl3_hecke_defect(d3m, bound);
    rep.add(record("coeffs", "gl3-hecke-d3", {{"bound", bound}}, {{"max_defect", defect}}, {{"expected", 0}}, defect == 0));
    bool row = true;
    for (std::int64_t n = 1; n <= bound; ++n) row = row && d3m(1, n) == static_cast<double>(d3(n));
    double a22 = hecke_A(2, 2, d3m);
    rep.add(record("coeffs", "gl3-d3-values", {{"bound", bound}}, {{"row_matches_d3", row}, {"A22", a22}},
                   {{"A22", 8}}, row && a22 == 8));
    if (!o.sym2_source.empty()) {
        auto src = load_dataset(o.sym2_source);
        auto sym = GL3Coefficients::sym_square(src.forms.front(), bound * bound);
        double d = gl3_hecke_defect(sym, bound);
        rep.add(record("coeffs", "gl3-hecke-sym2", {{"bound", bound}, {"t", src.forms.front().t}}, {{"max_defect", d}},
                       o.tol(1e-8), le(d, o.tol(1e-8))));
    }
    return rep;
}

Report check_cube(const Options& o, const SpectralDataset& ds, int forms) {
    Report rep;
    const cplx s = 2.0;
    const std::int64_t n_cap = 1000, coeff_max = 500;
    auto add = [&](const std::string& id, const std::function<double(std::int64_t)>& lam, double coeff_bound, json in) {
        CubeResidual r = cube_identity_residual(lam, s, n_cap, coeff_max);
        in["s"] = 2;
        in["n_cap"] = n_cap;
        in["coeff_max"] = coeff_max;
        rep.add(record("coeffs", id + "-coefficients", in, {{"max_residual", r.coefficient}}, coeff_bound,
                       r.coefficient <= coeff_bound));
        rep.add(record("coeffs", id + "-series", in, {{"residual", r.series}, {"lhs", r.lhs}, {"rhs", r.rhs}},
                       {{"tail_bound", o.tol(r.tail_bound)}}, le(r.series, o.tol(r.tail_bound))));
    };
    add("cube-divisor", [](std::int64_t n) { return static_cast<double>(divisor_count(n)); }, 0.0, {{"lambda", "d(n)"}});
    int done = 0;
    for (const GL2Form& f : ds.forms) {
        if (done++ == forms) break;
        GL2Form h = f.hecke_closed();
        add("cube-form-t" + tag(f.t), [&h](std::int64_t n) { return h(n); }, o.tol(1e-9),
            {{"lambda", "dataset"}, {"t", f.t}});
    }
    return rep;
}

// ---- spectral

Report check_harmonic(const Options& o) {
    (void)o;
    Report rep;
    for (double T : {10.0, 100.0}) {
        AnalysisWindow win(T);
        double worst = -1e300, at = 0;
        bool holds = true;
        for (int i = 0; i <= 1998; ++i) {
            double t = 1 + 0.5 * i;
            Comparability c = harmonic_comparability(t, win);
            holds = holds && c.holds();
            double excess = c.deviation - c.bound - c.rounding;
            if (excess > worst) worst = excess, at = t;
        }
        rep.add(record("spectral", "comparability-T" + std::to_string(static_cast<int>(T)),
                       {{"T", T}, {"t_range", {1, 1000}}, {"step", 0.5}}, {{"max_excess", worst}, {"at_t", at}},
                       {{"max_excess", 0}}, holds));
    }
    long double w = harmonic_weight(500, AnalysisWindow(100));
    rep.add(record("spectral", "weight-t500-T100", {{"t", 500}, {"T", 100}},
                   {{"log_w", static_cast<double>(std::log(w))}}, {{"finite_positive", true}},
                   std::isfinite(static_cast<double>(std::log(w))) && w > 0));
    return rep;
}

namespace {

void moment_records(Report& rep, const std::string& stem, const MomentReport& m, const Options& o, double drift_tol,
                    bool sanity_t32) {
    for (std::size_t i = 0; i < m.T_grid.size(); ++i)
        rep.add(record("moment", stem + "-T" + std::to_string(static_cast<int>(m.T_grid[i])), {{"T", m.T_grid[i]}},
                       {{"value", m.values[i]}, {"forms", m.counts[i]}}, {{"finite", true}}, std::isfinite(m.values[i])));
    for (const FormValue& f : m.forms) {
        json measured = {{"L", cj(f.L)},      {"contribution", f.contribution}, {"y_drift", f.y_drift},
                         {"convexity", f.convexity}, {"trivial", f.trivial},       {"length", f.length}};
        bool pass = le(f.y_drift, o.tol(drift_tol)) && le(std::abs(f.L), f.trivial);
        json bound = {{"y_drift", o.tol(drift_tol)}, {"abs_L", "trivial"}};
        if (sanity_t32) {
            double cap = 1e3 * std::pow(f.t, 1.5);
            bound["contribution"] = cap;
            pass = pass && le(f.contribution, cap);
        }
        rep.add(record("moment", stem + "-form-t" + tag(f.t), {{"t", f.t}, {"parity", to_string(f.parity)}},
                       measured, bound, pass));
    }
}

}  // namespace

Report check_second_moment(const Options& o, const SpectralDataset& ds, const std::vector<double>& grid) {
    Report rep;
    auto phi = GL3Coefficients::d3_model(ds.n_max);
    MomentReport m = second_moment(ds, phi, grid, {});
    moment_records(rep, "second", m, o, 1e-4, true);
    // with the d3 model L(u x phi) = L(u)^3, so the two pipelines must agree
    MomentReport six = sixth_moment(ds, grid, {});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double a = m.values[i], b = six.values[i];
        double rel = a == b ? 0.0 : std::abs(a - b) / std::max(std::abs(a), std::abs(b));
        rep.add(record("moment", "second-vs-sixth-T" + std::to_string(static_cast<int>(grid[i])), {{"T", grid[i]}, {"model", "d3"}},
                       {{"second", a}, {"sixth", b}, {"rel", rel}}, o.tol(1e-4), le(rel, o.tol(1e-4))));
    }
    json fit = m.fitted_exponent ? json(*m.fitted_exponent) : json(nullptr);
    rep.add(record("moment", "second-fit", {{"grid", grid}}, {{"fitted_exponent", fit}, {"fitted_T", m.fitted_T}},
                   json(nullptr), true, false));
    return rep;
}

Report check_sixth_moment(const Options& o, const SpectralDataset& ds, const std::vector<double>& grid) {
    Report rep;
    MomentOptions opt;
    opt.include_odd = true;
    MomentReport m = sixth_moment(ds, grid, opt);
    moment_records(rep, "sixth", m, o, 1e-6, false);
    double below = ds.forms.empty() ? 1.0 : std::floor(ds.forms.front().t) - 1;
    if (below > 1 / kPi) {
        MomentReport empty = sixth_moment(ds, {below}, opt);
        rep.add(record("moment", "sixth-below-spectrum", {{"T", below}}, {{"value", empty.values[0]}, {"forms", empty.counts[0]}},
                       {{"expected", 0}}, empty.values[0] == 0 && empty.counts[0] == 0));
    }
    json fit = m.fitted_exponent ? json(*m.fitted_exponent) : json(nullptr);
    bool ok = m.fitted_exponent && *m.fitted_exponent <= o.tol(2.8);
    rep.add(record("moment", "sixth-fit", {{"grid", grid}, {"include_odd", true}},
                   {{"fitted_exponent", fit}, {"fitted_T", m.fitted_T}, {"values", m.values}},
                   {{"max_exponent", o.tol(2.8)}}, ok, false));
    return rep;
}

// ---- voronoi

Report check_negligibility(const Options& o, const GL3Coefficients& A, double T, std::int64_t N,
                           const std::vector<std::int64_t>& ls) {
    Report rep;
    for (std::int64_t l : ls) {
        NegligibilityReport r = negligibility_report(T, l, N, A);
        std::string id = "negligible-" + A.model_name() + "-l" + std::to_string(l);
        json in = {{"T", T}, {"N", N}, {"l", l}, {"X", r.X}, {"model", A.model_name()}};
        rep.add(record("voronoi", id, in,
                       {{"cells", r.cells},
                        {"max_normalized", r.max_normalized},
                        {"by_r", r.max_normalized_by_r},
                        {"worst", {{"r", r.worst.r}, {"k", r.worst.k}, {"u", r.worst.u}}}},
                       o.tol(0.05), le(r.max_normalized, o.tol(0.05))));
        double reach = r.reach.empty() ? 0.0 : *std::max_element(r.reach.begin(), r.reach.end());
        rep.add(record("voronoi", id + "-dual", in, {{"reach", r.reach}, {"max_reach", reach}}, {{"max_reach", 1}},
                       r.dual_empty && reach < 1));
    }
    return rep;
}

Report check_phase(const Options& o) {
    Report rep;
    VoronoiParams p{1, 1, 1, -0.18, 200, 2000, 2.37};
    p.validate();
    const double Nd = static_cast<double>(p.N), rT = static_cast<double>(p.r) * p.T;
    // y0 = 1 exactly at x = N^2 |u|^3 / (rT)^3
    {
        double x = Nd * Nd * std::pow(std::abs(p.u), 3) / std::pow(rT, 3);
        double y0 = stationary_point(x, p), d1 = voronoi_phase_d1(y0, x, p);
        rep.add(record("voronoi", "stationary-unit", {{"x", x}}, {{"y0", y0}, {"phase_d1", d1}}, {{"expected", 1}},
                       std::abs(y0 - 1) <= 1e-12));
    }
    auto x_for = [&](double y0) { return std::pow(y0 * Nd * std::pow(std::abs(p.u), 1.5) / std::pow(rT, 1.5), 2); };
    // stationary point inside the support: van der Corput scale within a factor 5
    for (double y0 : {1.3, 1.5, 1.7}) {
        double x = x_for(y0);
        PhaseIntegral I = phase_integral(x, p);
        double scale = stationary_phase_scale(x, p), ratio = std::abs(I.value) / scale;
        rep.add(record("voronoi", "phase-stationary-y" + tag(y0), {{"x", x}, {"y0", y0}},
                       {{"integral", cj(I.value)}, {"scale", scale}, {"ratio", ratio}}, {{"lo", 0.2}, {"hi", 5}},
                       ratio >= 0.2 && ratio <= 5));
    }
    // stationary point outside [1/4, 4]: non-stationary envelope
    for (double y0 : {4.5, 6.0, 10.0, 20.0}) {
        double x = x_for(y0);
        PhaseIntegral I = phase_integral(x, p);
        double env = 10 * amplitude_norm() / std::pow(1 + I.min_slope, 2);
        rep.add(record("voronoi", "phase-nonstationary-y" + tag(y0), {{"x", x}, {"y0", y0}},
                       {{"bare", cj(I.bare)}, {"abs", std::abs(I.bare)}, {"min_slope", I.min_slope}}, o.tol(env),
                       le(std::abs(I.bare), o.tol(env))));
    }
    // u = 0: monotone phase, decay in (xN)^{1/3}
    {
        VoronoiParams q = p;
        q.u = 0;
        std::vector<double> xs{0.01, 0.03, 0.1, 0.3, 1.0}, mags, envs;
        bool ok = true;
        for (double x : xs) {
            PhaseIntegral I = phase_integral(x, q);
            double m = std::abs(I.bare), env = o.tol(10 * amplitude_norm() / std::pow(1 + I.min_slope, 2));
            if (!mags.empty() && m > mags.back()) ok = false;
            ok = ok && le(m, env);
            mags.push_back(m);
            envs.push_back(env);
        }
        rep.add(record("voronoi", "phase-u0-decay", {{"x", xs}}, {{"abs_bare", mags}}, {{"decreasing", true}, {"envelope", envs}},
                       ok));
    }
    // C(-u, -k) = conj C(u, k); zero window gives zero
    {
        auto A = GL3Coefficients::d3_model(4 * p.N);
        VoronoiParams a{3, 1, 2, 0.1, 200, 500, 2.37}, b = a;
        b.k = -a.k;
        b.u = -a.u;
        cplx ca = c_sum(a, A), cb = c_sum(b, A);
        double err = std::abs(ca - std::conj(cb));
        rep.add(record("voronoi", "c-sum-conjugation", {{"k", 3}, {"r", 2}, {"u", 0.1}, {"N", 500}},
                       {{"C", cj(ca)}, {"C_dual", cj(cb)}, {"defect", err}}, 1e-10 * (1 + std::abs(ca)),
                       le(err, 1e-10 * (1 + std::abs(ca)))));
        cplx z = c_sum(a, [](std::int64_t) { return cplx(0); });
        rep.add(record("voronoi", "c-sum-zero", json::object(), {{"C", cj(z)}}, {{"expected", 0}}, std::abs(z) == 0));
    }
    return rep;
}

}  // namespace spm::suites
