#include "common.hpp"

#include "spm/calibration.hpp"
#include "spm/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spm::suites {

using detail::cj;
using detail::json;
using detail::le;
using detail::record;

std::vector<cplx> gaussian_vector(std::mt19937_64& rng, std::int64_t length) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(static_cast<std::size_t>(length));
    for (auto& x : v) {
        double re = g(rng);
        x = {re, g(rng)};
    }
    return v;
}

SieveInstance classical_instance(std::uint64_t seed, const std::string& case_id) {
    auto rng = case_rng(seed, case_id);
    std::uniform_int_distribution<std::int64_t> small(1, 25), start(1, 1000);
    std::int64_t B = small(rng), M = small(rng), N = start(rng);
    return {Sequence(N, gaussian_vector(rng, M)), B, 0.0, ""};
}

SieveInstance oscillatory_instance(std::uint64_t seed, const std::string& case_id, const std::vector<double>& T_values) {
    static const char* phases[] = {"linear", "log", "cube-root"};
    auto rng = case_rng(seed, case_id);
    std::uniform_int_distribution<std::int64_t> b(1, 8), m(2, 16), start(10, 500);
    std::uniform_int_distribution<std::size_t> pick_T(0, T_values.size() - 1), pick_phase(0, 2);
    std::int64_t B = b(rng), M = m(rng), N = start(rng);
    double T = T_values[pick_T(rng)];
    std::string phase = phases[pick_phase(rng)];
    return {Sequence(N, gaussian_vector(rng, M)), B, T, phase};
}

EnvelopeCase envelope_case(std::uint64_t seed, const std::string& case_id, double T, std::int64_t N, double X) {
    auto rng = case_rng(seed, case_id);
    return {Sequence(N + 1, gaussian_vector(rng, N)), T, X, N};
}

namespace {
struct SpectralSide {
    double S, discrete, continuous, rhs, envelope;
};

SpectralSide spectral_side(const SpectralDataset& ds, const EnvelopeCase& c) {
    AnalysisWindow win(c.T);
    double d = s_discrete(ds, c.seq, win).value;
    double t = t_continuous(c.seq, win);
    return {d + t, d, t, s1_bound_rhs(c.seq, c.X, win),
            s1_error_envelope(static_cast<double>(c.N), c.X, win, c.seq.norm2())};
}
}  // namespace

double envelope_excess(const SpectralDataset& ds, const EnvelopeCase& c) {
    SpectralSide s = spectral_side(ds, c);
    return (s.S - s.rhs) / s.envelope;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g;
    for (int i = 0; i < points; ++i)
        g.push_back(points == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
    return g;
}

Report check_classical_sieve(const Options& o, int trials) {
    Report rep;
    {
        Sequence ones(1, std::vector<cplx>(10, 1.0));
        double r = classical_ratio(ones, 1);
        rep.add(record("sieve", "classical-example-constant", {{"B", 1}, {"M", 10}}, {{"ratio", r}},
                       {{"expected", 100.0 / 110}}, std::abs(r - 100.0 / 110) <= 1e-12));
        Sequence unit(7, {1.0});
        double farey = 0;
        for (std::int64_t b = 1; b <= 12; ++b) farey += static_cast<double>(euler_phi(b));
        double u = classical_ratio(unit, 12);
        rep.add(record("sieve", "classical-example-unit", {{"B", 12}, {"M", 1}}, {{"ratio", u}},
                       {{"expected", farey / 145}}, std::abs(u - farey / 145) <= 1e-12 && u < 1));
    }
    for (int i = 0; i < trials; ++i) {
        std::string id = "classical-" + std::to_string(i);
        SieveInstance s = classical_instance(o.seed, "verify-" + id);
        double r = classical_ratio(s.seq, s.B), bound = o.tol(1.0) * (1 + 1e-12);
        rep.add(record("sieve", id, {{"B", s.B}, {"M", s.seq.length()}, {"N", s.seq.start()}}, {{"ratio", r}}, bound,
                       le(r, bound)));
    }
    return rep;
}

Report check_oscillatory_sieve(const Options& o, int trials) {
    Report rep;
    const double C = calibration::kSieveC;
    for (int i = 0; i < trials; ++i) {
        std::string id = "oscillatory-" + std::to_string(i);
        SieveInstance s = oscillatory_instance(o.seed, "verify-" + id, {1, 4, 16});
        double r = oscillatory_ratio(s.seq, s.B, s.T, phase_on(s.phase, s.seq));
        rep.add(record("sieve", id,
                       {{"B", s.B}, {"M", s.seq.length()}, {"N", s.seq.start()}, {"T", s.T}, {"phase", s.phase}},
                       {{"ratio", r}}, {{"C_sieve", o.tol(C)}}, le(r, o.tol(C))));
    }
    // growth in B at fixed T and X
    {
        auto rng = case_rng(o.seed, "verify-oscillatory-regression");
        Sequence seq(100, gaussian_vector(rng, 12));
        PhaseFunction f = phase_on("log", seq);
        std::vector<double> Bs{4, 8, 16, 32}, lhs;
        for (double B : Bs)
            lhs.push_back(oscillatory_lhs(seq, static_cast<std::int64_t>(B), 4.0, f, max_sieve_step(seq, f)));
        double slope = fit_exponent(Bs, lhs).value_or(NAN);
        rep.add(record("sieve", "oscillatory-regression", {{"T", 4}, {"M", 12}, {"phase", "log"}, {"B", Bs}},
                       {{"lhs", lhs}, {"slope", slope}}, o.tol(2.2), le(slope, o.tol(2.2))));
    }
    // t -> tT rescaling and the short-window limit
    {
        auto rng = case_rng(o.seed, "verify-oscillatory-scaling");
        Sequence seq(50, gaussian_vector(rng, 9));
        PhaseFunction f = phase_on("cube-root", seq);
        double T = 3.0, step = max_sieve_step(seq, f);
        double a = oscillatory_lhs(seq, 5, T, f, step);
        double b = T * oscillatory_lhs(seq, 5, 1.0, f.scaled(T), step / T);
        double rel = std::abs(a - b) / a;
        rep.add(record("sieve", "oscillatory-scaling", {{"B", 5}, {"T", T}, {"phase", "cube-root"}},
                       {{"direct", a}, {"rescaled", b}, {"rel", rel}}, o.tol(1e-9), le(rel, o.tol(1e-9))));
        double t = 1e-6, small = oscillatory_lhs(seq, 5, t, f, step), lim = 2 * t * farey_lhs(seq, 5);
        double rl = std::abs(small - lim) / lim;
        rep.add(record("sieve", "oscillatory-short-window", {{"B", 5}, {"T", t}},
                       {{"lhs", small}, {"limit", lim}, {"rel", rl}}, o.tol(1e-6), le(rl, o.tol(1e-6))));
    }
    return rep;
}

Report check_spectral_sieve(const Options& o, const SpectralDataset& ds, int per_cell) {
    Report rep;
    const double C = calibration::kEnvelopeC;
    for (double T : {10.0, 20.0})
        for (double Nf : {2 * T, 4 * T})
            for (double X : {1.5, 3.0})
                for (int i = 0; i < per_cell; ++i) {
                    auto N = static_cast<std::int64_t>(Nf);
                    std::string id = "envelope-T" + std::to_string(static_cast<int>(T)) + "-N" + std::to_string(N) +
                                     "-X" + std::to_string(static_cast<int>(10 * X)) + "-" + std::to_string(i);
                    EnvelopeCase c = envelope_case(o.seed, "verify-" + id, T, N, X);
                    SpectralSide s = spectral_side(ds, c);
                    double bound = s.rhs + o.tol(C) * s.envelope;
                    rep.add(record("spectral", id, {{"T", T}, {"N", N}, {"X", X}, {"norm2", c.seq.norm2()}},
                                   {{"S", s.S}, {"discrete", s.discrete}, {"continuous", s.continuous}},
                                   {{"s1_rhs", s.rhs}, {"envelope", s.envelope}, {"C_env", o.tol(C)}, {"total", bound}},
                                   le(s.S, bound)));
                }
    // H against the l-decomposition, d3 model
    {
        AnalysisWindow win(10);
        auto phi = GL3Coefficients::d3_model(1000);
        for (std::int64_t P : {50, 200}) {
            Decomposition d = h_l_decomposition(ds, phi, P, win);
            rep.add(record("spectral", "decomposition-P" + std::to_string(P), {{"P", P}, {"T", 10}, {"model", "d3"}},
                           {{"H", d.H}, {"rhs", d.rhs}, {"residual", d.residual()}}, {{"min", 0}}, d.residual() >= 0));
        }
    }
    {
        AnalysisWindow win(10);
        Sequence zero(5, std::vector<cplx>(6, 0.0));
        double a = s_discrete(ds, zero, win).value, b = t_continuous(zero, win), c = s1_bound_rhs(zero, 2.0, win);
        rep.add(record("spectral", "zero-sequence", {{"T", 10}}, {{"discrete", a}, {"continuous", b}, {"s1_rhs", c}},
                       {{"expected", 0}}, a == 0 && b == 0 && c == 0));
    }
    return rep;
}

}  // namespace spm::suites
