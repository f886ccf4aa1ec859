#include "spm/sieve.hpp"

#include "spm/expsums.hpp"
#include "spm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spm {

Sequence::Sequence(std::int64_t start, std::vector<cplx> values) : start_(start), values_(std::move(values)) {
    if (start_ < 1) throw std::domain_error("Sequence: start must be positive");
    if (values_.empty()) throw std::domain_error("Sequence: empty");
    CompensatedSum<double> s;
    for (const cplx& v : values_) s += std::norm(v);
    norm2_ = s.value();
}

namespace {

std::vector<double> sample_points(double lo, double hi, std::int64_t samples) {
    std::int64_t n = std::max<std::int64_t>(10 * samples, 1);
    std::vector<double> pts{lo, hi};
    for (std::int64_t i = 1; i < n; ++i) pts.push_back(lo + (hi - lo) * static_cast<double>(i) / n);
    return pts;
}

}  // namespace

void PhaseFunction::validate(std::int64_t samples) const {
    if (!(hi > lo)) throw std::domain_error("PhaseFunction: empty domain");
    int sign = 0;
    for (double y : sample_points(lo, hi, samples)) {
        double d = fprime(y);
        if (d == 0 || !std::isfinite(d)) throw std::domain_error("PhaseFunction: f' vanishes on the domain");
        int s = d > 0 ? 1 : -1;
        if (sign != 0 && s != sign) throw std::domain_error("PhaseFunction: f' changes sign on the domain");
        sign = s;
    }
}

double PhaseFunction::X(std::int64_t samples) const {
    double x = 0;
    for (double y : sample_points(lo, hi, samples)) x = std::max(x, 1 / std::abs(fprime(y)));
    return x;
}

PhaseFunction PhaseFunction::scaled(double c) const {
    PhaseFunction g = *this;
    auto f0 = f, d0 = fprime;
    g.f = [f0, c](double y) { return c * f0(y); };
    g.fprime = [d0, c](double y) { return c * d0(y); };
    return g;
}

PhaseFunction PhaseFunction::linear(double lo, double hi) {
    return {"linear", [](double y) { return y; }, [](double) { return 1.0; }, lo, hi};
}

PhaseFunction PhaseFunction::log_over_2pi(double lo, double hi) {
    return {"log", [](double y) { return std::log(y) / kTwoPi; }, [](double y) { return 1 / (kTwoPi * y); }, lo, hi};
}

PhaseFunction PhaseFunction::cube_root(double lo, double hi) {
    return {"cube-root", [](double y) { return std::cbrt(y); },
            [](double y) { return 1 / (3 * std::cbrt(y * y)); }, lo, hi};
}

PhaseFunction phase_on(const std::string& kind, const Sequence& seq) {
    double lo = static_cast<double>(seq.start()), hi = lo + static_cast<double>(seq.length());
    if (kind == "linear") return PhaseFunction::linear(lo, hi);
    if (kind == "log") return PhaseFunction::log_over_2pi(lo, hi);
    if (kind == "cube-root") return PhaseFunction::cube_root(lo, hi);
    throw std::invalid_argument("unknown phase: " + kind);
}

double farey_lhs(const Sequence& seq, std::int64_t B) {
    if (B < 1) throw std::domain_error("farey_lhs: B must be positive");
    const auto& a = seq.values();
    CompensatedSum<double> total;
    for (std::int64_t b = 1; b <= B; ++b) {
        ExpSumCache c(b);
        for (std::int64_t x : c.units()) {
            cplx s = 0;
            for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * c.root(x * (seq.start() + static_cast<std::int64_t>(i)));
            total += std::norm(s);
        }
    }
    return total.value();
}

double classical_ratio(const Sequence& seq, std::int64_t B) {
    if (seq.norm2() == 0) throw std::domain_error("classical_ratio: zero sequence");
    double bb = static_cast<double>(B);
    return farey_lhs(seq, B) / ((bb * bb + static_cast<double>(seq.length())) * seq.norm2());
}

std::vector<double> farey_kernel(std::int64_t B, std::int64_t max_shift) {
    std::vector<double> F(max_shift + 1, 0.0);
    for (std::int64_t b = 1; b <= B; ++b) {
        ExpSumCache c(b);
        for (std::int64_t d = 0; d <= max_shift; ++d) F[d] += c.ramanujan(d);
    }
    return F;
}

namespace {

std::vector<double> centred_phase(const Sequence& seq, const PhaseFunction& f) {
    double mid = static_cast<double>(seq.start()) + 0.5 * static_cast<double>(seq.length() - 1);
    double f0 = f.f(mid);
    std::vector<double> g(seq.length());
    for (std::int64_t i = 0; i < seq.length(); ++i) g[i] = f.f(static_cast<double>(seq.start() + i)) - f0;
    return g;
}

}  // namespace

double max_sieve_step(const Sequence& seq, const PhaseFunction& f) {
    double top = 0;
    for (double v : centred_phase(seq, f)) top = std::max(top, std::abs(v));
    return top == 0 ? 1.0 : 0.1 / top;
}

double oscillatory_lhs(const Sequence& seq, std::int64_t B, double T, const PhaseFunction& f,
                       double quadrature_step) {
    if (B < 1 || !(T > 0)) throw std::domain_error("oscillatory_lhs: B and T must be positive");
    f.validate(seq.length());
    // |.|^2 is blind to a common phase, so f is centred at the middle of the support
    if (!(quadrature_step > 0) || quadrature_step > max_sieve_step(seq, f) * (1 + 1e-12))
        throw std::domain_error("oscillatory_lhs: quadrature step does not resolve the phase");

    const std::int64_t M = seq.length();
    const auto& a = seq.values();
    std::vector<double> g = centred_phase(seq, f);
    std::vector<double> F = farey_kernel(B, M - 1);

    // sum_{m,n} c_m conj(c_n) F(m - n), c_m = a_m e(t g_m)
    std::vector<cplx> c(M);
    auto form = [&](double t) {
        for (std::int64_t i = 0; i < M; ++i) c[i] = a[i] * e(t * g[i]);
        double diag = 0, off = 0;
        for (std::int64_t i = 0; i < M; ++i) {
            diag += std::norm(c[i]);
            cplx s = 0;
            for (std::int64_t j = i + 1; j < M; ++j) s += std::conj(c[j]) * F[j - i];
            off += (c[i] * s).real();
        }
        return F[0] * diag + 2 * off;
    };
    // panels of width 10 steps with 20 nodes: at most ~2 pi rad per 4 nodes
    int panels = static_cast<int>(std::ceil(2 * T / (10 * quadrature_step)));
    return integrate_panels(form, -T, T, std::max(panels, 1), 20);
}

double oscillatory_ratio(const Sequence& seq, std::int64_t B, double T, const PhaseFunction& f) {
    if (seq.norm2() == 0) throw std::domain_error("oscillatory_ratio: zero sequence");
    double lhs = oscillatory_lhs(seq, B, T, f, max_sieve_step(seq, f));
    double bb = static_cast<double>(B);
    return lhs / ((bb * bb * T + f.X(seq.length())) * seq.norm2());
}

}  // namespace spm
