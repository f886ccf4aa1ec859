#pragma once

#include "spm/arith.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spm {

// a_m for m in [N, N + M).
class Sequence {
public:
    Sequence(std::int64_t start, std::vector<cplx> values);

    std::int64_t start() const { return start_; }
    std::int64_t length() const { return static_cast<std::int64_t>(values_.size()); }
    const std::vector<cplx>& values() const { return values_; }
    double norm2() const { return norm2_; }

private:
    std::int64_t start_;
    std::vector<cplx> values_;
    double norm2_;
};

// Real phase on [lo, hi] with a derivative of constant sign.
struct PhaseFunction {
    std::string name;
    std::function<double(double)> f, fprime;
    double lo, hi;

    // Throws std::domain_error if f' vanishes or changes sign at any of the
    // 10 * samples interior points or at the endpoints.
    void validate(std::int64_t samples) const;
    // sup 1 / |f'| over the same sample points
    double X(std::int64_t samples) const;
    PhaseFunction scaled(double c) const;

    static PhaseFunction linear(double lo, double hi);
    static PhaseFunction log_over_2pi(double lo, double hi);
    static PhaseFunction cube_root(double lo, double hi);
};

PhaseFunction phase_on(const std::string& kind, const Sequence& seq);

double farey_lhs(const Sequence& seq, std::int64_t B);
double classical_ratio(const Sequence& seq, std::int64_t B);

// Largest admissible quadrature step: 0.1 / max |f(m) - f(m_mid)|.
double max_sieve_step(const Sequence& seq, const PhaseFunction& f);

double oscillatory_lhs(const Sequence& seq, std::int64_t B, double T, const PhaseFunction& f,
                       double quadrature_step);
double oscillatory_ratio(const Sequence& seq, std::int64_t B, double T, const PhaseFunction& f);

// sum over reduced x/b with b <= B of e(x d / b), i.e. sum_b S(0, d; b)
std::vector<double> farey_kernel(std::int64_t B, std::int64_t max_shift);

}  // namespace spm
