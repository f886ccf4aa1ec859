#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace spm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647693;

// e(x) = exp(2 pi i x)
cplx e(double x);

// Prime factorisation by trial division against a cached prime table.
// Returned as (p, exponent) pairs in increasing p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

int mobius(std::int64_t n);
std::int64_t divisor_count(std::int64_t n);
std::int64_t d3(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t mod(std::int64_t a, std::int64_t c);
std::int64_t inv_mod(std::int64_t x, std::int64_t c);

// exp(2 pi i a / c); a is reduced mod c before the division.
cplx additive_character(std::int64_t a, std::int64_t c);

// Primes up to 2^20, sieved on first use and read-only thereafter.
const std::vector<std::int64_t>& small_primes();

struct FareyFraction {
    std::int64_t numerator;
    std::int64_t modulus;
    bool primitive;

    FareyFraction(std::int64_t num, std::int64_t mod, bool primitive = false);
    double value() const { return static_cast<double>(numerator) / modulus; }
};

// All reduced fractions x/b with b <= B and 0 <= x < b.
std::vector<FareyFraction> farey_fractions(std::int64_t B);

// Neumaier-compensated sum.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        T t = sum_ + x;
        comp_ += abs_ge(sum_, x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(T x) {
        add(x);
        return *this;
    }
    T value() const { return sum_ + comp_; }

private:
    static bool abs_ge(double a, double b) { return std::abs(a) >= std::abs(b); }
    static bool abs_ge(const cplx& a, const cplx& b) { return std::abs(a) >= std::abs(b); }
    T sum_{};
    T comp_{};
};

template <>
inline void CompensatedSum<cplx>::add(cplx x) {
    // componentwise, each part is an independent real sum
    auto part = [](double& s, double& c, double v) {
        double t = s + v;
        c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    };
    double sr = sum_.real(), si = sum_.imag(), cr = comp_.real(), ci = comp_.imag();
    part(sr, cr, x.real());
    part(si, ci, x.imag());
    sum_ = {sr, si};
    comp_ = {cr, ci};
}

}  // namespace spm
