#include "spm/oracles.hpp"

#include "spm/sieve.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spm::oracle {

namespace {

constexpr std::int64_t kCap = 10000;

void check_modulus(std::int64_t r) {
    if (r < 1 || r > kCap) throw std::domain_error("oracle: modulus outside [1, 10^4]");
}

cplx root(std::int64_t a, std::int64_t r) {
    std::int64_t x = ((a % r) + r) % r;
    return std::polar(1.0, 2 * M_PI * static_cast<double>(x) / static_cast<double>(r));
}

// inverse by scanning; returns -1 for non-units
std::int64_t inverse(std::int64_t x, std::int64_t r) {
    x = ((x % r) + r) % r;
    if (r == 1) return 0;
    for (std::int64_t y = 1; y < r; ++y)
        if (x * y % r == 1) return y;
    return -1;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

OracleResult kloosterman(std::int64_t k, std::int64_t n, std::int64_t c) {
    check_modulus(c);
    cplx s = 0;
    std::int64_t cost = 0;
    for (std::int64_t x = 0; x < c; ++x) {
        if (gcd(x, c) != 1) continue;
        s += root(k * x + n * inverse(x, c), c);
        ++cost;
    }
    return {s, "enumeration", cost};
}

OracleResult ramanujan(std::int64_t n, std::int64_t r) { return kloosterman(0, n, r); }

double ramanujan_divisor_form(std::int64_t n, std::int64_t r) {
    std::int64_t g = gcd(n, r);
    if (n == 0) g = r;
    double s = 0;
    for (std::int64_t d = 1; d <= g; ++d)
        if (g % d == 0) s += static_cast<double>(d) * mobius(r / d);
    return s;
}

double ramanujan_von_sterneck(std::int64_t n, std::int64_t r) {
    std::int64_t g = n == 0 ? r : gcd(n, r);
    return static_cast<double>(mobius(r / g)) * static_cast<double>(euler_phi(r)) /
           static_cast<double>(euler_phi(r / g));
}

OracleResult v_sum(std::int64_t d, std::int64_t m, std::int64_t n, std::int64_t r) {
    check_modulus(r);
    cplx s = 0;
    std::int64_t cost = 0;
    for (std::int64_t x = 0; x < r; ++x) {
        if (gcd(x, r) != 1 || gcd(d + x, r) != 1) continue;
        s += root(m * inverse(x, r) - n * inverse(d + x, r), r);
        ++cost;
    }
    return {s, "enumeration", cost};
}

OracleResult poisson_lhs(std::int64_t k, std::int64_t m, std::int64_t n, std::int64_t r) {
    check_modulus(r);
    cplx s = 0;
    std::int64_t cost = 0;
    for (std::int64_t a = 0; a < r; ++a) {
        OracleResult v = v_sum(-a, m, n, r);
        s += v.value * root(a * k, r);
        cost += v.cost;
    }
    return {s, "enumeration", cost};
}

OracleResult sigma_partial(std::int64_t m, std::int64_t n, std::int64_t r_max) {
    double s = 0;
    // smallest terms first
    for (std::int64_t r = r_max; r >= 1; --r) {
        double rr = static_cast<double>(r);
        s += ramanujan_von_sterneck(m, r) * ramanujan_von_sterneck(n, r) / (rr * rr);
    }
    return {s, "enumeration", r_max};
}

OracleResult farey_lhs(const Sequence& seq, std::int64_t B) {
    double total = 0;
    std::int64_t cost = 0;
    for (std::int64_t b = 1; b <= B; ++b)
        for (std::int64_t a = 0; a < b; ++a) {
            if (gcd(a, b) != 1) continue;
            cplx s = 0;
            for (std::int64_t i = 0; i < seq.length(); ++i) {
                double ph = 2 * M_PI * static_cast<double>(a) * static_cast<double>(seq.start() + i) / static_cast<double>(b);
                s += seq.values()[i] * cplx(std::cos(ph), std::sin(ph));
                ++cost;
            }
            total += std::norm(s);
        }
    return {total, "enumeration", cost};
}

double farey_kernel(std::int64_t B, std::int64_t d) {
    double s = 0;
    for (std::int64_t b = 1; b <= B; ++b)
        for (std::int64_t a = 0; a < b; ++a)
            if (gcd(a, b) == 1) s += std::cos(2 * M_PI * static_cast<double>(a * d % b) / static_cast<double>(b));
    return s;
}

OracleResult oscillatory_lhs(const Sequence& seq, std::int64_t B, double T, const PhaseFunction& f) {
    const std::int64_t M = seq.length();
    std::vector<double> F(M);
    for (std::int64_t d = 0; d < M; ++d) F[d] = farey_kernel(B, d);
    std::vector<double> g(M);
    for (std::int64_t i = 0; i < M; ++i) g[i] = f.f(static_cast<double>(seq.start() + i));
    const auto& a = seq.values();
    double s = 0;
    for (std::int64_t i = 0; i < M; ++i)
        for (std::int64_t j = 0; j < M; ++j) {
            double D = g[i] - g[j];
            // int_{-T}^{T} e(tD) dt
            double k = std::abs(D) < 1e-300 ? 2 * T : std::sin(2 * M_PI * T * D) / (M_PI * D);
            // k and F are even, so the imaginary parts cancel in pairs
            s += (a[i] * std::conj(a[j])).real() * F[std::abs(i - j)] * k;
        }
    return {s, "enumeration", M * M};
}

}  // namespace spm::oracle
