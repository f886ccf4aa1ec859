#include "spm/oracles.hpp"

#include <stdexcept>

namespace spm::oracle {

namespace {
constexpr std::int64_t kCap = 100000;
}

std::vector<double> dirichlet_convolve(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dirichlet_convolve: length mismatch");
    auto n_cap = static_cast<std::int64_t>(a.size()) - 1;
    if (n_cap > kCap) throw std::domain_error("dirichlet_convolve: n_cap above 10^5");
    std::vector<double> c(a.size(), 0.0);
    for (std::int64_t n = 1; n <= n_cap; ++n)
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) c[n] += a[d] * b[n / d];
    return c;
}

std::vector<double> d3_table(std::int64_t n_cap) {
    if (n_cap > kCap) throw std::domain_error("d3_table: n_cap above 10^5");
    std::vector<double> one(n_cap + 1, 1.0);
    one[0] = 0;
    // sieve-style convolution; the trial-division form above is quadratic
    std::vector<double> d2(n_cap + 1, 0.0), d3(n_cap + 1, 0.0);
    for (std::int64_t a = 1; a <= n_cap; ++a)
        for (std::int64_t m = a; m <= n_cap; m += a) d2[m] += one[a] * one[m / a];
    for (std::int64_t a = 1; a <= n_cap; ++a)
        for (std::int64_t m = a; m <= n_cap; m += a) d3[m] += d2[a] * one[m / a];
    return d3;
}

std::int64_t d3_prime_powers(std::int64_t n) {
    if (n < 1) throw std::domain_error("d3_prime_powers: n must be positive");
    std::int64_t r = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        std::int64_t e = 0;
        while (n % p == 0) n /= p, ++e;
        r *= (e + 1) * (e + 2) / 2;
    }
    if (n > 1) r *= 3;
    return r;
}

double gl3_eisenstein_A(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw std::domain_error("gl3_eisenstein_A: indices must be positive");
    double r = 1;
    for (std::int64_t p = 2; p <= std::max(m, n); ++p) {
        if (m == 1 && n == 1) break;
        bool prime = true;
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        std::int64_t a = 0, b = 0;
        while (m % p == 0) m /= p, ++a;
        while (n % p == 0) n /= p, ++b;
        // Schur polynomial s_{(a+b, b)} at (1, 1, 1)
        r *= static_cast<double>((a + 1) * (b + 1) * (a + b + 2)) / 2;
    }
    return r;
}

}  // namespace spm::oracle
