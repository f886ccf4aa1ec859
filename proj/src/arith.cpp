#include "spm/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spm {

cplx e(double x) {
    double r = x - std::floor(x);
    return {std::cos(kTwoPi * r), std::sin(kTwoPi * r)};
}

namespace {

constexpr std::int64_t kSieveLimit = 1 << 20;

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + ": argument must be positive");
}

}  // namespace

const std::vector<std::int64_t>& small_primes() {
    static const std::vector<std::int64_t> primes = [] {
        std::vector<char> comp(kSieveLimit + 1, 0);
        std::vector<std::int64_t> ps;
        for (std::int64_t i = 2; i <= kSieveLimit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (std::int64_t j = i * i; j <= kSieveLimit; j += i) comp[j] = 1;
        }
        return ps;
    }();
    return primes;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    require_positive(n, "factorize");
    std::vector<std::pair<std::int64_t, int>> f;
    auto take = [&](std::int64_t p) {
        int k = 0;
        while (n % p == 0) n /= p, ++k;
        if (k) f.emplace_back(p, k);
    };
    for (std::int64_t p : small_primes()) {
        if (p * p > n) break;
        take(p);
    }
    // beyond the table (n > 2^40): plain odd trial division
    for (std::int64_t p = kSieveLimit + 1; p * p <= n; p += 2) take(p);
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int mobius(std::int64_t n) {
    require_positive(n, "mobius");
    int m = 1;
    for (auto [p, k] : factorize(n)) {
        if (k > 1) return 0;
        m = -m;
    }
    return m;
}

std::int64_t divisor_count(std::int64_t n) {
    require_positive(n, "divisor_count");
    std::int64_t d = 1;
    for (auto [p, k] : factorize(n)) d *= k + 1;
    return d;
}

std::int64_t d3(std::int64_t n) {
    require_positive(n, "d3");
    std::int64_t d = 1;
    for (auto [p, k] : factorize(n)) d *= static_cast<std::int64_t>(k + 1) * (k + 2) / 2;
    return d;
}

std::int64_t euler_phi(std::int64_t n) {
    require_positive(n, "euler_phi");
    std::int64_t r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> ds{1};
    for (auto [p, k] : factorize(n)) {
        std::size_t sz = ds.size();
        std::int64_t pk = 1;
        for (int j = 1; j <= k; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::int64_t mod(std::int64_t a, std::int64_t c) {
    std::int64_t r = a % c;
    return r < 0 ? r + c : r;
}

std::int64_t inv_mod(std::int64_t x, std::int64_t c) {
    require_positive(c, "inv_mod");
    if (c == 1) return 0;
    std::int64_t a = mod(x, c), b = c, u = 1, v = 0;
    while (b) {
        std::int64_t q = a / b;
        a -= q * b, std::swap(a, b);
        u -= q * v, std::swap(u, v);
    }
    if (a != 1) throw std::domain_error("inv_mod: argument not invertible");
    return mod(u, c);
}

cplx additive_character(std::int64_t a, std::int64_t c) {
    require_positive(c, "additive_character");
    std::int64_t r = mod(a, c);
    if (r == 0) return {1.0, 0.0};
    // exact at the quarter points
    if (4 * r == c) return {0.0, 1.0};
    if (2 * r == c) return {-1.0, 0.0};
    if (4 * r == 3 * c) return {0.0, -1.0};
    double th = kTwoPi * static_cast<double>(r) / static_cast<double>(c);
    return {std::cos(th), std::sin(th)};
}

FareyFraction::FareyFraction(std::int64_t num, std::int64_t m, bool prim)
    : numerator(num), modulus(m), primitive(prim) {
    if (m < 1) throw std::domain_error("FareyFraction: modulus must be positive");
    if (num < 0 || num >= m) throw std::domain_error("FareyFraction: numerator out of range");
    if (prim && std::gcd(num, m) != 1)
        throw std::domain_error("FareyFraction: primitive fraction not reduced");
}

std::vector<FareyFraction> farey_fractions(std::int64_t B) {
    std::vector<FareyFraction> out;
    for (std::int64_t b = 1; b <= B; ++b)
        for (std::int64_t x = 0; x < b; ++x)
            if (std::gcd(x, b) == 1) out.emplace_back(x, b, true);
    return out;
}

}  // namespace spm
