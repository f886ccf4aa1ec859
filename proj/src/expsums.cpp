#include "spm/expsums.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spm {

ExpSumCache::ExpSumCache(std::int64_t r) : r_(r) {
    if (r < 1) throw std::domain_error("ExpSumCache: modulus must be positive");
    roots_.resize(r);
    for (std::int64_t a = 0; a < r; ++a) roots_[a] = additive_character(a, r);
    inv_of_.assign(r, -1);
    for (std::int64_t x = 0; x < r; ++x) {
        if (std::gcd(x, r) != 1) continue;
        std::int64_t y = inv_mod(x, r);
        units_.push_back(x);
        inv_.push_back(y);
        inv_of_[x] = y;
    }
    if (r == 1) {
        // the single residue 0 is a unit mod 1
        units_ = {0};
        inv_ = {0};
        inv_of_ = {0};
    }
}

cplx ExpSumCache::kloosterman(std::int64_t k, std::int64_t n) const {
    std::int64_t kk = mod(k, r_), nn = mod(n, r_);
    CompensatedSum<cplx> s;
    for (std::size_t i = 0; i < units_.size(); ++i)
        s += roots_[(kk * units_[i] + nn * inv_[i]) % r_];
    return s.value();
}

double ExpSumCache::ramanujan(std::int64_t n) const {
    std::int64_t nn = mod(n, r_);
    CompensatedSum<double> s;
    for (std::int64_t x : units_) s += roots_[(nn * x) % r_].real();
    return s.value();
}

cplx ExpSumCache::v_sum(std::int64_t d, std::int64_t m, std::int64_t n) const {
    std::int64_t mm = mod(m, r_), nn = mod(n, r_), dd = mod(d, r_);
    CompensatedSum<cplx> acc;
    for (std::int64_t s = 0; s < r_; ++s) {
        std::int64_t si = inv_of_[s], ti = inv_of_[(dd + s) % r_];
        if (si < 0 || ti < 0) continue;
        acc += roots_[mod(mm * si - nn * ti, r_)];
    }
    return acc.value();
}

cplx kloosterman(std::int64_t k, std::int64_t n, std::int64_t c) {
    return ExpSumCache(c).kloosterman(k, n);
}

double ramanujan(std::int64_t n, std::int64_t r) { return ExpSumCache(r).ramanujan(n); }

cplx v_sum(std::int64_t d, std::int64_t m, std::int64_t n, std::int64_t r) {
    return ExpSumCache(r).v_sum(d, m, n);
}

double poisson_identity_residual(std::int64_t k, std::int64_t m, std::int64_t n, std::int64_t r) {
    ExpSumCache c(r);
    CompensatedSum<cplx> lhs;
    for (std::int64_t a = 0; a < r; ++a) lhs += c.v_sum(-a, m, n) * c.root(a * k);
    return std::abs(lhs.value() - c.kloosterman(k, m) * c.kloosterman(k, n));
}

double poisson_identity_max_residual(std::int64_t r) {
    ExpSumCache c(r);
    std::vector<cplx> S(r * r);  // S(k, m; r) by (k, m)
    for (std::int64_t k = 0; k < r; ++k)
        for (std::int64_t m = 0; m < r; ++m) S[k * r + m] = c.kloosterman(k, m);
    double worst = 0;
    std::vector<cplx> V(r);
    for (std::int64_t m = 0; m < r; ++m)
        for (std::int64_t n = 0; n < r; ++n) {
            for (std::int64_t a = 0; a < r; ++a) V[a] = c.v_sum(-a, m, n);
            for (std::int64_t k = 0; k < r; ++k) {
                CompensatedSum<cplx> lhs;
                for (std::int64_t a = 0; a < r; ++a) lhs += V[a] * c.root(a * k);
                worst = std::max(worst, std::abs(lhs.value() - S[k * r + m] * S[k * r + n]));
            }
        }
    return worst;
}

SigmaPartial sigma_pair(std::int64_t m, std::int64_t n, std::int64_t r_max) {
    if (m < 1 || n < 1 || r_max < 1) throw std::domain_error("sigma_pair: arguments must be positive");
    // S(0, n; r) = sum_{d | (n, r)} d mu(r / d)
    auto c = [](std::int64_t n, std::int64_t r) {
        std::int64_t g = std::gcd(n, r), s = 0;
        for (std::int64_t d : divisors(g)) s += d * mobius(r / d);
        return static_cast<double>(s);
    };
    CompensatedSum<double> acc;
    for (std::int64_t r = 1; r <= r_max; ++r) {
        double a = c(m, r);
        if (a == 0) continue;
        acc += a * c(n, r) / (static_cast<double>(r) * r);
    }
    // (m,r)(n,r) depends on r mod L = lcm(m, n); for each class j the sum over
    // r = r0 + qL is at most 1/r0^2 + 1/(L r0).
    std::int64_t L = std::lcm(m, n);
    double tail = 0;
    for (std::int64_t j = 0; j < L; ++j) {
        std::int64_t r0 = r_max + 1 + mod(j - (r_max + 1), L);
        double g = static_cast<double>(std::gcd(m, r0) * std::gcd(n, r0));
        double x = static_cast<double>(r0);
        tail += g * (1 / (x * x) + 1 / (static_cast<double>(L) * x));
    }
    return {acc.value(), tail};
}

double weil_margin(std::int64_t k, std::int64_t n, std::int64_t c) {
    double g = static_cast<double>(std::gcd(std::gcd(k, n), c));
    double bound = static_cast<double>(divisor_count(c)) * std::sqrt(g) * std::sqrt(static_cast<double>(c));
    return bound - std::abs(kloosterman(k, n, c));
}

double ramanujan_weighted_second_moment(std::int64_t r) {
    ExpSumCache c(r);
    CompensatedSum<double> s;
    for (std::int64_t k = 1; k <= r; ++k) {
        double v = c.ramanujan(k);
        s += v * v / static_cast<double>(k);
    }
    return s.value();
}

}  // namespace spm
