#pragma once

#include "spm/arith.hpp"

#include <cstdint>
#include <vector>

namespace spm {

// Units mod r with their inverses and the table of r-th roots of unity.
class ExpSumCache {
public:
    explicit ExpSumCache(std::int64_t r);

    std::int64_t modulus() const { return r_; }
    const std::vector<std::int64_t>& units() const { return units_; }
    const std::vector<std::int64_t>& inverses() const { return inv_; }

    // e(a / r)
    cplx root(std::int64_t a) const { return roots_[mod(a, r_)]; }

    cplx kloosterman(std::int64_t k, std::int64_t n) const;
    double ramanujan(std::int64_t n) const;
    cplx v_sum(std::int64_t d, std::int64_t m, std::int64_t n) const;

private:
    std::int64_t r_;
    std::vector<std::int64_t> units_, inv_;
    std::vector<std::int64_t> inv_of_;  // inverse by residue, -1 if not a unit
    std::vector<cplx> roots_;
};

// S(k, n; c) = sum over x mod c, (x, c) = 1, of e((k x + n xbar) / c)
cplx kloosterman(std::int64_t k, std::int64_t n, std::int64_t c);

// S(0, n; r)
double ramanujan(std::int64_t n, std::int64_t r);

// V_d(m, n; r) = sum over s mod r, (s (d + s), r) = 1, of e((m sbar - n (d+s)bar) / r)
cplx v_sum(std::int64_t d, std::int64_t m, std::int64_t n, std::int64_t r);

// |sum_a V_{-a}(m, n; r) e(a k / r) - S(k, m; r) S(k, n; r)|
double poisson_identity_residual(std::int64_t k, std::int64_t m, std::int64_t n, std::int64_t r);

// Largest residual over all (k, m, n) mod r.
double poisson_identity_max_residual(std::int64_t r);

struct SigmaPartial {
    double value;       // sum_{r <= r_max} r^-2 S(0,m;r) S(0,n;r)
    double tail_bound;  // sum_{r > r_max} (m,r)(n,r) / r^2, bounded above
};

SigmaPartial sigma_pair(std::int64_t m, std::int64_t n, std::int64_t r_max);

// d(c) (k,n,c)^{1/2} c^{1/2} - |S(k,n;c)|
double weil_margin(std::int64_t k, std::int64_t n, std::int64_t c);

// sum_{1 <= k <= r} |S(0,k;r)|^2 / k
double ramanujan_weighted_second_moment(std::int64_t r);

}  // namespace spm
