#include "common.hpp"

#include "spm/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spm::suites {

using detail::cj;
using detail::json;
using detail::le;
using detail::record;

Report check_kloosterman(const Options& o, std::int64_t cmax) {
    Report rep;
    struct Example {
        std::int64_t k, n, c;
        double want;
    };
    for (auto [k, n, c, want] : {Example{1, 1, 1, 1}, Example{1, 1, 2, 1}, Example{1, 1, 3, -1}}) {
        cplx v = kloosterman(k, n, c);
        double err = std::abs(v - want);
        rep.add(record("sums", "kloosterman-example-" + std::to_string(k) + "-" + std::to_string(n) + "-" + std::to_string(c),
                       {{"k", k}, {"n", n}, {"c", c}}, {{"value", cj(v)}, {"error", err}}, o.tol(1e-12), le(err, o.tol(1e-12))));
    }
    // real valued, symmetric, and S(k, n; c) = S(1, kn; c) when (k, c) = 1
    for (std::int64_t c = 1; c <= cmax; ++c) {
        ExpSumCache cache(c);
        double worst = 0;
        for (std::int64_t k = 0; k < c; ++k)
            for (std::int64_t n = 0; n < c; ++n) {
                cplx s = cache.kloosterman(k, n);
                worst = std::max({worst, std::abs(s.imag()), std::abs(s - cache.kloosterman(n, k))});
                if (std::gcd(k, c) == 1) worst = std::max(worst, std::abs(s - cache.kloosterman(1, k * n)));
            }
        double bound = o.tol(1e-12 * static_cast<double>(c) * static_cast<double>(c));
        rep.add(record("sums", "kloosterman-c" + std::to_string(c), {{"c", c}}, {{"max_defect", worst}}, bound,
                       le(worst, bound)));
    }
    return rep;
}

Report check_ramanujan_mobius(const Options& o, std::int64_t rmax) {
    Report rep;
    for (std::int64_t r = 1; r <= rmax; ++r) {
        double v = ramanujan(1, r);
        auto rounded = static_cast<std::int64_t>(std::llround(v));
        rep.add(record("sums", "ramanujan-mobius-r" + std::to_string(r), {{"r", r}},
                       {{"value", v}, {"rounded", rounded}}, {{"mobius", mobius(r)}}, rounded == mobius(r)));
    }
    {
        double v = ramanujan(2, 4), phi = ramanujan(0, 12);
        rep.add(record("sums", "ramanujan-example-2-4", {{"n", 2}, {"r", 4}}, {{"value", v}}, {{"expected", -2}},
                       std::abs(v + 2) <= 1e-12));
        rep.add(record("sums", "ramanujan-example-0-12", {{"n", 0}, {"r", 12}}, {{"value", phi}},
                       {{"expected", euler_phi(12)}}, std::abs(phi - static_cast<double>(euler_phi(12))) <= 1e-12));
    }
    // sum_k |c_r(k)|^2 / k against 50 r (1 + ln r)
    double worst = 0;
    std::int64_t worst_r = 1;
    for (std::int64_t r = 1; r <= rmax; ++r) {
        double rr = static_cast<double>(r);
        double ratio = ramanujan_weighted_second_moment(r) / (50 * rr * (1 + std::log(rr)));
        if (ratio > worst) {
            worst = ratio;
            worst_r = r;
        }
    }
    rep.add(record("sums", "ramanujan-second-moment", {{"rmax", rmax}}, {{"max_ratio", worst}, {"at_r", worst_r}},
                   o.tol(1.0), le(worst, o.tol(1.0))));
    double m2 = ramanujan_weighted_second_moment(2);
    rep.add(record("sums", "ramanujan-second-moment-r2", {{"r", 2}}, {{"value", m2}}, {{"expected", 1.5}},
                   std::abs(m2 - 1.5) <= 1e-12));
    return rep;
}

Report check_vsum(const Options& o, std::int64_t rmax) {
    Report rep;
    cplx a = v_sum(-1, 1, 1, 2), b = v_sum(1, 0, 0, 5);
    rep.add(record("sums", "vsum-example-empty", {{"d", -1}, {"m", 1}, {"n", 1}, {"r", 2}}, {{"value", cj(a)}},
                   {{"expected", 0}}, std::abs(a) <= 1e-12));
    rep.add(record("sums", "vsum-example-count", {{"d", 1}, {"m", 0}, {"n", 0}, {"r", 5}}, {{"value", cj(b)}},
                   {{"expected", 3}}, std::abs(b - 3.0) <= 1e-12));
    // V_0(m, n; r) collapses to c_r(m - n)
    for (std::int64_t r = 1; r <= rmax; ++r) {
        ExpSumCache cache(r);
        double worst = 0;
        for (std::int64_t m = 0; m < r; ++m)
            for (std::int64_t n = 0; n < r; ++n)
                worst = std::max(worst, std::abs(cache.v_sum(0, m, n) - cache.ramanujan(m - n)));
        double bound = o.tol(1e-9 * static_cast<double>(r));
        rep.add(record("sums", "vsum-r" + std::to_string(r), {{"r", r}}, {{"max_residual", worst}}, bound,
                       le(worst, bound)));
    }
    return rep;
}

Report check_poisson(const Options& o, std::int64_t rmax) {
    Report rep;
    for (std::int64_t r = 1; r <= rmax; ++r) {
        double res = poisson_identity_max_residual(r), bound = o.tol(1e-9 * static_cast<double>(r));
        rep.add(record("sums", "poisson-r" + std::to_string(r), {{"r", r}}, {{"max_residual", res}}, bound,
                       le(res, bound)));
    }
    struct Example {
        std::int64_t k, m, n, r;
    };
    for (auto [k, m, n, r] : {Example{1, 1, 1, 2}, Example{3, 5, 7, 12}}) {
        double res = poisson_identity_residual(k, m, n, r), bound = o.tol(1e-9 * static_cast<double>(r));
        rep.add(record("sums", "poisson-example-" + std::to_string(k) + "-" + std::to_string(m) + "-" +
                                   std::to_string(n) + "-" + std::to_string(r),
                       {{"k", k}, {"m", m}, {"n", n}, {"r", r}}, {{"residual", res}}, bound, le(res, bound)));
    }
    return rep;
}

Report check_weil(const Options& o, std::int64_t cmax, int per_decade) {
    Report rep;
    struct Example {
        std::int64_t k, n, c;
    };
    for (auto [k, n, c] : {Example{1, 1, 2}, Example{0, 0, 36}, Example{5, 7, 101}}) {
        double m = weil_margin(k, n, c);
        rep.add(record("sums", "weil-example-" + std::to_string(k) + "-" + std::to_string(n) + "-" + std::to_string(c),
                       {{"k", k}, {"n", n}, {"c", c}}, {{"margin", m}}, {{"min", 0}}, m > 0));
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> decades;
    for (std::int64_t lo = 1; lo <= cmax; lo *= 10) decades.emplace_back(lo, std::min(cmax, 10 * lo - 1));
    for (auto [lo, hi] : decades) {
        std::string id = "weil-c" + std::to_string(lo) + "-" + std::to_string(hi);
        auto rng = case_rng(o.seed, id);
        std::uniform_int_distribution<std::int64_t> cd(lo, hi), kd(-1000000, 1000000);
        double worst = 1e300;
        std::int64_t wk = 0, wn = 0, wc = 0;
        for (int i = 0; i < per_decade; ++i) {
            std::int64_t c = cd(rng), k = kd(rng), n = kd(rng);
            // relative to the bound, so a rounding-level shortfall is visible as such
            double g = static_cast<double>(std::gcd(std::gcd(k, n), c));
            double bound = static_cast<double>(divisor_count(c)) * std::sqrt(g * static_cast<double>(c));
            double rel = weil_margin(k, n, c) / bound;
            if (rel < worst) {
                worst = rel;
                wk = k, wn = n, wc = c;
            }
        }
        rep.add(record("sums", id, {{"c_range", {lo, hi}}, {"samples", per_decade}},
                       {{"min_relative_margin", worst}, {"at", {wk, wn, wc}}}, {{"min", -1e-9}}, worst >= -1e-9));
    }
    return rep;
}

Report check_sigma(const Options& o, std::int64_t rmax) {
    Report rep;
    const double target = 15 / (kPi * kPi);
    SigmaPartial one = sigma_pair(1, 1, 1);
    rep.add(record("sums", "sigma-example-1-1-1", {{"m", 1}, {"n", 1}, {"r_max", 1}}, {{"value", one.value}},
                   {{"expected", 1}}, one.value == 1));
    SigmaPartial s = sigma_pair(1, 1, rmax);
    double gap = target - s.value;
    json in = {{"m", 1}, {"n", 1}, {"r_max", rmax}};
    // certified bracket: partial <= 15/pi^2 <= partial + tail
    rep.add(record("sums", "sigma-bracket", in, {{"partial", s.value}, {"tail_bound", s.tail_bound}, {"gap", gap}},
                   {{"target", target}}, gap >= 0 && gap <= s.tail_bound));
    // the tail is sum_{r > R} mu(r)^2 / r^2 ~ (6/pi^2) / R, so the gap times R settles near 6/pi^2
    double scaled = gap * static_cast<double>(rmax), predicted = 6 / (kPi * kPi);
    rep.add(record("sums", "sigma-tail-rate", in, {{"gap_times_rmax", scaled}}, {{"predicted", predicted}, {"rel", 0.05}},
                   std::abs(scaled - predicted) <= 0.05 * predicted));
    // within 1e-6 at this r_max is out of reach: the gap itself is about 6/(pi^2 r_max)
    rep.add(record("sums", "sigma-within-1e-6", in, {{"gap", gap}}, o.tol(1e-6), le(gap, o.tol(1e-6)), false));
    return rep;
}

}  // namespace spm::suites
