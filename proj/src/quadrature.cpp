#include "spm/quadrature.hpp"

#include "spm/arith.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spm {

namespace {

GaussRule build(int n) {
    GaussRule g;
    g.x.resize(n);
    g.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        double w = 2 / ((1 - x * x) * dp * dp);
        g.x[i] = -x;
        g.x[n - 1 - i] = x;
        g.w[i] = g.w[n - 1 - i] = w;
    }
    return g;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    if (order < 2 || order > 200) throw std::invalid_argument("gauss_legendre: order out of range");
    static std::mutex m;
    static std::map<int, GaussRule> rules;
    std::lock_guard<std::mutex> lock(m);
    auto it = rules.find(order);
    if (it == rules.end()) it = rules.emplace(order, build(order)).first;
    return it->second;
}

}  // namespace spm
