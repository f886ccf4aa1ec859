#pragma once

#include <vector>

namespace spm {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> x, w;
};

// Cached per order; built once by Newton iteration on P_n.
const GaussRule& gauss_legendre(int order);

// Composite Gauss-Legendre over [a, b] split into `panels` equal pieces.
template <typename F>
auto integrate_panels(F&& f, double a, double b, int panels, int order = 20) {
    const GaussRule& g = gauss_legendre(order);
    using R = decltype(f(a));
    R total{};
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h, mid = lo + 0.5 * h;
        R s{};
        for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(mid + 0.5 * h * g.x[i]);
        total += 0.5 * h * s;
    }
    return total;
}

}  // namespace spm
