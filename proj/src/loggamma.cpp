#include "spm/loggamma.hpp"

#include <cmath>
#include <stdexcept>

namespace spm {

cplx log_gamma(cplx z) {
    if (z.real() <= 0.5) {
        double k = std::round(z.real());
        if (k <= 0 && std::abs(z - k) < 1e-8) throw std::domain_error("log_gamma: too close to a pole");
    }
    // B_{2k} / (2k (2k - 1))
    static const double c[] = {1.0 / 12,         -1.0 / 360,        1.0 / 1260,       -1.0 / 1680,
                               1.0 / 1188,       -691.0 / 360360,   1.0 / 156,        -3617.0 / 122400,
                               43867.0 / 244188, -174611.0 / 125400};
    cplx shift = 0;
    while (z.real() < 15) {
        shift += std::log(z);
        z += 1.0;
    }
    cplx zi = 1.0 / z, zi2 = zi * zi, series = 0, p = zi;
    for (double ck : c) {
        series += ck * p;
        p *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift;
}

}  // namespace spm
