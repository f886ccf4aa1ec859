#include "spm/oracles.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include <array>
#include <cmath>

namespace spm::oracle {

cplx log_gamma(cplx z) {
    static const std::array<double, 9> c{0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                         771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                         -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z), continued along the branch
        // of the principal log Gamma for Im z != 0
        cplx s = std::sin(M_PI * z);
        return std::log(M_PI) - std::log(s) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    cplx x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx zeta(cplx s) {
    const int N = 60;
    cplx sum = 0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    double Nd = N;
    cplx NS = std::exp(-s * std::log(Nd));
    sum += NS * Nd / (s - 1.0) + 0.5 * NS;
    // sum_k B_2k / (2k)! s (s+1) ... (s + 2k - 2) N^{-s-2k+1}
    cplx rising = s;
    cplx power = NS / Nd;
    for (int k = 1; k <= 20; ++k) {
        double b = boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(2 * k);
        sum += b * rising * power;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        power /= Nd * Nd;
    }
    return sum;
}

}  // namespace spm::oracle
