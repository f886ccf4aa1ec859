#pragma once

// Brute-force references for the test surface. Nothing here reuses the
// production kernels beyond the integer primitives of spm/arith.hpp.

#include "spm/arith.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spm {
class Sequence;
struct PhaseFunction;
}  // namespace spm

namespace spm::oracle {

struct OracleResult {
    cplx value;
    std::string method;  // enumeration | dense-quadrature | convolution | root-find
    std::int64_t cost;   // terms or nodes
};

// ---- enumeration (moduli capped at 10^4)

OracleResult kloosterman(std::int64_t k, std::int64_t n, std::int64_t c);
OracleResult ramanujan(std::int64_t n, std::int64_t r);
// c_r(n) = sum_{d | (n, r)} d mu(r/d)
double ramanujan_divisor_form(std::int64_t n, std::int64_t r);
// c_r(n) = mu(r/g) phi(r) / phi(r/g), g = (n, r)
double ramanujan_von_sterneck(std::int64_t n, std::int64_t r);
OracleResult v_sum(std::int64_t d, std::int64_t m, std::int64_t n, std::int64_t r);
// sum_{a mod r} V_{-a}(m, n; r) e(ak/r), each V by enumeration
OracleResult poisson_lhs(std::int64_t k, std::int64_t m, std::int64_t n, std::int64_t r);
// sum_{r <= r_max} r^-2 c_r(m) c_r(n)
OracleResult sigma_partial(std::int64_t m, std::int64_t n, std::int64_t r_max);

// sum_{b <= B} sum_{a mod b, (a,b) = 1} |sum_m a_m e(am/b)|^2
OracleResult farey_lhs(const Sequence& seq, std::int64_t B);
// sum_{b <= B} sum_{(a,b)=1} e(ad/b)
double farey_kernel(std::int64_t B, std::int64_t d);
// The t-integral over [-T, T] done exactly: sum_{m,n} b_m conj(b_n) F(m-n) sin(2 pi T D)/(pi D)
OracleResult oscillatory_lhs(const Sequence& seq, std::int64_t B, double T, const PhaseFunction& f);

// ---- quadrature

// Composite 20-point Gauss-Legendre (Boost) with the given number of panels.
OracleResult dense_quadrature(const std::function<cplx(double)>& f, double a, double b, std::int64_t panels);

// W_{A,B}(x) with the oscillatory tail from Ooura's double-exponential rule:
// W = |x| int s^-2 eta(s/A) e^{-|x|/s} e(-s/B) ds
OracleResult w_ab(double x, double A, double B);
// 2 int_0^X W(x) cos(2 pi u x) dx from a table of W values; W supplied by the caller
std::vector<cplx> fourier_transform_even(const std::function<cplx(double)>& W, const std::vector<double>& us,
                                         double x_max, std::int64_t panels);
// (1/pi) int_{-V}^{V} e(xv) / (1 + v^2) dv
OracleResult cauchy_integral(double x, double v_cut);

// Root of f'(y) = uN/(rT) + (Nx)^{1/3} y^{-2/3} by TOMS 748 (u < 0)
OracleResult stationary_root(double x, double u, double N, double r, double T);
// (Nx)^{2/3} int w3(y) y^{-1/3} e(f(y)) dy by adaptive Gauss-Kronrod on many panels
OracleResult phase_integral(double x, double u, double N, double r, double T, const std::function<double(double)>& w3);

// (1/4 pi) int_{-t_cut}^{t_cut} w(t) |sum a_n eta_t(n) n^{it}|^2 dt, eta from explicit (a, b) pairs
OracleResult t_continuous(const Sequence& seq, double T, double t_cut);
// T sum_{r < X} (1/r) sum_k (1/|k|) int_{-U}^{U} |sum_n a_n S(k,n;r) e(un/(rT))|^2 du with a numeric u-integral
OracleResult s1_direct(const Sequence& seq, double X, double T, double U);

// ---- convolution (n_cap <= 10^5)

std::vector<double> dirichlet_convolve(const std::vector<double>& a, const std::vector<double>& b);
// (1 * 1 * 1)(n) for n <= n_cap, index 0 unused
std::vector<double> d3_table(std::int64_t n_cap);
// prod over p^e || n of C(e+2, 2)
std::int64_t d3_prime_powers(std::int64_t n);
// A(m, n) of the minimal Eisenstein series: prod_p (a+1)(b+1)(a+b+2)/2 with p^a || m, p^b || n
double gl3_eisenstein_A(std::int64_t m, std::int64_t n);

// ---- special functions

// Lanczos (g = 7, 9 terms) with reflection
cplx log_gamma(cplx z);
// Euler-Maclaurin with N = 60 and 20 Bernoulli corrections
cplx zeta(cplx s);

}  // namespace spm::oracle
