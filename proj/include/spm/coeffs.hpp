#pragma once

#include "spm/afe.hpp"
#include "spm/sieve.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace spm {

struct GL2Form {
    double t;
    Parity parity;
    double alpha;
    bool alpha_present = true;
    std::vector<double> lambda;  // lambda[n - 1] = lambda(n)

    std::int64_t n_max() const { return static_cast<std::int64_t>(lambda.size()); }
    double operator()(std::int64_t n) const;
    // lambda(n) for any n whose prime factors are <= n_max, by Hecke multiplicativity
    double extended(std::int64_t n) const;
    // lambda(n) from lambda(p) alone
    double from_primes(std::int64_t n) const;

    // Worst |lambda(m) lambda(n) - sum_{d | (m,n)} lambda(mn/d^2)| over mn <= n_max,
    // with the offending pair.
    struct HeckeDefect {
        double value;
        std::int64_t m, n;
    };
    HeckeDefect hecke_defect() const;

    // Copy with lambda(n) rebuilt multiplicatively from lambda(p), so the Hecke
    // relations hold to rounding rather than to the table's accuracy.
    GL2Form hecke_closed() const;
};

struct SpectralDataset {
    std::vector<GL2Form> forms;
    double t_max_complete;
    std::int64_t n_max;
    std::vector<std::string> warnings;

    std::vector<const GL2Form*> up_to(double T, bool include_odd) const;
};

// One JSON object per line; the first is the header {t_max_complete, n_max}.
// Validates lambda(1) = 1, sorted t, uniform n_max and the Hecke relations to 1e-6.
SpectralDataset load_dataset(const std::string& path);

class GL3Coefficients {
public:
    enum class Model { D3Eisenstein, SymSquare, FileTable };

    static GL3Coefficients d3_model(std::int64_t max_index);
    // A(1, n) = sum_{d^2 | n} lambda((n/d^2)^2); needs lambda at primes <= max_index
    static GL3Coefficients sym_square(const GL2Form& form, std::int64_t max_index);
    // CSV lines "m,n,A"; missing (m, n) within range is a coverage error
    static GL3Coefficients file_table(const std::string& path);

    Model model() const { return model_; }
    std::string model_name() const;
    // GL(3) type feeding the gamma factors; file tables default to the minimal type
    const GL3Spectral& type() const { return type_; }
    void set_type(const GL3Spectral& nu) { type_ = nu; }

    std::int64_t m_max() const { return m_max_; }
    std::int64_t n_max() const { return n_max_; }

    // A(m, n) = sum_{d | (m,n)} mu(d) A(m/d, 1) A(1, n/d) for the recursive models
    double operator()(std::int64_t m, std::int64_t n) const;

private:
    Model model_ = Model::D3Eisenstein;
    GL3Spectral type_ = GL3Spectral::minimal_eisenstein();
    std::int64_t m_max_ = 0, n_max_ = 0;
    std::vector<double> row_;  // A(1, n), n = 1..n_max, equal to A(n, 1) here
    std::map<std::pair<std::int64_t, std::int64_t>, double> table_;
};

double hecke_A(std::int64_t m, std::int64_t n, const GL3Coefficients& c);

// |A(m,1) A(1,n) - sum_{d | (m,n)} A(m/d, n/d)| maximised over m, n <= bound
double gl3_hecke_defect(const GL3Coefficients& c, std::int64_t bound);

// sum over m^2 k = n of lambda(k) A(m, k)
double rankin_coeff(std::int64_t n, const std::function<double(std::int64_t)>& lambda, const GL3Coefficients& A);

// Dirichlet coefficients of L(s)^3 and of the right side of
//   L(s)^3 = sum_{a,b} mu(a) d3(b) (ab)^{-2s} sum_n d3(n) lambda(an) (an)^{-s}
// for n <= n_max, index 0 unused.
template <typename V>
struct CubeCoefficients {
    std::vector<V> lhs, rhs;
};

template <typename V>
CubeCoefficients<V> cube_coefficients(const std::function<V(std::int64_t)>& lambda, std::int64_t n_max) {
    CubeCoefficients<V> c{std::vector<V>(n_max + 1, V{}), std::vector<V>(n_max + 1, V{})};
    std::vector<V> sq(n_max + 1, V{});
    for (std::int64_t x = 1; x <= n_max; ++x)
        for (std::int64_t y = 1; x * y <= n_max; ++y) sq[x * y] += lambda(x) * lambda(y);
    for (std::int64_t x = 1; x <= n_max; ++x)
        for (std::int64_t z = 1; x * z <= n_max; ++z) c.lhs[x * z] += sq[x] * lambda(z);
    for (std::int64_t a = 1; a * a * a <= n_max; ++a) {
        int mu = mobius(a);
        if (mu == 0) continue;
        for (std::int64_t b = 1; a * a * a * b * b <= n_max; ++b) {
            std::int64_t head = a * a * a * b * b;
            V f = static_cast<V>(mu * d3(b));
            for (std::int64_t n = 1; head * n <= n_max; ++n)
                c.rhs[head * n] += f * static_cast<V>(d3(n)) * lambda(a * n);
        }
    }
    return c;
}

struct CubeResidual {
    double coefficient;  // max_n |lhs_n - rhs_n|, n <= coeff_max
    double series;       // |sum_{n <= n_cap} (lhs_n - rhs_n) n^-s| with each side summed separately
    double lhs, rhs;
    double tail_bound;   // 50 / n_cap
};

CubeResidual cube_identity_residual(const std::function<double(std::int64_t)>& lambda, cplx s,
                                    std::int64_t n_cap, std::int64_t coeff_max);

// a_n = n^{-1/2} w2(n/N) d3(n/a) if a | n, on (N, 2N]
Sequence sixth_coeff_sequence(std::int64_t a, std::int64_t N);

// w2(x) = eta(4(x - 1)) eta(4(2 - x)), supported on [9/8, 15/8]
double window_w2(double x);

// Dyadic increments of sum_{n <= N} |A(1, n)|^2 / n for N = 2^k <= bound.
std::vector<double> rankin_selberg_increments(const GL3Coefficients& c, std::int64_t bound);

}  // namespace spm
