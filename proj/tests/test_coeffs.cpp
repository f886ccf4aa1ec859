#include "doctest.h"

#include "spm/coeffs.hpp"
#include "spm/oracles.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

using namespace spm;

namespace {

const SpectralDataset& dataset() {
    static const SpectralDataset ds = load_dataset(SPM_DATASET);
    return ds;
}

std::string scratch_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("spm-test-" + name);
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST_CASE("bundled dataset") {
    const SpectralDataset& ds = dataset();
    std::size_t even = 0, odd = 0;
    for (const auto& f : ds.forms) (f.parity == Parity::Even ? even : odd)++;
    CHECK(even >= 20);
    CHECK(odd >= 10);
    CHECK(ds.n_max == 2000);
    for (const auto& f : ds.forms) CHECK(f.hecke_defect().value <= 1e-6);
    CHECK(ds.up_to(20, false).size() < ds.up_to(20, true).size());
    CHECK_THROWS_AS(ds.up_to(ds.t_max_complete + 1, true), std::domain_error);
}

TEST_CASE("dataset errors") {
    CHECK_THROWS(load_dataset("/nonexistent/maass.jsonl"));
    CHECK_THROWS(load_dataset(scratch_file("empty.jsonl", "{\"t_max_complete\": 10, \"n_max\": 3}\n")));
    CHECK_THROWS(load_dataset(scratch_file("lambda1.jsonl", "{\"t_max_complete\": 10, \"n_max\": 3}\n"
                                                            "{\"t\": 9.5, \"parity\": \"odd\", \"lambda\": [0.9, 0, 0]}\n")));
    CHECK_THROWS(load_dataset(scratch_file("garbage.jsonl", "{\"t_max_complete\": 10, \"n_max\": 3}\n{t: 1}\n")));
    auto ds = load_dataset(scratch_file("noalpha.jsonl", "{\"t_max_complete\": 10, \"n_max\": 3}\n"
                                                         "{\"t\": 9.5, \"parity\": \"odd\", \"lambda\": [1, 0.5, 0.25]}\n"));
    CHECK(ds.forms.at(0).alpha == 1.0);
    CHECK(ds.warnings.size() == 1);
}

TEST_CASE("GL2 multiplicativity") {
    const GL2Form& f = dataset().forms.front();
    for (std::int64_t n = 1; n <= 2000; ++n) CHECK(std::abs(f.from_primes(n) - f(n)) <= 1e-6);
    CHECK(f.extended(2 * 1999) == doctest::Approx(f(2) * f(1999)));
    CHECK_THROWS_AS(f(2001), std::out_of_range);
    GL2Form g = f.hecke_closed();
    CHECK(g.hecke_defect().value <= 1e-11);
}

TEST_CASE("d3 model") {
    auto A = GL3Coefficients::d3_model(200);
    for (std::int64_t n = 1; n <= 200; ++n) CHECK(hecke_A(1, n, A) == static_cast<double>(d3(n)));
    CHECK(hecke_A(2, 2, A) == 8);
    CHECK(hecke_A(2, 1, A) * hecke_A(1, 2, A) == hecke_A(2, 2, A) + hecke_A(1, 1, A));
    CHECK(gl3_hecke_defect(A, 50) == 0);
    for (std::int64_t m = 1; m <= 30; ++m)
        for (std::int64_t n = 1; n <= 30; ++n) {
            CHECK(A(m, n) == A(n, m));
            CHECK(A(m, n) == oracle::gl3_eisenstein_A(m, n));
        }
    // coprime parts multiply
    CHECK(A(4 * 9, 2 * 5) == A(4, 2) * A(9, 5));
    CHECK(A(8, 27) == A(8, 1) * A(1, 27));
}

TEST_CASE("symmetric-square model") {
    const GL2Form& f = dataset().forms.front();
    auto A = GL3Coefficients::sym_square(f.hecke_closed(), 400);
    CHECK(A.model_name() == "sym-square");
    CHECK(A(1, 1) == doctest::Approx(1));
    // A(1, p) = lambda(p)^2 - 1
    for (std::int64_t p : {2, 3, 5, 7, 11, 97}) CHECK(A(1, p) == doctest::Approx(f(p) * f(p) - 1).epsilon(1e-9));
    CHECK(gl3_hecke_defect(A, 20) <= 1e-8);
    auto inc = rankin_selberg_increments(A, 256);
    CHECK(!inc.empty());
    for (double v : inc) CHECK(v > 0);
}

TEST_CASE("rankin coefficient") {
    auto A = GL3Coefficients::d3_model(100);
    auto one = [](std::int64_t) { return 1.0; };
    // with lambda = 1: sum over m^2 k = n of A(m, k)
    for (std::int64_t n : {1, 4, 7, 12, 36}) {
        double want = 0;
        for (std::int64_t m = 1; m * m <= n; ++m)
            if (n % (m * m) == 0) want += A(m, n / (m * m));
        CHECK(rankin_coeff(n, one, A) == doctest::Approx(want));
    }
    CHECK_THROWS_AS(rankin_coeff(0, one, A), std::domain_error);
}

TEST_CASE("cube identity") {
    // lambda = d, the Eisenstein case: L(s) = zeta(s)^2 and both sides are zeta(s)^6
    auto d = [](std::int64_t n) { return static_cast<double>(divisor_count(n)); };
    auto c = cube_coefficients<double>(d, 500);
    std::vector<double> dn(501, 0.0);
    for (std::int64_t n = 1; n <= 500; ++n) dn[n] = d(n);
    auto direct = oracle::dirichlet_convolve(oracle::dirichlet_convolve(dn, dn), dn);
    for (std::int64_t n = 1; n <= 500; ++n) {
        CHECK(c.lhs[n] == c.rhs[n]);
        CHECK(c.lhs[n] == direct[n]);
    }
    const GL2Form f = dataset().forms.front().hecke_closed();
    auto lam = [&](std::int64_t n) { return f(n); };
    auto r = cube_identity_residual(lam, 2.0, 1000, 500);
    CHECK(r.coefficient <= 1e-9);
    CHECK(r.series <= r.tail_bound);
    // lambda = 1 is not a Hecke sequence and must break the identity, first at n = 4
    auto ones = cube_coefficients<double>([](std::int64_t) { return 1.0; }, 8);
    CHECK(ones.lhs[2] == ones.rhs[2]);
    CHECK(ones.lhs[4] != ones.rhs[4]);
    auto z = cube_identity_residual(d, 2.0, 1000, 500);
    CHECK(z.coefficient == 0);
    CHECK(z.series <= z.tail_bound);
}

TEST_CASE("sixth coefficient sequence") {
    Sequence s = sixth_coeff_sequence(1, 10);
    CHECK(s.start() == 11);
    double norm = 0;
    for (std::int64_t n = 11; n <= 20; ++n) {
        double want = window_w2(n / 10.0) * static_cast<double>(d3(n)) / std::sqrt(static_cast<double>(n));
        CHECK(s.values()[n - 11].real() == doctest::Approx(want));
        norm += want * want;
    }
    CHECK(s.norm2() == doctest::Approx(norm));
    Sequence t = sixth_coeff_sequence(3, 30);
    for (std::int64_t i = 0; i < t.length(); ++i)
        if ((t.start() + i) % 3) CHECK(t.values()[i] == cplx(0));
    CHECK(window_w2(1.0) == 0);
    CHECK(window_w2(1.5) == doctest::Approx(1));
}
