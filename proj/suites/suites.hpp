#pragma once

#include "spm/coeffs.hpp"
#include "spm/report.hpp"
#include "spm/sieve.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace spm::suites {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws IoError when the file cannot be opened.
SpectralDataset open_dataset(const std::string& path);

struct Options {
    std::uint64_t seed = 1;
    double tol_scale = 1.0;  // (0, 1]: tolerances can only be tightened
    std::string dataset;
    std::string sym2_source;
    bool with_oracles = false;
    std::map<std::string, std::string> params;

    double num(const std::string& key, double fallback) const;
    std::int64_t integer(const std::string& key, std::int64_t fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;
    bool flag(const std::string& key) const;
    std::vector<double> list(const std::string& key, const std::vector<double>& fallback) const;
    double tol(double bound) const { return bound * tol_scale; }
};

// ---- shared sweep generators; verification and calibration use disjoint case ids

std::vector<cplx> gaussian_vector(std::mt19937_64& rng, std::int64_t length);

struct SieveInstance {
    Sequence seq;
    std::int64_t B;
    double T;
    std::string phase;
};
SieveInstance classical_instance(std::uint64_t seed, const std::string& case_id);
SieveInstance oscillatory_instance(std::uint64_t seed, const std::string& case_id, const std::vector<double>& T_values);

struct EnvelopeCase {
    Sequence seq;
    double T, X;
    std::int64_t N;
};
EnvelopeCase envelope_case(std::uint64_t seed, const std::string& case_id, double T, std::int64_t N, double X);
// raw (S - s1_bound_rhs) / envelope; the quantity the fitted constant must dominate
double envelope_excess(const SpectralDataset& ds, const EnvelopeCase& c);

std::vector<double> log_grid(double lo, double hi, int points);

// ---- check groups; each returns one record per check

Report check_kloosterman(const Options& o, std::int64_t cmax);
Report check_ramanujan_mobius(const Options& o, std::int64_t rmax);
Report check_vsum(const Options& o, std::int64_t rmax);
Report check_poisson(const Options& o, std::int64_t rmax);
Report check_weil(const Options& o, std::int64_t cmax, int per_decade);
Report check_sigma(const Options& o, std::int64_t rmax);

Report check_classical_sieve(const Options& o, int trials);
Report check_oscillatory_sieve(const Options& o, int trials);
Report check_spectral_sieve(const Options& o, const SpectralDataset& ds, int per_cell);

Report check_weight_eval(const Options& o);
Report check_weight_transform(const Options& o);
Report check_weight_inversion(const Options& o);
Report check_weight_decay(const Options& o);

Report check_afe_weight(const Options& o);
Report check_stirling(const Options& o);
Report check_afe_value(const Options& o, const SpectralDataset& ds, int forms);

Report check_dataset(const Options& o, const SpectralDataset& ds);
Report check_gl3_hecke(const Options& o, std::int64_t bound);
Report check_cube(const Options& o, const SpectralDataset& ds, int forms);

Report check_harmonic(const Options& o);
Report check_second_moment(const Options& o, const SpectralDataset& ds, const std::vector<double>& grid);
Report check_sixth_moment(const Options& o, const SpectralDataset& ds, const std::vector<double>& grid);

Report check_negligibility(const Options& o, const GL3Coefficients& A, double T, std::int64_t N,
                           const std::vector<std::int64_t>& ls);
Report check_phase(const Options& o);

// brute-force cross-checks of production against the oracle library
Report check_oracles(const Options& o, const SpectralDataset& ds);

// ---- front end

// Dispatches `command subcommand`; throws UsageError for unknown names.
Report run(const std::string& command, const std::string& sub, const Options& o);

struct Criterion {
    int id;
    std::string title;
    bool pass;
    bool gating;      // false: reported, never fails the battery (set per run from the records)
    std::string note;
    double seconds;
    double budget;    // seconds
};

// The acceptance battery 1-15 (or the listed ids); records go to report.
std::vector<Criterion> acceptance(const Options& o, Report& report, const std::vector<int>& ids = {});

}  // namespace spm::suites
