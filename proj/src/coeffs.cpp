#include "spm/coeffs.hpp"

#include "spm/weights.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spm {

double GL2Form::operator()(std::int64_t n) const {
    if (n < 1 || n > n_max()) throw std::out_of_range("GL2Form: lambda(" + std::to_string(n) + ") out of range");
    return lambda[n - 1];
}

double GL2Form::extended(std::int64_t n) const {
    if (n < 1) throw std::out_of_range("GL2Form: index must be positive");
    if (n <= n_max()) return lambda[n - 1];
    return from_primes(n);
}

double GL2Form::from_primes(std::int64_t n) const {
    double r = 1;
    for (auto [p, e] : factorize(n)) {
        if (p > n_max()) throw std::out_of_range("GL2Form: prime " + std::to_string(p) + " beyond table");
        // lambda(p^{k+1}) = lambda(p) lambda(p^k) - lambda(p^{k-1})
        double lp = lambda[p - 1], prev = 1, cur = lp;
        for (int k = 1; k < e; ++k) {
            double next = lp * cur - prev;
            prev = cur;
            cur = next;
        }
        r *= cur;
    }
    return r;
}

GL2Form GL2Form::hecke_closed() const {
    GL2Form g = *this;
    for (std::int64_t n = 2; n <= n_max(); ++n) g.lambda[n - 1] = from_primes(n);
    return g;
}

GL2Form::HeckeDefect GL2Form::hecke_defect() const {
    HeckeDefect worst{0, 1, 1};
    const std::int64_t N = n_max();
    for (std::int64_t m = 2; m * m <= N; ++m)
        for (std::int64_t n = m; m * n <= N; ++n) {
            double s = 0;
            for (std::int64_t d : divisors(std::gcd(m, n))) s += lambda[m * n / (d * d) - 1];
            double v = std::abs(lambda[m - 1] * lambda[n - 1] - s);
            if (v > worst.value) worst = {v, m, n};
        }
    return worst;
}

std::vector<const GL2Form*> SpectralDataset::up_to(double T, bool include_odd) const {
    if (T > t_max_complete)
        throw std::domain_error("dataset complete only to t = " + std::to_string(t_max_complete) + ", asked for " +
                                std::to_string(T));
    std::vector<const GL2Form*> out;
    for (const GL2Form& f : forms)
        if (f.t <= T && (include_odd || f.parity == Parity::Even)) out.push_back(&f);
    return out;
}

SpectralDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_dataset: cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    SpectralDataset ds{};
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            fail(std::string("malformed record: ") + e.what());
        }
        if (!j.is_object()) fail("record is not an object");
        if (!header) {
            if (!j.contains("t_max_complete") || !j.contains("n_max")) fail("header needs t_max_complete and n_max");
            ds.t_max_complete = j["t_max_complete"].get<double>();
            ds.n_max = j["n_max"].get<std::int64_t>();
            if (ds.n_max < 1) fail("n_max must be positive");
            header = true;
            continue;
        }
        for (const char* key : {"t", "parity", "lambda"})
            if (!j.contains(key)) fail(std::string("missing key ") + key);
        GL2Form f;
        try {
            f.t = j["t"].get<double>();
            f.parity = parse_parity(j["parity"].get<std::string>());
            f.lambda = j["lambda"].get<std::vector<double>>();
            if (j.contains("alpha")) {
                f.alpha = j["alpha"].get<double>();
            } else {
                f.alpha = 1.0;
                f.alpha_present = false;
                ds.warnings.push_back("form t = " + std::to_string(f.t) + " has no alpha; using 1");
            }
        } catch (const std::exception& e) {
            fail(std::string("bad field: ") + e.what());
        }
        if (!(f.t > 0)) fail("t must be positive");
        if (!(f.alpha > 0)) fail("alpha must be positive");
        if (f.n_max() != ds.n_max) fail("lambda length differs from header n_max");
        if (std::abs(f.lambda[0] - 1) > 1e-9) fail("lambda(1) must be 1");
        if (!ds.forms.empty() && !(f.t > ds.forms.back().t)) fail("t values must increase");
        auto d = f.hecke_defect();
        if (d.value > 1e-6) {
            std::ostringstream os;
            os << "Hecke relation fails for t = " << f.t << " at (m, n) = (" << d.m << ", " << d.n
               << "), defect " << d.value;
            fail(os.str());
        }
        ds.forms.push_back(std::move(f));
    }
    if (!header) throw std::runtime_error("load_dataset: " + path + " has no header");
    if (ds.forms.empty()) throw std::runtime_error("load_dataset: " + path + " has no forms");
    return ds;
}

GL3Coefficients GL3Coefficients::d3_model(std::int64_t max_index) {
    GL3Coefficients c;
    c.model_ = Model::D3Eisenstein;
    c.m_max_ = c.n_max_ = max_index;
    c.row_.resize(max_index);
    for (std::int64_t n = 1; n <= max_index; ++n) c.row_[n - 1] = static_cast<double>(d3(n));
    return c;
}

GL3Coefficients GL3Coefficients::sym_square(const GL2Form& form, std::int64_t max_index) {
    if (max_index > form.n_max()) throw std::out_of_range("sym_square: index beyond the form's table");
    GL3Coefficients c;
    c.model_ = Model::SymSquare;
    c.type_ = GL3Spectral::sym_square(form.t);
    c.m_max_ = c.n_max_ = max_index;
    c.row_.assign(max_index, 0.0);
    for (std::int64_t d = 1; d * d <= max_index; ++d)
        for (std::int64_t k = 1; d * d * k <= max_index; ++k) c.row_[d * d * k - 1] += form.extended(k * k);
    return c;
}

GL3Coefficients GL3Coefficients::file_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("file_table: cannot open " + path);
    GL3Coefficients c;
    c.model_ = Model::FileTable;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream is(line);
        std::int64_t m, n;
        double a;
        if (!(is >> m >> n >> a) || m < 1 || n < 1) throw std::runtime_error("file_table: bad line: " + line);
        c.table_[{m, n}] = a;
        c.m_max_ = std::max(c.m_max_, m);
        c.n_max_ = std::max(c.n_max_, n);
    }
    auto it = c.table_.find({1, 1});
    if (it == c.table_.end() || std::abs(it->second - 1) > 1e-9) throw std::runtime_error("file_table: A(1,1) must be 1");
    return c;
}

std::string GL3Coefficients::model_name() const {
    switch (model_) {
        case Model::D3Eisenstein: return "d3-eisenstein";
        case Model::SymSquare: return "sym-square";
        case Model::FileTable: return "file-table";
    }
    return "?";
}

double GL3Coefficients::operator()(std::int64_t m, std::int64_t n) const {
    if (m < 1 || n < 1 || m > m_max_ || n > n_max_)
        throw std::out_of_range("GL3Coefficients: A(" + std::to_string(m) + ", " + std::to_string(n) + ") out of range");
    if (model_ == Model::FileTable) {
        auto it = table_.find({m, n});
        if (it == table_.end())
            throw std::out_of_range("GL3Coefficients: A(" + std::to_string(m) + ", " + std::to_string(n) + ") missing");
        return it->second;
    }
    if (m == 1) return row_[n - 1];
    if (n == 1) return row_[m - 1];
    double s = 0;
    for (std::int64_t d : divisors(std::gcd(m, n))) {
        int mu = mobius(d);
        if (mu != 0) s += mu * row_[m / d - 1] * row_[n / d - 1];
    }
    return s;
}

double hecke_A(std::int64_t m, std::int64_t n, const GL3Coefficients& c) { return c(m, n); }

double gl3_hecke_defect(const GL3Coefficients& c, std::int64_t bound) {
    double worst = 0;
    for (std::int64_t m = 1; m <= bound; ++m)
        for (std::int64_t n = 1; n <= bound; ++n) {
            double s = 0;
            for (std::int64_t d : divisors(std::gcd(m, n))) s += c(m / d, n / d);
            worst = std::max(worst, std::abs(c(m, 1) * c(1, n) - s));
        }
    return worst;
}

double rankin_coeff(std::int64_t n, const std::function<double(std::int64_t)>& lambda, const GL3Coefficients& A) {
    if (n < 1) throw std::domain_error("rankin_coeff: n must be positive");
    double s = 0;
    for (std::int64_t m = 1; m * m <= n; ++m)
        if (n % (m * m) == 0) s += lambda(n / (m * m)) * A(m, n / (m * m));
    return s;
}

CubeResidual cube_identity_residual(const std::function<double(std::int64_t)>& lambda, cplx s,
                                    std::int64_t n_cap, std::int64_t coeff_max) {
    auto c = cube_coefficients<double>(lambda, std::max(n_cap, coeff_max));
    CubeResidual r{};
    for (std::int64_t n = 1; n <= coeff_max; ++n) r.coefficient = std::max(r.coefficient, std::abs(c.lhs[n] - c.rhs[n]));
    CompensatedSum<cplx> L, R;
    for (std::int64_t n = 1; n <= n_cap; ++n) {
        cplx p = std::exp(-s * std::log(static_cast<double>(n)));
        L += c.lhs[n] * p;
        R += c.rhs[n] * p;
    }
    r.lhs = std::abs(L.value());
    r.rhs = std::abs(R.value());
    r.series = std::abs(L.value() - R.value());
    r.tail_bound = 50.0 / static_cast<double>(n_cap);
    return r;
}

double window_w2(double x) { return eta(4 * (x - 1)) * eta(4 * (2 - x)); }

Sequence sixth_coeff_sequence(std::int64_t a, std::int64_t N) {
    if (a < 1 || N < 1) throw std::domain_error("sixth_coeff_sequence: a and N must be positive");
    std::vector<cplx> v(N, 0.0);
    for (std::int64_t n = N + 1; n <= 2 * N; ++n)
        if (n % a == 0)
            v[n - N - 1] = window_w2(static_cast<double>(n) / static_cast<double>(N)) /
                           std::sqrt(static_cast<double>(n)) * static_cast<double>(d3(n / a));
    return Sequence(N + 1, std::move(v));
}

std::vector<double> rankin_selberg_increments(const GL3Coefficients& c, std::int64_t bound) {
    std::vector<double> inc;
    double prev = 0, s = 0;
    std::int64_t next = 2;
    for (std::int64_t n = 1; n <= bound; ++n) {
        double a = c(1, n);
        s += a * a / static_cast<double>(n);
        if (n == next) {
            inc.push_back(s - prev);
            prev = s;
            next *= 2;
        }
    }
    return inc;
}

}  // namespace spm
