#include "common.hpp"

#include "spm/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace spm::suites {

using detail::record;

// ---- options

namespace {
const std::string* find(const std::map<std::string, std::string>& m, const std::string& key) {
    auto it = m.find(key);
    return it == m.end() ? nullptr : &it->second;
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw UsageError("--" + key + ": not a number: " + v);
    }
}
}  // namespace

double Options::num(const std::string& key, double fallback) const {
    const std::string* v = find(params, key);
    return v ? parse_double(key, *v) : fallback;
}

std::int64_t Options::integer(const std::string& key, std::int64_t fallback) const {
    const std::string* v = find(params, key);
    if (!v) return fallback;
    try {
        std::size_t used = 0;
        long long x = std::stoll(*v, &used);
        if (used != v->size()) throw std::invalid_argument(*v);
        return x;
    } catch (const std::exception&) {
        throw UsageError("--" + key + ": not an integer: " + *v);
    }
}

std::string Options::text(const std::string& key, const std::string& fallback) const {
    const std::string* v = find(params, key);
    return v ? *v : fallback;
}

bool Options::flag(const std::string& key) const {
    const std::string* v = find(params, key);
    return v && *v != "false" && *v != "0";
}

std::vector<double> Options::list(const std::string& key, const std::vector<double>& fallback) const {
    const std::string* v = find(params, key);
    if (!v) return fallback;
    std::vector<double> out;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
    if (out.empty()) throw UsageError("--" + key + ": empty list");
    return out;
}

SpectralDataset open_dataset(const std::string& path) {
    if (path.empty()) throw UsageError("this suite needs --dataset");
    try {
        return load_dataset(path);
    } catch (const std::exception& e) {
        throw IoError(e.what());
    }
}

// ---- dispatch

namespace {

std::int64_t positive(const Options& o, const std::string& key, std::int64_t fallback) {
    std::int64_t v = o.integer(key, fallback);
    if (v < 1) throw UsageError("--" + key + " must be positive");
    return v;
}

GL3Coefficients voronoi_model(const Options& o, std::int64_t N, std::int64_t lmax) {
    std::string model = o.text("model", "sym2");
    if (model == "d3") return GL3Coefficients::d3_model(std::max(2 * N, lmax));
    if (model != "sym2") throw UsageError("--model must be sym2 or d3");
    if (o.sym2_source.empty()) throw UsageError("the sym2 model needs --sym2-source");
    SpectralDataset src = open_dataset(o.sym2_source);
    std::int64_t need = std::max(2 * N, lmax);
    if (src.n_max < need) throw IoError("sym2 source covers n <= " + std::to_string(src.n_max) + ", needs " + std::to_string(need));
    return GL3Coefficients::sym_square(src.forms.front(), need);
}

std::vector<std::int64_t> integer_list(const Options& o, const std::string& key, const std::vector<double>& fallback) {
    std::vector<std::int64_t> out;
    for (double v : o.list(key, fallback)) {
        if (v < 1 || v != std::floor(v)) throw UsageError("--" + key + ": positive integers expected");
        out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

Report weights_all(const Options& o) {
    Report r = check_weight_eval(o);
    r.append(check_weight_transform(o));
    r.append(check_weight_inversion(o));
    r.append(check_weight_decay(o));
    return r;
}

}  // namespace

Report run(const std::string& command, const std::string& sub, const Options& o) {
    if (!(o.tol_scale > 0 && o.tol_scale <= 1)) throw UsageError("--tol-scale must lie in (0, 1]");
    Report r;
    auto bad = [&]() -> Report { throw UsageError("unknown subcommand: " + command + " " + sub); };
    if (command == "sums") {
        if (sub == "kloosterman") r = check_kloosterman(o, positive(o, "cmax", 40));
        else if (sub == "ramanujan") r = check_ramanujan_mobius(o, positive(o, "rmax", 500));
        else if (sub == "vsum") r = check_vsum(o, positive(o, "rmax", 30));
        else if (sub == "poisson") r = check_poisson(o, positive(o, "rmax", 30));
        else if (sub == "weil") r = check_weil(o, positive(o, "cmax", 300), static_cast<int>(positive(o, "per-decade", 1000)));
        else if (sub == "sigma") r = check_sigma(o, positive(o, "rmax", 100000));
        else r = bad();
    } else if (command == "sieve") {
        int trials = static_cast<int>(positive(o, "trials", 1000));
        if (sub == "classical") r = check_classical_sieve(o, trials);
        else if (sub == "oscillatory") r = check_oscillatory_sieve(o, trials);
        else if (sub == "spectral") r = check_spectral_sieve(o, open_dataset(o.dataset), static_cast<int>(positive(o, "per-cell", 4)));
        else if (sub == "verify") {
            bool c = o.flag("classical"), s = o.flag("oscillatory");
            if (!c && !s) c = s = true;
            if (c) r.append(check_classical_sieve(o, trials));
            if (s) r.append(check_oscillatory_sieve(o, trials));
        } else r = bad();
    } else if (command == "weights") {
        if (sub == "eval") r = check_weight_eval(o);
        else if (sub == "transform") r = check_weight_transform(o);
        else if (sub == "invert") r = check_weight_inversion(o);
        else if (sub == "decay") r = check_weight_decay(o);
        else if (sub == "check") r = weights_all(o);
        else r = bad();
    } else if (command == "afe") {
        if (sub == "weight") r = check_afe_weight(o);
        else if (sub == "stirling") r = check_stirling(o);
        else if (sub == "value") r = check_afe_value(o, open_dataset(o.dataset), static_cast<int>(positive(o, "forms", 5)));
        else r = bad();
    } else if (command == "coeffs") {
        if (sub == "load") r = check_dataset(o, open_dataset(o.dataset));
        else if (sub == "hecke") r = check_gl3_hecke(o, positive(o, "bound", 50));
        else if (sub == "cube") r = check_cube(o, open_dataset(o.dataset), static_cast<int>(positive(o, "forms", 3)));
        else r = bad();
    } else if (command == "moment") {
        if (sub == "second") r = check_second_moment(o, open_dataset(o.dataset), o.list("grid", {10, 20, 30}));
        else if (sub == "sixth") r = check_sixth_moment(o, open_dataset(o.dataset), o.list("grid", {10, 15, 20, 25, 30}));
        else if (sub == "harmonic") r = check_harmonic(o);
        else r = bad();
    } else if (command == "voronoi") {
        if (sub == "negligible") {
            double T = o.num("T", 200);
            std::int64_t N = positive(o, "N", 2000);
            auto ls = integer_list(o, "l", {1, 2});
            r = check_negligibility(o, voronoi_model(o, N, *std::max_element(ls.begin(), ls.end())), T, N, ls);
        } else if (sub == "phase") r = check_phase(o);
        else r = bad();
    } else if (command == "all") {
        if (!sub.empty()) bad();
        acceptance(o, r);
        if (o.with_oracles) r.append(check_oracles(o, open_dataset(o.dataset)));
    } else if (command == "oracles") {
        r = check_oracles(o, open_dataset(o.dataset));
    } else {
        throw UsageError("unknown command: " + command);
    }
    r.sort();
    return r;
}

// ---- acceptance

namespace {

struct Spec {
    int id;
    const char* title;
    double budget;
    bool gating;
    std::function<Report(const Options&)> body;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

const detail::json* measured(const Report& r, const std::string& id, const std::string& key) {
    for (const auto& rec : r.records())
        if (rec.case_id == id && rec.measured.contains(key)) return &rec.measured[key];
    return nullptr;
}

}  // namespace

std::vector<Criterion> acceptance(const Options& o, Report& report, const std::vector<int>& ids) {
    auto ds = [&]() { return open_dataset(o.dataset); };
    const std::vector<Spec> specs = {
        {1, "Poisson-dual identity, r <= 30", 30, true, [](const Options& x) { return check_poisson(x, 30); }},
        {2, "S(0,1;r) = mu(r), r <= 500", 5, true, [](const Options& x) { return check_ramanujan_mobius(x, 500); }},
        {3, "Weil margin, c <= 300", 30, true, [](const Options& x) { return check_weil(x, 300, 1000); }},
        {4, "classical large sieve", 60, true, [](const Options& x) { return check_classical_sieve(x, 1000); }},
        {5, "oscillatory large sieve", 300, true, [](const Options& x) { return check_oscillatory_sieve(x, 1000); }},
        {6, "W_{A,B} transform, inversion, decay", 180, true,
         [](const Options& x) {
             Report r = check_weight_transform(x);
             r.append(check_weight_inversion(x));
             r.append(check_weight_decay(x));
             return r;
         }},
        {7, "sigma(1,1) partial sums", 5, false, [](const Options& x) { return check_sigma(x, 100000); }},
        {8, "cube identity", 30, true, [&](const Options& x) { return check_cube(x, ds(), 3); }},
        {9, "GL(3) Hecke relation, d3 model", 5, true, [](const Options& x) { return check_gl3_hecke(x, 50); }},
        {10, "Stirling residual ratio", 30, true, [](const Options& x) { return check_stirling(x); }},
        {11, "AFE Y-invariance", 120, true, [&](const Options& x) { return check_afe_value(x, ds(), 5); }},
        {12, "harmonic weight comparability", 5, true, [](const Options& x) { return check_harmonic(x); }},
        {13, "Voronoi negligibility sweep", 180, true,
         [](const Options& x) {
             Options y = x;
             y.params["model"] = "sym2";
             return check_negligibility(y, voronoi_model(y, 2000, 2), 200, 2000, {1, 2});
         }},
        {14, "spectral large sieve envelope", 180, true, [&](const Options& x) { return check_spectral_sieve(x, ds(), 4); }},
        {15, "sixth-moment scaling (exploratory)", 600, false,
         [&](const Options& x) { return check_sixth_moment(x, ds(), {10, 15, 20, 25, 30}); }},
    };
    std::vector<Criterion> out;
    for (const Spec& s : specs) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), s.id) == ids.end()) continue;
        Criterion c{s.id, s.title, false, s.gating, "", 0, s.budget};
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        try {
            r = s.body(o);
            std::size_t failing = 0;
            for (const auto& rec : r.records()) failing += rec.pass ? 0 : 1;
            c.pass = failing == 0 && !r.records().empty();
            c.note = std::to_string(r.records().size()) + " checks, " + std::to_string(failing) + " failing";
            // only gating records decide: a criterion whose sole failures are records known
            // to be out of reach is reported as failing but does not fail the battery
            if (r.failures() > 0) c.gating = true;
            else if (failing > 0) c.gating = false;
        } catch (const std::exception& e) {
            c.pass = false;
            c.gating = true;
            c.note = std::string("error: ") + e.what();
            r.add(record("acceptance", "criterion-" + std::to_string(s.id) + "-error", {{"criterion", s.id}},
                         {{"error", e.what()}}, nullptr, false));
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s.id == 7)
            if (auto g = measured(r, "sigma-within-1e-6", "gap")) c.note += "; gap " + fmt("%.3e", g->get<double>());
        if (s.id == 15)
            if (auto f = measured(r, "sixth-fit", "fitted_exponent"); f && f->is_number())
                c.note += "; fitted exponent " + fmt("%.3f", f->get<double>());
        if (c.seconds > c.budget) {
            c.pass = false;
            c.gating = s.gating;
            c.note += "; over the " + fmt("%.0f", c.budget) + " s budget";
        }
        report.append(r);
        out.push_back(c);
    }
    return out;
}

}  // namespace spm::suites
