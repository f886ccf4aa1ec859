#include "suites.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0, kContract = 1, kUsage = 2, kIo = 3;

struct Param {
    const char* name;
    const char* help;
};
const Param kValueParams[] = {{"rmax", "largest modulus r (sums)"},
                              {"cmax", "largest modulus c (kloosterman, weil)"},
                              {"per-decade", "random (k, n) pairs per c-decade (weil)"},
                              {"trials", "random instances (sieve)"},
                              {"per-cell", "random sequences per (T, N, X) cell (sieve spectral)"},
                              {"forms", "dataset forms to use (afe value, coeffs cube)"},
                              {"bound", "m, n range for the GL(3) Hecke check"},
                              {"grid", "comma-separated T values (moment)"},
                              {"T", "spectral window (voronoi negligible)"},
                              {"N", "sum length (voronoi negligible)"},
                              {"l", "comma-separated row indices (voronoi negligible)"},
                              {"model", "sym2 | d3 (voronoi negligible)"}};
const Param kFlagParams[] = {{"classical", "classical sweep only (sieve verify)"},
                             {"oscillatory", "oscillatory sweep only (sieve verify)"}};

}  // namespace

int main(int argc, char** argv) {
    using namespace spm::suites;
    CLI::App app{"spm: verification suites for spectral moment machinery"};
    std::string command, sub, out, dataset = "data/maass.jsonl", sym2 = "data/sym2_source.jsonl";
    Options opt;
    bool csv = false;
    app.add_option("command", command, "sums | sieve | weights | afe | coeffs | moment | voronoi | all | oracles")->required();
    app.add_option("subcommand", sub, "suite within the command");
    app.add_option("--seed", opt.seed, "seed for every random sweep");
    app.add_option("--out", out, "write the report here instead of stdout");
    app.add_flag("--csv", csv, "CSV instead of JSON lines");
    app.add_option("--tol-scale", opt.tol_scale, "multiply the frozen tolerances by this factor in (0, 1]");
    app.add_option("--dataset", dataset, "Maass form table (JSON lines)");
    app.add_option("--sym2-source", sym2, "single-form table feeding the symmetric-square model");
    app.add_flag("--with-oracles", opt.with_oracles, "add the brute-force cross-checks to `all`");
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    for (const Param& k : kValueParams) app.add_option(std::string("--") + k.name, values[k.name], k.help);
    for (const Param& k : kFlagParams) app.add_flag(std::string("--") + k.name, flags[k.name], k.help);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    for (const auto& [k, v] : values)
        if (app.count("--" + k)) opt.params[k] = v;
    for (const auto& [k, v] : flags)
        if (v) opt.params[k] = "true";
    opt.dataset = dataset;
    opt.sym2_source = sym2;

    spm::Report report;
    std::vector<Criterion> criteria;
    try {
        if (command == "all") {
            if (!sub.empty()) throw UsageError("`all` takes no subcommand");
            if (!(opt.tol_scale > 0 && opt.tol_scale <= 1)) throw UsageError("--tol-scale must lie in (0, 1]");
            criteria = acceptance(opt, report);
            if (opt.with_oracles) report.append(check_oracles(opt, open_dataset(opt.dataset)));
            report.sort();
        } else {
            report = run(command, sub, opt);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kContract;
    }

    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) {
            std::cerr << "i/o error: cannot write " << out << '\n';
            return kIo;
        }
    }
    std::ostream& os = out.empty() ? std::cout : file;
    if (csv) report.write_csv(os);
    else report.write_jsonl(os);
    os.flush();
    if (!os) {
        std::cerr << "i/o error: write failed\n";
        return kIo;
    }

    bool ok = report.all_pass();
    for (const Criterion& c : criteria) {
        std::fprintf(stderr, "criterion %2d %s%s  %s  (%s; %.1f s)\n", c.id, c.pass ? "PASS" : "FAIL",
                     c.gating ? "" : " [non-gating]", c.title.c_str(), c.note.c_str(), c.seconds);
        if (c.gating && !c.pass) ok = false;
    }
    if (!ok) std::cerr << report.failures() << " gating checks failed\n";
    return ok ? kOk : kContract;
}
