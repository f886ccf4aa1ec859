// One line per acceptance criterion. Exits nonzero only when a gating
// criterion fails; criterion 7 is known to be out of reach and criterion 15
// is exploratory, so both report without failing the run.

#include "suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

int main(int argc, char** argv) {
    using namespace spm::suites;
    Options o;
    o.dataset = SPM_DATASET;
    o.sym2_source = SPM_SYM2_SOURCE;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));

    spm::Report report;
    auto criteria = acceptance(o, report, ids);
    report.sort();
    bool ok = true;
    for (const Criterion& c : criteria) {
        const char* status = c.pass ? "PASS" : (c.gating ? "FAIL" : (c.id == 15 ? "WARN" : "FAIL (known gap)"));
        std::printf("criterion %2d: %-18s %s [%s; %.1f s of %.0f s]\n", c.id, status, c.title.c_str(), c.note.c_str(),
                    c.seconds, c.budget);
        if (c.gating && !c.pass) ok = false;
    }
    for (const auto& r : report.records())
        if (!r.pass)
            std::printf("  %s %s/%s: measured %s, bound %s\n", r.gating ? "failed" : "non-gating", r.suite.c_str(),
                        r.case_id.c_str(), r.measured.dump().c_str(), r.bound.dump().c_str());
    std::ofstream("acceptance_report.jsonl") << [&] {
        std::ostringstream s;
        report.write_jsonl(s);
        return s.str();
    }();
    std::printf("%s\n", ok ? "acceptance: all gating criteria hold" : "acceptance: gating failures");
    return ok ? 0 : 1;
}
