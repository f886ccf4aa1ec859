#include "spm/report.hpp"

#include <algorithm>
#include <cctype>

namespace spm {

void Report::append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.gating && !r.pass; }));
}

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            while (na.size() > 1 && na[0] == '0') na.remove_prefix(1);
            while (nb.size() > 1 && nb[0] == '0') nb.remove_prefix(1);
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

void Report::sort() {
    std::stable_sort(records_.begin(), records_.end(), [](const CheckRecord& x, const CheckRecord& y) {
        if (x.suite != y.suite) return x.suite < y.suite;
        return natural_less(x.case_id, y.case_id);
    });
}

namespace {
nlohmann::json to_json(const CheckRecord& r) {
    nlohmann::json j = {{"suite", r.suite}, {"case", r.case_id}, {"inputs", r.inputs},
                        {"measured", r.measured}, {"bound", r.bound}, {"pass", r.pass}};
    if (!r.gating) j["gating"] = false;
    return j;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
}  // namespace

void Report::write_jsonl(std::ostream& os) const {
    for (const auto& r : records_) os << to_json(r).dump() << '\n';
}

void Report::write_csv(std::ostream& os) const {
    os << "suite,case_id,inputs,measured,bound,pass,gating\n";
    for (const auto& r : records_)
        os << r.suite << ',' << csv_quote(r.case_id) << ',' << csv_quote(r.inputs.dump()) << ','
           << csv_quote(r.measured.dump()) << ',' << csv_quote(r.bound.dump()) << ',' << (r.pass ? "true" : "false")
           << ',' << (r.gating ? "true" : "false") << '\n';
}

std::uint64_t case_seed(std::uint64_t seed, std::string_view case_id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : case_id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 case_rng(std::uint64_t seed, std::string_view case_id) { return std::mt19937_64(case_seed(seed, case_id)); }

}  // namespace spm
