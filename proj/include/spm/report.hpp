#pragma once

#include "json.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace spm {

// One line of a run report.
struct CheckRecord {
    std::string suite;
    std::string case_id;
    nlohmann::json inputs;
    nlohmann::json measured;
    nlohmann::json bound;
    bool pass;
    bool gating = true;  // exploratory and known-unattainable checks report without failing the run
};

class Report {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void append(const Report& other);
    const std::vector<CheckRecord>& records() const { return records_; }
    // over gating records only
    bool all_pass() const;
    std::size_t failures() const;

    // Stable sort by suite, then case id with digit runs compared as numbers.
    void sort();

    void write_jsonl(std::ostream& os) const;
    // suite,case_id,inputs,measured,bound,pass with the JSON fields quoted
    void write_csv(std::ostream& os) const;

private:
    std::vector<CheckRecord> records_;
};

bool natural_less(std::string_view a, std::string_view b);

// Generator keyed by (seed, case id): splitmix64 of the seed xor FNV-1a of the id.
std::uint64_t case_seed(std::uint64_t seed, std::string_view case_id);
std::mt19937_64 case_rng(std::uint64_t seed, std::string_view case_id);

}  // namespace spm
