#pragma once

#include "suites.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace spm::suites::detail {

using json = nlohmann::json;

inline json cj(cplx z) { return json::array({z.real(), z.imag()}); }

inline CheckRecord record(std::string suite, std::string id, json inputs, json measured, json bound, bool pass,
                          bool gating = true) {
    return {std::move(suite), std::move(id), std::move(inputs), std::move(measured), std::move(bound), pass, gating};
}

// short decimal label for case ids: 1.5 -> "1.5", 13.7797513519 -> "13.7798"
inline std::string tag(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

// NaN never passes
inline bool le(double a, double b) { return std::isfinite(a) && a <= b; }

}  // namespace spm::suites::detail
