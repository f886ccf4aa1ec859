#pragma once

#include "spm/arith.hpp"

namespace spm {

// A logarithm of Gamma(z) (continuous along vertical lines, not necessarily the
// principal branch). Stirling series after upward shifting to Re z >= 15.
// Throws std::domain_error within 1e-8 of a pole.
cplx log_gamma(cplx z);

}  // namespace spm
