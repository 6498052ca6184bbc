#pragma once

#include <functional>
#include <vector>

#include "quatinv/integers.hpp"

namespace quatinv {

// Enumerate nonzero integer vectors v with q(v) <= bound for a positive
// definite symmetric form (Fincke-Pohst with floating Cholesky).  Only one of
// each pair {v, -v} is reported: the last nonzero coordinate is positive.
// The search region is padded slightly so boundary vectors survive rounding;
// callers must re-check candidates exactly.  Return false from the callback
// to stop early.
void enumerate_qform(const std::vector<std::vector<double>>& gram, double bound,
                     const std::function<bool(const std::vector<long>&)>& cb);

}  // namespace quatinv
