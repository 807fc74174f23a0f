#pragma once

#include <string>

namespace sposet {

struct SelftestResult {
    std::string report;  // deterministic text, one line per check group
    int failures = 0;
};

// Oracle-equivalence sweep plus stabilization, link/costar duality, and
// classification summaries over the bundled corpus. `jobs` bounds worker
// threads; the report is byte-identical for any job count.
SelftestResult run_selftest(int jobs = 1);

}  // namespace sposet
