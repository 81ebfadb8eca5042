#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frs {

/// Outcome of one verification suite. `seconds` is wall time;
/// `budget_seconds` is the runtime ceiling the suite commits to (checked by
/// the acceptance runner, generous on purpose).
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

// The ten verification suites. Each is deterministic (fixed internal seed)
// and pure apart from timing.
CheckResult check_oracle_equivalence();     // decode == brute force, k in {1,2}
CheckResult check_list_bound_witness();     // max list <= 2 at k=2, and a size-2 witness
CheckResult check_line_intersection();      // |line ∩ ball| <= k for k in {1,2,3}
CheckResult check_plane_intersection();     // dim-2 ∩ ball <= k(k+1)
CheckResult check_wronskian_equivalence();  // Wronskian nonzero <=> rank full
CheckResult check_rank_deficit_bound();     // deficit sum <= d*msg_len/(m-d+1)
CheckResult check_unique_decoding();        // k=1 roundtrip below (1-R)/2
CheckResult check_pruning_equivalence();    // frequency/pinning == exhaustive
CheckResult check_bounds_table();           // quotable bound values via the CLI
CheckResult check_experiment_determinism(); // byte-identical CSV reruns

/// All ten, in order. With `progress` set, prints one line per suite as it
/// finishes.
std::vector<CheckResult> run_all_checks(std::ostream* progress = nullptr);

std::string format_check_line(const CheckResult& r);

} // namespace frs
