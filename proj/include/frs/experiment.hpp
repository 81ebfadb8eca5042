#pragma once

#include "frs/code.hpp"
#include "frs/decoder.hpp"
#include "frs/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frs {

inline constexpr char kExperimentCsvHeader[] =
    "trial,errors,subspace_dim,list_size,oracle_list_size,deficit_sum,bound_radius_num,bound_radius_den,pass";

/// Flat key=value configuration for one experiment run. Unknown keys are
/// rejected so typos cannot silently disable a check.
struct ExperimentConfig {
    // Code and decoder parameters (required).
    std::uint64_t q = 0;
    Fe gamma = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t msg_len = 0;
    std::size_t k = 0;

    // Harness parameters (all defaulted).
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string channel = "random"; // "random" or "adversarial"
    std::size_t errors = 0;         // random channel: symbols corrupted per trial
    std::optional<Rational> radius; // decode radius override
    bool oracle = false;            // also run the brute-force oracle and compare
    std::uint64_t limit = kDefaultPruneLimit;
    std::size_t targets = 2;         // adversarial channel: codewords to favor
    std::size_t adversarial_dim = 1; // adversarial channel: subspace dimension
    std::string out;                 // optional output path (used by the CLI)
    // Test-only hook: "oversized_list" falsifies the recorded list size so
    // the bound check must fail; "none" otherwise.
    std::string fault_injection = "none";

    static ExperimentConfig parse(const std::string& text);
    FrsParams make_params() const;
};

/// One CSV row. Columns that were not computed hold -1
/// (subspace_dim when extraction was inconsistent, oracle_list_size when
/// the oracle is disabled, deficit_sum when there is no subspace).
struct TrialRecord {
    std::string label; // trial index, or "summary"
    std::int64_t errors = 0;
    std::int64_t subspace_dim = -1;
    std::int64_t list_size = 0;
    std::int64_t oracle_list_size = -1;
    std::int64_t deficit_sum = -1;
    std::int64_t radius_num = 0;
    std::int64_t radius_den = 1;
    bool pass = true;

    std::string csv_row() const;
};

struct ExperimentResult {
    std::vector<TrialRecord> records; // per-trial rows plus a final summary row
    std::string csv;                  // header + rows, byte-stable for a fixed config
    bool all_pass = true;
};

/// Runs all trials deterministically from the seed (trial i draws from an
/// independent child stream, so records do not depend on execution order).
/// With trials=0 the CSV is header-only and all_pass is true. The summary
/// row holds column-wise maxima and the AND of the pass flags.
ExperimentResult run_experiment(const ExperimentConfig& config);

} // namespace frs
