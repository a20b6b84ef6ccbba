#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockfrac/block.hpp"
#include "blockfrac/rational.hpp"

namespace blockfrac {

struct ExperimentCaps {
    std::uint64_t mwis_nodes = 10'000'000;
    int dp_cap = 26;
    std::uint64_t chif_iteration_cap = 0;  // 0 = the solver default
    int hall_budget = 200;
    int bruteforce_cap = 18;
    std::uint64_t sample_max_vertices = 50000;

    nlohmann::json to_json() const;
    static ExperimentCaps from_json(const nlohmann::json& j);
};

struct ExperimentConfig {
    BlockProfile profile;
    int trials = 1;
    std::uint64_t base_seed = 0;
    Rat delta = make_rat(1, 2);
    std::set<std::string> checks;  // chif | hall | propertyA | claim42 | thm13
    ExperimentCaps caps;

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
};

// One row per trial; empty string = check not run, "error:..." = check died.
struct TrialRecord {
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    int k = 0;
    std::string chif_lb, chif_exact, hall_exact, hall_lb;
    std::string propA_status, c42_1_status, c42_2_status, thm13_pass;
    std::int64_t runtime_ms = 0;
};

struct ExperimentResult {
    std::vector<TrialRecord> rows;
    std::vector<std::string> summary;  // '#'-prefixed footer lines
};

// Trials are independent: trial t uses seed derive(base_seed, t) and rows
// come back in trial order no matter how they were scheduled.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Fixed column set; the wall-time column is the only nondeterministic one.
void write_experiment_csv(std::ostream& out, const ExperimentConfig& cfg,
                          const ExperimentResult& result);

// Drops the runtime_ms column from a rendered CSV, for replay comparison.
std::string strip_runtime_column(const std::string& csv);

// Worker pool running fn(0..count-1); results must be written to
// preallocated slots. threads <= 0 reads BLOCKFRAC_THREADS, defaulting to
// the hardware count.
void parallel_for(int count, std::function<void(int)> fn, int threads = 0);

}  // namespace blockfrac
