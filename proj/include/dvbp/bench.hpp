#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dvbp/model.hpp"
#include "dvbp/policy.hpp"

namespace dvbp {

// One cell of the random-instance experiment grid. Defaults are the
// desk-scale profile (m = 100); the full profile uses m = 1000.
struct ExperimentConfig {
    int d = 2;
    int n = 1000;
    int mu = 10;
    int T = 1000;
    int B = 100;
    int m = 100;
    std::uint64_t base_seed = 1;
    std::vector<PolicyKind> policies = default_policies();
    unsigned threads = 0;  // 0: hardware concurrency

    static std::vector<PolicyKind> default_policies();
};

// Throws Usage on invalid parameters (mu > T, non-positive sizes, ...).
void validate(const ExperimentConfig& cfg);

// n items drawn from a SplitMix64 stream seeded with `seed`. Per item, in
// order: d size components uniform in {1..B} (normalized to size/B), the
// arrival uniform in {0..T-mu}, the duration uniform in {1..mu}.
Instance gen_random_instance(const ExperimentConfig& cfg, std::uint64_t seed);

struct RunResult {
    std::uint64_t seed = 0;
    PolicyKind policy = PolicyKind::FirstFit;
    Scalar cost;
    Scalar lb_height;
    Scalar ratio;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct PolicySummary {
    PolicyKind policy = PolicyKind::FirstFit;
    size_t runs = 0;
    double mean = 0;
    double stddev = 0;  // sample standard deviation; 0 for a single run
};

struct BatchResult {
    std::vector<RunResult> runs;  // seed-major, then cfg.policies order
    std::vector<PolicySummary> summary;
};

// Runs seeds base_seed .. base_seed+m-1 through every policy. Work may be
// spread over threads; results are always assembled in seed order.
BatchResult run_batch(const ExperimentConfig& cfg);

std::vector<PolicySummary> summarize(std::span<const RunResult> runs, std::span<const PolicyKind> policies);

// seed,policy,cost,lb_height,ratio
std::string results_csv(std::span<const RunResult> runs);
std::vector<RunResult> parse_results_csv(std::string_view text);
void emit_csv(std::span<const RunResult> runs, const std::string& path);

struct PlotRow {
    int mu = 0;
    PolicySummary summary;
};

// mu,policy,mean,stddev
std::string plotdata_csv(std::span<const PlotRow> rows);
void emit_plotdata(std::span<const PlotRow> rows, const std::string& path);

// A config file is flat "key=value" lines; '#' starts a comment. Keys: d, n,
// mu (comma list), T, B, m, base_seed, policies (comma list), threads,
// profile (desk | full).
struct ExperimentPlan {
    ExperimentConfig base;
    std::vector<int> mus;
};

ExperimentPlan parse_experiment_config(std::string_view text);

// Runs every mu of the plan; writes results_d<d>_mu<mu>.csv per mu and one
// plotdata.csv into out_dir (created if missing). Returns the plot rows.
std::vector<PlotRow> run_experiment(const ExperimentPlan& plan, const std::string& out_dir);

}  // namespace dvbp
