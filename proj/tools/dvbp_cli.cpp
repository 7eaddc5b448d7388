// Command-line front end. Talks to the simulator only through the C API.
//
// Exit codes: 0 success, 1 audit violations, 2 usage or parse error,
// 3 resource-limit refusal (exact oracle limit, rational overflow).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dvbp/dvbp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAudit = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct InstanceFree {
    void operator()(dvbp_instance* p) const { dvbp_instance_free(p); }
};
struct TraceFree {
    void operator()(dvbp_trace* p) const { dvbp_trace_free(p); }
};
struct AuditFree {
    void operator()(dvbp_audit* p) const { dvbp_audit_free(p); }
};
struct BoundsFree {
    void operator()(dvbp_bounds* p) const { dvbp_bounds_free(p); }
};
struct AdversarialFree {
    void operator()(dvbp_adversarial* p) const { dvbp_adversarial_free(p); }
};

using InstancePtr = std::unique_ptr<dvbp_instance, InstanceFree>;
using TracePtr = std::unique_ptr<dvbp_trace, TraceFree>;
using AuditPtr = std::unique_ptr<dvbp_audit, AuditFree>;
using BoundsPtr = std::unique_ptr<dvbp_bounds, BoundsFree>;
using AdversarialPtr = std::unique_ptr<dvbp_adversarial, AdversarialFree>;

// Thrown to unwind to main with a status already reported.
struct Failure {
    int exit_code;
};

int exit_code_for(dvbp_status st) {
    switch (st) {
        case DVBP_OK: return kExitOk;
        case DVBP_ERR_ORACLE_LIMIT:
        case DVBP_ERR_OVERFLOW: return kExitLimit;
        default: return kExitUsage;
    }
}

void check(dvbp_status st) {
    if (st == DVBP_OK) return;
    std::cerr << "error: " << dvbp_last_error() << '\n';
    throw Failure{exit_code_for(st)};
}

std::string divide(const std::string& a, const std::string& b) {
    size_t needed = 0;
    dvbp_rational_div(a.c_str(), b.c_str(), nullptr, 0, &needed);
    std::string out(needed + 1, '\0');
    check(dvbp_rational_div(a.c_str(), b.c_str(), out.data(), out.size(), &needed));
    out.resize(needed);
    return out;
}

int compare(const std::string& a, const std::string& b) {
    int r = 0;
    check(dvbp_rational_compare(a.c_str(), b.c_str(), &r));
    return r;
}

InstancePtr load_instance(const std::string& path) {
    dvbp_instance* raw = nullptr;
    check(dvbp_instance_read_file(path.c_str(), &raw));
    return InstancePtr(raw);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        throw Failure{kExitUsage};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct SimulateArgs {
    std::string instance, policy, trace;
    uint64_t seed = 0;
};

int run_simulate(const SimulateArgs& a) {
    auto instance = load_instance(a.instance);
    dvbp_trace* raw = nullptr;
    check(dvbp_simulate(instance.get(), a.policy.c_str(), a.seed, &raw));
    TracePtr trace(raw);
    if (!a.trace.empty()) check(dvbp_trace_write_file(trace.get(), a.trace.c_str()));
    std::cout << "cost=" << dvbp_trace_cost(trace.get()) << " bins=" << dvbp_trace_bin_count(trace.get())
              << " span=" << dvbp_instance_span(instance.get()) << '\n';
    return kExitOk;
}

struct AdversarialArgs {
    std::string family, mu = "2", policy, emit, epsilon, epsilon_prime;
    int d = 1;
    int k = 2;
    uint64_t seed = 0;
};

int run_adversarial(const AdversarialArgs& a) {
    dvbp_adversarial_params params{};
    params.family = a.family.c_str();
    params.d = a.d;
    params.k = a.k;
    params.mu = a.mu.c_str();
    params.epsilon = a.epsilon.empty() ? nullptr : a.epsilon.c_str();
    params.epsilon_prime = a.epsilon_prime.empty() ? nullptr : a.epsilon_prime.c_str();

    dvbp_adversarial* raw = nullptr;
    const dvbp_status st = dvbp_adversarial_generate(&params, &raw);
    if (st == DVBP_ERR_CONSTRAINT) {
        std::istringstream lines(dvbp_last_error());
        for (std::string line; std::getline(lines, line);) std::cerr << "error: " << line << '\n';
        return kExitUsage;
    }
    check(st);
    AdversarialPtr adv(raw);
    const dvbp_instance* instance = dvbp_adversarial_instance(adv.get());

    std::string policy = a.policy;
    if (policy.empty()) policy = a.family == "nextfit" ? "nf" : (a.family == "mtf" ? "mtf" : "ff");

    dvbp_trace* traw = nullptr;
    check(dvbp_simulate(instance, policy.c_str(), a.seed, &traw));
    TracePtr trace(traw);
    if (!a.emit.empty()) check(dvbp_instance_write_file(instance, a.emit.c_str()));

    const std::string cost = dvbp_trace_cost(trace.get());
    const std::string opt_upper = dvbp_adversarial_opt_upper(adv.get());
    const std::string achieved = divide(cost, opt_upper);
    const std::string predicted = dvbp_adversarial_predicted_ratio(adv.get());
    const std::string guaranteed = dvbp_adversarial_guaranteed_ratio(adv.get());

    std::cout << "family=" << a.family << " d=" << a.d << " k=" << a.k << " mu=" << a.mu << '\n';
    if (a.family != "mtf") {
        std::cout << "epsilon=" << dvbp_adversarial_epsilon(adv.get())
                  << " epsilon_prime=" << dvbp_adversarial_epsilon_prime(adv.get()) << '\n';
    }
    std::cout << "items=" << dvbp_instance_item_count(instance) << '\n';
    std::cout << "policy=" << policy << " bins=" << dvbp_trace_bin_count(trace.get()) << " cost=" << cost << '\n';
    std::cout << "forced_bins=" << dvbp_adversarial_predicted_bins(adv.get()) << '\n';
    std::cout << "opt_upper=" << opt_upper << '\n';
    std::cout << "achieved_ratio=" << achieved << '\n';
    std::cout << "predicted_ratio=" << predicted << '\n';
    std::cout << "guaranteed_ratio=" << guaranteed << '\n';
    std::cout << "achieved_ge_guaranteed=" << (compare(achieved, guaranteed) >= 0 ? "yes" : "no") << '\n';
    return kExitOk;
}

struct BoundsArgs {
    std::string instance, csv_id;
    bool exact = false;
    size_t limit = 0;
};

int run_bounds(const BoundsArgs& a) {
    auto instance = load_instance(a.instance);
    dvbp_bounds* raw = nullptr;
    check(dvbp_bounds_compute(instance.get(), a.exact ? 1 : 0, a.limit, &raw));
    BoundsPtr bounds(raw);
    if (a.csv_id.empty()) {
        std::cout << dvbp_bounds_text(bounds.get());
        return kExitOk;
    }
    size_t needed = 0;
    dvbp_bounds_csv_row(bounds.get(), a.csv_id.c_str(), nullptr, 0, &needed);
    std::string row(needed + 1, '\0');
    check(dvbp_bounds_csv_row(bounds.get(), a.csv_id.c_str(), row.data(), row.size(), &needed));
    row.resize(needed);
    std::cout << dvbp_bounds_csv_header() << '\n' << row << '\n';
    return kExitOk;
}

struct ExperimentArgs {
    std::string config, out;
    unsigned threads = 0;
    bool full = false;
};

int run_experiment(const ExperimentArgs& a) {
    std::string text = read_file(a.config);
    if (a.full) text += "\nprofile=full\n";
    check(dvbp_experiment_run(text.c_str(), a.out.c_str(), a.threads));
    std::cout << read_file(a.out + "/plotdata.csv");
    return kExitOk;
}

struct AuditArgs {
    std::string instance, trace;
};

int run_audit(const AuditArgs& a) {
    auto instance = load_instance(a.instance);
    dvbp_trace* traw = nullptr;
    check(dvbp_trace_read_file(a.trace.c_str(), &traw));
    TracePtr trace(traw);
    dvbp_audit* araw = nullptr;
    check(dvbp_audit_run(instance.get(), trace.get(), &araw));
    AuditPtr report(araw);
    const size_t n = dvbp_audit_violation_count(report.get());
    if (n == 0) {
        std::cout << "audit: clean (" << dvbp_trace_bin_count(trace.get()) << " bins)\n";
        return kExitOk;
    }
    for (size_t i = 0; i < n; ++i) std::cout << dvbp_audit_violation(report.get(), i) << '\n';
    std::cout << "audit: " << n << " violation(s)\n";
    return kExitAudit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic vector bin packing simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dvbp_version()));

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Replay an instance through a packing policy");
    simulate->add_option("--instance", sim.instance, "Instance CSV")->required();
    simulate->add_option("--policy", sim.policy, "mtf, ff, nf, bf-max, bf-sum, wf, lf or rf")->required();
    simulate->add_option("--seed", sim.seed, "Seed for rf");
    simulate->add_option("--trace", sim.trace, "Write the packing trace here");

    AdversarialArgs adv;
    auto* adversarial = app.add_subcommand("adversarial", "Generate and replay a lower-bound construction");
    adversarial->add_option("--family", adv.family, "anyfit, nextfit or mtf")->required();
    adversarial->add_option("--d", adv.d, "Dimensions")->capture_default_str();
    adversarial->add_option("--k,--n", adv.k, "Group size k (n for mtf)")->capture_default_str();
    adversarial->add_option("--mu", adv.mu, "Long duration mu >= 1")->capture_default_str();
    adversarial->add_option("--policy", adv.policy, "Policy to replay (default: the family's target)");
    adversarial->add_option("--epsilon", adv.epsilon, "Override epsilon");
    adversarial->add_option("--epsilon-prime", adv.epsilon_prime, "Override epsilon'");
    adversarial->add_option("--seed", adv.seed, "Seed for rf");
    adversarial->add_option("--emit", adv.emit, "Write the generated instance CSV here");

    BoundsArgs bnd;
    auto* bounds = app.add_subcommand("bounds", "Lower bounds and optional exact optimum");
    bounds->add_option("--instance", bnd.instance, "Instance CSV")->required();
    bounds->add_flag("--exact", bnd.exact, "Also run the exact oracle");
    bounds->add_option("--oracle-limit", bnd.limit, "Max active items per segment for --exact (default 16)");
    bounds->add_option("--csv", bnd.csv_id, "Print a CSV row with this instance id instead of key=value");

    ExperimentArgs exp;
    auto* experiment = app.add_subcommand("experiment", "Run the random-instance experiment");
    experiment->add_option("--config", exp.config, "key=value config file")->required();
    experiment->add_option("--out", exp.out, "Output directory")->required();
    experiment->add_option("--threads", exp.threads, "Worker threads (default: config, else all cores)");
    experiment->add_flag("--full", exp.full, "Use the full profile (m = 1000 unless set)");

    AuditArgs aud;
    auto* audit = app.add_subcommand("audit", "Check a packing trace against an instance");
    audit->add_option("--instance", aud.instance, "Instance CSV")->required();
    audit->add_option("--trace", aud.trace, "Trace file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*simulate) return run_simulate(sim);
        if (*adversarial) return run_adversarial(adv);
        if (*bounds) return run_bounds(bnd);
        if (*experiment) return run_experiment(exp);
        if (*audit) return run_audit(aud);
    } catch (const Failure& f) {
        return f.exit_code;
    }
    return kExitUsage;
}
