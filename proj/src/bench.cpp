#include "dvbp/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include "dvbp/bounds.hpp"
#include "dvbp/engine.hpp"
#include "dvbp/error.hpp"
#include "dvbp/instance_io.hpp"
#include "dvbp/rng.hpp"
#include "text_util.hpp"

namespace dvbp {

std::vector<PolicyKind> ExperimentConfig::default_policies() {
    return {PolicyKind::MoveToFront, PolicyKind::FirstFit, PolicyKind::NextFit, PolicyKind::BestFitMax,
            PolicyKind::WorstFit,    PolicyKind::LastFit,  PolicyKind::RandomFit};
}

void validate(const ExperimentConfig& cfg) {
    auto need = [](bool ok, const std::string& msg) {
        if (!ok) fail(ErrorCode::Usage, "experiment config: " + msg);
    };
    need(cfg.d >= 1, "d must be at least 1");
    need(cfg.n >= 1, "n must be at least 1");
    need(cfg.mu >= 1, "mu must be at least 1");
    need(cfg.mu <= cfg.T, "mu must not exceed T");
    need(cfg.B >= 1, "B must be at least 1");
    need(cfg.m >= 1, "m must be at least 1");
    need(!cfg.policies.empty(), "at least one policy is required");
}

Instance gen_random_instance(const ExperimentConfig& cfg, std::uint64_t seed) {
    validate(cfg);
    SplitMix64 rng(seed);
    const auto dim = static_cast<size_t>(cfg.d);
    std::vector<Item> items;
    items.reserve(static_cast<size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) {
        SizeVec size(dim);
        for (size_t j = 0; j < dim; ++j) size[j] = Scalar(rng.between(1, cfg.B), cfg.B);
        const std::int64_t arrival = rng.between(0, cfg.T - cfg.mu);
        const std::int64_t duration = rng.between(1, cfg.mu);
        items.push_back(Item{i + 1, Scalar(arrival), Scalar(arrival + duration), std::move(size)});
    }
    return Instance(dim, std::move(items));
}

std::vector<PolicySummary> summarize(std::span<const RunResult> runs, std::span<const PolicyKind> policies) {
    std::vector<PolicySummary> out;
    for (auto policy : policies) {
        PolicySummary s{policy, 0, 0.0, 0.0};
        double sum = 0;
        for (const auto& r : runs) {
            if (r.policy != policy) continue;
            ++s.runs;
            sum += r.ratio.to_double();
        }
        if (s.runs == 0) {
            out.push_back(s);
            continue;
        }
        s.mean = sum / static_cast<double>(s.runs);
        if (s.runs > 1) {
            double sq = 0;
            for (const auto& r : runs) {
                if (r.policy != policy) continue;
                const double dev = r.ratio.to_double() - s.mean;
                sq += dev * dev;
            }
            s.stddev = std::sqrt(sq / static_cast<double>(s.runs - 1));
        }
        out.push_back(s);
    }
    return out;
}

BatchResult run_batch(const ExperimentConfig& cfg) {
    validate(cfg);
    const auto m = static_cast<size_t>(cfg.m);
    const size_t per_seed = cfg.policies.size();
    std::vector<RunResult> runs(m * per_seed);

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < m; i = next++) {
            const std::uint64_t seed = cfg.base_seed + i;
            const Instance instance = gen_random_instance(cfg, seed);
            const Scalar height = lb_height(instance);
            for (size_t p = 0; p < per_seed; ++p) {
                const auto trace = simulate(instance, cfg.policies[p], seed, SimOptions{false});
                const Scalar cost = cost_of(trace);
                runs[i * per_seed + p] = RunResult{seed, cfg.policies[p], cost, height, cost / height};
            }
        }
    };

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, m));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    BatchResult result;
    result.summary = summarize(runs, cfg.policies);
    result.runs = std::move(runs);
    return result;
}

std::string results_csv(std::span<const RunResult> runs) {
    std::ostringstream out;
    out << "seed,policy,cost,lb_height,ratio\n";
    for (const auto& r : runs) {
        out << r.seed << ',' << policy_name(r.policy) << ',' << r.cost.str() << ',' << r.lb_height.str() << ','
            << r.ratio.str() << '\n';
    }
    return out.str();
}

std::vector<RunResult> parse_results_csv(std::string_view text) {
    std::vector<RunResult> out;
    bool header = false;
    detail::for_each_line(text, [&](size_t lineno, std::string_view line) {
        if (!header) {
            if (line != "seed,policy,cost,lb_height,ratio") {
                fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": unexpected results header");
            }
            header = true;
            return;
        }
        auto f = detail::split(line, ',');
        if (f.size() != 5) fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 5 fields");
        try {
            out.push_back(RunResult{detail::parse_uint64(f[0]), parse_policy(f[1]), Scalar::parse(f[2]),
                                    Scalar::parse(f[3]), Scalar::parse(f[4])});
        } catch (const Error& e) {
            fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + e.what());
        }
    });
    if (!header) fail(ErrorCode::Parse, "results file has no header");
    return out;
}

void emit_csv(std::span<const RunResult> runs, const std::string& path) { write_text_file(path, results_csv(runs)); }

std::string plotdata_csv(std::span<const PlotRow> rows) {
    std::string out = "mu,policy,mean,stddev\n";
    char buf[128];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%d,%s,%.6f,%.6f\n", row.mu, std::string(policy_name(row.summary.policy)).c_str(),
                      row.summary.mean, row.summary.stddev);
        out += buf;
    }
    return out;
}

void emit_plotdata(std::span<const PlotRow> rows, const std::string& path) { write_text_file(path, plotdata_csv(rows)); }

ExperimentPlan parse_experiment_config(std::string_view text) {
    ExperimentPlan plan;
    bool m_set = false;
    bool full = false;

    detail::for_each_line(text, [&](size_t lineno, std::string_view line) {
        if (line.front() == '#') return;
        auto at = [lineno](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
        auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(ErrorCode::Parse, at("expected key=value"));
        const auto key = detail::trim(line.substr(0, eq));
        const auto value = detail::trim(line.substr(eq + 1));
        auto as_int = [&](std::string_view v) {
            try {
                return static_cast<int>(detail::parse_int64(v));
            } catch (const Error&) {
                fail(ErrorCode::Parse, at("invalid integer for '" + std::string(key) + "'"));
            }
        };
        ExperimentConfig& c = plan.base;
        if (key == "d") {
            c.d = as_int(value);
        } else if (key == "n") {
            c.n = as_int(value);
        } else if (key == "mu") {
            plan.mus.clear();
            for (auto part : detail::split(value, ',')) plan.mus.push_back(as_int(part));
        } else if (key == "T") {
            c.T = as_int(value);
        } else if (key == "B") {
            c.B = as_int(value);
        } else if (key == "m") {
            c.m = as_int(value);
            m_set = true;
        } else if (key == "base_seed") {
            c.base_seed = detail::parse_uint64(value);
        } else if (key == "threads") {
            c.threads = static_cast<unsigned>(as_int(value));
        } else if (key == "policies") {
            c.policies.clear();
            try {
                for (auto part : detail::split(value, ',')) c.policies.push_back(parse_policy(part));
            } catch (const Error& e) {
                fail(ErrorCode::Parse, at(e.what()));
            }
        } else if (key == "profile") {
            if (value == "full") {
                full = true;
            } else if (value != "desk") {
                fail(ErrorCode::Parse, at("profile must be 'desk' or 'full'"));
            }
        } else {
            fail(ErrorCode::Parse, at("unknown key '" + std::string(key) + "'"));
        }
    });

    if (full && !m_set) plan.base.m = 1000;
    if (plan.mus.empty()) plan.mus.push_back(plan.base.mu);
    for (int mu : plan.mus) {
        ExperimentConfig c = plan.base;
        c.mu = mu;
        validate(c);
    }
    return plan;
}

std::vector<PlotRow> run_experiment(const ExperimentPlan& plan, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(ErrorCode::Io, "cannot create directory '" + out_dir + "': " + ec.message());

    std::vector<PlotRow> rows;
    for (int mu : plan.mus) {
        ExperimentConfig cfg = plan.base;
        cfg.mu = mu;
        const auto batch = run_batch(cfg);
        const std::string name = "results_d" + std::to_string(cfg.d) + "_mu" + std::to_string(mu) + ".csv";
        emit_csv(batch.runs, (std::filesystem::path(out_dir) / name).string());
        for (const auto& s : batch.summary) rows.push_back(PlotRow{mu, s});
    }
    emit_plotdata(rows, (std::filesystem::path(out_dir) / "plotdata.csv").string());
    return rows;
}

}  // namespace dvbp
