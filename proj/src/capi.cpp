#include "dvbp/dvbp.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "dvbp/adversarial.hpp"
#include "dvbp/bench.hpp"
#include "dvbp/bounds.hpp"
#include "dvbp/engine.hpp"
#include "dvbp/error.hpp"
#include "dvbp/instance_io.hpp"

using namespace dvbp;

struct dvbp_instance {
    Instance instance;
    std::string csv;
    std::string span;
    std::string mu;

    explicit dvbp_instance(Instance i)
        : instance(std::move(i)),
          csv(write_instance_csv(instance)),
          span(span_of(instance.items()).str()),
          mu(instance.empty() ? std::string() : mu_of(instance).str()) {}
};

struct dvbp_trace {
    PackingTrace trace;
    std::string cost;
    std::string text;

    explicit dvbp_trace(PackingTrace t) : trace(std::move(t)), cost(cost_of(trace).str()), text(write_trace(trace)) {}
};

struct dvbp_audit {
    std::vector<std::string> lines;
};

struct dvbp_bounds {
    BoundsReport report;
    std::string lb_span, lb_util, lb_height, opt_exact, text;

    explicit dvbp_bounds(BoundsReport r)
        : report(std::move(r)),
          lb_span(report.lb_span.str()),
          lb_util(report.lb_util.str()),
          lb_height(report.lb_height.str()),
          opt_exact(report.opt_exact ? report.opt_exact->str() : std::string()),
          text(report.text()) {}
};

struct dvbp_adversarial {
    AdversarialSpec spec;
    dvbp_instance instance;
    std::string epsilon, epsilon_prime, predicted_ratio, guaranteed_ratio, opt_upper;
    long long predicted_bins;

    explicit dvbp_adversarial(const AdversarialSpec& s)
        : spec(s),
          instance(generate(s)),
          epsilon(s.epsilon.str()),
          epsilon_prime(s.epsilon_prime.str()),
          predicted_ratio(dvbp::predicted_ratio(s).str()),
          guaranteed_ratio(dvbp::guaranteed_ratio(s).str()),
          opt_upper(opt_upper_bound(s).str()),
          predicted_bins(dvbp::predicted_bins(s)) {}
};

namespace {

thread_local std::string g_last_error;

dvbp_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::Usage: return DVBP_ERR_USAGE;
        case ErrorCode::Parse: return DVBP_ERR_PARSE;
        case ErrorCode::OracleLimit: return DVBP_ERR_ORACLE_LIMIT;
        case ErrorCode::Overflow: return DVBP_ERR_OVERFLOW;
        case ErrorCode::Io: return DVBP_ERR_IO;
        case ErrorCode::Constraint: return DVBP_ERR_CONSTRAINT;
    }
    return DVBP_ERR_INTERNAL;
}

dvbp_status set_error(dvbp_status status, std::string msg) {
    g_last_error = std::move(msg);
    return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
dvbp_status guarded(Fn&& fn) {
    try {
        fn();
        return DVBP_OK;
    } catch (const Error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(DVBP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(DVBP_ERR_INTERNAL, e.what());
    }
}

bool null_arg(const void* p, const char* name, dvbp_status& st) {
    if (p != nullptr) return false;
    st = set_error(DVBP_ERR_USAGE, std::string(name) + " must not be NULL");
    return true;
}

dvbp_status copy_out(const std::string& s, char* buf, size_t capacity, size_t* needed) {
    if (needed) *needed = s.size();
    if (buf == nullptr || capacity < s.size() + 1) {
        return set_error(DVBP_ERR_USAGE, "buffer too small: need " + std::to_string(s.size() + 1) + " bytes");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return DVBP_OK;
}

}  // namespace

extern "C" {

const char* dvbp_version(void) { return "1.0.0"; }

const char* dvbp_last_error(void) { return g_last_error.c_str(); }

const char* dvbp_status_name(dvbp_status status) {
    switch (status) {
        case DVBP_OK: return "ok";
        case DVBP_ERR_USAGE: return "usage error";
        case DVBP_ERR_PARSE: return "parse error";
        case DVBP_ERR_ORACLE_LIMIT: return "oracle limit";
        case DVBP_ERR_OVERFLOW: return "overflow";
        case DVBP_ERR_IO: return "i/o error";
        case DVBP_ERR_CONSTRAINT: return "constraint violation";
        case DVBP_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

dvbp_status dvbp_instance_parse(const char* csv_text, dvbp_instance** out) {
    dvbp_status st;
    if (null_arg(csv_text, "csv_text", st) || null_arg(out, "out", st)) return st;
    *out = nullptr;
    return guarded([&] { *out = new dvbp_instance(parse_instance_csv(csv_text)); });
}

dvbp_status dvbp_instance_read_file(const char* path, dvbp_instance** out) {
    dvbp_status st;
    if (null_arg(path, "path", st) || null_arg(out, "out", st)) return st;
    *out = nullptr;
    return guarded([&] { *out = new dvbp_instance(read_instance_file(path)); });
}

dvbp_status dvbp_instance_write_file(const dvbp_instance* instance, const char* path) {
    dvbp_status st;
    if (null_arg(instance, "instance", st) || null_arg(path, "path", st)) return st;
    return guarded([&] { write_text_file(path, instance->csv); });
}

const char* dvbp_instance_csv(const dvbp_instance* instance) { return instance ? instance->csv.c_str() : ""; }

size_t dvbp_instance_item_count(const dvbp_instance* instance) { return instance ? instance->instance.size() : 0; }

size_t dvbp_instance_dimension(const dvbp_instance* instance) { return instance ? instance->instance.dimension() : 0; }

const char* dvbp_instance_span(const dvbp_instance* instance) { return instance ? instance->span.c_str() : ""; }

const char* dvbp_instance_mu(const dvbp_instance* instance) { return instance ? instance->mu.c_str() : ""; }

void dvbp_instance_free(dvbp_instance* instance) { delete instance; }

dvbp_status dvbp_simulate(const dvbp_instance* instance, const char* policy, uint64_t seed, dvbp_trace** out) {
    dvbp_status st;
    if (null_arg(instance, "instance", st) || null_arg(policy, "policy", st) || null_arg(out, "out", st)) return st;
    *out = nullptr;
    return guarded([&] { *out = new dvbp_trace(simulate(instance->instance, parse_policy(policy), seed)); });
}

const char* dvbp_trace_cost(const dvbp_trace* trace) { return trace ? trace->cost.c_str() : ""; }

size_t dvbp_trace_bin_count(const dvbp_trace* trace) { return trace ? trace->trace.bin_count() : 0; }

const char* dvbp_trace_policy(const dvbp_trace* trace) { return trace ? trace->trace.policy.c_str() : ""; }

int64_t dvbp_trace_bin_of(const dvbp_trace* trace, int64_t item_id) {
    if (!trace) return 0;
    auto it = trace->trace.assignment.find(item_id);
    return it == trace->trace.assignment.end() ? 0 : it->second;
}

const char* dvbp_trace_text(const dvbp_trace* trace) { return trace ? trace->text.c_str() : ""; }

dvbp_status dvbp_trace_write_file(const dvbp_trace* trace, const char* path) {
    dvbp_status st;
    if (null_arg(trace, "trace", st) || null_arg(path, "path", st)) return st;
    return guarded([&] { write_text_file(path, trace->text); });
}

dvbp_status dvbp_trace_parse(const char* text, dvbp_trace** out) {
    dvbp_status st;
    if (null_arg(text, "text", st) || null_arg(out, "out", st)) return st;
    *out = nullptr;
    return guarded([&] { *out = new dvbp_trace(parse_trace(text)); });
}

dvbp_status dvbp_trace_read_file(const char* path, dvbp_trace** out) {
    dvbp_status st;
    if (null_arg(path, "path", st) || null_arg(out, "out", st)) return st;
    *out = nullptr;
    return guarded([&] {
        try {
            *out = new dvbp_trace(parse_trace(read_text_file(path)));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Io) throw;
            throw Error(e.code(), std::string(path) + ": " + e.what());
        }
    });
}

void dvbp_trace_free(dvbp_trace* trace) { delete trace; }

dvbp_status dvbp_audit_run(const dvbp_instance* instance, const dvbp_trace* trace, dvbp_audit** out) {
    dvbp_status st;
    if (null_arg(instance, "instance", st) || null_arg(trace, "trace", st) || null_arg(out, "out", st)) return st;
    *out = nullptr;
    return guarded([&] {
        auto report = audit(instance->instance, trace->trace);
        auto result = std::make_unique<dvbp_audit>();
        for (const auto& v : report.violations) result->lines.push_back(v.kind + ": " + v.message);
        *out = result.release();
    });
}

size_t dvbp_audit_violation_count(const dvbp_audit* audit) { return audit ? audit->lines.size() : 0; }

const char* dvbp_audit_violation(const dvbp_audit* audit, size_t index) {
    if (!audit || index >= audit->lines.size()) return nullptr;
    return audit->lines[index].c_str();
}

void dvbp_audit_free(dvbp_audit* audit) { delete audit; }

dvbp_status dvbp_bounds_compute(const dvbp_instance* instance, int exact, size_t oracle_limit, dvbp_bounds** out) {
    dvbp_status st;
    if (null_arg(instance, "instance", st) || null_arg(out, "out", st)) return st;
    *out = nullptr;
    const size_t limit = oracle_limit ? oracle_limit : kDefaultOracleLimit;
    return guarded([&] { *out = new dvbp_bounds(compute_bounds(instance->instance, exact != 0, limit)); });
}

const char* dvbp_bounds_lb_span(const dvbp_bounds* b) { return b ? b->lb_span.c_str() : ""; }
const char* dvbp_bounds_lb_util(const dvbp_bounds* b) { return b ? b->lb_util.c_str() : ""; }
const char* dvbp_bounds_lb_height(const dvbp_bounds* b) { return b ? b->lb_height.c_str() : ""; }
const char* dvbp_bounds_opt_exact(const dvbp_bounds* b) { return b ? b->opt_exact.c_str() : ""; }
const char* dvbp_bounds_text(const dvbp_bounds* b) { return b ? b->text.c_str() : ""; }

const char* dvbp_bounds_csv_header(void) {
    static const std::string header = BoundsReport::csv_header();
    return header.c_str();
}

dvbp_status dvbp_bounds_csv_row(const dvbp_bounds* bounds, const char* instance_id, char* buf, size_t capacity,
                                size_t* needed) {
    dvbp_status st;
    if (null_arg(bounds, "bounds", st) || null_arg(instance_id, "instance_id", st)) return st;
    return copy_out(bounds->report.csv_row(instance_id), buf, capacity, needed);
}

void dvbp_bounds_free(dvbp_bounds* bounds) { delete bounds; }

dvbp_status dvbp_adversarial_generate(const dvbp_adversarial_params* params, dvbp_adversarial** out) {
    dvbp_status st;
    if (null_arg(params, "params", st) || null_arg(out, "out", st)) return st;
    if (null_arg(params->family, "params->family", st) || null_arg(params->mu, "params->mu", st)) return st;
    *out = nullptr;
    return guarded([&] {
        const Family family = parse_family(params->family);
        const Scalar mu = Scalar::parse(params->mu);
        AdversarialSpec spec{family, params->d, params->k, mu, Scalar(), Scalar()};
        bool defaults_failed = false;
        if (params->epsilon == nullptr || params->epsilon_prime == nullptr) {
            // Defaults only exist for a well-formed (family, d, k); otherwise
            // validate() below lists every problem.
            try {
                auto [e, ep] = default_epsilons(family, params->d, params->k);
                spec.epsilon = e;
                spec.epsilon_prime = ep;
            } catch (const Error&) {
                defaults_failed = true;
            }
        }
        if (params->epsilon) spec.epsilon = Scalar::parse(params->epsilon);
        if (params->epsilon_prime) spec.epsilon_prime = Scalar::parse(params->epsilon_prime);
        auto problems = validate(spec);
        if (!problems.empty()) {
            std::string msg;
            for (const auto& p : problems) {
                // Epsilon complaints are noise when no default could be derived.
                if (defaults_failed && p.starts_with("epsilon")) continue;
                msg += (msg.empty() ? "" : "\n") + p;
            }
            fail(ErrorCode::Constraint, msg);
        }
        *out = new dvbp_adversarial(spec);
    });
}

const dvbp_instance* dvbp_adversarial_instance(const dvbp_adversarial* adv) { return adv ? &adv->instance : nullptr; }
const char* dvbp_adversarial_epsilon(const dvbp_adversarial* adv) { return adv ? adv->epsilon.c_str() : ""; }
const char* dvbp_adversarial_epsilon_prime(const dvbp_adversarial* adv) { return adv ? adv->epsilon_prime.c_str() : ""; }
const char* dvbp_adversarial_predicted_ratio(const dvbp_adversarial* adv) { return adv ? adv->predicted_ratio.c_str() : ""; }
const char* dvbp_adversarial_guaranteed_ratio(const dvbp_adversarial* adv) { return adv ? adv->guaranteed_ratio.c_str() : ""; }
const char* dvbp_adversarial_opt_upper(const dvbp_adversarial* adv) { return adv ? adv->opt_upper.c_str() : ""; }
long long dvbp_adversarial_predicted_bins(const dvbp_adversarial* adv) { return adv ? adv->predicted_bins : 0; }
void dvbp_adversarial_free(dvbp_adversarial* adv) { delete adv; }

dvbp_status dvbp_rational_div(const char* a, const char* b, char* buf, size_t capacity, size_t* needed) {
    dvbp_status st;
    if (null_arg(a, "a", st) || null_arg(b, "b", st)) return st;
    std::string result;
    st = guarded([&] { result = (Scalar::parse(a) / Scalar::parse(b)).str(); });
    if (st != DVBP_OK) return st;
    return copy_out(result, buf, capacity, needed);
}

dvbp_status dvbp_rational_compare(const char* a, const char* b, int* result) {
    dvbp_status st;
    if (null_arg(a, "a", st) || null_arg(b, "b", st) || null_arg(result, "result", st)) return st;
    return guarded([&] {
        auto c = Scalar::parse(a) <=> Scalar::parse(b);
        *result = c < 0 ? -1 : (c > 0 ? 1 : 0);
    });
}

dvbp_status dvbp_experiment_run(const char* config_text, const char* out_dir, unsigned threads) {
    dvbp_status st;
    if (null_arg(config_text, "config_text", st) || null_arg(out_dir, "out_dir", st)) return st;
    return guarded([&] {
        auto plan = parse_experiment_config(config_text);
        if (threads > 0) plan.base.threads = threads;
        run_experiment(plan, out_dir);
    });
}

}  // extern "C"
