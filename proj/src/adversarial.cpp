#include "dvbp/adversarial.hpp"

#include "dvbp/engine.hpp"
#include "dvbp/error.hpp"

namespace dvbp {

namespace {

Scalar S(long long v) { return Scalar(v); }

void require_valid(const AdversarialSpec& spec) {
    auto problems = validate(spec);
    if (problems.empty()) return;
    std::string msg = "invalid " + std::string(family_name(spec.family)) + " parameters:";
    for (const auto& p : problems) msg += "\n  " + p;
    fail(ErrorCode::Constraint, msg);
}

void annotate(Instance& instance, const AdversarialSpec& spec) {
    instance.set_metadata("family", std::string(family_name(spec.family)));
    instance.set_metadata("d", std::to_string(spec.d));
    instance.set_metadata(spec.family == Family::MtfLB ? "n" : "k", std::to_string(spec.k));
    instance.set_metadata("mu", spec.mu.str());
    if (spec.family != Family::MtfLB) {
        instance.set_metadata("epsilon", spec.epsilon.str());
        instance.set_metadata("epsilon_prime", spec.epsilon_prime.str());
    }
}

// Group (1..d) of an odd-indexed item j = 2m - 1.
int group_of(int j, int k) { return ((j + 1) / 2 - 1) / k + 1; }

}  // namespace

std::string_view family_name(Family family) {
    switch (family) {
        case Family::AnyFitLB: return "anyfit";
        case Family::NextFitLB: return "nextfit";
        case Family::MtfLB: return "mtf";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (auto f : {Family::AnyFitLB, Family::NextFitLB, Family::MtfLB}) {
        if (family_name(f) == name) return f;
    }
    fail(ErrorCode::Usage, "unknown family '" + std::string(name) + "' (expected anyfit, nextfit or mtf)");
}

std::pair<Scalar, Scalar> default_epsilons(Family family, int d, int k) {
    if (d < 1) fail(ErrorCode::Constraint, "d must be at least 1");
    switch (family) {
        case Family::AnyFitLB: {
            if (k < 1) fail(ErrorCode::Constraint, "k must be at least 1");
            Scalar eps = Scalar(1) / S(3LL * d * d * k);
            return {eps, eps / S(3)};
        }
        case Family::NextFitLB: {
            if (k < 2) fail(ErrorCode::Constraint, "k must be at least 2");
            if (k % 2 != 0) fail(ErrorCode::Constraint, "k must be even");
            return {Scalar(1) / S(8LL * d * d * k), Scalar(1) / S(2LL * d * k)};
        }
        case Family::MtfLB:
            if (d != 1) fail(ErrorCode::Constraint, "d must be 1");
            if (k < 1) fail(ErrorCode::Constraint, "n must be at least 1");
            return {Scalar(), Scalar()};
    }
    return {};
}

AdversarialSpec make_spec(Family family, int d, int k, const Scalar& mu) {
    auto [eps, eps_prime] = default_epsilons(family, d, k);
    return AdversarialSpec{family, d, k, mu, eps, eps_prime};
}

std::vector<std::string> validate(const AdversarialSpec& s) {
    std::vector<std::string> out;
    const Scalar d = S(s.d), k = S(s.k);
    const Scalar& e = s.epsilon;
    const Scalar& ep = s.epsilon_prime;

    if (s.d < 1) out.emplace_back("d must be at least 1");
    if (s.mu < Scalar(1)) out.emplace_back("mu must be at least 1");

    auto open_unit = [&](const Scalar& v, const char* name) {
        if (v.sign() <= 0 || v >= Scalar(1)) out.push_back(std::string(name) + " must lie in (0, 1)");
    };

    switch (s.family) {
        case Family::AnyFitLB:
            if (s.k < 1) out.emplace_back("k must be at least 1");
            open_unit(e, "epsilon");
            open_unit(ep, "epsilon_prime");
            if (!(e > ep)) out.emplace_back("epsilon must exceed epsilon_prime");
            if (!(d * d * e * k < Scalar(1))) out.emplace_back("d^2 * epsilon * k must be < 1");
            if (!(d * e > S(2) * ep)) out.emplace_back("d * epsilon must exceed 2 * epsilon_prime");
            if (!(e * (Scalar(1) + d) < Scalar(1))) out.emplace_back("epsilon * (1 + d) must be < 1");
            break;
        case Family::NextFitLB:
            if (s.k < 2) out.emplace_back("k must be at least 2");
            if (s.k % 2 != 0) out.emplace_back("k must be even");
            open_unit(e, "epsilon");
            open_unit(ep, "epsilon_prime");
            if (!(ep > S(2) * d * e)) out.emplace_back("epsilon_prime must exceed 2 * d * epsilon");
            if (!(ep * d * k < Scalar(1))) out.emplace_back("epsilon_prime * d * k must be < 1");
            break;
        case Family::MtfLB:
            if (s.d != 1) out.emplace_back("d must be 1");
            if (s.k < 1) out.emplace_back("n must be at least 1");
            break;
    }
    return out;
}

Instance gen_anyfit_lb(const AdversarialSpec& spec) {
    require_valid(spec);
    const int d = spec.d, k = spec.k;
    const Scalar& eps = spec.epsilon;
    const Scalar& eps_p = spec.epsilon_prime;
    const auto dim = static_cast<size_t>(d);
    const Scalar r0_end = Scalar(1) + eps_p;

    std::vector<Item> r0;
    for (int j = 1; j <= 2 * d * k; ++j) {
        SizeVec size(dim);
        if (j % 2 == 0) {
            size = SizeVec(dim, S(d) * eps - eps_p);
        } else {
            size = SizeVec(dim, eps);
            size[static_cast<size_t>(group_of(j, k) - 1)] = Scalar(1) - S(d) * eps;
        }
        r0.push_back(Item{j, Scalar(0), r0_end, std::move(size)});
    }

    // The R1 items must fit every bin left by R0. Check the behavior directly
    // rather than trusting the inequalities.
    {
        const PackingTrace trace = simulate(Instance(dim, r0), PolicyKind::FirstFit, 0, SimOptions{false});
        const SizeVec r1_size(dim, eps_p);
        const SizeVec unit = SizeVec::ones(dim);
        for (const auto& bin : trace.bins) {
            SizeVec load(dim);
            for (const auto& p : bin.placements) load += r0[static_cast<size_t>(p.item - 1)].size;
            if (!fits(load, r1_size, unit)) {
                fail(ErrorCode::Constraint, "an R1 item does not fit bin " + std::to_string(bin.id) + " (load " +
                                                load.str() + ")");
            }
        }
    }

    std::vector<Item> items = std::move(r0);
    for (int j = 1; j <= d * k; ++j) {
        items.push_back(Item{2 * d * k + j, Scalar(1), Scalar(1) + spec.mu, SizeVec(dim, eps_p)});
    }
    Instance instance(dim, std::move(items));
    annotate(instance, spec);
    instance.set_metadata("r0_departure", r0_end.str());
    return instance;
}

Instance gen_nextfit_lb(const AdversarialSpec& spec) {
    require_valid(spec);
    const int d = spec.d, k = spec.k;
    const auto dim = static_cast<size_t>(d);
    std::vector<Item> items;
    for (int j = 1; j <= 2 * d * k; ++j) {
        if (j % 2 == 0) {
            items.push_back(Item{j, Scalar(0), spec.mu, SizeVec(dim, spec.epsilon_prime)});
        } else {
            SizeVec size(dim, spec.epsilon);
            size[static_cast<size_t>(group_of(j, k) - 1)] = Scalar(1, 2) - S(d) * spec.epsilon;
            items.push_back(Item{j, Scalar(0), Scalar(1), std::move(size)});
        }
    }
    Instance instance(dim, std::move(items));
    annotate(instance, spec);
    return instance;
}

Instance gen_mtf_lb(int n, const Scalar& mu) {
    AdversarialSpec spec{Family::MtfLB, 1, n, mu, Scalar(), Scalar()};
    require_valid(spec);
    std::vector<Item> items;
    for (int j = 1; j <= 4 * n; ++j) {
        if (j % 2 == 1) {
            items.push_back(Item{j, Scalar(0), Scalar(1), SizeVec{Scalar(1, 2)}});
        } else {
            items.push_back(Item{j, Scalar(0), mu, SizeVec{Scalar(1) / S(2LL * n)}});
        }
    }
    Instance instance(1, std::move(items));
    annotate(instance, spec);
    return instance;
}

Instance generate(const AdversarialSpec& spec) {
    switch (spec.family) {
        case Family::AnyFitLB: return gen_anyfit_lb(spec);
        case Family::NextFitLB: return gen_nextfit_lb(spec);
        case Family::MtfLB:
            require_valid(spec);
            return gen_mtf_lb(spec.k, spec.mu);
    }
    fail(ErrorCode::Usage, "unknown family");
}

Scalar predicted_ratio(const AdversarialSpec& spec) {
    require_valid(spec);
    const Scalar d = S(spec.d), k = S(spec.k), mu = spec.mu;
    switch (spec.family) {
        case Family::AnyFitLB: return d * k * (mu + S(1)) / (k + mu + S(1));
        case Family::NextFitLB: return (S(1) + (k - S(1)) * d) * mu / (mu + k / S(2));
        case Family::MtfLB: return S(2) * k * mu / (mu + k);
    }
    return {};
}

Scalar guaranteed_ratio(const AdversarialSpec& spec) {
    if (spec.family != Family::AnyFitLB) return predicted_ratio(spec);
    require_valid(spec);
    const Scalar dk = S(static_cast<long long>(spec.d) * spec.k);
    return dk * (spec.mu + S(1)) / (S(spec.k) + spec.mu + S(1) + dk * spec.epsilon_prime);
}

long long predicted_bins(const AdversarialSpec& spec) {
    const long long d = spec.d, k = spec.k;
    switch (spec.family) {
        case Family::AnyFitLB: return d * k;
        case Family::NextFitLB: return 1 + (k - 1) * d;
        case Family::MtfLB: return 2 * k;
    }
    return 0;
}

Scalar opt_upper_bound(const AdversarialSpec& spec) {
    require_valid(spec);
    const Scalar k = S(spec.k), mu = spec.mu;
    switch (spec.family) {
        case Family::AnyFitLB:
            // One bin for G0 and R1 on [0, mu+1), k bins of one G_i item per
            // dimension on [0, 1+eps').
            return mu + S(1) + k * (S(1) + spec.epsilon_prime);
        case Family::NextFitLB: return mu + k / S(2);
        case Family::MtfLB: return mu + k;
    }
    return {};
}

}  // namespace dvbp
