#include "dvbp/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dvbp/error.hpp"

namespace dvbp {

namespace {

// Divides every component by the capacity so the oracle and the ceiling
// bounds work against unit bins.
SizeVec normalized(const SizeVec& v, const SizeVec& capacity) {
    SizeVec out(v.dim());
    for (size_t j = 0; j < v.dim(); ++j) out[j] = v[j] / capacity[j];
    return out;
}

Scalar ceil_linf(const SizeVec& load, const SizeVec& capacity) {
    Scalar::Int best = 0;
    for (size_t j = 0; j < load.dim(); ++j) best = std::max(best, (load[j] / capacity[j]).ceil());
    return Scalar::from_int(best);
}

class BinPackingSearch {
public:
    BinPackingSearch(std::vector<SizeVec> items, size_t upper, size_t lower)
        : items_(std::move(items)), dim_(items_.front().dim()), best_(upper), lower_(lower) {
        suffix_.assign(items_.size() + 1, SizeVec(dim_));
        for (size_t i = items_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + items_[i];
    }

    size_t solve() {
        if (best_ > lower_) {
            std::vector<SizeVec> loads;
            dfs(0, loads);
        }
        return best_;
    }

private:
    void dfs(size_t i, std::vector<SizeVec>& loads) {
        if (best_ == lower_ || loads.size() >= best_) return;
        if (i == items_.size()) {
            best_ = loads.size();
            return;
        }
        // Remaining demand must fit in the free space of the open bins plus
        // at most (best - 1 - open) new bins, or this branch cannot improve.
        const Scalar spare_bins = Scalar(static_cast<long long>(best_) - 1 - static_cast<long long>(loads.size()));
        for (size_t j = 0; j < dim_; ++j) {
            Scalar free = Scalar(static_cast<long long>(loads.size()));
            for (const auto& l : loads) free -= l[j];
            if (suffix_[i][j] > free + spare_bins) return;
        }

        const SizeVec& item = items_[i];
        std::vector<size_t> tried;
        for (size_t b = 0; b < loads.size(); ++b) {
            if (!fits(loads[b], item, unit())) continue;
            // Bins with identical loads lead to symmetric subtrees.
            if (std::any_of(tried.begin(), tried.end(), [&](size_t t) { return loads[t] == loads[b]; })) continue;
            tried.push_back(b);
            loads[b] += item;
            dfs(i + 1, loads);
            loads[b] -= item;
            if (best_ == lower_) return;
        }
        if (loads.size() + 1 < best_) {
            loads.push_back(item);
            dfs(i + 1, loads);
            loads.pop_back();
        }
    }

    const SizeVec& unit() {
        if (unit_.dim() != dim_) unit_ = SizeVec::ones(dim_);
        return unit_;
    }

    std::vector<SizeVec> items_;
    size_t dim_;
    size_t best_;
    size_t lower_;
    std::vector<SizeVec> suffix_;
    SizeVec unit_;
};

}  // namespace

LoadProfile load_profile(const Instance& instance) {
    LoadProfile profile;
    if (instance.empty()) return profile;

    std::map<Scalar, std::pair<std::vector<size_t>, std::vector<size_t>>> events;  // time -> (arrive, depart)
    for (size_t i = 0; i < instance.size(); ++i) {
        events[instance.item(i).arrival].first.push_back(i);
        events[instance.item(i).departure].second.push_back(i);
    }

    std::set<size_t> active;
    SizeVec load(instance.dimension());
    for (auto it = events.begin(); it != events.end(); ++it) {
        for (size_t i : it->second.second) {
            active.erase(i);
            load -= instance.item(i).size;
        }
        for (size_t i : it->second.first) {
            active.insert(i);
            load += instance.item(i).size;
        }
        auto nxt = std::next(it);
        if (nxt == events.end()) break;
        profile.segments.push_back(
            LoadSegment{Interval{it->first, nxt->first}, load, std::vector<size_t>(active.begin(), active.end())});
    }
    return profile;
}

Scalar lb_span(const Instance& instance) { return span_of(instance.items()); }

Scalar lb_util(const Instance& instance) {
    Scalar total;
    for (const auto& item : instance.items()) {
        total += linf_norm(normalized(item.size, instance.capacity())) * item.duration();
    }
    return total / Scalar(static_cast<long long>(instance.dimension()));
}

Scalar lb_height(const Instance& instance) {
    Scalar total;
    for (const auto& seg : load_profile(instance).segments) {
        if (seg.active.empty()) continue;
        total += seg.interval.length() * ceil_linf(seg.load, instance.capacity());
    }
    return total;
}

size_t min_bins_exact(std::span<const SizeVec> sizes, const SizeVec& capacity, size_t limit) {
    if (sizes.size() > limit) {
        fail(ErrorCode::OracleLimit, "oracle limit: " + std::to_string(sizes.size()) + " items exceed the limit of " +
                                         std::to_string(limit));
    }
    if (sizes.empty()) return 0;

    std::vector<SizeVec> items;
    items.reserve(sizes.size());
    SizeVec total(capacity.dim());
    for (const auto& s : sizes) {
        if (s.dim() != capacity.dim()) fail(ErrorCode::Usage, "min_bins_exact: dimension mismatch");
        items.push_back(normalized(s, capacity));
        if (!fits(SizeVec(capacity.dim()), items.back(), SizeVec::ones(capacity.dim()))) {
            fail(ErrorCode::Usage, "min_bins_exact: item " + s.str() + " exceeds the capacity");
        }
        total += items.back();
    }
    // Decreasing L-inf size; component sum then original position break ties.
    std::vector<size_t> order(items.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        auto ca = linf_norm(items[a]) <=> linf_norm(items[b]);
        if (ca != 0) return ca > 0;
        return component_sum(items[a]) > component_sum(items[b]);
    });
    std::vector<SizeVec> sorted;
    sorted.reserve(items.size());
    for (size_t i : order) sorted.push_back(items[i]);

    const auto lower = static_cast<size_t>(std::max<Scalar::Int>(1, ceil_linf(total, SizeVec::ones(total.dim())).num()));

    // First fit decreasing gives the initial incumbent.
    std::vector<SizeVec> ffd;
    const SizeVec unit = SizeVec::ones(capacity.dim());
    for (const auto& s : sorted) {
        auto it = std::find_if(ffd.begin(), ffd.end(), [&](const SizeVec& l) { return fits(l, s, unit); });
        if (it == ffd.end()) {
            ffd.push_back(s);
        } else {
            *it += s;
        }
    }

    BinPackingSearch search(std::move(sorted), ffd.size(), lower);
    return search.solve();
}

OptResult opt_exact(const Instance& instance, size_t limit) {
    OptResult result;
    const auto profile = load_profile(instance);
    for (const auto& seg : profile.segments) {
        if (seg.active.size() > limit) {
            fail(ErrorCode::OracleLimit, "oracle limit: segment [" + seg.interval.start.str() + ", " +
                                             seg.interval.end.str() + ") has " + std::to_string(seg.active.size()) +
                                             " active items, limit is " + std::to_string(limit));
        }
    }

    std::map<std::vector<size_t>, size_t> solved;
    for (const auto& seg : profile.segments) {
        size_t bins = 0;
        if (!seg.active.empty()) {
            auto it = solved.find(seg.active);
            if (it == solved.end()) {
                std::vector<SizeVec> sizes;
                sizes.reserve(seg.active.size());
                for (size_t i : seg.active) sizes.push_back(instance.item(i).size);
                it = solved.emplace(seg.active, min_bins_exact(sizes, instance.capacity(), limit)).first;
            }
            bins = it->second;
        }
        result.segments.push_back(SegmentBins{seg.interval, bins});
        result.value += seg.interval.length() * Scalar(static_cast<long long>(bins));
    }
    return result;
}

std::string BoundsReport::text() const {
    std::ostringstream out;
    out << "lb_span=" << lb_span.str() << '\n';
    out << "lb_util=" << lb_util.str() << '\n';
    out << "lb_height=" << lb_height.str() << '\n';
    if (opt_exact) out << "opt_exact=" << opt_exact->str() << '\n';
    return out.str();
}

std::string BoundsReport::csv_header() { return "instance_id,lb_span,lb_util,lb_height,opt_exact"; }

std::string BoundsReport::csv_row(const std::string& instance_id) const {
    return instance_id + "," + lb_span.str() + "," + lb_util.str() + "," + lb_height.str() + "," +
           (opt_exact ? opt_exact->str() : std::string());
}

BoundsReport compute_bounds(const Instance& instance, bool exact, size_t limit) {
    BoundsReport report;
    report.lb_span = lb_span(instance);
    report.lb_util = lb_util(instance);
    report.lb_height = lb_height(instance);
    if (exact) {
        auto opt = opt_exact(instance, limit);
        report.opt_exact = opt.value;
        report.opt_segments = std::move(opt.segments);
    }
    return report;
}

}  // namespace dvbp
