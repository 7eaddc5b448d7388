#include "dvbp/engine.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "dvbp/error.hpp"
#include "text_util.hpp"

namespace dvbp {

namespace {

// Item indices in processing order: by arrival time, then instance order.
std::vector<size_t> arrival_order(const Instance& instance) {
    std::vector<size_t> order(instance.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return instance.item(a).arrival < instance.item(b).arrival;
    });
    return order;
}

struct Departure {
    Scalar time;
    size_t index;
    bool operator>(const Departure& o) const { return o.time < time || (time == o.time && index > o.index); }
};

struct LiveBin {
    SizeVec load;
    size_t active = 0;
};

}  // namespace

PackingTrace simulate(const Instance& instance, PolicyKind policy, std::uint64_t seed, SimOptions opts) {
    PackingTrace trace;
    trace.policy = std::string(policy_name(policy));
    trace.assignment.reserve(instance.size());

    SplitMix64 rng(seed);
    OpenBinList list;
    std::vector<LiveBin> live;  // indexed by bin id - 1
    std::priority_queue<Departure, std::vector<Departure>, std::greater<>> departures;
    std::vector<BinId> bin_of(instance.size(), 0);

    const auto order = arrival_order(instance);
    size_t next = 0;

    while (next < order.size() || !departures.empty()) {
        const bool depart_first =
            !departures.empty() && (next == order.size() || departures.top().time <= instance.item(order[next]).arrival);

        if (depart_first) {
            const Departure ev = departures.top();
            departures.pop();
            const Item& item = instance.item(ev.index);
            const BinId b = bin_of[ev.index];
            LiveBin& bin = live[static_cast<size_t>(b - 1)];
            bin.load -= item.size;
            if (--bin.active == 0) {
                trace.bins[static_cast<size_t>(b - 1)].closed_at = ev.time;
                on_departure(policy, list, b);
            } else {
                list.sub_load(b, item.size);
            }
            continue;
        }

        const size_t idx = order[next++];
        const Item& item = instance.item(idx);
        for (size_t j = 0; j < item.size.dim(); ++j) {
            if (item.size[j] > instance.capacity()[j]) {
                fail(ErrorCode::Usage, "item " + std::to_string(item.id) + " exceeds capacity in dimension " +
                                           std::to_string(j + 1));
            }
        }

        BinId target;
        if (auto chosen = select_bin(policy, list, item.size, instance.capacity(), rng)) {
            target = *chosen;
            LiveBin& bin = live[static_cast<size_t>(target - 1)];
            bin.load += item.size;
            ++bin.active;
            list.add_load(target, item.size);
            after_placement(policy, list, target, std::nullopt);
        } else {
            target = static_cast<BinId>(trace.bins.size()) + 1;
            live.push_back(LiveBin{item.size, 1});
            trace.bins.push_back(BinRecord{target, item.arrival, item.departure, {}});
            after_placement(policy, list, target, OpenBin{target, item.arrival, item.size});
        }

        BinRecord& rec = trace.bins[static_cast<size_t>(target - 1)];
        rec.placements.push_back(BinPlacement{item.id, item.arrival, item.departure});
        rec.closed_at = max(rec.closed_at, item.departure);
        bin_of[idx] = target;
        trace.assignment.emplace(item.id, target);
        departures.push(Departure{item.departure, idx});

        if (opts.record_list_order) trace.list_order.push_back(ListSnapshot{item.arrival, item.id, list.order()});
    }
    return trace;
}

Scalar cost_of(const PackingTrace& trace) {
    Scalar total;
    for (const auto& bin : trace.bins) total += bin.usage();
    return total;
}

AuditReport audit(const Instance& instance, const PackingTrace& trace) {
    AuditReport report;
    auto flag = [&](std::string kind, std::string msg) { report.violations.push_back({std::move(kind), std::move(msg)}); };

    std::unordered_map<ItemId, size_t> index_of;
    for (size_t i = 0; i < instance.size(); ++i) index_of.emplace(instance.item(i).id, i);

    // Assignment: every item in exactly one bin, with matching times.
    std::vector<BinId> bin_of(instance.size(), 0);
    for (size_t b = 0; b < trace.bins.size(); ++b) {
        const BinRecord& rec = trace.bins[b];
        if (rec.id != static_cast<BinId>(b) + 1) {
            flag("order", "bin at position " + std::to_string(b + 1) + " has id " + std::to_string(rec.id));
        }
        if (b > 0 && rec.opened_at < trace.bins[b - 1].opened_at) {
            flag("order", "bin " + std::to_string(rec.id) + " opened before bin " + std::to_string(trace.bins[b - 1].id));
        }
        if (rec.placements.empty()) {
            flag("record", "bin " + std::to_string(rec.id) + " has no placements");
            continue;
        }
        Scalar first = rec.placements.front().arrival;
        Scalar last = rec.placements.front().departure;
        for (const auto& p : rec.placements) {
            auto it = index_of.find(p.item);
            if (it == index_of.end()) {
                flag("assignment", "bin " + std::to_string(rec.id) + " holds unknown item " + std::to_string(p.item));
                continue;
            }
            const Item& item = instance.item(it->second);
            if (bin_of[it->second] != 0) {
                flag("assignment", "item " + std::to_string(p.item) + " placed in bins " +
                                       std::to_string(bin_of[it->second]) + " and " + std::to_string(rec.id));
                continue;
            }
            bin_of[it->second] = rec.id;
            if (p.arrival != item.arrival || p.departure != item.departure) {
                flag("assignment", "item " + std::to_string(p.item) + " placement times differ from the instance");
            }
            first = min(first, item.arrival);
            last = max(last, item.departure);
        }
        if (rec.opened_at != first) {
            flag("record", "bin " + std::to_string(rec.id) + " opened_at " + rec.opened_at.str() +
                               " but first placement arrives at " + first.str());
        }
        if (rec.closed_at != last) {
            flag("record", "bin " + std::to_string(rec.id) + " closed_at " + rec.closed_at.str() +
                               " but last departure is " + last.str());
        }
    }
    for (size_t i = 0; i < instance.size(); ++i) {
        if (bin_of[i] == 0) flag("assignment", "item " + std::to_string(instance.item(i).id) + " is not placed");
        auto it = trace.assignment.find(instance.item(i).id);
        if (it == trace.assignment.end()) {
            flag("assignment", "item " + std::to_string(instance.item(i).id) + " is missing from the assignment map");
        } else if (bin_of[i] != 0 && it->second != bin_of[i]) {
            flag("assignment", "item " + std::to_string(instance.item(i).id) + " assignment map disagrees with bin records");
        }
    }
    if (!report.clean()) return report;  // replay needs a consistent assignment

    // Replay in engine event order: capacity, reopening, Any Fit conformance.
    const bool next_fit = trace.policy == policy_name(PolicyKind::NextFit);
    const auto order = arrival_order(instance);
    std::vector<LiveBin> live(trace.bins.size(), LiveBin{SizeVec(instance.dimension()), 0});
    std::vector<bool> opened(trace.bins.size(), false);
    std::priority_queue<Departure, std::vector<Departure>, std::greater<>> departures;
    BinId current = 0;
    size_t next = 0;

    while (next < order.size()) {
        const Scalar now = instance.item(order[next]).arrival;
        while (!departures.empty() && departures.top().time <= now) {
            const Departure ev = departures.top();
            departures.pop();
            LiveBin& bin = live[static_cast<size_t>(bin_of[ev.index] - 1)];
            bin.load -= instance.item(ev.index).size;
            --bin.active;
        }

        const size_t idx = order[next++];
        const Item& item = instance.item(idx);
        const BinId b = bin_of[idx];
        const auto slot = static_cast<size_t>(b - 1);
        const std::string who = "item " + std::to_string(item.id);

        if (!opened[slot]) {
            for (size_t other = 0; other < live.size(); ++other) {
                if (!opened[other] || live[other].active == 0) continue;
                if (next_fit && static_cast<BinId>(other) + 1 != current) continue;
                if (fits(live[other].load, item.size, instance.capacity())) {
                    flag("any-fit", who + " opened bin " + std::to_string(b) + " although bin " +
                                        std::to_string(other + 1) + " could hold it");
                    break;
                }
            }
            opened[slot] = true;
            current = b;
        } else if (live[slot].active == 0) {
            flag("reopen", who + " placed into bin " + std::to_string(b) + " after it closed");
        } else if (next_fit && b != current) {
            flag("any-fit", who + " placed into released bin " + std::to_string(b));
        }

        live[slot].load += item.size;
        ++live[slot].active;
        if (!fits(SizeVec(instance.dimension()), live[slot].load, instance.capacity())) {
            flag("capacity", who + " overloads bin " + std::to_string(b) + " to " + live[slot].load.str());
        }
        departures.push(Departure{item.departure, idx});
    }
    return report;
}

std::string write_trace(const PackingTrace& trace) {
    std::ostringstream out;
    out << "# policy=" << trace.policy << '\n';
    for (const auto& bin : trace.bins) {
        for (const auto& p : bin.placements) {
            out << p.item << ',' << bin.id << ',' << p.arrival.str() << ',' << p.departure.str() << '\n';
        }
    }
    for (const auto& bin : trace.bins) {
        out << "bin," << bin.id << ',' << bin.opened_at.str() << ',' << bin.closed_at.str() << '\n';
    }
    return out.str();
}

PackingTrace parse_trace(std::string_view text) {
    PackingTrace trace;
    std::vector<std::pair<BinId, BinPlacement>> placements;

    detail::for_each_line(text, [&](size_t lineno, std::string_view line) {
        auto at = [lineno](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
        if (line.front() == '#') {
            auto body = detail::trim(line.substr(1));
            if (body.starts_with("policy=")) trace.policy = std::string(detail::trim(body.substr(7)));
            return;
        }
        auto f = detail::split(line, ',');
        if (f.size() != 4) fail(ErrorCode::Parse, at("expected 4 fields"));
        try {
            if (f[0] == "bin") {
                BinRecord rec;
                rec.id = detail::parse_int64(f[1]);
                rec.opened_at = Scalar::parse(f[2]);
                rec.closed_at = Scalar::parse(f[3]);
                trace.bins.push_back(std::move(rec));
            } else {
                placements.emplace_back(detail::parse_int64(f[1]),
                                        BinPlacement{detail::parse_int64(f[0]), Scalar::parse(f[2]), Scalar::parse(f[3])});
            }
        } catch (const Error& e) {
            fail(ErrorCode::Parse, at(e.what()));
        }
    });

    std::unordered_map<BinId, size_t> slot;
    for (size_t i = 0; i < trace.bins.size(); ++i) {
        if (!slot.emplace(trace.bins[i].id, i).second) {
            fail(ErrorCode::Parse, "duplicate bin line for bin " + std::to_string(trace.bins[i].id));
        }
    }
    for (auto& [bin, p] : placements) {
        auto it = slot.find(bin);
        if (it == slot.end()) fail(ErrorCode::Parse, "placement of item " + std::to_string(p.item) + " into undeclared bin " + std::to_string(bin));
        trace.assignment.emplace(p.item, bin);  // duplicates stay in the bin records for audit
        trace.bins[it->second].placements.push_back(std::move(p));
    }
    return trace;
}

}  // namespace dvbp
