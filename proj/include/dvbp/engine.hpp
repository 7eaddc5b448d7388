#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dvbp/model.hpp"
#include "dvbp/policy.hpp"

namespace dvbp {

struct BinPlacement {
    ItemId item = 0;
    Scalar arrival;
    Scalar departure;
};

struct BinRecord {
    BinId id = 0;
    Scalar opened_at;
    Scalar closed_at;
    std::vector<BinPlacement> placements;  // in placement order

    Scalar usage() const { return closed_at - opened_at; }
};

// The open-bin list right after an arrival was placed.
struct ListSnapshot {
    Scalar time;
    ItemId item = 0;
    std::vector<BinId> order;
};

struct PackingTrace {
    std::string policy;
    std::vector<BinRecord> bins;  // ids 1..n in opening order
    std::unordered_map<ItemId, BinId> assignment;
    std::vector<ListSnapshot> list_order;  // empty unless recorded

    size_t bin_count() const noexcept { return bins.size(); }
    const BinRecord& bin(BinId id) const { return bins.at(static_cast<size_t>(id - 1)); }
};

struct SimOptions {
    bool record_list_order = true;
};

// Replays the instance through the Any Fit policy. At equal timestamps all
// departures are processed before any arrival; simultaneous arrivals go in
// instance order. The seed only feeds RandomFit.
PackingTrace simulate(const Instance& instance, PolicyKind policy, std::uint64_t seed = 0, SimOptions opts = {});

// Total usage time: sum over bins of closed_at - opened_at.
Scalar cost_of(const PackingTrace& trace);

struct Violation {
    std::string kind;  // assignment, record, order, capacity, reopen, any-fit
    std::string message;
};

struct AuditReport {
    std::vector<Violation> violations;
    bool clean() const noexcept { return violations.empty(); }
};

// Re-derives every trace invariant from scratch: complete and consistent
// assignment, dense bin ids in opening order, open/close times, capacity at
// every placement, no reopened bins, and Any Fit conformance (a new bin only
// when no bin in L fits). Next Fit traces are checked against the single
// current bin.
AuditReport audit(const Instance& instance, const PackingTrace& trace);

// Trace text format, one line per placement then one per bin:
//   # policy=<name>
//   item_id,bin_id,arrival,departure
//   bin,bin_id,opened_at,closed_at
std::string write_trace(const PackingTrace& trace);
PackingTrace parse_trace(std::string_view text);

}  // namespace dvbp
