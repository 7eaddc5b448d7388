#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dvbp/model.hpp"

namespace dvbp {

inline constexpr size_t kDefaultOracleLimit = 16;

struct LoadSegment {
    Interval interval;
    SizeVec load;               // total size of the active items
    std::vector<size_t> active;  // instance indices, ascending
};

// Piecewise-constant load s(R, t) between consecutive event times. Segments
// partition [min arrival, max departure); gaps with no active item appear as
// segments with an empty active set.
struct LoadProfile {
    std::vector<LoadSegment> segments;
};

LoadProfile load_profile(const Instance& instance);

// Measure of the union of active intervals.
Scalar lb_span(const Instance& instance);
// (1/d) * sum over items of ||s(r)||_inf * duration.
Scalar lb_util(const Instance& instance);
// Integral of ceil(||s(R, t)||_inf) over time.
Scalar lb_height(const Instance& instance);

// Exact minimum number of bins for one static vector bin packing problem,
// by branch and bound. Throws OracleLimit when there are more than `limit`
// vectors.
size_t min_bins_exact(std::span<const SizeVec> sizes, const SizeVec& capacity, size_t limit = kDefaultOracleLimit);

struct SegmentBins {
    Interval interval;
    size_t bins = 0;
};

struct OptResult {
    Scalar value;
    std::vector<SegmentBins> segments;
};

// Offline optimum with free repacking: sum over load segments of segment
// length times the exact bin count of the active items.
OptResult opt_exact(const Instance& instance, size_t limit = kDefaultOracleLimit);

struct BoundsReport {
    Scalar lb_span;
    Scalar lb_util;
    Scalar lb_height;
    std::optional<Scalar> opt_exact;
    std::optional<std::vector<SegmentBins>> opt_segments;

    // "key=value" lines.
    std::string text() const;
    // instance_id,lb_span,lb_util,lb_height,opt_exact (empty when skipped).
    std::string csv_row(const std::string& instance_id) const;
    static std::string csv_header();
};

BoundsReport compute_bounds(const Instance& instance, bool exact, size_t limit = kDefaultOracleLimit);

}  // namespace dvbp
