#include "dvbp/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "dvbp/error.hpp"

namespace dvbp {

Instance::Instance(size_t dimension, std::vector<Item> items)
    : Instance(dimension, std::move(items), SizeVec::ones(dimension)) {}

Instance::Instance(size_t dimension, std::vector<Item> items, SizeVec capacity)
    : dimension_(dimension), items_(std::move(items)), capacity_(std::move(capacity)) {
    if (dimension_ == 0) fail(ErrorCode::Usage, "instance dimension must be positive");
    if (capacity_.dim() != dimension_) fail(ErrorCode::Usage, "capacity dimension does not match instance dimension");
    for (const auto& c : capacity_) {
        if (c.sign() <= 0) fail(ErrorCode::Usage, "capacity components must be positive");
    }

    std::unordered_set<ItemId> seen;
    for (const auto& item : items_) {
        const std::string who = "item " + std::to_string(item.id);
        if (!seen.insert(item.id).second) fail(ErrorCode::Usage, "duplicate item id " + std::to_string(item.id));
        if (!(item.arrival < item.departure)) {
            fail(ErrorCode::Usage, who + ": departure must be after arrival");
        }
        if (item.size.dim() != dimension_) {
            fail(ErrorCode::Usage, who + ": size has " + std::to_string(item.size.dim()) + " components, expected " +
                                       std::to_string(dimension_));
        }
        for (size_t j = 0; j < dimension_; ++j) {
            if (item.size[j].sign() < 0) {
                fail(ErrorCode::Usage, who + ": negative size in dimension " + std::to_string(j + 1));
            }
            if (item.size[j] > capacity_[j]) {
                fail(ErrorCode::Usage, who + ": size " + item.size[j].str() + " exceeds capacity " +
                                           capacity_[j].str() + " in dimension " + std::to_string(j + 1));
            }
        }
    }
}

Scalar mu_of(const Instance& instance) {
    if (instance.empty()) fail(ErrorCode::Usage, "mu of an empty instance");
    Scalar lo = instance.item(0).duration();
    Scalar hi = lo;
    for (const auto& item : instance.items()) {
        Scalar d = item.duration();
        lo = min(lo, d);
        hi = max(hi, d);
    }
    return hi / lo;
}

Scalar span_of(std::span<const Item> items) {
    std::vector<Interval> iv;
    iv.reserve(items.size());
    for (const auto& item : items) iv.push_back(item.interval());
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.start < b.start; });

    Scalar total;
    size_t i = 0;
    while (i < iv.size()) {
        Scalar lo = iv[i].start;
        Scalar hi = iv[i].end;
        ++i;
        // Half-open intervals that merely touch leave no gap, so they merge.
        while (i < iv.size() && iv[i].start <= hi) {
            hi = max(hi, iv[i].end);
            ++i;
        }
        total += hi - lo;
    }
    return total;
}

}  // namespace dvbp
