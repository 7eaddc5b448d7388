#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dvbp/scalar.hpp"
#include "dvbp/vec.hpp"

namespace dvbp {

using ItemId = std::int64_t;
using BinId = std::int64_t;

// Half-open [start, end).
struct Interval {
    Scalar start;
    Scalar end;

    Scalar length() const { return end - start; }
    bool contains(const Scalar& t) const { return start <= t && t < end; }
};

struct Item {
    ItemId id = 0;
    Scalar arrival;
    Scalar departure;
    SizeVec size;

    Interval interval() const { return {arrival, departure}; }
    Scalar duration() const { return departure - arrival; }
};

// An ordered item list. The order breaks ties between simultaneous arrivals.
// Construction validates: positive durations, unique ids, sizes of the right
// dimension that fit inside the capacity.
class Instance {
public:
    Instance(size_t dimension, std::vector<Item> items);
    Instance(size_t dimension, std::vector<Item> items, SizeVec capacity);

    size_t dimension() const noexcept { return dimension_; }
    std::span<const Item> items() const noexcept { return items_; }
    size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const SizeVec& capacity() const noexcept { return capacity_; }

    const Item& item(size_t index) const { return items_.at(index); }

    // Free-form annotations carried through serialization as "# key=value".
    const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }
    void set_metadata(const std::string& key, const std::string& value) { metadata_[key] = value; }

private:
    size_t dimension_;
    std::vector<Item> items_;
    SizeVec capacity_;
    std::map<std::string, std::string> metadata_;
};

// Max duration divided by min duration, so unnormalized inputs get the
// normalized value. Throws Usage on an empty instance.
Scalar mu_of(const Instance& instance);

// Measure of the union of the items' active intervals.
Scalar span_of(std::span<const Item> items);

}  // namespace dvbp
