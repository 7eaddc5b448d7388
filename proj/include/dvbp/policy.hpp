#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dvbp/model.hpp"
#include "dvbp/rng.hpp"

namespace dvbp {

enum class PolicyKind { MoveToFront, FirstFit, NextFit, BestFitMax, BestFitSum, WorstFit, LastFit, RandomFit };

// CLI spellings: mtf, ff, nf, bf-max, bf-sum, wf, lf, rf.
std::string_view policy_name(PolicyKind kind);
// Throws Usage for an unknown name.
PolicyKind parse_policy(std::string_view name);

std::span<const PolicyKind> all_policies();

struct OpenBin {
    BinId id = 0;
    Scalar opened_at;
    SizeVec load;
};

// The list L of bins a policy may still place items into. Its order is the
// policy's list discipline: recency for Move To Front, opening order for the
// others, and at most the single current bin for Next Fit.
class OpenBinList {
public:
    size_t size() const noexcept { return bins_.size(); }
    bool empty() const noexcept { return bins_.empty(); }
    const OpenBin& operator[](size_t i) const { return bins_[i]; }
    auto begin() const noexcept { return bins_.begin(); }
    auto end() const noexcept { return bins_.end(); }

    std::optional<size_t> index_of(BinId id) const;
    const OpenBin* find(BinId id) const;

    void push_front(OpenBin bin);
    void push_back(OpenBin bin);
    void move_to_front(BinId id);
    // Removes the bin if present; the relative order of the rest is kept.
    bool remove(BinId id);
    void clear() { bins_.clear(); }

    // Adds (or subtracts) to the load of a listed bin; no-op if not listed.
    void add_load(BinId id, const SizeVec& delta);
    void sub_load(BinId id, const SizeVec& delta);

    std::vector<BinId> order() const;

private:
    std::vector<OpenBin> bins_;
};

// Picks the bin in L that receives an item of `size`, or nullopt when the
// policy opens a new bin. Only RandomFit touches `rng`, and only when at
// least two bins fit.
std::optional<BinId> select_bin(PolicyKind kind, const OpenBinList& list, const SizeVec& size,
                                const SizeVec& capacity, SplitMix64& rng);

// List maintenance after an item was placed into `bin`. `fresh` is the newly
// opened bin when select_bin returned nullopt.
void after_placement(PolicyKind kind, OpenBinList& list, BinId bin, std::optional<OpenBin> fresh);

// A bin just became empty: drop it from L. Bins Next Fit already released
// are not listed, so this is a no-op for them.
void on_departure(PolicyKind kind, OpenBinList& list, BinId bin);

}  // namespace dvbp
