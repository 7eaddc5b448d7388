#include "dvbp/policy.hpp"

#include <algorithm>
#include <array>

#include "dvbp/error.hpp"

namespace dvbp {

namespace {

constexpr std::array<PolicyKind, 8> kAll = {
    PolicyKind::MoveToFront, PolicyKind::FirstFit, PolicyKind::NextFit,  PolicyKind::BestFitMax,
    PolicyKind::BestFitSum,  PolicyKind::WorstFit, PolicyKind::LastFit, PolicyKind::RandomFit,
};

// Index of the fitting bin that is best under `better(candidate, incumbent)`.
// Bins that compare equal fall back to the lowest bin id.
template <typename Better>
std::optional<BinId> pick(const OpenBinList& list, const SizeVec& size, const SizeVec& capacity, Better better) {
    const OpenBin* best = nullptr;
    for (const auto& bin : list) {
        if (!fits(bin.load, size, capacity)) continue;
        if (best == nullptr) {
            best = &bin;
            continue;
        }
        int cmp = better(bin, *best);
        if (cmp > 0 || (cmp == 0 && bin.id < best->id)) best = &bin;
    }
    if (best == nullptr) return std::nullopt;
    return best->id;
}

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

std::string_view policy_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::MoveToFront: return "mtf";
        case PolicyKind::FirstFit: return "ff";
        case PolicyKind::NextFit: return "nf";
        case PolicyKind::BestFitMax: return "bf-max";
        case PolicyKind::BestFitSum: return "bf-sum";
        case PolicyKind::WorstFit: return "wf";
        case PolicyKind::LastFit: return "lf";
        case PolicyKind::RandomFit: return "rf";
    }
    return "?";
}

PolicyKind parse_policy(std::string_view name) {
    for (auto kind : kAll) {
        if (policy_name(kind) == name) return kind;
    }
    fail(ErrorCode::Usage, "unknown policy '" + std::string(name) + "' (expected mtf, ff, nf, bf-max, bf-sum, wf, lf or rf)");
}

std::span<const PolicyKind> all_policies() { return kAll; }

std::optional<size_t> OpenBinList::index_of(BinId id) const {
    for (size_t i = 0; i < bins_.size(); ++i) {
        if (bins_[i].id == id) return i;
    }
    return std::nullopt;
}

const OpenBin* OpenBinList::find(BinId id) const {
    auto i = index_of(id);
    return i ? &bins_[*i] : nullptr;
}

void OpenBinList::push_front(OpenBin bin) { bins_.insert(bins_.begin(), std::move(bin)); }

void OpenBinList::push_back(OpenBin bin) { bins_.push_back(std::move(bin)); }

void OpenBinList::move_to_front(BinId id) {
    auto i = index_of(id);
    if (!i) fail(ErrorCode::Usage, "bin " + std::to_string(id) + " is not in the open list");
    std::rotate(bins_.begin(), bins_.begin() + static_cast<std::ptrdiff_t>(*i), bins_.begin() + static_cast<std::ptrdiff_t>(*i) + 1);
}

bool OpenBinList::remove(BinId id) {
    auto i = index_of(id);
    if (!i) return false;
    bins_.erase(bins_.begin() + static_cast<std::ptrdiff_t>(*i));
    return true;
}

void OpenBinList::add_load(BinId id, const SizeVec& delta) {
    if (auto i = index_of(id)) bins_[*i].load += delta;
}

void OpenBinList::sub_load(BinId id, const SizeVec& delta) {
    if (auto i = index_of(id)) bins_[*i].load -= delta;
}

std::vector<BinId> OpenBinList::order() const {
    std::vector<BinId> ids;
    ids.reserve(bins_.size());
    for (const auto& b : bins_) ids.push_back(b.id);
    return ids;
}

std::optional<BinId> select_bin(PolicyKind kind, const OpenBinList& list, const SizeVec& size, const SizeVec& capacity,
                                SplitMix64& rng) {
    switch (kind) {
        case PolicyKind::MoveToFront:
            // L is in recency order: the first fitting bin is the most recently used one.
            for (const auto& bin : list) {
                if (fits(bin.load, size, capacity)) return bin.id;
            }
            return std::nullopt;

        case PolicyKind::NextFit:
            if (!list.empty() && fits(list[0].load, size, capacity)) return list[0].id;
            return std::nullopt;

        case PolicyKind::FirstFit:
            return pick(list, size, capacity,
                        [](const OpenBin& a, const OpenBin& b) { return -sign_of(a.opened_at <=> b.opened_at); });

        case PolicyKind::LastFit:
            return pick(list, size, capacity,
                        [](const OpenBin& a, const OpenBin& b) { return sign_of(a.opened_at <=> b.opened_at); });

        case PolicyKind::BestFitMax:
            return pick(list, size, capacity, [](const OpenBin& a, const OpenBin& b) {
                return sign_of(linf_norm(a.load) <=> linf_norm(b.load));
            });

        case PolicyKind::BestFitSum:
            return pick(list, size, capacity, [](const OpenBin& a, const OpenBin& b) {
                return sign_of(component_sum(a.load) <=> component_sum(b.load));
            });

        case PolicyKind::WorstFit:
            return pick(list, size, capacity, [](const OpenBin& a, const OpenBin& b) {
                return -sign_of(linf_norm(a.load) <=> linf_norm(b.load));
            });

        case PolicyKind::RandomFit: {
            std::vector<BinId> candidates;
            for (const auto& bin : list) {
                if (fits(bin.load, size, capacity)) candidates.push_back(bin.id);
            }
            if (candidates.empty()) return std::nullopt;
            if (candidates.size() == 1) return candidates.front();
            return candidates[rng.below(candidates.size())];
        }
    }
    return std::nullopt;
}

void after_placement(PolicyKind kind, OpenBinList& list, BinId bin, std::optional<OpenBin> fresh) {
    switch (kind) {
        case PolicyKind::MoveToFront:
            if (fresh) {
                list.push_front(std::move(*fresh));
            } else {
                list.move_to_front(bin);
            }
            return;
        case PolicyKind::NextFit:
            if (fresh) {
                // The previous current bin is released: it stays open until
                // empty but never receives another item.
                list.clear();
                list.push_back(std::move(*fresh));
            }
            return;
        default:
            if (fresh) list.push_back(std::move(*fresh));
            return;
    }
}

void on_departure(PolicyKind /*kind*/, OpenBinList& list, BinId bin) { list.remove(bin); }

}  // namespace dvbp
