#pragma once

// Shared helpers for the test binaries, including the brute-force oracles
// that the optimized code is checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dvbp/model.hpp"
#include "dvbp/rng.hpp"
#include "dvbp/vec.hpp"

namespace testing {

using dvbp::Instance;
using dvbp::Item;
using dvbp::Scalar;
using dvbp::SizeVec;

inline Scalar Q(const char* text) { return Scalar::parse(text); }

inline SizeVec V(std::initializer_list<const char*> comps) {
    std::vector<Scalar> out;
    for (const char* c : comps) out.push_back(Q(c));
    return SizeVec(std::move(out));
}

inline Item item(dvbp::ItemId id, const Scalar& a, const Scalar& e, SizeVec size) {
    return Item{id, a, e, std::move(size)};
}

// Minimum bin count by enumerating every set partition (restricted growth
// strings) and keeping the feasible one with fewest blocks. Exponential;
// only meant for n <= 8 or so.
inline size_t brute_force_min_bins(const std::vector<SizeVec>& sizes, const SizeVec& cap) {
    const size_t n = sizes.size();
    if (n == 0) return 0;
    size_t best = n;
    std::vector<size_t> block(n, 0);
    std::vector<SizeVec> loads;

    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t used) {
        if (i == n) {
            loads.assign(used, SizeVec(cap.dim()));
            for (size_t j = 0; j < n; ++j) loads[block[j]] += sizes[j];
            for (const auto& l : loads) {
                for (size_t c = 0; c < cap.dim(); ++c) {
                    if (l[c] > cap[c]) return;
                }
            }
            if (used < best) best = used;
            return;
        }
        for (size_t b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, b == used ? used + 1 : used);
        }
    };
    rec(0, 0);
    return best;
}

// Time integral of the brute-force bin count over every elementary interval.
inline Scalar brute_force_opt(const Instance& inst) {
    std::vector<Scalar> times;
    for (const auto& it : inst.items()) {
        times.push_back(it.arrival);
        times.push_back(it.departure);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    Scalar total;
    for (size_t t = 0; t + 1 < times.size(); ++t) {
        std::vector<SizeVec> active;
        for (const auto& it : inst.items()) {
            if (it.arrival <= times[t] && times[t] < it.departure) active.push_back(it.size);
        }
        total += Scalar(static_cast<long long>(brute_force_min_bins(active, inst.capacity()))) *
                 (times[t + 1] - times[t]);
    }
    return total;
}

// Small random instance: sizes in {1..B}/B, integer times.
inline Instance small_random_instance(dvbp::SplitMix64& rng, int n, int d, int mu, int horizon, int B) {
    std::vector<Item> items;
    for (int i = 1; i <= n; ++i) {
        SizeVec s(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) s[static_cast<size_t>(j)] = Scalar(rng.between(1, B), B);
        const auto a = rng.between(0, horizon);
        const auto len = rng.between(1, mu);
        items.push_back(Item{i, Scalar(a), Scalar(a + len), std::move(s)});
    }
    return Instance(static_cast<size_t>(d), std::move(items));
}

}  // namespace testing
