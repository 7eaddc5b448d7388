#include <doctest.h>

#include "dvbp/adversarial.hpp"
#include "dvbp/engine.hpp"
#include "dvbp/error.hpp"
#include "support.hpp"

using namespace dvbp;
using testing::Q;
using testing::V;

namespace {

bool has_kind(const AuditReport& r, const std::string& kind) {
    for (const auto& v : r.violations) {
        if (v.kind == kind) return true;
    }
    return false;
}

Instance two_big_items() {
    return Instance(1, {Item{1, 0, 1, V({"6/10"})}, Item{2, 0, 1, V({"6/10"})}});
}

}  // namespace

TEST_CASE("two items that cannot share a bin") {
    const PackingTrace t = simulate(two_big_items(), PolicyKind::FirstFit);
    CHECK(t.bin_count() == 2);
    CHECK(cost_of(t) == Scalar(2));
}

TEST_CASE("move to front on the 4-item mtf construction") {
    const Instance inst = gen_mtf_lb(1, Scalar(2));
    const PackingTrace t = simulate(inst, PolicyKind::MoveToFront);
    CHECK(t.bin_count() == 2);
    CHECK(cost_of(t) == Scalar(4));

    const PackingTrace t2 = simulate(gen_mtf_lb(2, Scalar(3)), PolicyKind::MoveToFront);
    CHECK(t2.bin_count() == 4);
    CHECK(cost_of(t2) == Scalar(12));
}

TEST_CASE("first fit on the any-fit construction") {
    const Instance inst = generate(make_spec(Family::AnyFitLB, 1, 2, Scalar(2)));
    const PackingTrace t = simulate(inst, PolicyKind::FirstFit);
    CHECK(t.bin_count() >= 2);
    for (const auto& b : t.bins) {
        CHECK(b.opened_at == Scalar(0));
        CHECK(b.closed_at >= Scalar(3));
    }
    CHECK(cost_of(t) >= Scalar(6));
}

TEST_CASE("next fit on the next-fit construction") {
    const Instance inst = generate(make_spec(Family::NextFitLB, 1, 4, Scalar(2)));
    const PackingTrace t = simulate(inst, PolicyKind::NextFit);
    CHECK(t.bin_count() == 4);
    CHECK(cost_of(t) == Scalar(8));
}

TEST_CASE("cost adds overlapping bins") {
    PackingTrace t;
    t.bins.push_back(BinRecord{1, 0, 2, {}});
    t.bins.push_back(BinRecord{2, 1, 4, {}});
    CHECK(cost_of(t) == Scalar(5));
    PackingTrace single;
    single.bins.push_back(BinRecord{1, 0, 5, {}});
    CHECK(cost_of(single) == Scalar(5));
}

TEST_CASE("departures precede arrivals at equal times") {
    const Instance inst(1, {Item{1, 0, 1, V({"1"})}, Item{2, 1, 2, V({"1"})}});
    const PackingTrace t = simulate(inst, PolicyKind::FirstFit);
    CHECK(t.bin_count() == 2);  // bin 1 closed at 1, never reopened
    CHECK(t.bin(1).closed_at == Scalar(1));
    CHECK(t.bin(2).opened_at == Scalar(1));
    CHECK(cost_of(t) == Scalar(2));
}

TEST_CASE("audit accepts simulator output") {
    SplitMix64 gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = testing::small_random_instance(gen, 25, 2, 5, 15, 10);
        for (auto kind : all_policies()) {
            const PackingTrace t = simulate(inst, kind, static_cast<std::uint64_t>(trial));
            const AuditReport r = audit(inst, t);
            CAPTURE(policy_name(kind));
            CHECK(r.clean());
            CHECK(cost_of(t) >= span_of(inst.items()));
        }
    }
}

TEST_CASE("audit flags a capacity violation") {
    const Instance inst = two_big_items();
    PackingTrace t;
    t.policy = "ff";
    t.bins.push_back(BinRecord{1, 0, 1, {BinPlacement{1, 0, 1}, BinPlacement{2, 0, 1}}});
    t.assignment = {{1, 1}, {2, 1}};
    const AuditReport r = audit(inst, t);
    CHECK(has_kind(r, "capacity"));
    bool second = false;
    for (const auto& v : r.violations) {
        if (v.kind == "capacity" && v.message.find("item 2") != std::string::npos) second = true;
    }
    CHECK(second);
}

TEST_CASE("audit flags an unnecessary new bin") {
    const Instance inst(1, {Item{1, 0, 1, V({"1/10"})}, Item{2, 0, 1, V({"1/10"})}});
    PackingTrace t;
    t.policy = "ff";
    t.bins.push_back(BinRecord{1, 0, 1, {BinPlacement{1, 0, 1}}});
    t.bins.push_back(BinRecord{2, 0, 1, {BinPlacement{2, 0, 1}}});
    t.assignment = {{1, 1}, {2, 2}};
    CHECK(has_kind(audit(inst, t), "any-fit"));
}

TEST_CASE("audit flags incomplete assignments") {
    const Instance inst = two_big_items();
    PackingTrace t = simulate(inst, PolicyKind::FirstFit);
    t.assignment.erase(2);
    CHECK_FALSE(audit(inst, t).clean());
}

TEST_CASE("random fit is deterministic per seed") {
    SplitMix64 gen(3);
    const Instance inst = testing::small_random_instance(gen, 60, 2, 5, 10, 10);
    const std::string a = write_trace(simulate(inst, PolicyKind::RandomFit, 17));
    const std::string b = write_trace(simulate(inst, PolicyKind::RandomFit, 17));
    CHECK(a == b);
}

TEST_CASE("trace text round trip") {
    SplitMix64 gen(4);
    const Instance inst = testing::small_random_instance(gen, 20, 2, 5, 10, 10);
    const PackingTrace t = simulate(inst, PolicyKind::BestFitMax);
    const std::string text = write_trace(t);
    const PackingTrace back = parse_trace(text);
    CHECK(write_trace(back) == text);
    CHECK(back.policy == "bf-max");
    CHECK(cost_of(back) == cost_of(t));
    CHECK(audit(inst, back).clean());
    CHECK_THROWS_AS(parse_trace("1,1,0\n"), Error);
}
