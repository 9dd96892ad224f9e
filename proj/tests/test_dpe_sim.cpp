#include <gtest/gtest.h>

#include <random>

#include "dpe/dpe_sim.hpp"
#include "dpe/errors.hpp"
#include "dpe/l1_single.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace dpe;

TEST(Simulator, CleanProductMatchesDefinition) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const auto a = support::random_matrix(rng, 5, 3, 12);
        const auto u = support::random_vector(rng, 5, 3);
        EXPECT_EQ(compute_clean(u, a), support::product(u, a));
    }
    const QMatrix a(2, 3, 15, golden::kSecEncoded);
    EXPECT_EQ(compute_clean(golden::kSecU, a), golden::kSecCodeword);
    EXPECT_THROW(compute_clean(std::vector<Int>{1, 2, 1}, a), ParameterError);
    EXPECT_THROW(compute_clean(std::vector<Int>{1, 1}, a), ParameterError);
}

TEST(Simulator, ZeroBudgetIsIdentity) {
    const auto r = inject(golden::kSecCodeword, {{L1Drift{0}}, 3}, 4);
    EXPECT_EQ(r.y.values, golden::kSecCodeword);
    EXPECT_FALSE(r.y.has_erasures());
    EXPECT_TRUE(r.events.empty());
}

TEST(Simulator, ManualFaultReproducesWorkedRead) {
    const auto r = inject(golden::kSecCodeword, {{ManualFault{5, -1, false}}, 0}, 4);
    auto expect = golden::kSecCodeword;
    expect[5] = 2;
    EXPECT_EQ(r.y.values, expect);
    EXPECT_EQ(locator_syndrome(r.y.values, build_locators_basic(2, 15)), golden::kSecSyndrome);
    ASSERT_EQ(r.positions.size(), 1u);
    EXPECT_EQ(r.positions[0].clean, 3);
    EXPECT_EQ(r.positions[0].value, 2);
}

TEST(Simulator, DeterministicUnderSeed) {
    const std::vector<Int> c(40, 3);
    const FaultSpec spec{{L1Drift{5}, SymbolFlip{3, 2}, ShortColumn{2}}, 99};
    const auto a = inject(c, spec, 7), b = inject(c, spec, 7);
    EXPECT_EQ(a.y.values, b.y.values);
    EXPECT_EQ(a.y.erased, b.y.erased);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    const auto other = inject(c, {spec.faults, 100}, 7);
    EXPECT_NE(to_json(a).dump(), to_json(other).dump());
}

TEST(Simulator, BudgetInvariants) {
    std::mt19937_64 seeds(3);
    const std::vector<Int> c(30, 5);
    for (int t = 0; t < 200; ++t) {
        const Int budget = static_cast<Int>(seeds() % 6);
        const auto r = inject(c, {{L1Drift{budget}}, seeds()}, 11);
        EXPECT_LE(l1_norm(r.error), budget);
        EXPECT_EQ(static_cast<Int>(r.events.size()), budget);

        const Int count = static_cast<Int>(seeds() % 5), mag = 1 + static_cast<Int>(seeds() % 3);
        const auto f = inject(c, {{SymbolFlip{count, mag}}, seeds()}, 11);
        EXPECT_EQ(hamming_weight(f.error), count);
        for (Int e : f.error) EXPECT_LE(std::abs(e), mag);

        const auto s = inject(c, {{ShortColumn{count}}, seeds()}, 11);
        EXPECT_EQ(static_cast<Int>(s.y.erasure_count()), count);
        EXPECT_EQ(hamming_weight(s.error), 0);
    }
}

TEST(Simulator, ClampsIntoOutputAlphabet) {
    const std::vector<Int> c{0, 3, 1};
    const auto r = inject(c, {{ManualFault{0, -2, false}, ManualFault{1, 4, false}}, 0}, 4);
    EXPECT_EQ(r.y.values, (std::vector<Int>{0, 3, 1}));
    ASSERT_EQ(r.positions.size(), 2u);
    EXPECT_EQ(r.positions[0].pre_clamp, -2);
    EXPECT_EQ(r.positions[1].pre_clamp, 7);
}

TEST(Simulator, InfeasibleSpecsRejected) {
    const std::vector<Int> c(4, 1);
    EXPECT_THROW(inject(c, {{SymbolFlip{5, 1}}, 0}, 4), ParameterError);
    EXPECT_THROW(inject(c, {{ShortColumn{5}}, 0}, 4), ParameterError);
    EXPECT_THROW(inject(c, {{ManualFault{4, 1, false}}, 0}, 4), ParameterError);
    EXPECT_THROW(inject(c, {{L1Drift{-1}}, 0}, 4), ParameterError);
    EXPECT_THROW(inject(c, {{ShortColumn{3}, ShortColumn{2}}, 0}, 4), ParameterError);
}

TEST(Simulator, UniformBelowCoversRange) {
    std::mt19937_64 rng(5);
    std::vector<int> hits(7, 0);
    for (int t = 0; t < 7000; ++t) ++hits[uniform_below(rng, 7)];
    for (int h : hits) EXPECT_GT(h, 800);
    EXPECT_THROW(uniform_below(rng, 0), ParameterError);
}

TEST(Simulator, FaultSpecJson) {
    const auto spec = fault_spec_from_json(nlohmann::json::parse(
                                               R"([{"kind":"manual","position":5,"delta":-1},
                                                   {"kind":"manual","position":2,"erase":true},
                                                   {"kind":"l1_drift","budget":2},
                                                   {"kind":"symbol_flip","count":1,"magnitude":3},
                                                   {"kind":"short_column","count":1}])"),
                                           17);
    EXPECT_EQ(spec.seed, 17u);
    ASSERT_EQ(spec.faults.size(), 5u);
    EXPECT_EQ(std::get<ManualFault>(spec.faults[0]).delta, -1);
    EXPECT_TRUE(std::get<ManualFault>(spec.faults[1]).erase);
    EXPECT_EQ(std::get<SymbolFlip>(spec.faults[3]).magnitude, 3);
    const auto wrapped = fault_spec_from_json(nlohmann::json::parse(R"({"seed": 4, "faults": []})"), 17);
    EXPECT_EQ(wrapped.seed, 4u);
    for (const auto& f : spec.faults) {
        const nlohmann::json j = f;
        EXPECT_EQ(j.get<FaultModel>().index(), f.index());
    }
    EXPECT_ANY_THROW(fault_spec_from_json(nlohmann::json::parse(R"([{"kind":"gamma_ray"}])"), 0));
}
