#include <gtest/gtest.h>

#include <algorithm>

#include "dpe/errors.hpp"
#include "dpe/locators.hpp"
#include "golden.hpp"

using namespace dpe;

namespace {

// Independent check of the locator conditions, written without the library validator.
void expect_conditions(const Locators& loc, bool strict) {
    ASSERT_EQ(static_cast<Int>(loc.alpha.size()), loc.n);
    const Int k = loc.k();
    for (Int i = 0; i < loc.n; ++i) {
        const Int a = loc.alpha[i];
        EXPECT_GT(a, 0);
        EXPECT_LT(a, loc.modulus);
        if (loc.odd_entries) EXPECT_EQ(a % 2, 1);
        for (Int j = i; j < loc.n; ++j) {
            if (j != i) EXPECT_NE(a, loc.alpha[j]);
            const bool suffix_pair = i >= k && j >= k;
            if (strict || !suffix_pair) EXPECT_NE(a + loc.alpha[j], loc.modulus) << i << "," << j;
        }
    }
}

// The instances where 1 and q^{m-1} (or f-weights) are forced to pair-sum to the modulus.
bool suffix_forced_conflict(Int q, Int n, bool ded) {
    if (!ded || q == 2) {
        const Int M = 2 * n + 1;
        const int m = ceil_log(q, M);
        std::vector<Int> s;
        for (int j = 0; j < m; ++j) s.push_back(checked_pow(q, j));
        if (s.back() <= n) return false;
        if (std::find(s.begin(), s.end(), M - s.back()) == s.end()) return false;
        for (Int a : s)
            for (Int b : s)
                if (a + b == M) return true;
        return false;
    }
    const Int M = 4 * n + 2;
    const auto s = q % 2 ? [&] {
        std::vector<Int> w;
        for (int j = 0; j < ceil_log(q, M); ++j) w.push_back(checked_pow(q, j));
        return w;
    }()
                         : f_weights(q, f_sequence_redundancy(q, n));
    for (Int a : s)
        for (Int b : s)
            if (a + b == M) return true;
    return false;
}

}  // namespace

TEST(Locators, BinaryLength15MatchesWorkedExample) {
    const auto loc = build_locators_basic(2, 15);
    EXPECT_EQ(loc.alpha, golden::kSecAlpha);
    EXPECT_EQ(loc.m, 5);
    EXPECT_EQ(loc.modulus, 31);
    EXPECT_TRUE(validate_locators(loc).ok());
}

TEST(Locators, OctalDetectionLocators) {
    const auto loc = build_locators_ded(8, 13);
    EXPECT_EQ(loc.m, 2);
    EXPECT_EQ(loc.modulus, 54);
    EXPECT_EQ(loc.alpha, golden::kOctalAlpha);
    EXPECT_TRUE(validate_locators(loc).ok());
    expect_conditions(loc, true);
}

TEST(Locators, QuaternaryFSequenceLocators) {
    const auto loc = build_locators_ded(4, 50);
    EXPECT_EQ(loc.suffix_kind, SuffixKind::FSequence);
    EXPECT_EQ(loc.m, 4);
    EXPECT_EQ(loc.suffix_weights(), (std::vector<Int>{1, 3, 13, 51}));
    EXPECT_EQ(loc.alpha, golden::quad_alpha());
    EXPECT_TRUE(validate_locators(loc).ok());
}

TEST(Locators, TernarySmall) {
    const auto loc = build_locators_basic(3, 4);
    EXPECT_EQ(loc.m, 2);
    EXPECT_EQ(loc.suffix_weights(), (std::vector<Int>{1, 3}));
    expect_conditions(loc, true);
    EXPECT_TRUE(validate_locators(loc).ok());
}

TEST(Locators, DegenerateLengthRejected) {
    EXPECT_THROW(build_locators_basic(2, 3), ParameterError);
    EXPECT_THROW(build_locators_basic(1, 10), ParameterError);
}

TEST(Locators, ValidatorReportsViolations) {
    auto loc = build_locators_basic(2, 15);
    auto dup = loc;
    dup.alpha[1] = dup.alpha[0];
    EXPECT_EQ(validate_locators(dup).violated, LocatorCondition::Distinct);

    auto pair = loc;
    pair.alpha[0] = 3;
    pair.alpha[1] = 2 * 15 - 2;
    EXPECT_EQ(validate_locators(pair).violated, LocatorCondition::PairSum);

    auto range = loc;
    range.alpha[0] = 31;
    EXPECT_EQ(validate_locators(range).violated, LocatorCondition::Range);

    auto suffix = loc;
    std::swap(suffix.alpha[10], suffix.alpha[11]);
    EXPECT_EQ(validate_locators(suffix).violated, LocatorCondition::Suffix);

    auto odd = build_locators_ded(8, 13);
    odd.alpha[0] = 4;
    EXPECT_EQ(validate_locators(odd).violated, LocatorCondition::Odd);

    auto length = loc;
    length.alpha.pop_back();
    EXPECT_EQ(validate_locators(length).violated, LocatorCondition::Length);
}

TEST(Locators, SweepBuildersValidate) {
    for (Int q : {2, 3, 4, 5, 7, 8}) {
        for (bool ded : {false, true}) {
            for (Int n = 2; n <= 60; ++n) {
                const Int M = ded && q > 2 ? 4 * n + 2 : 2 * n + 1;
                const int m = ded && q % 2 == 0 && q > 2 ? f_sequence_redundancy(q, n) : ceil_log(q, M);
                if (n <= m) continue;
                const auto build = [&](LocatorOptions o) {
                    return ded ? build_locators_ded(q, n, o) : build_locators_basic(q, n, o);
                };
                SCOPED_TRACE("q=" + std::to_string(q) + " n=" + std::to_string(n) + " ded=" + std::to_string(ded));
                if (suffix_forced_conflict(q, n, ded)) {
                    EXPECT_THROW(build({}), ParameterError);
                    const auto loc = build({true});
                    EXPECT_TRUE(validate_locators(loc).ok()) << validate_locators(loc).detail;
                    expect_conditions(loc, false);
                    continue;
                }
                const auto loc = build({});
                EXPECT_EQ(loc.m, m);
                EXPECT_TRUE(validate_locators(loc).ok()) << validate_locators(loc).detail;
                expect_conditions(loc, true);
                if (ded && q > 2 && q % 2 == 1) EXPECT_EQ(loc.suffix_kind, SuffixKind::PowersOfQ);
                if (ded && q > 2 && q % 2 == 0) EXPECT_EQ(loc.suffix_weights(), f_weights(q, m));
            }
        }
    }
}

TEST(Locators, ReverseIndex) {
    const auto loc = build_locators_basic(2, 15);
    const LocatorIndex index(loc);
    for (size_t j = 0; j < loc.alpha.size(); ++j) EXPECT_EQ(index.find(loc.alpha[j]), static_cast<long>(j));
    EXPECT_EQ(index.find(15), -1);
    EXPECT_EQ(index.find(0), -1);
    EXPECT_EQ(index.find(99), -1);
}

TEST(Locators, JsonRoundTrip) {
    const auto loc = build_locators_ded(4, 50);
    const nlohmann::json j = loc;
    EXPECT_EQ(j.at("suffix_kind"), "f_sequence");
    EXPECT_EQ(j.get<Locators>(), loc);
}

TEST(Locators, BothOddRedundanciesReported) {
    // For odd q the 4n+2 construction sometimes needs no extra digit.
    EXPECT_EQ(ded_redundancy(3, 4).m_basic, 2);
    EXPECT_EQ(ded_redundancy(3, 4).m_ded, 3);
    EXPECT_EQ(ded_redundancy(5, 5).m_basic, 2);
    EXPECT_EQ(ded_redundancy(5, 5).m_ded, 2);
}
