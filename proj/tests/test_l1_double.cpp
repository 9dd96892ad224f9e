#include <gtest/gtest.h>

#include <random>

#include "dpe/errors.hpp"
#include "dpe/l1_double.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace dpe;

namespace {

struct SweepResult {
    Int patterns = 0, correct = 0, detected = 0, wrong = 0;
};

SweepResult sweep(const Scheme& scheme, Int w, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SweepResult r;
    const Int Q = scheme.output_alphabet();
    for (int t = 0; t < trials; ++t) {
        const auto a = scheme.encode(support::random_matrix(rng, scheme.q(), scheme.ell(), scheme.k()));
        const auto c = support::product(support::random_vector(rng, scheme.q(), scheme.ell()), a);
        const auto want = support::prefix(c, scheme.k());
        support::each_error_of_weight(c.size(), w, [&](const std::vector<Int>& e) {
            ++r.patterns;
            const auto out = scheme.decode(ReadVector(support::read_with_error(c, e, Q)));
            if (!out.ok())
                ++r.detected;
            else if (out.prefix() == want)
                ++r.correct;
            else
                ++r.wrong;
        });
    }
    return r;
}

}  // namespace

TEST(DoubleError, WorkedEncoding) {
    const DoubleErrorScheme scheme(2, 3, 31, DoubleVariant::Base);
    EXPECT_EQ(scheme.n1(), 15);
    EXPECT_EQ(scheme.m(), 5);
    EXPECT_EQ(scheme.n(), 21);
    EXPECT_EQ(scheme.k(), 10);
    const auto a = scheme.encode(golden::sec_input());
    EXPECT_EQ(a.data(), golden::kDecEncoded);
    const auto digits = scheme.cube_digits(a.columns(0, 15));
    for (size_t i = 0; i < 3; ++i) {
        Int v = 0;
        for (size_t j = 0; j < 5; ++j) v += digits(i, j) << j;
        EXPECT_EQ(v, golden::kDecCubeSums[i]);
        // Cube sum recomputed from the definition.
        Int cubes = 0;
        for (size_t j = 0; j < 15; ++j) cubes += a(i, j) * golden::kSecAlpha[j] * golden::kSecAlpha[j] * golden::kSecAlpha[j];
        EXPECT_EQ(cubes % 31, golden::kDecCubeSums[i]);
    }
}

TEST(DoubleError, WorkedDecoding) {
    const DoubleErrorScheme scheme(2, 3, 31, DoubleVariant::Base);
    const auto a = scheme.encode(golden::sec_input());
    const auto c = support::product(golden::kSecU, a);
    EXPECT_EQ(c, golden::kDecCodeword);
    auto y = c;
    y[5] -= 1;
    y[13] += 1;
    const auto s = scheme.syndromes(y);
    EXPECT_EQ(s.s1, golden::kDecS1);
    EXPECT_EQ(s.s2, golden::kDecS2);
    EXPECT_EQ(s.parity, 0);
    const auto out = scheme.decode(ReadVector(y));
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(out.prefix(), support::prefix(c, 10));
}

TEST(DoubleError, QuaternaryWorkedExample) {
    const DoubleErrorScheme scheme(4, 3, 101, DoubleVariant::EvenQ);
    EXPECT_EQ(scheme.n1(), 50);
    EXPECT_EQ(scheme.m(), 4);
    EXPECT_EQ(scheme.modulus(), 202);
    EXPECT_EQ(scheme.n(), 54);
    EXPECT_EQ(scheme.k(), golden::kQuadK);
    EXPECT_EQ(scheme.redundancy(), 8);
    EXPECT_EQ(scheme.output_alphabet(), 28);
    EXPECT_EQ(scheme.locators().alpha, golden::quad_alpha());
    const auto a = scheme.encode(QMatrix(4, 3, golden::kQuadK, golden::quad_input()));
    for (size_t i = 0; i < 3; ++i) {
        const auto row = a.row(i);
        EXPECT_EQ(std::vector<Int>(row.begin() + golden::kQuadK, row.end()), golden::kQuadSuffixes[i]) << i;
    }
    const auto c = support::product(golden::kQuadU, a);
    EXPECT_EQ(c, golden::quad_codeword());
    EXPECT_EQ(scheme.decode(ReadVector(c)).prefix(), support::prefix(c, golden::kQuadK));
}

TEST(DoubleError, RedundancyPerVariant) {
    const DoubleErrorScheme base(2, 1, 31, DoubleVariant::Base);
    EXPECT_EQ(base.redundancy(), 2 * base.m() + 1);
    const DoubleErrorScheme parity(2, 1, 31, DoubleVariant::Parity);
    EXPECT_EQ(parity.redundancy(), 2 * parity.m() + 2);
    const DoubleErrorScheme oddq(3, 1, 23, DoubleVariant::OddQ);
    EXPECT_EQ(oddq.redundancy(), 2 * oddq.m());
    const DoubleErrorScheme evenq(4, 1, 101, DoubleVariant::EvenQ);
    EXPECT_EQ(evenq.redundancy(), 2 * evenq.m());
}

TEST(DoubleError, CongruencesHoldForEveryCodeword) {
    std::mt19937_64 rng(4);
    for (auto [q, p, v] : {std::tuple{Int{2}, Int{31}, DoubleVariant::Base}, {3, 23, DoubleVariant::OddQ},
                           {4, 101, DoubleVariant::EvenQ}, {2, 31, DoubleVariant::Parity}}) {
        const DoubleErrorScheme scheme(q, 2, p, v);
        for (int t = 0; t < 20; ++t) {
            const auto a = scheme.encode(support::random_matrix(rng, q, 2, scheme.k()));
            const auto c = support::product(support::random_vector(rng, q, 2), a);
            const auto s = scheme.syndromes(c);
            EXPECT_EQ(s.s1, 0);
            EXPECT_EQ(s.s2, 0);
            EXPECT_EQ(s.parity, 0);
            EXPECT_EQ(s.overall, 0);
        }
    }
}

TEST(DoubleError, BaseCorrectsAllWeightTwo) {
    const DoubleErrorScheme scheme(2, 3, 31, DoubleVariant::Base);
    for (Int w : {1, 2}) {
        const auto r = sweep(scheme, w, 20, 50 + w);
        EXPECT_EQ(r.correct, r.patterns) << "weight " << w;
    }
}

TEST(DoubleError, DetectionVariantsCorrectTwoDetectThree) {
    for (auto [q, p, v] : {std::tuple{Int{2}, Int{31}, DoubleVariant::Parity}, {2, 23, DoubleVariant::Parity},
                           {3, 23, DoubleVariant::OddQ}, {5, 31, DoubleVariant::OddQ},
                           {4, 37, DoubleVariant::EvenQ}}) {
        const DoubleErrorScheme scheme(q, 2, p, v);
        SCOPED_TRACE(to_string(v) + " q=" + std::to_string(q) + " p=" + std::to_string(p));
        for (Int w : {1, 2}) {
            const auto r = sweep(scheme, w, 6, 90 + w);
            EXPECT_EQ(r.correct, r.patterns) << "weight " << w;
        }
        const auto three = sweep(scheme, 3, 3, 93);
        EXPECT_EQ(three.wrong, 0);
        EXPECT_GT(three.detected, 0);
    }
}

TEST(DoubleError, BaseMiscorrectsSomeTripleErrors) {
    const DoubleErrorScheme scheme(2, 2, 23, DoubleVariant::Base);
    EXPECT_GT(sweep(scheme, 3, 2, 5).wrong, 0);
}

TEST(DoubleError, UnworkablePrimeSuggestsAnother) {
    // p = 17 gives n1 = 8, where the suffix locators 1 and 16 pair-sum to 17.
    try {
        DoubleErrorScheme(2, 1, 17, DoubleVariant::Base);
        FAIL() << "expected a parameter error";
    } catch (const ParameterError& e) {
        EXPECT_NE(std::string(e.what()).find("next workable prime is p=19"), std::string::npos) << e.what();
    }
    EXPECT_NO_THROW(DoubleErrorScheme(2, 1, 17, DoubleVariant::Base, LocatorOptions{true}));
    EXPECT_THROW(DoubleErrorScheme(2, 1, 15, DoubleVariant::Base), ParameterError);
    EXPECT_THROW(DoubleErrorScheme(4, 1, 31, DoubleVariant::OddQ), ParameterError);
}

TEST(DoubleError, VariantNames) {
    for (auto v : {DoubleVariant::Base, DoubleVariant::Parity, DoubleVariant::OddQ, DoubleVariant::EvenQ})
        EXPECT_EQ(double_variant_from_string(to_string(v)), v);
    EXPECT_EQ(DoubleErrorScheme::default_ted_variant(2), DoubleVariant::Parity);
    EXPECT_EQ(DoubleErrorScheme::default_ted_variant(3), DoubleVariant::OddQ);
    EXPECT_EQ(DoubleErrorScheme::default_ted_variant(4), DoubleVariant::EvenQ);
}
