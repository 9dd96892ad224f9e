#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "dpe/arith.hpp"
#include "dpe/errors.hpp"
#include "dpe/prime_field.hpp"

using namespace dpe;

namespace {

// Counts integer vectors of length n and L1 weight <= t by direct enumeration.
Int brute_sphere(Int n, Int t) {
    Int count = 0;
    std::vector<Int> e(static_cast<size_t>(n), -t);
    std::function<void(size_t, Int)> rec = [&](size_t j, Int used) {
        if (j == e.size()) {
            ++count;
            return;
        }
        for (Int v = -t; v <= t; ++v)
            if (used + std::abs(v) <= t) rec(j + 1, used + std::abs(v));
    };
    rec(0, 0);
    return count;
}

std::vector<bool> sieve(Int limit) {
    std::vector<bool> prime(static_cast<size_t>(limit + 1), true);
    prime[0] = prime[1] = false;
    for (Int i = 2; i * i <= limit; ++i)
        if (prime[i])
            for (Int j = i * i; j <= limit; j += i) prime[j] = false;
    return prime;
}

}  // namespace

TEST(Arith, ModFloorNegative) {
    EXPECT_EQ(mod_floor(-1, 31), 30);
    EXPECT_EQ(mod_floor(-62, 31), 0);
    EXPECT_EQ(mod_floor(45, 31), 14);
}

TEST(Arith, CheckedOverflowThrows) {
    EXPECT_THROW(checked_mul(Int{1} << 40, Int{1} << 40), ConsistencyError);
    EXPECT_THROW(checked_add(INT64_MAX, 1), ConsistencyError);
    EXPECT_EQ(checked_pow(3, 4), 81);
}

TEST(Arith, CeilLog) {
    EXPECT_EQ(ceil_log(2, 31), 5);
    EXPECT_EQ(ceil_log(2, 32), 5);
    EXPECT_EQ(ceil_log(2, 33), 6);
    EXPECT_EQ(ceil_log(8, 27), 2);
    EXPECT_EQ(ceil_log(3, 1), 0);
}

TEST(Arith, BaseDigitsRoundTrip) {
    for (Int q : {2, 3, 4, 7, 10})
        for (Int x = 0; x < checked_pow(q, 4); ++x) {
            const auto d = base_q_digits(x, q, 4);
            ASSERT_EQ(base_q_value(d), x);
            for (Int digit : d.digits) ASSERT_TRUE(digit >= 0 && digit < q);
        }
    EXPECT_THROW(base_q_digits(16, 2, 4), ParameterError);
    EXPECT_EQ(base_q_digits(23, 2, 5).digits, (std::vector<Int>{1, 1, 1, 0, 1}));
}

TEST(Arith, FSequenceValuesAndRecurrence) {
    EXPECT_EQ(f_weights(4, 5), (std::vector<Int>{1, 3, 13, 51, 205}));
    for (Int q : {4, 6, 8, 10}) {
        for (int j = 0; j < 10; ++j) {
            const Int f = f_seq(q, j);
            EXPECT_EQ(f % 2, 1) << "q=" << q << " j=" << j;
            if (j > 0) EXPECT_EQ(f, q * f_seq(q, j - 1) + ((j % 2 == 0) ? 1 : -1));
            // f_j equals one more than the largest value of the lower digits for even j, exactly it for odd j.
            Int lower = 0;
            for (int i = 0; i < j; ++i) lower += (q - 1) * f_seq(q, i);
            EXPECT_EQ(f, lower + ((j % 2 == 0) ? 1 : 0));
        }
    }
    EXPECT_THROW(f_seq(3, 1), ParameterError);
    EXPECT_THROW(f_seq(2, 1), ParameterError);
}

TEST(Arith, MixedRadixMatchesExhaustiveSearch) {
    for (Int q : {4, 6, 8}) {
        const int m = 4;
        const auto w = f_weights(q, m);
        // Every value reachable by some digit vector, collected by enumeration.
        std::vector<bool> reachable(static_cast<size_t>(mixed_radix_value(std::vector<Int>(m, q - 1), w) + 1));
        std::vector<Int> d(m, 0);
        std::function<void(int)> rec = [&](int j) {
            if (j == m) {
                reachable[static_cast<size_t>(mixed_radix_value(d, w))] = true;
                return;
            }
            for (Int v = 0; v < q; ++v) {
                d[j] = v;
                rec(j + 1);
            }
        };
        rec(0);
        for (Int x = 0; x < static_cast<Int>(reachable.size()); ++x) {
            if (!reachable[x]) {
                EXPECT_THROW(mixed_radix_digits(x, q, w), ParameterError) << x;
                continue;
            }
            const auto digits = mixed_radix_digits(x, q, w);
            ASSERT_EQ(mixed_radix_value(digits.digits, w), x);
            for (Int v : digits.digits) ASSERT_TRUE(v >= 0 && v < q);
        }
        // Every residue below 4n+2 for the largest n the weights serve is reachable.
        EXPECT_TRUE(std::all_of(reachable.begin(), reachable.begin() + f_seq(q, m - 1) + 1, [](bool b) { return b; }));
    }
    const std::vector<Int> w = f_weights(4, 4);
    EXPECT_EQ(mixed_radix_digits(89, 4, w).digits, (std::vector<Int>{3, 3, 2, 1}));
}

TEST(Arith, Metrics) {
    const std::vector<Int> a{1, 5, 3}, b{2, 5, 0};
    EXPECT_EQ(l1_dist(a, b), 4);
    EXPECT_EQ(hamming_dist(a, b), 2);
    EXPECT_EQ(l1_norm(std::vector<Int>{-2, 0, 3}), 5);
    EXPECT_EQ(hamming_weight(std::vector<Int>{-2, 0, 3}), 2);
    EXPECT_THROW(hamming_dist(a, std::vector<Int>{1}), ParameterError);
}

TEST(Arith, SphereVolumeAgreesWithEnumeration) {
    for (Int n = 1; n <= 4; ++n)
        for (Int t = 0; t <= 3; ++t) EXPECT_EQ(sphere_volume_l1(n, t), brute_sphere(n, t)) << n << "," << t;
    for (Int n = 1; n <= 200; ++n) EXPECT_EQ(sphere_volume_l1(n, 1), 2 * n + 1);
}

TEST(Arith, PrimalityAgainstSieve) {
    const auto prime = sieve(20000);
    for (Int x = 0; x <= 20000; ++x) ASSERT_EQ(is_prime(x), prime[x]) << x;
    EXPECT_TRUE(is_prime(4294967291));
    EXPECT_FALSE(is_prime(4294967295));
    EXPECT_EQ(next_prime_at_least(32), 37);
    EXPECT_EQ(largest_prime_at_most(8), 7);
    EXPECT_EQ(largest_prime_at_most(1), 0);
}

TEST(PrimeField, Inverses) {
    const PrimeField F(31);
    EXPECT_EQ(F.inv(29), 15);
    EXPECT_EQ(F.inv(3), 21);
    for (Int a = 1; a < 31; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
    EXPECT_THROW(F.inv(0), DomainError);
    EXPECT_THROW(F.inv(62), DomainError);
}

TEST(PrimeField, QuadraticRootsExhaustive) {
    const PrimeField F31(31);
    EXPECT_EQ(F31.quadratic_roots(2, 13), (std::vector<Int>{8, 21}));
    const auto prime = sieve(101);
    for (Int p = 3; p <= 101; p += 2) {
        if (!prime[p]) continue;
        const PrimeField F(p);
        for (Int b = 0; b < p; ++b)
            for (Int c = 0; c < p; ++c) {
                std::vector<Int> expect;
                for (Int x = 0; x < p; ++x)
                    if (F.add(F.mul(x, x), F.add(F.mul(b, x), c)) == 0) expect.push_back(x);
                ASSERT_EQ(F.quadratic_roots(b, c), expect) << "p=" << p << " b=" << b << " c=" << c;
            }
    }
}

TEST(PrimeField, SquareRootPathsAgree) {
    for (Int p : {3, 5, 7, 13, 17, 41, 97, 193, 257, 7919}) {
        const PrimeField F(p);
        for (Int a = 0; a < std::min<Int>(p, 3000); ++a) {
            const auto ts = F.sqrt_tonelli_shanks(a);
            ASSERT_EQ(ts, F.sqrt_exhaustive(a)) << p << " " << a;
            ASSERT_EQ(F.is_square(a), !ts.empty());
        }
    }
    const PrimeField big(1000003);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Int r = static_cast<Int>(rng() % 1000003);
        const auto roots = big.sqrt(big.mul(r, r));
        ASSERT_TRUE(std::find(roots.begin(), roots.end(), r) != roots.end());
    }
}

TEST(PrimeField, SignedValueIsBijective) {
    for (Int p : {3, 5, 11, 31}) {
        const PrimeField F(p);
        std::vector<Int> seen;
        for (Int z = 0; z < p; ++z) {
            const Int s = F.signed_value(z);
            EXPECT_LE(std::abs(s), (p - 1) / 2);
            EXPECT_EQ(F.reduce(s), z);
            EXPECT_EQ(F.lee_abs(z), std::abs(s));
            seen.push_back(s);
        }
        std::sort(seen.begin(), seen.end());
        EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
    }
}

TEST(PrimeField, PrimitiveElementGeneratesGroup) {
    for (Int p : {3, 5, 7, 11, 31, 101}) {
        const PrimeField F(p);
        const Int g = F.primitive_element();
        std::vector<bool> hit(static_cast<size_t>(p), false);
        Int x = 1;
        for (Int i = 0; i < p - 1; ++i) {
            hit[x] = true;
            x = F.mul(x, g);
        }
        EXPECT_EQ(std::count(hit.begin() + 1, hit.end(), true), p - 1);
    }
}

TEST(PrimeField, RejectsNonPrimes) {
    EXPECT_THROW(PrimeField(9), ParameterError);
    EXPECT_THROW(PrimeField(1), ParameterError);
}
