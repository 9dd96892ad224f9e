#pragma once

// Code locators: the integer weights alpha_0..alpha_{n-1} of the syndrome
// congruence. The last m entries ("suffix") are the positional weights of
// the redundancy digits, so encoding a remainder is just a digit expansion.

#include <string>
#include <vector>

#include <json.hpp>

#include "dpe/arith.hpp"

namespace dpe {

enum class SuffixKind { PowersOfQ, FSequence };

struct LocatorOptions {
    /// Tolerate pair-sum collisions (alpha_i + alpha_j == modulus) when both
    /// indices lie in the suffix. Such collisions never touch the prefix, so
    /// single errors are still located or harmlessly ignored.
    bool allow_suffix_conflicts = false;
    bool operator==(const LocatorOptions&) const = default;
};

struct Locators {
    Int q = 2;
    Int n = 0;
    int m = 0;
    Int modulus = 0;
    SuffixKind suffix_kind = SuffixKind::PowersOfQ;
    bool odd_entries = false;  // modulus-(4n+2) variants require odd locators
    LocatorOptions options;
    std::vector<Int> alpha;

    Int k() const { return n - m; }
    /// alpha_{k+j}: the weights of the m redundancy digits.
    std::vector<Int> suffix_weights() const { return {alpha.end() - m, alpha.end()}; }
    bool operator==(const Locators&) const = default;
};

enum class LocatorCondition { Ok, Length, Range, Distinct, Odd, PairSum, Suffix };

struct LocatorReport {
    LocatorCondition violated = LocatorCondition::Ok;
    std::string detail;
    bool ok() const { return violated == LocatorCondition::Ok; }
};

std::string to_string(LocatorCondition c);

/// Locators modulo 2n+1 with suffix (1, q, ..., q^{m-1}), m = ceil(log_q(2n+1)).
Locators build_locators_basic(Int q, Int n, LocatorOptions opts = {});

/// Odd locators modulo 4n+2 (odd q: powers of q; even q > 2: the f-sequence).
/// For q = 2 there is no such construction and the basic locators are returned;
/// the caller adds a parity column instead.
Locators build_locators_ded(Int q, Int n, LocatorOptions opts = {});

/// Redundancy of the modulus-(4n+2) construction for odd q, next to
/// ceil(log_q(2n+1)); the two sometimes coincide.
struct DedRedundancy {
    int m_basic;
    int m_ded;
};
DedRedundancy ded_redundancy(Int q, Int n);

/// m for the even-q > 2 construction: smallest m with f_m(q) >= 4n+2+(-1)^m.
int f_sequence_redundancy(Int q, Int n);

LocatorReport validate_locators(const Locators& loc);

/// Reverse lookup from a residue s in [0, modulus) to the locator index j with
/// alpha_j == s, or -1.
class LocatorIndex {
public:
    explicit LocatorIndex(const Locators& loc);
    long find(Int residue) const;

private:
    std::vector<long> table_;
};

void to_json(nlohmann::json& j, const Locators& loc);
void from_json(const nlohmann::json& j, Locators& loc);

}  // namespace dpe
