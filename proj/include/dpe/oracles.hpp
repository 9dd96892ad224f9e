#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dpe/reed_solomon.hpp"
#include "dpe/scheme.hpp"

namespace dpe {

inline constexpr Int kEnumerationGuard = 1'000'000;
inline constexpr Int kPairGuard = 200'000'000;
inline constexpr Int kSweepGuard = 20'000'000;

/// Every product u E(A') over all inputs, deduplicated and sorted.
struct InducedCode {
    Int k = 0;
    Metric metric = Metric::L1;
    std::vector<std::vector<Int>> words;

    std::span<const Int> prefix(size_t i) const { return {words[i].data(), static_cast<size_t>(k)}; }
    size_t distinct_prefixes() const;
};

/// Throws GuardError unless q^{ell k} q^ell <= oracle_guard(kEnumerationGuard).
InducedCode enumerate_induced_code(const Scheme& scheme);

/// Distance under the code's metric, skipping coordinates flagged in `ignore`.
Int metric_distance(Metric metric, std::span<const Int> a, std::span<const Int> b,
                    const std::vector<bool>& ignore = {});

/// Smallest distance between codewords with different prefixes; nullopt when
/// all codewords share one prefix. Coordinates in `ignore` are deleted first.
std::optional<Int> induced_min_distance(const InducedCode& code, const std::vector<bool>& ignore = {});

/// The prefix of any codeword within distance tau of y (erased entries
/// ignored), or failure. Throws ConsistencyError if two such codewords
/// disagree on their prefixes.
DecodeOutcome nearest_prefix_decode(const ReadVector& y, const InducedCode& code, Int tau);

/// Minimum Hamming weight of a nonzero codeword, by enumerating all p^k messages.
Int min_distance_by_enumeration(const ReedSolomonCode& code);

/// Calls f(e) for every integer vector of length n with L1 weight in [lo, hi].
void for_each_l1_pattern(Int n, Int lo, Int hi, const std::function<void(const std::vector<Int>&)>& f);
/// Calls f(e) for every vector with exactly `weight` nonzero entries, each in [-theta, theta].
void for_each_hamming_pattern(Int n, Int weight, Int theta, const std::function<void(const std::vector<Int>&)>& f);
/// Calls f(mask) for every subset of [0, n) of the given size.
void for_each_subset(Int n, Int size, const std::function<void(const std::vector<bool>&)>& f);

struct SweepCounts {
    Int patterns = 0;
    Int correct = 0;
    Int detected = 0;  // decoder returned "e"
    Int wrong = 0;     // decoder returned a different prefix
    Int oracle_mismatches = 0;
};

struct AuditReport {
    nlohmann::json scheme;
    Int codewords = 0;
    Int distinct_prefixes = 0;
    std::optional<Int> min_distance;
    Int required_distance = 0;
    /// False when the distance bound does not apply (bounded-magnitude Hamming model).
    bool distance_applies = true;
    SweepCounts correction;
    SweepCounts detection;
    std::vector<std::string> notes;

    bool pass() const;
};

/// Enumeration, distance check, and exhaustive correction/detection sweeps
/// over every codeword. Guard violations become notes and a failed report.
AuditReport run_audit(const Scheme& scheme);
nlohmann::json to_json(const AuditReport& report);

}  // namespace dpe
