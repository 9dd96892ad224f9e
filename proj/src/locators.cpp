#include "dpe/locators.hpp"

#include <algorithm>
#include <set>

#include "dpe/errors.hpp"

namespace dpe {

namespace {

std::string qn(Int q, Int n) { return "q=" + std::to_string(q) + ", n=" + std::to_string(n); }

std::vector<Int> power_suffix(Int q, int m) {
    std::vector<Int> s;
    for (int j = 0; j < m; ++j) s.push_back(checked_pow(q, j));
    return s;
}

bool suffix_pairs_conflict(const std::vector<Int>& suffix, Int modulus) {
    for (size_t a = 0; a < suffix.size(); ++a)
        for (size_t b = a; b < suffix.size(); ++b)
            if (suffix[a] + suffix[b] == modulus) return true;
    return false;
}

// Smallest admissible values (ascending, stepping by `step` from `start`) that
// avoid the suffix and never pair-sum to the modulus with anything chosen.
std::vector<Int> fill_prefix(Int count, Int start, Int step, Int modulus, const std::vector<Int>& suffix) {
    std::set<Int> taken(suffix.begin(), suffix.end());
    std::vector<Int> prefix;
    for (Int v = start; v < modulus && static_cast<Int>(prefix.size()) < count; v += step) {
        if (taken.count(v) || 2 * v == modulus || taken.count(modulus - v)) continue;
        prefix.push_back(v);
        taken.insert(v);
    }
    return prefix;
}

Locators assemble(Int q, Int n, int m, Int modulus, SuffixKind kind, bool odd, LocatorOptions opts,
                  std::vector<Int> prefix, const std::vector<Int>& suffix) {
    Locators loc{q, n, m, modulus, kind, odd, opts, std::move(prefix)};
    loc.alpha.insert(loc.alpha.end(), suffix.begin(), suffix.end());
    return loc;
}

void require_no_suffix_conflict(const std::vector<Int>& suffix, Int modulus, const LocatorOptions& opts,
                                Int q, Int n) {
    if (!opts.allow_suffix_conflicts && suffix_pairs_conflict(suffix, modulus))
        throw ParameterError("no locator vector exists for " + qn(q, n) + ": two redundancy locators sum to " +
                             std::to_string(modulus) +
                             " (pair-sum condition); enable allow_suffix_conflicts to accept this instance");
}

}  // namespace

std::string to_string(LocatorCondition c) {
    switch (c) {
        case LocatorCondition::Ok: return "ok";
        case LocatorCondition::Length: return "length";
        case LocatorCondition::Range: return "nonzero-and-below-modulus";
        case LocatorCondition::Distinct: return "distinct";
        case LocatorCondition::Odd: return "odd";
        case LocatorCondition::PairSum: return "pair-sum";
        case LocatorCondition::Suffix: return "suffix-weights";
    }
    return "unknown";
}

Locators build_locators_basic(Int q, Int n, LocatorOptions opts) {
    if (q < 2) throw ParameterError("q must be >= 2");
    if (n < 1) throw ParameterError("n must be >= 1");
    const Int modulus = checked_add(checked_mul(2, n), 1);
    const int m = ceil_log(q, modulus);
    if (n <= m)
        throw ParameterError("no information columns for " + qn(q, n) + ": redundancy m=" + std::to_string(m) +
                             " needs n > m");
    const auto suffix = power_suffix(q, m);
    const Int top = suffix.back();

    std::vector<Int> prefix;
    if (top <= n) {
        for (Int v = 1; v <= n; ++v)
            if (std::find(suffix.begin(), suffix.end(), v) == suffix.end()) prefix.push_back(v);
    } else if (std::find(suffix.begin(), suffix.end(), modulus - top) == suffix.end()) {
        // Swap 2n+1-q^{m-1} out for q^{m-1}.
        for (Int v = 1; v <= n; ++v)
            if (v != modulus - top && std::find(suffix.begin(), suffix.end(), v) == suffix.end())
                prefix.push_back(v);
    } else {
        // q even and q^{m-1} = 2n: the suffix entries 1 and 2n collide.
        require_no_suffix_conflict(suffix, modulus, opts, q, n);
        prefix = fill_prefix(n - m, 1, 1, modulus, suffix);
    }
    if (static_cast<Int>(prefix.size()) != n - m)
        throw ConsistencyError("basic locator construction produced the wrong prefix length for " + qn(q, n));
    return assemble(q, n, m, modulus, SuffixKind::PowersOfQ, false, opts, std::move(prefix), suffix);
}

DedRedundancy ded_redundancy(Int q, Int n) {
    return {ceil_log(q, 2 * n + 1), ceil_log(q, 4 * n + 2)};
}

int f_sequence_redundancy(Int q, Int n) {
    const Int target = checked_add(checked_mul(4, n), 2);
    for (int m = 0;; ++m) {
        const Int bound = target + ((m % 2 == 0) ? 1 : -1);
        if (f_seq(q, m) >= bound) return m;
    }
}

Locators build_locators_ded(Int q, Int n, LocatorOptions opts) {
    if (q < 2) throw ParameterError("q must be >= 2");
    if (q == 2) return build_locators_basic(q, n, opts);
    if (n < 1) throw ParameterError("n must be >= 1");
    const Int modulus = checked_add(checked_mul(4, n), 2);
    int m;
    std::vector<Int> suffix;
    SuffixKind kind;
    if (q % 2 == 1) {
        m = ceil_log(q, modulus);
        suffix = power_suffix(q, m);
        kind = SuffixKind::PowersOfQ;
    } else {
        m = f_sequence_redundancy(q, n);
        suffix = f_weights(q, m);
        kind = SuffixKind::FSequence;
    }
    if (n <= m)
        throw ParameterError("no information columns for " + qn(q, n) + ": redundancy m=" + std::to_string(m) +
                             " needs n > m");
    const bool self_paired = std::find(suffix.begin(), suffix.end(), modulus / 2) != suffix.end();
    if (self_paired && !opts.allow_suffix_conflicts)
        throw ParameterError("redundancy locator " + std::to_string(modulus / 2) + " equals 2n+1 for " + qn(q, n) +
                             "; enable allow_suffix_conflicts to accept this instance");
    require_no_suffix_conflict(suffix, modulus, opts, q, n);
    auto prefix = fill_prefix(n - m, 1, 2, modulus, suffix);
    if (static_cast<Int>(prefix.size()) != n - m)
        throw ParameterError("not enough admissible odd locators for " + qn(q, n));
    return assemble(q, n, m, modulus, kind, true, opts, std::move(prefix), suffix);
}

LocatorReport validate_locators(const Locators& loc) {
    auto fail = [](LocatorCondition c, std::string d) { return LocatorReport{c, std::move(d)}; };
    if (static_cast<Int>(loc.alpha.size()) != loc.n || loc.m < 0 || loc.m > loc.n)
        return fail(LocatorCondition::Length, "alpha has " + std::to_string(loc.alpha.size()) + " entries, n=" +
                                                  std::to_string(loc.n) + ", m=" + std::to_string(loc.m));
    const Int k = loc.k();
    std::set<Int> seen;
    for (size_t j = 0; j < loc.alpha.size(); ++j) {
        const Int a = loc.alpha[j];
        if (a <= 0 || a >= loc.modulus)
            return fail(LocatorCondition::Range, "alpha_" + std::to_string(j) + " = " + std::to_string(a));
        if (!seen.insert(a).second)
            return fail(LocatorCondition::Distinct, "value " + std::to_string(a) + " repeats at index " +
                                                        std::to_string(j));
        if (loc.odd_entries && a % 2 == 0)
            return fail(LocatorCondition::Odd, "alpha_" + std::to_string(j) + " = " + std::to_string(a));
    }
    for (size_t i = 0; i < loc.alpha.size(); ++i) {
        for (size_t j = i; j < loc.alpha.size(); ++j) {
            if (loc.alpha[i] + loc.alpha[j] != loc.modulus) continue;
            const bool both_suffix = static_cast<Int>(i) >= k && static_cast<Int>(j) >= k;
            if (both_suffix && loc.options.allow_suffix_conflicts) continue;
            return fail(LocatorCondition::PairSum, "alpha_" + std::to_string(i) + " + alpha_" + std::to_string(j) +
                                                       " = " + std::to_string(loc.modulus));
        }
    }
    const auto weights = loc.suffix_kind == SuffixKind::PowersOfQ ? power_suffix(loc.q, loc.m)
                                                                  : f_weights(loc.q, loc.m);
    for (int j = 0; j < loc.m; ++j) {
        if (loc.alpha[k + j] != weights[j])
            return fail(LocatorCondition::Suffix, "alpha_" + std::to_string(k + j) + " = " +
                                                      std::to_string(loc.alpha[k + j]) + ", expected " +
                                                      std::to_string(weights[j]));
    }
    return {};
}

LocatorIndex::LocatorIndex(const Locators& loc) : table_(static_cast<size_t>(loc.modulus), -1) {
    for (size_t j = 0; j < loc.alpha.size(); ++j) table_[static_cast<size_t>(loc.alpha[j])] = static_cast<long>(j);
}

long LocatorIndex::find(Int residue) const {
    if (residue < 0 || residue >= static_cast<Int>(table_.size())) return -1;
    return table_[static_cast<size_t>(residue)];
}

void to_json(nlohmann::json& j, const Locators& loc) {
    j = nlohmann::json{{"q", loc.q},
                       {"n", loc.n},
                       {"m", loc.m},
                       {"modulus", loc.modulus},
                       {"suffix_kind", loc.suffix_kind == SuffixKind::PowersOfQ ? "powers_of_q" : "f_sequence"},
                       {"odd_entries", loc.odd_entries},
                       {"allow_suffix_conflicts", loc.options.allow_suffix_conflicts},
                       {"alpha", loc.alpha}};
}

void from_json(const nlohmann::json& j, Locators& loc) {
    loc.q = j.at("q").get<Int>();
    loc.n = j.at("n").get<Int>();
    loc.m = j.at("m").get<int>();
    loc.modulus = j.at("modulus").get<Int>();
    const auto kind = j.at("suffix_kind").get<std::string>();
    if (kind == "powers_of_q")
        loc.suffix_kind = SuffixKind::PowersOfQ;
    else if (kind == "f_sequence")
        loc.suffix_kind = SuffixKind::FSequence;
    else
        throw ParameterError("unknown suffix_kind '" + kind + "'");
    loc.odd_entries = j.value("odd_entries", false);
    loc.options.allow_suffix_conflicts = j.value("allow_suffix_conflicts", false);
    loc.alpha = j.at("alpha").get<std::vector<Int>>();
}

}  // namespace dpe
