#include "dpe/oracles.hpp"

#include <set>

#include "dpe/berlekamp.hpp"
#include "dpe/dpe_sim.hpp"
#include "dpe/errors.hpp"

namespace dpe {

size_t InducedCode::distinct_prefixes() const {
    std::set<std::vector<Int>> seen;
    for (size_t i = 0; i < words.size(); ++i) {
        const auto p = prefix(i);
        seen.emplace(p.begin(), p.end());
    }
    return seen.size();
}

namespace {

// q^e, or nullopt once it passes `limit`.
std::optional<Int> bounded_pow(Int q, Int e, Int limit) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) {
        if (r > limit / q) return std::nullopt;
        r *= q;
    }
    return r;
}

void digits_of(Int index, Int q, std::vector<Int>& out) {
    for (auto& d : out) {
        d = index % q;
        index /= q;
    }
}

}  // namespace

InducedCode enumerate_induced_code(const Scheme& scheme) {
    const Int limit = oracle_guard(kEnumerationGuard);
    const Int q = scheme.q(), ell = scheme.ell(), k = scheme.k();
    const auto matrices = bounded_pow(q, ell * k, limit);
    const auto inputs = bounded_pow(q, ell, limit);
    if (!matrices || !inputs || *matrices > limit / *inputs)
        throw GuardError("enumerating q^(ell k) * q^ell products exceeds the limit " + std::to_string(limit) +
                         " (q=" + std::to_string(q) + ", ell=" + std::to_string(ell) + ", k=" + std::to_string(k) +
                         "); set DPE_CODEC_GUARD_OVERRIDE to raise it");
    std::set<std::vector<Int>> words;
    std::vector<Int> entries(static_cast<size_t>(ell * k));
    std::vector<Int> u(static_cast<size_t>(ell));
    for (Int t = 0; t < *matrices; ++t) {
        digits_of(t, q, entries);
        const QMatrix a = scheme.encode(QMatrix(q, static_cast<size_t>(ell), static_cast<size_t>(k), entries));
        for (Int s = 0; s < *inputs; ++s) {
            digits_of(s, q, u);
            words.insert(compute_clean(u, a));
        }
    }
    return {k, scheme.metric(), {words.begin(), words.end()}};
}

Int metric_distance(Metric metric, std::span<const Int> a, std::span<const Int> b, const std::vector<bool>& ignore) {
    if (a.size() != b.size()) throw ParameterError("metric_distance: length mismatch");
    Int d = 0;
    for (size_t j = 0; j < a.size(); ++j) {
        if (!ignore.empty() && ignore[j]) continue;
        const Int diff = a[j] - b[j];
        d += metric == Metric::L1 ? (diff < 0 ? -diff : diff) : (diff != 0);
    }
    return d;
}

std::optional<Int> induced_min_distance(const InducedCode& code, const std::vector<bool>& ignore) {
    const auto count = static_cast<Int>(code.words.size());
    const Int limit = oracle_guard(kPairGuard);
    if (count > 1 && count - 1 > 2 * limit / count)
        throw GuardError("pairwise distance audit over " + std::to_string(count) + " codewords exceeds the limit " +
                         std::to_string(limit));
    std::optional<Int> best;
    const auto k = static_cast<size_t>(code.k);
    for (size_t i = 0; i < code.words.size(); ++i) {
        for (size_t j = i + 1; j < code.words.size(); ++j) {
            const auto& a = code.words[i];
            const auto& b = code.words[j];
            if (std::equal(a.begin(), a.begin() + static_cast<long>(k), b.begin())) continue;
            const Int d = metric_distance(code.metric, a, b, ignore);
            if (!best || d < *best) best = d;
        }
    }
    return best;
}

DecodeOutcome nearest_prefix_decode(const ReadVector& y, const InducedCode& code, Int tau) {
    const std::vector<Int>* match = nullptr;
    const auto k = static_cast<long>(code.k);
    for (const auto& word : code.words) {
        if (word.size() != y.size()) throw ParameterError("read vector length does not match the code");
        if (metric_distance(code.metric, word, y.values, y.erased) > tau) continue;
        if (match && !std::equal(word.begin(), word.begin() + k, match->begin()))
            throw ConsistencyError("two codewords with different prefixes lie within distance " + std::to_string(tau) +
                                   " of the read vector");
        match = &word;
    }
    if (!match) return DecodeOutcome::failure();
    return DecodeOutcome::success({match->begin(), match->begin() + k});
}

Int min_distance_by_enumeration(const ReedSolomonCode& code) {
    const Int limit = oracle_guard(kEnumerationGuard);
    const Int p = code.field().p();
    const auto total = bounded_pow(p, code.k(), limit);
    if (!total) throw GuardError("enumerating p^k codewords exceeds the limit " + std::to_string(limit));
    Int best = code.n();
    std::vector<Int> message(static_cast<size_t>(code.k()));
    for (Int t = 1; t < *total; ++t) {
        digits_of(t, p, message);
        best = std::min(best, hamming_weight(code.encode(message)));
    }
    return best;
}

namespace {

void l1_patterns(std::vector<Int>& e, Int pos, Int used, Int lo, Int hi,
                 const std::function<void(const std::vector<Int>&)>& f) {
    if (used >= lo) f(e);
    for (Int j = pos; j < static_cast<Int>(e.size()); ++j) {
        for (Int mag = 1; used + mag <= hi; ++mag) {
            for (Int sign : {1, -1}) {
                e[j] = sign * mag;
                l1_patterns(e, j + 1, used + mag, lo, hi, f);
            }
        }
        e[j] = 0;
    }
}

void hamming_patterns(std::vector<Int>& e, Int pos, Int left, Int theta,
                      const std::function<void(const std::vector<Int>&)>& f) {
    if (left == 0) {
        f(e);
        return;
    }
    for (Int j = pos; j + left <= static_cast<Int>(e.size()); ++j) {
        for (Int v = -theta; v <= theta; ++v) {
            if (v == 0) continue;
            e[j] = v;
            hamming_patterns(e, j + 1, left - 1, theta, f);
        }
        e[j] = 0;
    }
}

void subsets(std::vector<bool>& mask, Int pos, Int left, const std::function<void(const std::vector<bool>&)>& f) {
    if (left == 0) {
        f(mask);
        return;
    }
    for (Int j = pos; j + left <= static_cast<Int>(mask.size()); ++j) {
        mask[j] = true;
        subsets(mask, j + 1, left - 1, f);
        mask[j] = false;
    }
}

}  // namespace

void for_each_l1_pattern(Int n, Int lo, Int hi, const std::function<void(const std::vector<Int>&)>& f) {
    std::vector<Int> e(static_cast<size_t>(n), 0);
    l1_patterns(e, 0, 0, lo, hi, f);
}

void for_each_hamming_pattern(Int n, Int weight, Int theta, const std::function<void(const std::vector<Int>&)>& f) {
    std::vector<Int> e(static_cast<size_t>(n), 0);
    hamming_patterns(e, 0, weight, theta, f);
}

void for_each_subset(Int n, Int size, const std::function<void(const std::vector<bool>&)>& f) {
    std::vector<bool> mask(static_cast<size_t>(n), false);
    subsets(mask, 0, size, f);
}

bool AuditReport::pass() const {
    const bool distance_ok = !distance_applies || !min_distance || *min_distance >= required_distance;
    return notes.empty() && distance_ok && correction.patterns > 0 && correction.correct == correction.patterns &&
           detection.wrong == 0 && correction.oracle_mismatches == 0 && detection.oracle_mismatches == 0;
}

namespace {

// Number of (erasure set, error pattern) pairs the sweeps will visit per codeword.
Int patterns_per_word(const Scheme& scheme, Int lo, Int hi) {
    const Int n = scheme.n();
    if (scheme.metric() == Metric::L1) return sphere_volume_l1(n, hi) - (lo > 0 ? sphere_volume_l1(n, lo - 1) : 0);
    const Int spread = 2 * scheme.magnitude_bound();
    Int per_erasure = 0;
    for (Int w = lo; w <= hi; ++w) {
        Int term = binomial(n, w);
        for (Int i = 0; i < w; ++i) term = checked_mul(term, spread);
        per_erasure = checked_add(per_erasure, term);
    }
    Int erasure_sets = 0;
    for (Int r = 0; r <= scheme.rho(); ++r) erasure_sets = checked_add(erasure_sets, binomial(n, r));
    return checked_mul(per_erasure, erasure_sets);
}

void sweep(const Scheme& scheme, const InducedCode& code, Int lo, Int hi, bool use_oracle, SweepCounts& counts) {
    const Int n = scheme.n();
    const bool hamming = scheme.metric() == Metric::Hamming;
    const Int theta = scheme.magnitude_bound();
    auto visit = [&](const std::vector<Int>& word, const std::vector<Int>& e, const std::vector<bool>& erased) {
        std::vector<Int> values(word);
        for (Int j = 0; j < n; ++j) values[j] = erased[j] ? 0 : values[j] + e[j];
        const ReadVector y(std::move(values), erased);
        const std::vector<Int> truth(word.begin(), word.begin() + scheme.k());
        const auto got = scheme.decode(y);
        ++counts.patterns;
        if (!got.ok())
            ++counts.detected;
        else if (got.prefix() == truth)
            ++counts.correct;
        else
            ++counts.wrong;
        if (use_oracle) {
            const auto oracle = nearest_prefix_decode(y, code, scheme.tau());
            // Within the correction budget the two must agree exactly; beyond
            // it the decoder may detect where the oracle decodes.
            const bool within = lo <= scheme.tau();
            if (within ? got != oracle : (got.ok() && oracle.ok() && got != oracle)) ++counts.oracle_mismatches;
        }
    };
    for (const auto& word : code.words) {
        if (!hamming) {
            const std::vector<bool> none(static_cast<size_t>(n), false);
            for_each_l1_pattern(n, lo, hi, [&](const std::vector<Int>& e) { visit(word, e, none); });
            continue;
        }
        for (Int r = 0; r <= scheme.rho(); ++r) {
            for_each_subset(n, r, [&](const std::vector<bool>& erased) {
                for (Int w = lo; w <= hi; ++w) {
                    for_each_hamming_pattern(n, w, theta, [&](const std::vector<Int>& e) {
                        for (Int j = 0; j < n; ++j)
                            if (erased[j] && e[j] != 0) return;
                        visit(word, e, erased);
                    });
                }
            });
        }
    }
}

}  // namespace

AuditReport run_audit(const Scheme& scheme) {
    AuditReport report;
    report.scheme = scheme.describe();
    const bool hamming = scheme.metric() == Metric::Hamming;
    report.required_distance = 2 * scheme.tau() + scheme.sigma() + (hamming ? scheme.rho() : 0) + 1;
    report.distance_applies = !hamming || scheme.magnitude_bound() >= scheme.output_alphabet() - 1;
    if (!report.distance_applies)
        report.scheme["distance_note"] = "error magnitudes are bounded, so the induced distance need not reach the bound";
    InducedCode code;
    try {
        code = enumerate_induced_code(scheme);
        report.codewords = static_cast<Int>(code.words.size());
        report.distinct_prefixes = static_cast<Int>(code.distinct_prefixes());
        report.min_distance = induced_min_distance(code);
        if (!report.min_distance) report.scheme["distance_note"] = "undefined distance: all codewords share one prefix";
    } catch (const GuardError& err) {
        report.notes.emplace_back(err.what());
        return report;
    }
    const Int per_word_correct = patterns_per_word(scheme, 0, scheme.tau());
    const Int per_word_detect =
        scheme.sigma() > 0 ? patterns_per_word(scheme, scheme.tau() + 1, scheme.tau() + scheme.sigma()) : 0;
    const Int limit = oracle_guard(kSweepGuard);
    const Int words = std::max<Int>(report.codewords, 1);
    if (per_word_correct + per_word_detect > limit / words) {
        report.notes.push_back("decode sweep of " + std::to_string(words) + " codewords exceeds the limit " +
                               std::to_string(limit) + "; set DPE_CODEC_GUARD_OVERRIDE to raise it");
        return report;
    }
    const bool use_oracle = report.distance_applies;
    try {
        sweep(scheme, code, 0, scheme.tau(), use_oracle, report.correction);
        if (scheme.sigma() > 0)
            sweep(scheme, code, scheme.tau() + 1, scheme.tau() + scheme.sigma(), use_oracle, report.detection);
    } catch (const ConsistencyError& err) {
        report.notes.emplace_back(err.what());
    }
    return report;
}

nlohmann::json to_json(const AuditReport& report) {
    auto counts = [](const SweepCounts& c) {
        return nlohmann::json{{"patterns", c.patterns},
                              {"correct", c.correct},
                              {"detected", c.detected},
                              {"wrong", c.wrong},
                              {"oracle_mismatches", c.oracle_mismatches}};
    };
    return {{"scheme", report.scheme},
            {"codewords", report.codewords},
            {"distinct_prefixes", report.distinct_prefixes},
            {"min_distance", report.min_distance ? nlohmann::json(*report.min_distance) : nlohmann::json(nullptr)},
            {"required_distance", report.required_distance},
            {"distance_applies", report.distance_applies},
            {"correction", counts(report.correction)},
            {"detection", counts(report.detection)},
            {"notes", report.notes},
            {"pass", report.pass()}};
}

}  // namespace dpe
