#include "dpe/dpe_sim.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "dpe/errors.hpp"

namespace dpe {

std::vector<Int> compute_clean(std::span<const Int> u, const QMatrix& a) {
    if (u.size() != a.rows())
        throw ParameterError("input vector has length " + std::to_string(u.size()) + " but the matrix has " +
                             std::to_string(a.rows()) + " rows");
    for (Int ui : u)
        if (ui < 0 || ui >= a.q())
            throw ParameterError("input entry " + std::to_string(ui) + " is outside Sigma_" + std::to_string(a.q()));
    std::vector<Int> c(a.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i) {
        if (u[i] == 0) continue;
        const auto row = a.row(i);
        for (size_t j = 0; j < a.cols(); ++j) c[j] = checked_add(c[j], checked_mul(u[i], row[j]));
    }
    return c;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw ParameterError("uniform_below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

namespace {

// Partial Fisher-Yates over the candidate list.
std::vector<Int> pick_distinct(std::mt19937_64& rng, std::vector<Int> candidates, Int count) {
    for (Int i = 0; i < count; ++i) {
        const auto j = static_cast<size_t>(i) + uniform_below(rng, candidates.size() - static_cast<size_t>(i));
        std::swap(candidates[static_cast<size_t>(i)], candidates[j]);
    }
    candidates.resize(static_cast<size_t>(count));
    return candidates;
}

struct Injector {
    std::mt19937_64 rng;
    std::vector<Int> shifted;
    std::vector<bool> erased;
    std::vector<FaultEvent> events;

    Int n() const { return static_cast<Int>(shifted.size()); }

    void shift(const std::string& kind, Int pos, Int delta) {
        shifted[pos] += delta;
        events.push_back({kind, pos, delta, false});
    }

    void operator()(const L1Drift& f) {
        if (f.budget < 0) throw ParameterError("l1_drift budget must be nonnegative");
        if (f.budget > 0 && n() == 0) throw ParameterError("l1_drift needs a nonempty vector");
        for (Int t = 0; t < f.budget; ++t) {
            const auto pos = static_cast<Int>(uniform_below(rng, static_cast<std::uint64_t>(n())));
            shift("l1_drift", pos, uniform_below(rng, 2) ? 1 : -1);
        }
    }

    void operator()(const SymbolFlip& f) {
        if (f.count < 0 || f.count > n())
            throw ParameterError("symbol_flip count " + std::to_string(f.count) + " is infeasible for length " +
                                 std::to_string(n()));
        if (f.count > 0 && f.magnitude < 1) throw ParameterError("symbol_flip magnitude must be >= 1");
        std::vector<Int> all(static_cast<size_t>(n()));
        std::iota(all.begin(), all.end(), Int{0});
        for (Int pos : pick_distinct(rng, all, f.count)) {
            // 2*magnitude nonzero values: -magnitude..-1, 1..magnitude.
            const auto r = static_cast<Int>(uniform_below(rng, static_cast<std::uint64_t>(2 * f.magnitude)));
            shift("symbol_flip", pos, r < f.magnitude ? r - f.magnitude : r - f.magnitude + 1);
        }
    }

    void operator()(const ShortColumn& f) {
        std::vector<Int> open;
        for (Int j = 0; j < n(); ++j)
            if (!erased[j]) open.push_back(j);
        if (f.count < 0 || f.count > static_cast<Int>(open.size()))
            throw ParameterError("short_column count " + std::to_string(f.count) + " exceeds the " +
                                 std::to_string(open.size()) + " unerased positions");
        auto chosen = pick_distinct(rng, open, f.count);
        std::sort(chosen.begin(), chosen.end());
        for (Int pos : chosen) {
            erased[pos] = true;
            events.push_back({"short_column", pos, 0, true});
        }
    }

    void operator()(const ManualFault& f) {
        if (f.position < 0 || f.position >= n())
            throw ParameterError("manual fault position " + std::to_string(f.position) + " is outside [0, " +
                                 std::to_string(n()) + ")");
        if (f.erase) {
            erased[f.position] = true;
            events.push_back({"manual", f.position, 0, true});
        } else {
            shift("manual", f.position, f.delta);
        }
    }
};

}  // namespace

SimReport inject(std::span<const Int> c, const FaultSpec& spec, Int Q) {
    if (Q < 1) throw ParameterError("output alphabet size must be positive");
    Injector inj{std::mt19937_64(spec.seed), {c.begin(), c.end()}, std::vector<bool>(c.size(), false), {}};
    for (const auto& fault : spec.faults) std::visit(inj, fault);

    SimReport report;
    report.clean.assign(c.begin(), c.end());
    std::vector<Int> values(c.size());
    report.error.assign(c.size(), 0);
    for (size_t j = 0; j < c.size(); ++j) {
        if (inj.erased[j]) continue;
        values[j] = std::clamp<Int>(inj.shifted[j], 0, Q - 1);
        report.error[j] = values[j] - c[j];
    }
    report.y = ReadVector(std::move(values), inj.erased);
    std::map<Int, bool> touched;
    for (const auto& e : inj.events) touched[e.position] = true;
    for (const auto& [pos, unused] : touched) {
        (void)unused;
        report.positions.push_back({pos, c[pos], inj.shifted[pos], report.y.values[pos], inj.erased[pos]});
    }
    report.events = std::move(inj.events);
    return report;
}

void to_json(nlohmann::json& j, const FaultModel& f) {
    std::visit(
        [&j](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, L1Drift>) {
                j = {{"kind", "l1_drift"}, {"budget", m.budget}};
            } else if constexpr (std::is_same_v<T, SymbolFlip>) {
                j = {{"kind", "symbol_flip"}, {"count", m.count}, {"magnitude", m.magnitude}};
            } else if constexpr (std::is_same_v<T, ShortColumn>) {
                j = {{"kind", "short_column"}, {"count", m.count}};
            } else {
                j = {{"kind", "manual"}, {"position", m.position}};
                if (m.erase)
                    j["erase"] = true;
                else
                    j["delta"] = m.delta;
            }
        },
        f);
}

void from_json(const nlohmann::json& j, FaultModel& f) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "l1_drift") {
        f = L1Drift{j.at("budget").get<Int>()};
    } else if (kind == "symbol_flip") {
        f = SymbolFlip{j.at("count").get<Int>(), j.value("magnitude", Int{1})};
    } else if (kind == "short_column") {
        f = ShortColumn{j.at("count").get<Int>()};
    } else if (kind == "manual") {
        const bool erase = j.value("erase", false);
        if (!erase && !j.contains("delta")) throw ParameterError("manual fault needs 'delta' or 'erase'");
        f = ManualFault{j.at("position").get<Int>(), erase ? 0 : j.at("delta").get<Int>(), erase};
    } else {
        throw ParameterError("unknown fault kind '" + kind + "'");
    }
}

FaultSpec fault_spec_from_json(const nlohmann::json& j, std::uint64_t default_seed) {
    FaultSpec spec;
    spec.seed = default_seed;
    const nlohmann::json* list = &j;
    if (j.is_object()) {
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        list = &j.at("faults");
    }
    if (!list->is_array()) throw ParameterError("fault spec must be a list of fault models");
    for (const auto& item : *list) spec.faults.push_back(item.get<FaultModel>());
    return spec;
}

nlohmann::json to_json(const SimReport& report) {
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : report.events) {
        nlohmann::json ev = {{"kind", e.kind}, {"position", e.position}};
        if (e.erase)
            ev["erase"] = true;
        else
            ev["delta"] = e.delta;
        events.push_back(std::move(ev));
    }
    nlohmann::json positions = nlohmann::json::array();
    for (const auto& p : report.positions)
        positions.push_back({{"position", p.position},
                             {"clean", p.clean},
                             {"pre_clamp", p.pre_clamp},
                             {"value", p.erased ? nlohmann::json(nullptr) : nlohmann::json(p.value)},
                             {"erased", p.erased}});
    return {{"events", events}, {"positions", positions}};
}

}  // namespace dpe
