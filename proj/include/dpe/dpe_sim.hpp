#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dpe/types.hpp"

namespace dpe {

/// Exact product c = u A; u must lie in Sigma_q^ell.
std::vector<Int> compute_clean(std::span<const Int> u, const QMatrix& a);

/// `budget` unit perturbations at uniform positions with uniform signs;
/// a position may be hit more than once.
struct L1Drift {
    Int budget = 0;
};
/// `count` distinct positions, each shifted by a uniform nonzero value in
/// [-magnitude, magnitude].
struct SymbolFlip {
    Int count = 0;
    Int magnitude = 1;
};
/// `count` distinct positions (not already erased) flagged unavailable.
struct ShortColumn {
    Int count = 0;
};
/// An explicit perturbation or erasure at one position.
struct ManualFault {
    Int position = 0;
    Int delta = 0;
    bool erase = false;
};

using FaultModel = std::variant<L1Drift, SymbolFlip, ShortColumn, ManualFault>;

struct FaultSpec {
    std::vector<FaultModel> faults;
    std::uint64_t seed = 0;
};

struct FaultEvent {
    std::string kind;
    Int position = 0;
    Int delta = 0;
    bool erase = false;
};

/// Final state of a perturbed position; `pre_clamp` is c + (sum of deltas).
struct PositionRecord {
    Int position = 0;
    Int clean = 0;
    Int pre_clamp = 0;
    Int value = 0;
    bool erased = false;
};

struct SimReport {
    std::vector<Int> clean;
    /// y - c on readable positions, 0 on erased ones (see y.erased).
    std::vector<Int> error;
    ReadVector y;
    std::vector<FaultEvent> events;
    std::vector<PositionRecord> positions;
};

/// Applies the faults in order, then clamps readable entries into [0, Q-1].
/// Deterministic in (c, spec, Q).
SimReport inject(std::span<const Int> c, const FaultSpec& spec, Int Q);

/// Uniform integer in [0, bound) by rejection sampling, so results do not
/// depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// JSON forms: {"kind": "l1_drift", "budget": t}, {"kind": "symbol_flip",
/// "count": tau, "magnitude": theta}, {"kind": "short_column", "count": rho},
/// {"kind": "manual", "position": j, "delta": d} or {..., "erase": true}.
void to_json(nlohmann::json& j, const FaultModel& f);
void from_json(const nlohmann::json& j, FaultModel& f);
/// Either a list of models or {"seed": s, "faults": [...]}.
FaultSpec fault_spec_from_json(const nlohmann::json& j, std::uint64_t default_seed);
nlohmann::json to_json(const SimReport& report);

}  // namespace dpe
