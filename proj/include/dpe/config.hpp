#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "dpe/scheme.hpp"

namespace dpe {

/// Everything needed to rebuild a scheme. Unset optionals take per-scheme defaults.
struct SchemeConfig {
    std::string scheme;  // sec, sec-ded, dec, dec-ted, recursive, large-alphabet, hamming
    Int q = 2;
    Int ell = 1;
    std::optional<Int> n;
    std::optional<Int> p;
    std::optional<Int> k;
    std::optional<Int> tau;
    Int theta = 0;
    Int sigma = 0;
    Int rho = 0;
    std::string variant;
    bool trimmed = false;
    bool allow_suffix_conflicts = false;
    Int shorten = 0;
};

std::shared_ptr<const Scheme> make_scheme(const SchemeConfig& config);

void to_json(nlohmann::json& j, const SchemeConfig& c);
void from_json(const nlohmann::json& j, SchemeConfig& c);

/// {"config": ..., "scheme": describe()}; written next to encoded matrices.
nlohmann::json make_sidecar(const SchemeConfig& config, const Scheme& scheme);
std::shared_ptr<const Scheme> scheme_from_sidecar(const nlohmann::json& sidecar);

}  // namespace dpe
