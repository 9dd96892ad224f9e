#include "dpe/config.hpp"

#include "dpe/errors.hpp"
#include "dpe/hamming_scheme.hpp"
#include "dpe/l1_double.hpp"
#include "dpe/l1_multi.hpp"
#include "dpe/l1_single.hpp"
#include "dpe/shortened.hpp"

namespace dpe {

namespace {

Int require(const std::optional<Int>& v, const char* name, const std::string& scheme) {
    if (!v) throw ParameterError("scheme '" + scheme + "' needs --" + name);
    return *v;
}

std::shared_ptr<const Scheme> make_base(const SchemeConfig& c) {
    const LocatorOptions opts{c.allow_suffix_conflicts};
    const std::string& s = c.scheme;
    if (s == "sec") {
        if (!c.variant.empty() && c.variant != "sec") throw ParameterError("scheme 'sec' has no variant " + c.variant);
        return std::make_shared<SingleErrorScheme>(c.q, c.ell, require(c.n, "n", s), SecVariant::Sec, opts);
    }
    if (s == "sec-ded") {
        const auto v = c.variant.empty() ? SingleErrorScheme::default_ded_variant(c.q) : sec_variant_from_string(c.variant);
        if (v == SecVariant::Sec) throw ParameterError("scheme 'sec-ded' needs a detection variant");
        return std::make_shared<SingleErrorScheme>(c.q, c.ell, require(c.n, "n", s), v, opts);
    }
    if (s == "dec") {
        if (!c.variant.empty() && c.variant != "base") throw ParameterError("scheme 'dec' has no variant " + c.variant);
        return std::make_shared<DoubleErrorScheme>(c.q, c.ell, require(c.p, "p", s), DoubleVariant::Base, opts);
    }
    if (s == "dec-ted") {
        const auto v =
            c.variant.empty() ? DoubleErrorScheme::default_ted_variant(c.q) : double_variant_from_string(c.variant);
        if (v == DoubleVariant::Base) throw ParameterError("scheme 'dec-ted' needs a detection variant");
        return std::make_shared<DoubleErrorScheme>(c.q, c.ell, require(c.p, "p", s), v, opts);
    }
    if (s == "recursive")
        return std::make_shared<RecursiveScheme>(c.q, c.ell, require(c.tau, "tau", s), require(c.p, "p", s), c.trimmed,
                                                 opts);
    if (s == "large-alphabet") return std::make_shared<LargeAlphabetScheme>(c.q, c.ell, require(c.tau, "tau", s), c.n);
    if (s == "hamming") {
        HammingParams h;
        h.q = c.q;
        h.ell = c.ell;
        h.k = require(c.k, "k", s);
        h.tau = require(c.tau, "tau", s);
        h.theta = c.theta;
        h.sigma = c.sigma;
        h.rho = c.rho;
        h.p = c.p.value_or(0);
        return std::make_shared<HammingScheme>(h);
    }
    throw ParameterError("unknown scheme '" + s +
                         "' (expected sec, sec-ded, dec, dec-ted, recursive, large-alphabet, hamming)");
}

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
    if (j.contains(key) && !j.at(key).is_null()) v = j.at(key).get<T>();
}

}  // namespace

std::shared_ptr<const Scheme> make_scheme(const SchemeConfig& config) {
    auto base = make_base(config);
    if (config.shorten == 0) return base;
    return std::make_shared<ShortenedScheme>(std::move(base), config.shorten);
}

void to_json(nlohmann::json& j, const SchemeConfig& c) {
    j = {{"scheme", c.scheme}, {"q", c.q}, {"ell", c.ell}};
    put_optional(j, "n", c.n);
    put_optional(j, "p", c.p);
    put_optional(j, "k", c.k);
    put_optional(j, "tau", c.tau);
    if (c.theta) j["theta"] = c.theta;
    if (c.sigma) j["sigma"] = c.sigma;
    if (c.rho) j["rho"] = c.rho;
    if (!c.variant.empty()) j["variant"] = c.variant;
    if (c.trimmed) j["trimmed"] = true;
    if (c.allow_suffix_conflicts) j["allow_suffix_conflicts"] = true;
    if (c.shorten) j["shorten"] = c.shorten;
}

void from_json(const nlohmann::json& j, SchemeConfig& c) {
    c = SchemeConfig{};
    c.scheme = j.at("scheme").get<std::string>();
    c.q = j.value("q", Int{2});
    c.ell = j.value("ell", Int{1});
    get_optional(j, "n", c.n);
    get_optional(j, "p", c.p);
    get_optional(j, "k", c.k);
    get_optional(j, "tau", c.tau);
    c.theta = j.value("theta", Int{0});
    c.sigma = j.value("sigma", Int{0});
    c.rho = j.value("rho", Int{0});
    c.variant = j.value("variant", std::string{});
    c.trimmed = j.value("trimmed", false);
    c.allow_suffix_conflicts = j.value("allow_suffix_conflicts", false);
    c.shorten = j.value("shorten", Int{0});
}

nlohmann::json make_sidecar(const SchemeConfig& config, const Scheme& scheme) {
    return {{"config", config}, {"scheme", scheme.describe()}};
}

std::shared_ptr<const Scheme> scheme_from_sidecar(const nlohmann::json& sidecar) {
    const auto config = sidecar.at("config").get<SchemeConfig>();
    auto scheme = make_scheme(config);
    if (sidecar.contains("scheme") && sidecar.at("scheme") != scheme->describe())
        throw ParameterError("sidecar scheme description does not match the scheme rebuilt from its config");
    return scheme;
}

}  // namespace dpe
