#include "dpe/l1_double.hpp"

#include "dpe/errors.hpp"
#include "dpe/l1_single.hpp"

namespace dpe {

namespace {

Int half_length(Int p) {
    if (p <= 3 || !is_prime(p)) throw ParameterError("double-error schemes need a prime p > 3, got p=" + std::to_string(p));
    return (p - 1) / 2;
}

Locators build_for(Int q, Int n1, DoubleVariant variant, LocatorOptions opts) {
    switch (variant) {
        case DoubleVariant::Base:
        case DoubleVariant::Parity: return build_locators_basic(q, n1, opts);
        case DoubleVariant::OddQ:
            if (q % 2 == 0) throw ParameterError("odd-q variant needs odd q");
            return build_locators_ded(q, n1, opts);
        case DoubleVariant::EvenQ:
            if (q % 2 != 0 || q == 2) throw ParameterError("even-q variant needs even q > 2");
            return build_locators_ded(q, n1, opts);
    }
    throw ParameterError("unknown variant");
}

Locators locators_for(Int q, Int p, DoubleVariant variant, LocatorOptions opts) {
    const Int n1 = half_length(p);
    try {
        return build_for(q, n1, variant, opts);
    } catch (const ParameterError& err) {
        std::string hint;
        Int c = p;
        for (int tries = 0; tries < 50; ++tries) {
            c = next_prime_at_least(c + 1);
            try {
                build_for(q, (c - 1) / 2, variant, opts);
                hint = "; the next workable prime is p=" + std::to_string(c);
                break;
            } catch (const ParameterError&) {
            }
        }
        throw ParameterError(std::string(err.what()) + " (p=" + std::to_string(p) + " gives n1=" +
                             std::to_string(n1) + ")" + hint);
    }
}

std::vector<Int> berlekamp_locators(const Locators& loc, Int p) {
    std::vector<Int> beta;
    beta.reserve(loc.alpha.size());
    for (Int a : loc.alpha) beta.push_back(a % p);
    return beta;
}

Int parity_of(std::span<const Int> x) {
    Int s = 0;
    for (Int v : x) s += v;
    return mod_floor(s, 2);
}

}  // namespace

std::string to_string(DoubleVariant v) {
    switch (v) {
        case DoubleVariant::Base: return "base";
        case DoubleVariant::Parity: return "parity";
        case DoubleVariant::OddQ: return "oddq";
        case DoubleVariant::EvenQ: return "evenq";
    }
    return "unknown";
}

DoubleVariant double_variant_from_string(const std::string& s) {
    if (s == "base") return DoubleVariant::Base;
    if (s == "parity") return DoubleVariant::Parity;
    if (s == "oddq") return DoubleVariant::OddQ;
    if (s == "evenq") return DoubleVariant::EvenQ;
    throw ParameterError("unknown double-error variant '" + s + "' (expected base, parity, oddq, evenq)");
}

DoubleVariant DoubleErrorScheme::default_ted_variant(Int q) {
    if (q == 2) return DoubleVariant::Parity;
    return q % 2 ? DoubleVariant::OddQ : DoubleVariant::EvenQ;
}

DoubleErrorScheme::DoubleErrorScheme(Int q, Int ell, Int p, DoubleVariant variant, LocatorOptions opts)
    : DoubleErrorScheme(q, ell, p, variant, locators_for(q, p, variant, opts)) {}

DoubleErrorScheme::DoubleErrorScheme(Int q, Int ell, Int p, DoubleVariant variant, Locators loc)
    : Scheme(q, ell,
             loc.n + loc.m + (variant == DoubleVariant::Base ? 1 : variant == DoubleVariant::Parity ? 2 : 0),
             loc.k()),
      p_(p),
      variant_(variant),
      loc_(std::move(loc)),
      index_(loc_),
      ber_(p, berlekamp_locators(loc_, p), 2, BerlekampOptions{loc_.options.allow_suffix_conflicts}),
      weights_(loc_.suffix_weights()) {}

QMatrix DoubleErrorScheme::cube_digits(const QMatrix& e1) const {
    const Int M = modulus();
    QMatrix out(q(), e1.rows(), static_cast<size_t>(m()));
    for (size_t i = 0; i < e1.rows(); ++i) {
        Int t = 0;
        for (Int j = 0; j < n1(); ++j) t = mod_floor(t + mul_mod(e1(i, j), pow_mod(loc_.alpha[j], 3, M), M), M);
        const auto digits = suffix_digits(t, loc_);
        for (int j = 0; j < m(); ++j) out.set(i, j, digits[j]);
    }
    return out;
}

QMatrix DoubleErrorScheme::encode(const QMatrix& aprime) const {
    check_input(aprime);
    const QMatrix e1 = encode_e1(aprime, loc_);
    QMatrix a = e1.hcat(cube_digits(e1));
    if (variant_ != DoubleVariant::Base && variant_ != DoubleVariant::Parity) return a;
    QMatrix parity(q(), a.rows(), 1);
    for (size_t i = 0; i < a.rows(); ++i) parity.set(i, 0, parity_of(a.row(i).subspan(n1())));
    a = a.hcat(parity);
    if (variant_ == DoubleVariant::Base) return a;
    QMatrix overall(q(), a.rows(), 1);
    for (size_t i = 0; i < a.rows(); ++i) overall.set(i, 0, parity_of(a.row(i)));
    return a.hcat(overall);
}

DoubleSyndromes DoubleErrorScheme::syndromes(std::span<const Int> y) const {
    if (static_cast<Int>(y.size()) != n()) throw ParameterError("read vector length does not match scheme");
    const Int M = modulus();
    DoubleSyndromes s;
    s.s1 = locator_syndrome(y, loc_);
    Int cubes = 0;
    for (Int j = 0; j < n1(); ++j) cubes = mod_floor(cubes + mul_mod(y[j], pow_mod(loc_.alpha[j], 3, M), M), M);
    Int stored = 0;
    for (int j = 0; j < m(); ++j) stored = mod_floor(stored + mul_mod(y[n1() + j], weights_[j], M), M);
    s.s2 = mod_floor(cubes - stored, M);
    if (variant_ == DoubleVariant::Base || variant_ == DoubleVariant::Parity)
        s.parity = parity_of(y.subspan(static_cast<size_t>(n1()), static_cast<size_t>(m()) + 1));
    if (variant_ == DoubleVariant::Parity) s.overall = parity_of(y);
    return s;
}

DecodeOutcome DoubleErrorScheme::single(std::span<const Int> y) const {
    auto w = correct_single(y.first(static_cast<size_t>(n1())), loc_, index_);
    if (!w) return DecodeOutcome::failure();
    return finish(std::move(*w));
}

DecodeOutcome DoubleErrorScheme::subtract(std::span<const Int> y, const std::optional<ErrorVector>& e) const {
    if (!e) return DecodeOutcome::failure();
    std::vector<Int> w(y.begin(), y.begin() + k());
    for (Int j = 0; j < k(); ++j) w[j] -= (*e)[j];
    return finish(std::move(w));
}

DecodeOutcome DoubleErrorScheme::decode_base(std::span<const Int> y, const DoubleSyndromes& s) const {
    if (s.s1 == 0) return finish({y.begin(), y.begin() + k()});
    if (s.parity == 0) return subtract(y, ber_.decode_tau2({s.s1, s.s2}));
    return single(y);
}

DecodeOutcome DoubleErrorScheme::decode_overall_parity(std::span<const Int> y, const DoubleSyndromes& s) const {
    if (s.overall == 0) return decode_base(y, s);
    // Odd weight: one error (corrected) or three (detected).
    if (s.s1 == 0) {
        if (s.parity == 1 || s.s2 == 0) return finish({y.begin(), y.begin() + k()});
        return DecodeOutcome::failure();
    }
    if (s.parity == 0 && s.s2 == pow_mod(s.s1, 3, p_)) return single(y);
    return DecodeOutcome::failure();
}

DecodeOutcome DoubleErrorScheme::decode_table(std::span<const Int> y, const DoubleSyndromes& s) const {
    const bool s1_odd = s.s1 % 2 == 1;
    const bool s2_odd = s.s2 % 2 == 1;
    if (s.s1 == 0) return finish({y.begin(), y.begin() + k()});
    if (!s1_odd && !s2_odd) return subtract(y, ber_.decode_tau2({s.s1 % p_, s.s2 % p_}));
    if (s1_odd && !s2_odd) return single(y);
    if (!s1_odd) return DecodeOutcome::failure();
    if (s.s2 % p_ == pow_mod(s.s1, 3, p_)) return single(y);
    return DecodeOutcome::failure();
}

DecodeOutcome DoubleErrorScheme::decode(const ReadVector& y) const {
    check_read(y, false);
    const auto s = syndromes(y.values);
    switch (variant_) {
        case DoubleVariant::Base: return decode_base(y.values, s);
        case DoubleVariant::Parity: return decode_overall_parity(y.values, s);
        case DoubleVariant::OddQ:
        case DoubleVariant::EvenQ: return decode_table(y.values, s);
    }
    return DecodeOutcome::failure();
}

nlohmann::json DoubleErrorScheme::describe() const {
    return {{"scheme", kind()}, {"variant", to_string(variant_)}, {"q", q()},   {"ell", ell()},
            {"p", p_},          {"n", n()},                       {"k", k()},   {"n1", n1()},
            {"m", m()},         {"modulus", modulus()},           {"locators", loc_}};
}

}  // namespace dpe
