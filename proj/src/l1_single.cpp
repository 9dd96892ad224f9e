#include "dpe/l1_single.hpp"

#include "dpe/errors.hpp"

namespace dpe {

namespace {

Locators locators_for(Int q, Int n, SecVariant variant, LocatorOptions opts) {
    switch (variant) {
        case SecVariant::Sec: return build_locators_basic(q, n, opts);
        case SecVariant::SecDedParity:
            if (n < 2) throw ParameterError("parity variant needs n >= 2");
            return build_locators_basic(q, n - 1, opts);
        case SecVariant::SecDedOddQ:
            if (q % 2 == 0) throw ParameterError("odd-q detection variant needs odd q, got q=" + std::to_string(q));
            return build_locators_ded(q, n, opts);
        case SecVariant::SecDedEvenQ:
            if (q % 2 != 0 || q == 2)
                throw ParameterError("even-q detection variant needs even q > 2, got q=" + std::to_string(q));
            return build_locators_ded(q, n, opts);
    }
    throw ParameterError("unknown variant");
}

Int row_parity(std::span<const Int> row) {
    Int s = 0;
    for (Int v : row) s += v;
    return mod_floor(s, 2);
}

void require_no_erasures(const ReadVector& y) {
    if (y.has_erasures()) throw ParameterError("L1 decoders do not accept erasures");
}

DecodeOutcome range_checked(std::optional<std::vector<Int>> w, Int Q) {
    if (!w) return DecodeOutcome::failure();
    for (Int v : *w)
        if (v < 0 || v >= Q) return DecodeOutcome::failure();
    return DecodeOutcome::success(std::move(*w));
}

DecodeOutcome decode_ded_with(std::span<const Int> y, const Locators& loc, const LocatorIndex& index,
                              SecVariant variant, Int Q) {
    if (variant == SecVariant::SecDedParity) {
        // Odd overall parity: one error (or three), so try to locate it.
        const auto body = y.first(static_cast<size_t>(loc.n));
        if (row_parity(y) == 1) return range_checked(correct_single(body, loc, index), Q);
        if (locator_syndrome(body, loc) != 0) return DecodeOutcome::failure();
        return range_checked(std::vector<Int>(body.begin(), body.begin() + loc.k()), Q);
    }
    // All locators are odd, so an even nonzero syndrome means two errors.
    const Int s = locator_syndrome(y, loc);
    if (s != 0 && s % 2 == 0) return DecodeOutcome::failure();
    return range_checked(correct_single(y, loc, index), Q);
}

}  // namespace

std::string to_string(SecVariant v) {
    switch (v) {
        case SecVariant::Sec: return "sec";
        case SecVariant::SecDedParity: return "parity";
        case SecVariant::SecDedOddQ: return "oddq";
        case SecVariant::SecDedEvenQ: return "evenq";
    }
    return "unknown";
}

SecVariant sec_variant_from_string(const std::string& s) {
    if (s == "sec") return SecVariant::Sec;
    if (s == "parity") return SecVariant::SecDedParity;
    if (s == "oddq") return SecVariant::SecDedOddQ;
    if (s == "evenq") return SecVariant::SecDedEvenQ;
    throw ParameterError("unknown single-error variant '" + s + "' (expected sec, parity, oddq, evenq)");
}

Int locator_syndrome(std::span<const Int> x, const Locators& loc) {
    if (static_cast<Int>(x.size()) < loc.n) throw ParameterError("word shorter than locator vector");
    Int s = 0;
    for (Int j = 0; j < loc.n; ++j) s = mod_floor(s + mul_mod(x[j], loc.alpha[j], loc.modulus), loc.modulus);
    return s;
}

std::vector<Int> suffix_digits(Int remainder, const Locators& loc) {
    if (loc.suffix_kind == SuffixKind::PowersOfQ) return base_q_digits(remainder, loc.q, loc.m).digits;
    const auto weights = loc.suffix_weights();
    return mixed_radix_digits(remainder, loc.q, weights).digits;
}

QMatrix encode_e1(const QMatrix& aprime, const Locators& loc) {
    const Int k = loc.k();
    if (aprime.q() != loc.q) throw ParameterError("matrix alphabet does not match locators");
    if (static_cast<Int>(aprime.cols()) != k)
        throw ParameterError("matrix has " + std::to_string(aprime.cols()) + " columns, locators expect k=" +
                             std::to_string(k));
    QMatrix out(loc.q, aprime.rows(), static_cast<size_t>(loc.n));
    for (size_t i = 0; i < aprime.rows(); ++i) {
        Int s = 0;
        for (Int j = 0; j < k; ++j) {
            out.set(i, j, aprime(i, j));
            s = mod_floor(s + aprime(i, j) * loc.alpha[j], loc.modulus);
        }
        const auto digits = suffix_digits(mod_floor(-s, loc.modulus), loc);
        for (int j = 0; j < loc.m; ++j) out.set(i, k + j, digits[j]);
    }
    return out;
}

std::optional<std::vector<Int>> correct_single(std::span<const Int> y, const Locators& loc,
                                               const LocatorIndex& index) {
    const Int k = loc.k();
    std::vector<Int> w(y.begin(), y.begin() + k);
    const Int s = locator_syndrome(y, loc);
    if (s == 0) return w;
    if (long j = index.find(s); j >= 0) {
        if (j < k) w[j] -= 1;
        return w;
    }
    if (long j = index.find(loc.modulus - s); j >= 0) {
        if (j < k) w[j] += 1;
        return w;
    }
    return std::nullopt;
}

DecodeOutcome decode_d1(const ReadVector& y, const Locators& loc, Int Q) {
    require_no_erasures(y);
    if (static_cast<Int>(y.size()) != loc.n) throw ParameterError("read vector length does not match locators");
    return range_checked(correct_single(y.values, loc, LocatorIndex(loc)), Q);
}

QMatrix encode_ded(const QMatrix& aprime, const Locators& loc, SecVariant variant) {
    QMatrix a = encode_e1(aprime, loc);
    if (variant != SecVariant::SecDedParity) return a;
    QMatrix parity(loc.q, a.rows(), 1);
    for (size_t i = 0; i < a.rows(); ++i) parity.set(i, 0, row_parity(a.row(i)));
    return a.hcat(parity);
}

DecodeOutcome decode_sec_ded(const ReadVector& y, const Locators& loc, SecVariant variant, Int Q) {
    require_no_erasures(y);
    const Int expected = loc.n + (variant == SecVariant::SecDedParity ? 1 : 0);
    if (static_cast<Int>(y.size()) != expected) throw ParameterError("read vector length does not match locators");
    return decode_ded_with(y.values, loc, LocatorIndex(loc), variant, Q);
}

int redundancy_lower_bound(Int q, Int n) { return ceil_log(q, n + 1); }

SecVariant SingleErrorScheme::default_ded_variant(Int q) {
    if (q == 2) return SecVariant::SecDedParity;
    return q % 2 ? SecVariant::SecDedOddQ : SecVariant::SecDedEvenQ;
}

SingleErrorScheme::SingleErrorScheme(Int q, Int ell, Int n, SecVariant variant, LocatorOptions opts)
    : SingleErrorScheme(q, ell, variant, locators_for(q, n, variant, opts)) {}

SingleErrorScheme::SingleErrorScheme(Int q, Int ell, SecVariant variant, Locators loc)
    : Scheme(q, ell, loc.n + (variant == SecVariant::SecDedParity ? 1 : 0), loc.k()),
      variant_(variant),
      loc_(std::move(loc)),
      index_(loc_) {}

QMatrix SingleErrorScheme::encode(const QMatrix& aprime) const {
    check_input(aprime);
    return variant_ == SecVariant::Sec ? encode_e1(aprime, loc_) : encode_ded(aprime, loc_, variant_);
}

DecodeOutcome SingleErrorScheme::decode(const ReadVector& y) const {
    check_read(y, false);
    if (variant_ == SecVariant::Sec) return range_checked(correct_single(y.values, loc_, index_), output_alphabet());
    return decode_ded_with(y.values, loc_, index_, variant_, output_alphabet());
}

nlohmann::json SingleErrorScheme::describe() const {
    return {{"scheme", kind()}, {"variant", to_string(variant_)}, {"q", q()}, {"ell", ell()},
            {"n", n()},         {"k", k()},                       {"locators", loc_}};
}

}  // namespace dpe
