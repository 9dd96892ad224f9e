#pragma once

#include <span>

#include "dpe/locators.hpp"
#include "dpe/scheme.hpp"

namespace dpe {

enum class SecVariant { Sec, SecDedParity, SecDedOddQ, SecDedEvenQ };

std::string to_string(SecVariant v);
SecVariant sec_variant_from_string(const std::string& s);

/// (x . alpha) mod modulus over the first loc.n entries of x.
Int locator_syndrome(std::span<const Int> x, const Locators& loc);

/// Redundancy digits encoding `remainder` under the locator suffix weights
/// (base q for powers of q, capped greedy for the f-sequence).
std::vector<Int> suffix_digits(Int remainder, const Locators& loc);

/// Appends loc.m digits to each row so that every row r has r . alpha == 0 (mod modulus).
QMatrix encode_e1(const QMatrix& aprime, const Locators& loc);

/// Single-error correction of a length-loc.n word. A syndrome equal to alpha_j
/// means the read value at j is one too high; modulus - alpha_j means one too low.
/// Errors located in the suffix are left alone. Returns the corrected k-prefix,
/// or nullopt for an unmatched syndrome.
std::optional<std::vector<Int>> correct_single(std::span<const Int> y, const Locators& loc,
                                               const LocatorIndex& index);

/// D1 with the result range-checked against Sigma_Q. Erasures are rejected.
DecodeOutcome decode_d1(const ReadVector& y, const Locators& loc, Int Q);

/// Parity variant: `loc` covers the first n-1 columns and a parity column is
/// appended. The other variants use modulus-(4n+2) locators directly.
QMatrix encode_ded(const QMatrix& aprime, const Locators& loc, SecVariant variant);
DecodeOutcome decode_sec_ded(const ReadVector& y, const Locators& loc, SecVariant variant, Int Q);

/// Sphere-packing bound on the redundancy of a single-error-correcting scheme.
int redundancy_lower_bound(Int q, Int n);

/// Single-error-correcting scheme and its single-error-correcting,
/// double-error-detecting variants. For the parity variant n counts the
/// parity column.
class SingleErrorScheme final : public Scheme {
public:
    SingleErrorScheme(Int q, Int ell, Int n, SecVariant variant, LocatorOptions opts = {});
    /// Picks the detection variant from q: parity for q = 2, modulus 4n+2 otherwise.
    static SecVariant default_ded_variant(Int q);

    std::string kind() const override { return variant_ == SecVariant::Sec ? "sec" : "sec-ded"; }
    Int tau() const override { return 1; }
    Int sigma() const override { return variant_ == SecVariant::Sec ? 0 : 1; }

    SecVariant variant() const { return variant_; }
    const Locators& locators() const { return loc_; }

    QMatrix encode(const QMatrix& aprime) const override;
    DecodeOutcome decode(const ReadVector& y) const override;
    nlohmann::json describe() const override;

private:
    SingleErrorScheme(Int q, Int ell, SecVariant variant, Locators loc);
    SecVariant variant_;
    Locators loc_;
    LocatorIndex index_;
};

}  // namespace dpe
