#pragma once

#include "dpe/berlekamp.hpp"
#include "dpe/locators.hpp"
#include "dpe/scheme.hpp"

namespace dpe {

/// Base: E1 mod p, cube-sum digits, and a parity symbol over those digits.
/// Parity: the base layout plus an overall parity column (q = 2 detection).
/// OddQ / EvenQ: no parity symbol; both congruences taken mod 2p with odd locators.
enum class DoubleVariant { Base, Parity, OddQ, EvenQ };

std::string to_string(DoubleVariant v);
DoubleVariant double_variant_from_string(const std::string& s);

struct DoubleSyndromes {
    Int s1 = 0;       // locator sum over the first n1 entries
    Int s2 = 0;       // cube sum minus the stored cube-sum digits
    Int parity = 0;   // parity over the digits and their parity symbol (Base, Parity)
    Int overall = 0;  // parity of the whole word (Parity only)
};

/// Corrects two L1 errors. With a detection variant it also detects three.
class DoubleErrorScheme final : public Scheme {
public:
    DoubleErrorScheme(Int q, Int ell, Int p, DoubleVariant variant, LocatorOptions opts = {});
    /// Detection variant for q: overall parity for q = 2, modulus 2p otherwise.
    static DoubleVariant default_ted_variant(Int q);

    std::string kind() const override { return variant_ == DoubleVariant::Base ? "dec" : "dec-ted"; }
    Int tau() const override { return 2; }
    Int sigma() const override { return variant_ == DoubleVariant::Base ? 0 : 1; }

    DoubleVariant variant() const { return variant_; }
    Int p() const { return p_; }
    Int n1() const { return loc_.n; }
    int m() const { return loc_.m; }
    /// Modulus of both congruences: p, or 2p for OddQ / EvenQ.
    Int modulus() const { return loc_.modulus; }
    const Locators& locators() const { return loc_; }
    const BerlekampCode& berlekamp() const { return ber_; }

    /// Digits of sum_j row_j alpha_j^3 mod modulus for every row of an E1 output.
    QMatrix cube_digits(const QMatrix& e1) const;
    DoubleSyndromes syndromes(std::span<const Int> y) const;

    QMatrix encode(const QMatrix& aprime) const override;
    DecodeOutcome decode(const ReadVector& y) const override;
    nlohmann::json describe() const override;

private:
    DoubleErrorScheme(Int q, Int ell, Int p, DoubleVariant variant, Locators loc);
    DecodeOutcome decode_base(std::span<const Int> y, const DoubleSyndromes& s) const;
    DecodeOutcome decode_table(std::span<const Int> y, const DoubleSyndromes& s) const;
    DecodeOutcome decode_overall_parity(std::span<const Int> y, const DoubleSyndromes& s) const;
    DecodeOutcome single(std::span<const Int> y) const;
    DecodeOutcome subtract(std::span<const Int> y, const std::optional<ErrorVector>& e) const;

    Int p_;
    DoubleVariant variant_;
    Locators loc_;
    LocatorIndex index_;
    BerlekampCode ber_;
    std::vector<Int> weights_;
};

}  // namespace dpe
